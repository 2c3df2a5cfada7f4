#include "solo/reduction.h"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace solo {

void RBDSInstance::validate() const {
    if (redCount < 0 || blueCount < 0) throw MalformedInstance("vertex counts must be nonnegative");
    if (k < 1) throw MalformedInstance("domination budget k must be at least 1");
    std::set<std::pair<int, int>> seen;
    for (const auto& [r, b] : edges) {
        if (r < 1 || r > redCount) throw MalformedInstance("edge references a red vertex out of range");
        if (b < 1 || b > blueCount) throw MalformedInstance("edge references a blue vertex out of range");
        if (!seen.insert({r, b}).second) throw MalformedInstance("duplicate edge");
    }
}

std::vector<std::vector<int>> RBDSInstance::redNeighborsByBlue() const {
    std::vector<std::vector<int>> result(static_cast<std::size_t>(blueCount));
    for (const auto& [r, b] : edges) result[static_cast<std::size_t>(b - 1)].push_back(r);
    for (auto& nbrs : result) std::sort(nbrs.begin(), nbrs.end());
    return result;
}

bool RBDSInstance::dominates(const std::vector<int>& reds) const {
    std::set<int> chosen(reds.begin(), reds.end());
    auto nbrs = redNeighborsByBlue();
    for (int j = 1; j <= blueCount; ++j) {
        bool hit = false;
        for (int r : nbrs[static_cast<std::size_t>(j - 1)]) {
            if (chosen.count(r)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::optional<std::vector<int>> RBDSInstance::solveByEnumeration() const {
    validate();
    const int size = std::min(k, redCount);
    // Enumerate size-`size` subsets of [1..redCount] in lexicographic order.
    // A dominating set smaller than k extends to this size, so fixing the
    // subset size loses nothing.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        if (dominates(pick)) return pick;
        if (size == 0) return std::nullopt;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == redCount - (size - 1 - i)) --i;
        if (i < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void ColorfulRBDSInstance::validate() const {
    base.validate();
    if (static_cast<int>(classOf.size()) != base.redCount)
        throw MalformedInstance("class assignment must cover every red vertex");
    const int k = base.k;
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int c : classOf) {
        if (c < 1 || c > k) throw MalformedInstance("class id out of range");
        ++sizes[static_cast<std::size_t>(c - 1)];
    }
    for (int s : sizes) {
        if (s != sizes[0]) throw MalformedInstance("classes must all have the same size");
        if (s == 0) throw MalformedInstance("every class must be nonempty");
    }
}

std::vector<std::vector<int>> ColorfulRBDSInstance::redsByClass() const {
    std::vector<std::vector<int>> result(static_cast<std::size_t>(base.k));
    for (int i = 1; i <= base.redCount; ++i)
        result[static_cast<std::size_t>(classOf[static_cast<std::size_t>(i - 1)] - 1)].push_back(i);
    return result;
}

bool ColorfulRBDSInstance::validSelection(const std::vector<int>& choice) const {
    if (static_cast<int>(choice.size()) != base.k) return false;
    for (int j = 1; j <= base.k; ++j) {
        int r = choice[static_cast<std::size_t>(j - 1)];
        if (r < 1 || r > base.redCount) return false;
        if (classOf[static_cast<std::size_t>(r - 1)] != j) return false;
    }
    return base.dominates(choice);
}

std::optional<std::vector<int>> ColorfulRBDSInstance::solveByEnumeration() const {
    validate();
    auto classes = redsByClass();
    std::vector<std::size_t> pos(classes.size(), 0);
    while (true) {
        std::vector<int> choice(classes.size());
        for (std::size_t j = 0; j < classes.size(); ++j) choice[j] = classes[j][pos[j]];
        if (base.dominates(choice)) return choice;
        std::size_t j = classes.size();
        while (j > 0) {
            --j;
            if (++pos[j] < classes[j].size()) break;
            pos[j] = 0;
            if (j == 0) return std::nullopt;
        }
    }
}

void CnfFormula::validate() const {
    if (variableCount < 0) throw MalformedInstance("variable count must be nonnegative");
    for (const auto& clause : clauses) {
        if (clause.empty()) throw MalformedInstance("empty clause");
        if (clause.size() > 3) throw MalformedInstance("clause with more than three literals");
        std::set<int> seen;
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > variableCount)
                throw MalformedInstance("literal references a variable out of range");
            if (!seen.insert(lit).second) throw MalformedInstance("duplicate literal in clause");
        }
    }
}

bool CnfFormula::satisfiedBy(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            if ((lit > 0) == assignment[static_cast<std::size_t>(std::abs(lit) - 1)]) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> CnfFormula::solveByEnumeration() const {
    validate();
    const int n = variableCount;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> bits(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (mask >> j) & 1;
        if (satisfiedBy(bits)) return bits;
    }
    return std::nullopt;
}

}  // namespace solo

#pragma once

// Internal open-addressing hash sets used by the exhaustive solvers to store
// failed search states. Both sets treat the all-zero key as the empty slot
// sentinel, so callers must remap real zero keys before inserting.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace solo::detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

struct Key128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const Key128&) const = default;
};

// Open-addressing set of 128-bit keys with (0,0) as the empty sentinel.
class FlatSet128 {
public:
    FlatSet128() : slots_(1u << 16) {}

    bool contains(const Key128& k) const {
        std::size_t i = static_cast<std::size_t>(k.lo) & (slots_.size() - 1);
        while (!(slots_[i] == Key128{})) {
            if (slots_[i] == k) return true;
            i = (i + 1) & (slots_.size() - 1);
        }
        return false;
    }

    void insert(const Key128& k) {
        if ((count_ + 1) * 10 >= slots_.size() * 7) grow();
        insertInto(slots_, k);
        ++count_;
    }

private:
    static void insertInto(std::vector<Key128>& slots, const Key128& k) {
        std::size_t i = static_cast<std::size_t>(k.lo) & (slots.size() - 1);
        while (!(slots[i] == Key128{})) {
            if (slots[i] == k) return;
            i = (i + 1) & (slots.size() - 1);
        }
        slots[i] = k;
    }

    void grow() {
        std::vector<Key128> bigger(slots_.size() * 2);
        for (const Key128& k : slots_) {
            if (!(k == Key128{})) insertInto(bigger, k);
        }
        slots_.swap(bigger);
    }

    std::vector<Key128> slots_;
    std::size_t count_ = 0;
};

// Open-addressing set of nonzero 64-bit keys with 0 as the empty sentinel.
class FlatSet64 {
public:
    FlatSet64() : slots_(1u << 16) {}

    bool contains(std::uint64_t k) const {
        std::size_t i = static_cast<std::size_t>(mix64(k)) & (slots_.size() - 1);
        while (slots_[i] != 0) {
            if (slots_[i] == k) return true;
            i = (i + 1) & (slots_.size() - 1);
        }
        return false;
    }

    void insert(std::uint64_t k) {
        if ((count_ + 1) * 10 >= slots_.size() * 7) grow();
        insertInto(slots_, k);
        ++count_;
    }

private:
    static void insertInto(std::vector<std::uint64_t>& slots, std::uint64_t k) {
        std::size_t i = static_cast<std::size_t>(mix64(k)) & (slots.size() - 1);
        while (slots[i] != 0) {
            if (slots[i] == k) return;
            i = (i + 1) & (slots.size() - 1);
        }
        slots[i] = k;
    }

    void grow() {
        std::vector<std::uint64_t> bigger(slots_.size() * 2);
        for (std::uint64_t k : slots_) {
            if (k != 0) insertInto(bigger, k);
        }
        slots_.swap(bigger);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t count_ = 0;
};

}  // namespace solo::detail

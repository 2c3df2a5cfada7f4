#pragma once

#include <cstdint>
#include <string>

#include "solo/errors.h"

namespace solo {

// Seeded random-instance generators for the sweep harness and the `gen`
// subcommand. The same (family, size, seed) triple always produces the same
// bytes. Supported families and the text they emit:
//   rooks1d  one line over {'0'..'<d>', '.'} of exactly `size` cells (d = 2)
//   pawns    board file: `size` white pawns (1..36) with budget 2 on a 6x6 window
//   d1       board file: `size` pieces (1..16) of random kinds, budgets <= 1, 4x4 window
//   trees    graph file: random labeled tree on `size` vertices, budgets 2
//   graphs   graph file: random connected graph on `size` vertices, budgets 2
//   dags     graph file: random DAG on `size` vertices (edges point down a
//            fixed topological order), budgets 2
//   rbds     rbds file: `size` reds, `size` blues, k in {1, 2}, random edges
//   cnf      DIMACS file: `size` variables, `size`+1 random clauses of <= 3 literals
// Throws UnsupportedFamily for an unknown family name or a size outside the
// family's documented range.
std::string genInstance(const std::string& family, int size, std::uint64_t seed);

}  // namespace solo

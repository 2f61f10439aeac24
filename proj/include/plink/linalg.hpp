#ifndef PLINK_LINALG_HPP
#define PLINK_LINALG_HPP

#include <optional>
#include <vector>

#include "plink/rational.hpp"

namespace plink {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination; destructive on the copy it takes).
Int det(IntMatrix m);

// Rank of a rectangular integer matrix.
std::size_t rank(IntMatrix m);

// Solves A x = b exactly.  Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve_linear(IntMatrix a, std::vector<Int> b);

// Clears denominators row by row: each equation of [A | b] given over the
// rationals is scaled by the lcm of its denominators.  Solutions are
// unchanged.
void clear_denominators_rowwise(std::vector<std::vector<Rat>>& a, std::vector<Rat>& b,
                                IntMatrix& a_out, std::vector<Int>& b_out);

}  // namespace plink

#endif  // PLINK_LINALG_HPP

#pragma once

#include <vector>

#include "psiq/algebra/rational.hpp"

namespace psiq {

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Basis of the right kernel of a rows x cols matrix, computed from the
// reduced row echelon form. Each basis vector has a 1 in its free column.
std::vector<std::vector<BigRational>> nullspace(RationalMatrix rows, std::size_t cols);

// Rank of a rational matrix.
std::size_t rank(RationalMatrix rows, std::size_t cols);

}  // namespace psiq

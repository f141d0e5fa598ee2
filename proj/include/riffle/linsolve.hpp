#pragma once

#include <optional>
#include <vector>

#include "riffle/core.hpp"

namespace riffle {

/// Solves the square system A x = b exactly. Each row is scaled to integers,
/// then eliminated with Bareiss' fraction-free scheme (every intermediate
/// division is exact), and the triangular system is back-substituted over
/// the rationals. Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve_exact(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

/// Determinant of an integer matrix by the same elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace riffle

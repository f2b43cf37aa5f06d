#pragma once

#include <optional>
#include <vector>

#include "skewfib/int_matrix.hpp"
#include "skewfib/rational.hpp"

namespace skewfib {

using RatMat = std::vector<RatVec>;  // row-major, rectangular
using BigIntMat = std::vector<std::vector<Int>>;

RatVec apply(const IntMat& m, const RatVec& v);
RatVec apply_transpose(const IntMat& m, const RatVec& v);

/// Rank by exact rational Gaussian elimination (destructive).
std::size_t rank_exact(RatMat m);

/// Rank by fraction-free Bareiss elimination over exact integers.
std::size_t rank_exact(BigIntMat m);

/// Basis of the right null space {x : m x = 0}.
std::vector<RatVec> kernel_basis(RatMat m);

/// One exact solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve_linear(RatMat m, RatVec b);

/// Two affine subspaces base + span(dirs) are skew when they neither
/// intersect nor contain parallel directions; decided by exact rank:
/// skew iff rank[D1 D2] = d1 + d2 and rank[D1 D2 | b2 - b1] = d1 + d2 + 1.
bool affine_subspaces_skew(const RatVec& base1, const std::vector<RatVec>& dirs1,
                           const RatVec& base2, const std::vector<RatVec>& dirs2);

}  // namespace skewfib

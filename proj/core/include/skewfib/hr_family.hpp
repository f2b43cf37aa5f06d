#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewfib/int_matrix.hpp"

namespace skewfib {

// A family A_1, ..., A_r of integer q x q matrices satisfying the Hurwitz
// equations
//
//   A_iᵗ A_i = Id,      A_iᵗ A_j + A_jᵗ A_i = 0   (i != j),
//
// so that c = (a_1 A_1 + ... + a_r A_r) b defines an [r,q,q] square identity.
// Construction keeps every member a signed permutation matrix.
struct HurwitzRadonFamily {
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::vector<IntMat> matrices;
  std::string generator_tag;
};

// The family multiplied through by A_rᵗ, with the (now trivial) last member
// dropped: p = r - 1 anticommuting skew complex structures,
//
//   M_iᵗ = -M_i,   M_i² = -Id,   M_i M_j = -M_j M_i  (i != j).
struct NormalizedFamily {
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::vector<IntMat> matrices;
};

/// Deterministic maximal family: r = rho(q) exactly, every member a signed
/// permutation matrix and the identity first. Built from the Cayley-Dickson
/// left-multiplication tables for the 2-power part and block-diagonal
/// repetition for the odd part.
HurwitzRadonFamily construct_family(std::int64_t q);

struct HurwitzViolation {
  std::size_t i = 0;  // i == j flags the orthogonality clause A_iᵗA_i = Id
  std::size_t j = 0;
  bool operator==(const HurwitzViolation&) const = default;
};

struct HurwitzReport {
  std::vector<HurwitzViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exact integer check of both Hurwitz equations for all index pairs.
/// Rejects families with non-square or mismatched matrix sizes.
HurwitzReport verify_hurwitz_equations(const HurwitzRadonFamily& family);

/// Checks, coefficient-wise in formal variables a_1..a_r, that
/// (Σ a_i A_i)ᵗ(Σ a_i A_i) expands to (Σ a_i²)·Id. Equivalently: the
/// coefficient of a_i² is A_iᵗA_i = Id and the coefficient of a_i a_j
/// (i < j) is A_iᵗA_j + A_jᵗA_i = 0, both as exact integer matrices.
bool verify_linear_combinations(const HurwitzRadonFamily& family);

/// {A_rᵗA_1, ..., A_rᵗA_{r-1}} where A_r is the last member. Requires r >= 1.
NormalizedFamily normalize_last_identity(const HurwitzRadonFamily& family);

/// {"q": int, "r": int, "generator": string, "matrices": [[[int]]]}
/// with matrices[i][row][col]; round trips bit-exactly.
std::string family_to_json(const HurwitzRadonFamily& family);
HurwitzRadonFamily family_from_json(const std::string& text);

namespace cayley_dickson {

// Product of basis units: e_i * e_j = sign * e_unit.
struct UnitProduct {
  int unit = 0;
  int sign = 0;
};

/// Multiplication table of the dimension-d algebra, d in {1, 2, 4, 8}
/// (R, C, H, O), built by doubling with (a,b)(c,d) = (ac - d̄b, da + bc̄).
std::vector<std::vector<UnitProduct>> multiplication_table(int dim);

/// Matrix of x -> e_unit * x in the basis e_0..e_{dim-1}.
IntMat left_multiplication(int dim, int unit);

}  // namespace cayley_dickson

/// rho(2^k) - 1 anticommuting skew complex structures on R^(2^k), dim = 2^k.
/// Base cases come from the C, H, O left multiplications; dimensions 16 and
/// beyond tensor a fixed 16-dimensional gadget of eight structures plus an
/// anticommuting symmetric involution.
std::vector<IntMat> anticommuting_structures(std::int64_t dim);

}  // namespace skewfib

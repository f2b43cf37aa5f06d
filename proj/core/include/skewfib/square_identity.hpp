#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewfib/hr_family.hpp"

namespace skewfib {

// One bilinear monomial coef * a_a * b_b (indices 1-based).
struct BilinearTerm {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int64_t coef = 0;
  bool operator==(const BilinearTerm&) const = default;
};

// An [r,s,q] square identity
//
//   (a_1² + ... + a_r²)(b_1² + ... + b_s²) = c_1² + ... + c_q²
//
// with each c_k bilinear in the a- and b-variables. Terms are kept sorted by
// (a, b), one entry per monomial.
struct SquareIdentity {
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t q = 0;
  std::vector<std::vector<BilinearTerm>> c;
};

/// The [r,q,q] identity with c_k = Σ_ij a_i (A_i)_kj b_j.
SquareIdentity identity_from_family(const HurwitzRadonFamily& family);

/// Euler's printed four-square identity (quaternion multiplication).
SquareIdentity euler_four_square();

enum class IdentityFailure {
  none,
  malformed,     // index out of range, zero coefficient, or unsorted terms
  not_identity,  // expansion of both sides differs
};

struct IdentityCheck {
  IdentityFailure failure = IdentityFailure::none;
  bool ok() const { return failure == IdentityFailure::none; }
};

/// Expands both sides as exact sparse integer polynomials and compares
/// coefficient-wise. No floating point, no sampling.
IdentityCheck verify_identity(const SquareIdentity& identity);

/// True when the two identities have equal (r, s, q) and the same squared
/// terms up to reordering and sign of each c_k.
bool same_up_to_signed_permutation(const SquareIdentity& lhs,
                                   const SquareIdentity& rhs);

/// Display form, one squared term per line.
std::string identity_to_pretty(const SquareIdentity& identity);

/// {"r":int,"s":int,"q":int,"c":[[{"a":int,"b":int,"coef":int}]]}
std::string identity_to_json(const SquareIdentity& identity);
SquareIdentity identity_from_json(const std::string& text);

}  // namespace skewfib

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewfib/hr_family.hpp"
#include "skewfib/linalg.hpp"
#include "skewfib/polynomial.hpp"
#include "skewfib/rational.hpp"

namespace skewfib {

/// Raised when (p, n) fails the existence criterion p <= rho(n-p) - 1.
class NotRealizableError : public std::runtime_error {
 public:
  NotRealizableError(std::int64_t p, std::int64_t n, std::int64_t rho_q);
  std::int64_t p;
  std::int64_t n;
  std::int64_t rho_q;
};

// One affine fiber {basepoint + span(directions)} together with its base
// coordinate. In the fixed splitting R^n = R^p ⊕ R^q the fiber is the graph
// {(ξ, B(y)ξ + y)}.
struct FiberSpec {
  RatVec basepoint;                // in R^n
  std::vector<RatVec> directions;  // p linearly independent n-vectors
  RatVec base_coordinate;          // y
};

// A linear family y -> A(y) = [M_1 y | ... | M_p y | y] of q x (p+1)
// matrices encoding a global skew fibration of R^n, n = p + q. Fibers are
// the graphs η = B(y)ξ + y with B(y)ξ = Σ ξ_i M_i y.
class SkewFibration {
 public:
  /// Wraps explicit generators without invariant checks (used for
  /// adversarial families in the skewness checker tests).
  static SkewFibration from_generators(std::vector<IntMat> generators,
                                       std::int64_t q);

  std::int64_t p() const { return static_cast<std::int64_t>(generators_.size()); }
  std::int64_t q() const { return q_; }
  std::int64_t n() const { return p() + q_; }
  const std::vector<IntMat>& generators() const { return generators_; }

 private:
  SkewFibration() = default;
  std::int64_t q_ = 0;
  std::vector<IntMat> generators_;
};

/// Generators are the first p members of the normalized maximal family in
/// dimension q = n - p. Throws NotRealizableError when p > rho(q) - 1.
SkewFibration build_fibration(std::int64_t p, std::int64_t n);

/// Basepoint (0, y), directions (e_i, M_i y).
FiberSpec fiber_through(const SkewFibration& fib, const RatVec& y);

/// The unique y with η = A(y)(ξ;1), i.e. (Σ ξ_i M_i + Id) y = η for the
/// point split as (ξ, η). The system is provably non-singular for honest
/// fibrations; an unsolvable fallback aborts via std::logic_error.
RatVec project(const SkewFibration& fib, const RatVec& point);

enum class SkewStatus { skew, same_fiber, violation };

/// same_fiber when y1 = y2; otherwise skew iff the exact kernel of
/// A(y1 - y2) is trivial.
SkewStatus check_pairwise_skew(const SkewFibration& fib, const RatVec& y1,
                               const RatVec& y2);

/// Intersection with the hyperplane {ξ_p = 0}: drops the last generator,
/// giving a (p-1, n-1) fibration on the same R^q. Requires p >= 1.
SkewFibration restrict_fibration(const SkewFibration& fib);

/// A(y)ᵗA(y); equals (y·y)·Id for honest fibrations.
RatMat gram(const SkewFibration& fib, const RatVec& y);

/// A(y)ᵗA(y) with y symbolic: entry (i,j) as an exact quadratic form in
/// the variables y_1..y_q.
std::vector<std::vector<Poly>> gram_symbolic(const SkewFibration& fib);

/// True iff gram_symbolic equals (y_1² + ... + y_q²)·Id coefficient-wise.
bool gram_identity_holds(const SkewFibration& fib);

// An outer (p1, n)-fibration subdivided by an inner (p2, p1)-fibration of
// its fibers. Base points are pairs (y, z) with y in R^{q1}, z in R^{q2};
// the fiber map stays affine in the inner parameter, so fibers are flat and
// FiberSpec applies unchanged.
class ComposedFibration {
 public:
  ComposedFibration(SkewFibration outer, SkewFibration inner);

  std::int64_t p() const { return inner_.p(); }
  std::int64_t n() const { return outer_.n(); }
  std::int64_t outer_base_dim() const { return outer_.q(); }
  std::int64_t inner_base_dim() const { return inner_.q(); }

  const SkewFibration& outer() const { return outer_; }
  const SkewFibration& inner() const { return inner_; }

  FiberSpec fiber_through(const RatVec& y_outer, const RatVec& y_inner) const;
  SkewStatus check_pairwise_skew(const RatVec& y1_outer, const RatVec& y1_inner,
                                 const RatVec& y2_outer,
                                 const RatVec& y2_inner) const;

 private:
  SkewFibration outer_;
  SkewFibration inner_;
};

/// Requires inner.n() == outer.p().
ComposedFibration compose(const SkewFibration& outer, const SkewFibration& inner);

struct FiberSample {
  std::int64_t fiber_id = 0;
  std::vector<double> point;
};

/// Sampled points along each fiber: parameter t sweeps [lo, hi] uniformly
/// with samples_per_fiber values and ξ(t) = (t, ..., t). Exact evaluation,
/// float conversion only at the end. Point fibers emit a single sample.
std::vector<FiberSample> export_fiber_samples(const SkewFibration& fib,
                                              const std::vector<RatVec>& base_points,
                                              const Rat& param_lo,
                                              const Rat& param_hi,
                                              std::int64_t samples_per_fiber);

std::string samples_to_csv(const std::vector<FiberSample>& samples,
                           std::int64_t ambient_dim);
std::string samples_to_json_lines(const std::vector<FiberSample>& samples);

/// {"p":int,"q":int,"generators":[[[int]]]}
std::string fibration_to_json(const SkewFibration& fib);
SkewFibration fibration_from_json(const std::string& text);

// Seeded, portable sampling of small rationals (mt19937_64 driven, no
// distribution objects, so streams are identical across platforms).
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  /// Numerator in [-9, 9], denominator in [1, 9].
  Rat next();
  RatVec next_vec(std::size_t len);
  RatVec next_nonzero_vec(std::size_t len);
  std::uint64_t next_index(std::uint64_t bound);  // in [0, bound)

 private:
  std::mt19937_64 rng_;
};

struct PairSampleReport {
  std::int64_t checked = 0;
  std::int64_t skew = 0;
  std::int64_t same_fiber = 0;
  std::int64_t violations = 0;
  bool all_skew() const { return violations == 0 && skew + same_fiber == checked; }
};

PairSampleReport sample_skew_pairs(const SkewFibration& fib, std::int64_t count,
                                   std::uint64_t seed);
PairSampleReport sample_skew_pairs(const ComposedFibration& fib,
                                   std::int64_t count, std::uint64_t seed);

struct RoundTripReport {
  std::int64_t checked = 0;
  std::int64_t exact = 0;
  bool all_exact() const { return exact == checked; }
};

/// Per iteration: a random point must land on fiber_through(project(point)),
/// and a random graph point over a random y must project back to y.
RoundTripReport sample_projection_round_trips(const SkewFibration& fib,
                                              std::int64_t count,
                                              std::uint64_t seed);

}  // namespace skewfib

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace skewfib {

namespace mp = boost::multiprecision;

// Exact arbitrary-precision integers and rationals. Expression templates are
// off so that arithmetic yields plain values everywhere.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

using RatVec = std::vector<Rat>;

Rat dot(const RatVec& a, const RatVec& b);

bool is_zero_vec(const RatVec& v);

/// Prints "num/den", omitting "/den" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Parses "num" or "num/den" (den > 0 after normalization).
Rat rat_from_string(const std::string& s);

std::string vec_to_string(const RatVec& v, char sep = ',');

/// Least common multiple of the denominators (always positive).
Int common_denominator(const RatVec& v);

/// v scaled by the common denominator; entries are exact integers.
std::vector<Int> scale_to_integers(const RatVec& v);

}  // namespace skewfib

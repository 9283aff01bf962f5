#pragma once

// Exact-arithmetic instantiation of the joint-distribution core.  Useful
// where floating point would blur an identity that holds exactly (the
// inequality checks and the ratio algebra below are all rational-valued on
// rational inputs).

#include <boost/rational.hpp>

#include "ontoprob/prob_core.hpp"

namespace ontoprob {

using Rational = boost::rational<long long>;
using ExactJoint = BasicJoint<Rational>;

inline Rational rational(long long num, long long den) { return Rational(num, den); }

// Nearest double; exact when the denominator is a power of two.
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace ontoprob

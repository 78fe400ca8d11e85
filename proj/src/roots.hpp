#pragma once

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>

#include "coldplasma/errors.hpp"

namespace coldplasma::detail {

// Root of f on [a, b] given f(a) and f(b) of opposite sign (or one of them
// zero). Returns whichever end of the final bracket has the smaller |f|.
template <class Fn>
double bracketed_root(Fn&& f, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw NoRoot("bracket does not enclose a sign change");
  }
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(50),
      max_iter);
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

}  // namespace coldplasma::detail

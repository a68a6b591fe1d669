#ifndef ADSCMC_TESTS_SUPPORT_HPP
#define ADSCMC_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "adscmc/e42.hpp"

namespace testing {

inline adscmc::Mat2 random_unimodular(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  for (;;) {
    adscmc::Mat2 m{d(rng), d(rng), d(rng), d(rng)};
    double det = m.det();
    if (det > 0.05) return (1.0 / std::sqrt(det)) * m;
    if (det < -0.05) {
      m.a = -m.a;
      m.b = -m.b;
      return (1.0 / std::sqrt(-det)) * m;
    }
  }
}

inline adscmc::Mat2 random_mat(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace testing

#endif

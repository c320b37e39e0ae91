#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "anore/series.hpp"

namespace anore::test {

inline bool close(cplx a, cplx b, double eps = 1e-12) { return std::abs(a - b) <= eps; }

inline std::mt19937_64 seeded_rng(uint64_t seed = 987654321ULL) {
  return std::mt19937_64(seed);
}

// schoolbook convolution oracle, independent of the series arithmetic
inline std::vector<cplx> conv_oracle(const std::vector<cplx>& a,
                                     const std::vector<cplx>& b, size_t out) {
  std::vector<cplx> c(out, 0.0);
  for (size_t n = 0; n < out; ++n) {
    for (size_t p = 0; p <= n; ++p) {
      const cplx ap = p < a.size() ? a[p] : cplx(0.0);
      const cplx bq = (n - p) < b.size() ? b[n - p] : cplx(0.0);
      c[n] += ap * bq;
    }
  }
  return c;
}

}  // namespace anore::test

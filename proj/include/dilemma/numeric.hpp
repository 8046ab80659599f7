#ifndef DILEMMA_NUMERIC_HPP
#define DILEMMA_NUMERIC_HPP

#include <algorithm>
#include <cmath>

namespace dilemma {

// Neumaier-compensated accumulator. Summation order still matters for
// bit-reproducibility, so callers accumulate in a fixed order.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// C(n, k) by the multiplicative formula; every intermediate is itself a
// binomial coefficient, so the result is exact until ~2^53.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

}  // namespace dilemma

#endif  // DILEMMA_NUMERIC_HPP

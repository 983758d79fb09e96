#ifndef LOCALCOLOR_STATS_HPP
#define LOCALCOLOR_STATS_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace localcolor {

// two-sided 95%
inline constexpr double kZ95 = 1.959963984540054;

struct WilsonInterval {
  double point = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

inline WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z = kZ95) {
  if (trials < 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("wilson_interval: bad counts");
  WilsonInterval w;
  if (trials == 0) return w;
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  w.point = ph;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (ph + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

// Welford accumulator.
class RunningStats {
 public:
  void push(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }

  std::int64_t count() const { return count_; }
  double mean() const { return count_ > 0 ? mean_ : 0.0; }
  double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
  double stddev() const { return std::sqrt(variance()); }
  double min() const { return count_ > 0 ? min_ : 0.0; }
  double max() const { return count_ > 0 ? max_ : 0.0; }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

using Histogram = std::map<long long, long long>;

inline void add_sample(Histogram& h, long long x) { ++h[x]; }

// 0.5 * sum |a/na - b/nb| over the union of keys. Both histograms must be
// nonempty.
inline double total_variation(const Histogram& a, const Histogram& b) {
  long long na = 0, nb = 0;
  for (const auto& [k, c] : a) na += c;
  for (const auto& [k, c] : b) nb += c;
  if (na <= 0 || nb <= 0) throw std::invalid_argument("total_variation: empty histogram");
  double tv = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    double pa = 0.0, pb = 0.0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      pa = static_cast<double>(ia->second) / static_cast<double>(na);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      pb = static_cast<double>(ib->second) / static_cast<double>(nb);
      ++ib;
    } else {
      pa = static_cast<double>(ia->second) / static_cast<double>(na);
      pb = static_cast<double>(ib->second) / static_cast<double>(nb);
      ++ia;
      ++ib;
    }
    tv += std::abs(pa - pb);
  }
  return 0.5 * tv;
}

}  // namespace localcolor

#endif

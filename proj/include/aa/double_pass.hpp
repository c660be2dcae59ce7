#ifndef AA_DOUBLE_PASS_HPP
#define AA_DOUBLE_PASS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace aa {

/// Which quantity the double-pass cutoff interpolates over.
enum class DoublePassVersion { EvalCutoff = 1, EeCutoff = 2 };

/// Running min/mean/max statistics over one candidate class.
struct PassStats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  long count = 0;

  void reset() { *this = PassStats{}; }

  void reset_to(double v) {
    min = max = sum = v;
    count = 1;
  }

  void admit(double v) {
    min = std::min(min, v);
    max = std::max(max, v);
    sum += v;
    ++count;
  }

  double mean() const {
    if (count == 0) throw std::invalid_argument("empty statistics");
    return sum / static_cast<double>(count);
  }
};

/// Interpolated cutoff between min, mean and max:
///   f >= 0.5:  mean + 2 (f - 0.5) (max - mean)
///   f <  0.5:  min + 2 f (mean - min)
/// Clamped to max so the best candidate always qualifies.
inline double interpolate_cutoff(const PassStats& s, double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in [0, 1]");
  const double mean = s.mean();
  const double cutoff = f >= 0.5 ? mean + 2.0 * (f - 0.5) * (s.max - mean)
                                 : s.min + 2.0 * f * (mean - s.min);
  return std::min(cutoff, s.max);
}

/// Singly linked candidate list built during the first pass, newest first.
struct CandidateList {
  std::vector<int> link;  // link[j] = next candidate below j, 0-terminated
  int first = 0;
  int j_first = 0, j_last = 0;
  long count = 0;

  void init(int n) {
    link.assign(n + 2, 0);
    clear();
  }

  void clear() {
    first = 0;
    j_first = 0;
    j_last = 0;
    count = 0;
  }

  void push(int j) {
    if (first == 0) j_first = j;
    link[j] = first;
    first = j;
    j_last = j;
    ++count;
  }
};

}  // namespace aa

#endif  // AA_DOUBLE_PASS_HPP

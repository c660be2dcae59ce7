#ifndef AA_EE_MEMORY_HPP
#define AA_EE_MEMORY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "aa/qubo.hpp"

namespace aa {

enum class EEArithmetic { Integer, Real };

/// Parameters for the exponentially extrapolated frequency memory.
/// `window` (Q) is the number of recent local optima covered by the
/// weights, `depth` (r) the recency depth used for the threshold.
struct EEConfig {
  int window = 15;
  int depth = 8;
  double alpha = 2.0;
  double beta = 0.0;
  double gamma = 0.0;
  EEArithmetic arithmetic = EEArithmetic::Integer;

  void validate() const {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (depth < 1 || depth > window)
      throw std::invalid_argument("depth must be in [1, window]");
    if (arithmetic == EEArithmetic::Integer) {
      if (alpha != 2.0 || beta != 0.0 || gamma != 0.0)
        throw std::invalid_argument(
            "integer arithmetic requires alpha=2, beta=gamma=0");
      if (window > 62)
        throw std::invalid_argument("integer arithmetic requires window <= 62");
    } else if (alpha < 1.0) {
      throw std::invalid_argument("alpha must be >= 1");
    }
  }
};

/// Weight sequence: w(1) = 1, w(q+1) = alpha*w(q) + beta*q + gamma.
/// With beta = gamma = 0 this is w(q) = alpha^(q-1).
inline std::vector<double> make_weights(const EEConfig& cfg) {
  cfg.validate();
  std::vector<double> w(cfg.window + 1, 0.0);
  w[1] = 1.0;
  for (int q = 1; q < cfg.window; ++q)
    w[q + 1] = cfg.alpha * w[q] + cfg.beta * q + cfg.gamma;
  return w;
}

namespace detail {

template <class Scalar>
inline Scalar div_alpha(Scalar v, double alpha) {
  if constexpr (std::is_integral_v<Scalar>) {
    (void)alpha;
    return v / 2;  // v >= 0 and alpha == 2 in integer mode
  } else {
    return v / static_cast<Scalar>(alpha);
  }
}

}  // namespace detail

/// Adaptive memory over the `window` most recent local optima.
///
/// Canonical storage is ee1(j), the weighted count of recordings with
/// x_j = 1; the complementary count is ee0(j) = eebase - ee1(j) and the
/// value-conditional view is ee_value(j, b) = b ? ee1(j) : ee0(j).
///
/// Scalar is std::int64_t (exact, alpha = 2 only) or double.
template <class Scalar>
class BasicEeMemory {
 public:
  BasicEeMemory(const EEConfig& cfg, int n) : cfg_(cfg), n_(n) {
    cfg.validate();
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    if constexpr (std::is_integral_v<Scalar>) {
      if (cfg.arithmetic != EEArithmetic::Integer)
        throw std::invalid_argument("scalar type does not match arithmetic mode");
      wmax_ = Scalar{1} << (cfg.window - 1);
      thr_o_ = 0;
      for (int i = 1; i <= cfg.depth; ++i)
        thr_o_ += Scalar{1} << (cfg.window - i);
    } else {
      weights_ = make_weights(cfg);
      wmax_ = static_cast<Scalar>(weights_[cfg.window]);
      thr_o_ = 0;
      for (int i = 0; i < cfg.depth; ++i)
        thr_o_ += static_cast<Scalar>(weights_[cfg.window - i]);
    }
    ee1_.assign(n + 1, Scalar{0});
    eebase_ = wmax_;
    thr_r_ = std::min(eebase_, thr_o_);
  }

  const EEConfig& config() const { return cfg_; }
  int size() const { return n_; }
  long recorded() const { return s_; }

  Scalar ee1(int j) const { return ee1_[check(j)]; }
  Scalar ee0(int j) const { return eebase_ - ee1_[check(j)]; }
  Scalar ee_value(int j, int bit) const { return bit ? ee1(j) : ee0(j); }
  Scalar eebase() const { return eebase_; }

  /// Threshold(r): sum of the r largest weights.
  Scalar threshold_o() const { return thr_o_; }
  /// Working threshold min(eebase, Threshold(r)); exact during warm-up.
  Scalar threshold_r() const { return thr_r_; }

  /// Largest single weight, alpha^(window-1); the weight of the most
  /// recent recording once the memory is saturated.
  Scalar max_weight() const { return wmax_; }

  Scalar complement(Scalar ee) const { return eebase_ - ee; }
  Scalar complement_threshold() const { return eebase_ - thr_r_; }

  /// x_j held the value `bit` in each of the last r recorded optima.
  bool meets_recency(int j, int bit) const {
    return ee_value(j, bit) >= thr_r_;
  }

  /// x_j = bit matches the most recent recorded optimum
  /// (ee_value >= alpha^(window-1); exact for alpha = 2).
  bool same_as_last_optimum(int j, int bit) const {
    return ee_value(j, bit) >= wmax_;
  }

  /// Inductive update at a new local optimum:
  ///   ee1(j) := alpha^(window-1) x_j + ee1(j)/alpha   (floor in integer mode)
  ///   eebase := alpha^(window-1) + eebase/alpha
  void record(const Assignment& x) {
    if (cfg_.beta != 0.0 || cfg_.gamma != 0.0)
      throw std::invalid_argument(
          "inductive recording requires beta = gamma = 0");
    if (prefix_mode_ && s_ < cfg_.window)
      throw std::invalid_argument("prefix accumulation not yet complete");
    prefix_mode_ = false;
    for (int j = 1; j <= n_; ++j) {
      ee1_[j] = detail::div_alpha(ee1_[j], cfg_.alpha);
      if (x[j]) ee1_[j] += wmax_;
    }
    eebase_ = wmax_ + detail::div_alpha(eebase_, cfg_.alpha);
    thr_r_ = std::min(eebase_, thr_o_);
    ++s_;
  }

  /// Warm-up alternative for general (alpha, beta, gamma): the s-th call
  /// adds weight w(s), so after `window` calls the oldest recording
  /// carries w(1) and the newest w(window).  Only legal until the window
  /// is full; afterwards switch to record() (beta = gamma = 0 only).
  void accumulate_prefix(const Assignment& x) {
    if (s_ == 0) {
      prefix_mode_ = true;
      eebase_ = 0;
    } else if (!prefix_mode_) {
      throw std::invalid_argument("cannot mix prefix accumulation with recording");
    }
    if (s_ >= cfg_.window)
      throw std::invalid_argument("prefix accumulation past the window");
    Scalar w;
    if constexpr (std::is_integral_v<Scalar>) {
      w = Scalar{1} << s_;
    } else {
      w = static_cast<Scalar>(weights_[s_ + 1]);
    }
    for (int j = 1; j <= n_; ++j)
      if (x[j]) ee1_[j] += w;
    eebase_ += w;
    thr_r_ = std::min(eebase_, thr_o_);
    ++s_;
  }

 private:
  int check(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("variable index out of range");
    return j;
  }

  EEConfig cfg_;
  int n_;
  std::vector<double> weights_;
  std::vector<Scalar> ee1_;
  Scalar eebase_{}, thr_o_{}, thr_r_{}, wmax_{};
  long s_ = 0;
  bool prefix_mode_ = false;
};

using EeMemoryInt = BasicEeMemory<std::int64_t>;
using EeMemoryReal = BasicEeMemory<double>;

/// All length-`window` 0/1 vectors (most-recent-first) whose weighted sum
/// meets Threshold(depth), in descending lexicographic order.
inline std::vector<std::vector<std::uint8_t>> acceptable_vectors(const EEConfig& cfg) {
  cfg.validate();
  if (cfg.window > 20)
    throw std::invalid_argument("enumeration limited to window <= 20");
  const std::vector<double> w = make_weights(cfg);
  double threshold = 0.0;
  for (int i = 0; i < cfg.depth; ++i) threshold += w[cfg.window - i];
  std::vector<std::vector<std::uint8_t>> out;
  const std::uint32_t count = 1u << cfg.window;
  for (std::uint32_t mask = count; mask-- > 0;) {
    double sum = 0.0;
    for (int pos = 0; pos < cfg.window; ++pos)
      if (mask & (1u << (cfg.window - 1 - pos))) sum += w[cfg.window - pos];
    if (sum >= threshold) {
      std::vector<std::uint8_t> v(cfg.window);
      for (int pos = 0; pos < cfg.window; ++pos)
        v[pos] = (mask >> (cfg.window - 1 - pos)) & 1u;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace aa

#endif  // AA_EE_MEMORY_HPP

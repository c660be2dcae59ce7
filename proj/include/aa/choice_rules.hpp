#ifndef AA_CHOICE_RULES_HPP
#define AA_CHOICE_RULES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace aa {

enum class ChoiceRule { WeightedSum, SimpleCutoff, AdvancedCutoff };

struct ChoiceConfig {
  ChoiceRule rule = ChoiceRule::SimpleCutoff;
  double w1 = 0.1;   // weighted-sum factor for Eval > 0 selections
  double w2 = 10.0;  // weighted-sum factor for Eval <= 0 selections
  double f = 0.8;    // cutoff fraction, 0 < f <= 1
  /// When true, a low f is allowed to relax the cutoff below the recency
  /// threshold even while an S1 selection is active.
  bool low_f_skip_threshold = false;

  void validate() const {
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in (0, 1]");
    if (w1 < 0.0 || w2 < 0.0) throw std::invalid_argument("weights must be >= 0");
  }
};

namespace detail {

template <class Scalar>
inline bool product_greater(std::int64_t e1, Scalar ee1, std::int64_t e2, Scalar ee2) {
  if constexpr (std::is_integral_v<Scalar>) {
    return static_cast<__int128>(e1) * static_cast<__int128>(ee1) >
           static_cast<__int128>(e2) * static_cast<__int128>(ee2);
  } else {
    return static_cast<double>(e1) * ee1 > static_cast<double>(e2) * ee2;
  }
}

}  // namespace detail

/// Running best candidate within one scan.
template <class Scalar>
struct CandidateTracker {
  static constexpr std::int64_t kNoEval = std::numeric_limits<std::int64_t>::lowest() / 4;
  static constexpr Scalar kNoEe = std::numeric_limits<Scalar>::lowest() / 4;

  int k = 0;
  std::int64_t best_eval = kNoEval;
  Scalar best_ee = kNoEe;
  Scalar max_ee = kNoEe;
  double best_eval_w = -std::numeric_limits<double>::infinity();

  bool empty() const { return k == 0; }

  double weighted(std::int64_t eval, Scalar ee, double w, Scalar eebase) const {
    return static_cast<double>(eval) +
           w * (static_cast<double>(ee) / static_cast<double>(eebase));
  }

  /// Full overwrite used by the dominance admits.
  void admit_full(int j, std::int64_t eval, Scalar ee, double w, Scalar eebase) {
    k = j;
    best_eval = eval;
    best_ee = ee;
    max_ee = empty_max() ? ee : std::max(max_ee, ee);
    best_eval_w = weighted(eval, ee, w, eebase);
  }

  void reset_to(int j, std::int64_t eval, Scalar ee, double w, Scalar eebase) {
    k = j;
    best_eval = eval;
    best_ee = ee;
    max_ee = ee;
    best_eval_w = weighted(eval, ee, w, eebase);
  }

  bool empty_max() const { return max_ee == kNoEe; }
};

/// Primary dominance: j beats every prior candidate outright.
template <class Scalar>
inline bool primary_dominates(std::int64_t eval, Scalar ee,
                              const CandidateTracker<Scalar>& t) {
  if (t.empty()) return true;
  return eval >= t.best_eval && ee >= t.max_ee;
}

/// Candidate comparison for Eval(j) > 0 scans.  Assumes the caller already
/// handled admissibility and the primary-dominance overwrite.  Returns true
/// and updates the tracker when j is admitted.
template <class Scalar>
inline bool condition1_choice(int j, std::int64_t eval, Scalar ee,
                              CandidateTracker<Scalar>& t, const ChoiceConfig& cfg,
                              bool s1_active, Scalar threshold_r, Scalar eebase) {
  cfg.validate();
  if (t.empty()) {
    t.reset_to(j, eval, ee, cfg.w1, eebase);
    return true;
  }
  switch (cfg.rule) {
    case ChoiceRule::WeightedSum: {
      const double ew = t.weighted(eval, ee, cfg.w1, eebase);
      if (ew > t.best_eval_w) {
        t.k = j;
        t.best_eval_w = ew;
        t.best_eval = std::max(t.best_eval, eval);
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      return false;
    }
    case ChoiceRule::SimpleCutoff:
    case ChoiceRule::AdvancedCutoff: {
      // Secondary dominance first.
      if (ee >= t.best_ee && eval >= t.best_eval) {
        t.k = j;
        t.best_eval = eval;
        t.best_ee = ee;
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      double cutoff = cfg.f * static_cast<double>(t.max_ee);
      if (s1_active && !cfg.low_f_skip_threshold)
        cutoff = std::max(cutoff, static_cast<double>(threshold_r));
      if (static_cast<double>(ee) < cutoff) return false;
      const bool better =
          cfg.rule == ChoiceRule::SimpleCutoff
              ? eval > t.best_eval
              : detail::product_greater(eval, ee, t.best_eval, t.best_ee);
      if (better) {
        t.k = j;
        t.best_eval = eval;
        t.best_ee = ee;
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      return false;
    }
  }
  return false;
}

/// Candidate comparison for Eval(j) <= 0 scans (descent moves).  The cutoff
/// divides by f instead of multiplying, and the advanced rule cross-multiplies
/// with the roles of Eval and EE exchanged.
template <class Scalar>
inline bool condition2_choice(int j, std::int64_t eval, Scalar ee,
                              CandidateTracker<Scalar>& t, const ChoiceConfig& cfg,
                              Scalar eebase) {
  cfg.validate();
  if (t.empty()) {
    t.reset_to(j, eval, ee, cfg.w2, eebase);
    return true;
  }
  switch (cfg.rule) {
    case ChoiceRule::WeightedSum: {
      const double ew = t.weighted(eval, ee, cfg.w2, eebase);
      if (ew > t.best_eval_w) {
        t.k = j;
        t.best_eval_w = ew;
        t.best_eval = std::max(t.best_eval, eval);
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      return false;
    }
    case ChoiceRule::SimpleCutoff:
    case ChoiceRule::AdvancedCutoff: {
      if (ee >= t.best_ee && eval >= t.best_eval) {
        t.k = j;
        t.best_eval = eval;
        t.best_ee = ee;
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      const double cutoff = static_cast<double>(t.max_ee) / cfg.f;
      if (static_cast<double>(ee) < cutoff) return false;
      const bool better =
          cfg.rule == ChoiceRule::SimpleCutoff
              ? eval > t.best_eval
              : detail::product_greater(eval, t.best_ee, t.best_eval, ee);
      if (better) {
        t.k = j;
        t.best_eval = eval;
        t.best_ee = ee;
        t.max_ee = std::max(t.max_ee, ee);
        return true;
      }
      return false;
    }
  }
  return false;
}

/// Strict tradeoff dominance between value pairs A = (a1, a2), B = (b1, b2).
/// condition 1 form (a1, b1 >= 0):  a1*a2 >  b1*b2
/// condition 2 form (a1, b1 <= 0):  a1*b2 >  a2*b1
inline bool tradeoff_dominates(std::int64_t a1, std::int64_t a2, std::int64_t b1,
                               std::int64_t b2, bool condition1_form) {
  if (condition1_form) {
    if (a1 < 0 || b1 < 0)
      throw std::invalid_argument("condition 1 form requires a1, b1 >= 0");
    return static_cast<__int128>(a1) * a2 > static_cast<__int128>(b1) * b2;
  }
  if (a1 > 0 || b1 > 0)
    throw std::invalid_argument("condition 2 form requires a1, b1 <= 0");
  return static_cast<__int128>(a1) * b2 > static_cast<__int128>(a2) * b1;
}

}  // namespace aa

#endif  // AA_CHOICE_RULES_HPP

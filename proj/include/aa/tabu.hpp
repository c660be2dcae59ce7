#ifndef AA_TABU_HPP
#define AA_TABU_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "aa/provider.hpp"
#include "aa/result.hpp"

namespace aa {

/// Tabu-free descent extension: once `range` iterations have passed since
/// the last tabu-free solution, the aspiration test is relaxed by
/// `xo_tolerance`; a move admitted only under the relaxed test suspends
/// all tabu restrictions until the next local optimum, which becomes the
/// new tabu-free solution.  Reinstatement leaves the absolute TabuIter
/// values untouched, so remaining tenures shrink by the suspension length.
struct TabuFreeConfig {
  long range = 50;
  std::int64_t xo_tolerance = 0;
};

struct TabuConfig {
  int low_tenure = 5;
  int high_tenure = 10;
  long max_iter = 1000;
  std::uint64_t seed = 1;
  std::optional<TabuFreeConfig> tabu_free;

  void validate() const {
    if (low_tenure < 1 || high_tenure < low_tenure)
      throw std::invalid_argument("need 1 <= low_tenure <= high_tenure");
    if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");
  }
};

/// Plain best-improving tabu search used as the comparison baseline:
/// each iteration flips the highest-Eval variable that is non-tabu or
/// passes aspiration, then makes the reverse move tabu for a uniformly
/// drawn tenure in [low_tenure, high_tenure].
class TabuSearch {
 public:
  TabuSearch(EvaluationProvider& p, const TabuConfig& cfg);

  struct StepInfo {
    int k = 0;
    bool aspiration = false;
    bool relaxed_only = false;  // admitted only by the relaxed criterion
    bool suspended = false;     // tabu restrictions currently suspended
    bool local_optimum = false;
    bool tabu_free_solution = false;
  };

  StepInfo step();
  RunResult run();

  bool is_tabu(int j) const { return tabu_iter_[j] >= iter_; }
  long iteration() const { return iter_; }
  bool suspended() const { return suspended_; }
  long tabu_free_iter() const { return tabu_free_iter_; }
  std::int64_t xo_star() const { return xo_star_; }

  bool trace_enabled = false;
  std::optional<std::int64_t> stop_at_objective;

 private:
  void capture_best();

  EvaluationProvider& p_;
  TabuConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<std::int64_t> tabu_iter_;
  long iter_ = 0;
  std::int64_t xo_star_ = 0;
  std::int64_t best_objective_ = 0;
  Assignment best_assignment_;
  bool suspended_ = false;
  bool seen_local_opt_ = false;
  long tabu_free_iter_ = 0;
  long local_optima_ = 0;
  std::vector<TraceRow> trace_;
};

}  // namespace aa

#endif  // AA_TABU_HPP

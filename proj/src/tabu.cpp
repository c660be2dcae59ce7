#include "aa/tabu.hpp"

#include <chrono>

namespace aa {

TabuSearch::TabuSearch(EvaluationProvider& p, const TabuConfig& cfg)
    : p_(p), cfg_(cfg), rng_(cfg.seed) {
  cfg.validate();
  tabu_iter_.assign(p.size() + 1, 0);
  xo_star_ = p.objective();
  best_objective_ = xo_star_;
  capture_best();
}

void TabuSearch::capture_best() {
  best_assignment_.assign(p_.size() + 1, 0);
  for (int j = 1; j <= p_.size(); ++j) best_assignment_[j] = p_.bit(j);
}

TabuSearch::StepInfo TabuSearch::step() {
  ++iter_;
  StepInfo info;
  const std::int64_t xo = p_.objective();

  const bool relax_active =
      cfg_.tabu_free && iter_ >= tabu_free_iter_ + cfg_.tabu_free->range &&
      seen_local_opt_;
  const std::int64_t tol = relax_active ? cfg_.tabu_free->xo_tolerance : 0;

  // A selection made under suspension stays legitimate even though the
  // suspension may end at a local optimum later in this same step.
  const bool selection_suspended = suspended_;
  bool local_opt = true;
  int k = 0;
  bool k_aspiration = false, k_relaxed_only = false;
  std::int64_t best_eval = 0;
  bool have = false;
  for (int j = 1; j <= p_.size(); ++j) {
    const std::int64_t e = p_.eval(j);
    if (e > 0) local_opt = false;
    bool aspiration = false, relaxed_only = false;
    if (!suspended_ && is_tabu(j)) {
      if (xo + e > xo_star_) {
        aspiration = true;
      } else if (xo + e > xo_star_ - tol) {
        aspiration = true;
        relaxed_only = true;
      } else {
        continue;
      }
    }
    if (!have || e > best_eval) {
      have = true;
      best_eval = e;
      k = j;
      k_aspiration = aspiration;
      k_relaxed_only = relaxed_only;
    }
  }

  if (local_opt) {
    ++local_optima_;
    info.local_optimum = true;
    if (suspended_ || !seen_local_opt_) {
      // Reached without tabu interference: a tabu-free solution.
      info.tabu_free_solution = true;
      tabu_free_iter_ = iter_;
      suspended_ = false;
      seen_local_opt_ = true;
    }
  }

  if (k != 0) {
    if (k_relaxed_only && !suspended_) suspended_ = true;
    const std::int64_t ek = p_.eval(k);
    const bool tabu_sel = !selection_suspended && !suspended_ && is_tabu(k);
    p_.apply_flip(k);
    const long tenure =
        cfg_.low_tenure +
        static_cast<long>(rng_() % static_cast<std::uint64_t>(
                                       cfg_.high_tenure - cfg_.low_tenure + 1));
    tabu_iter_[k] = iter_ + tenure;
    if (p_.objective() > xo_star_) {
      xo_star_ = p_.objective();
      best_objective_ = xo_star_;
      capture_best();
    }
    if (trace_enabled)
      trace_.push_back({iter_, false, k, ek, p_.objective(), xo_star_,
                        PhaseEvent::None,
                        k_aspiration ? SelectPath::Aspiration
                                     : SelectPath::Condition2,
                        false, tabu_sel});
  }
  info.k = k;
  info.aspiration = k_aspiration;
  info.relaxed_only = k_relaxed_only;
  info.suspended = suspended_;
  return info;
}

RunResult TabuSearch::run() {
  const auto t0 = std::chrono::steady_clock::now();
  while (iter_ < cfg_.max_iter) {
    step();
    if (stop_at_objective && best_objective_ >= *stop_at_objective) break;
  }
  RunResult res;
  res.best_objective = best_objective_;
  res.best_assignment = best_assignment_;
  res.iterations = iter_;
  res.true_local_optima = local_optima_;
  res.trace = trace_;
  res.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace aa

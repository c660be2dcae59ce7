#ifndef AA_ENGINE_HPP
#define AA_ENGINE_HPP

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "aa/choice_rules.hpp"
#include "aa/double_pass.hpp"
#include "aa/ee_memory.hpp"
#include "aa/myopic.hpp"
#include "aa/provider.hpp"
#include "aa/result.hpp"

namespace aa {

enum class Algorithm { SinglePass, DoublePassV1, DoublePassV2 };

/// What stays tabu when a new ascent is launched.
enum class TabuVariation { HoldLastVbl, ReleaseAll, HoldStatusVars };

enum class McVariant { Off, A, B };

constexpr std::int64_t kLargeTenure = std::int64_t{1} << 31;

struct AAConfig {
  EEConfig ee;
  ChoiceConfig choice;
  Algorithm algo = Algorithm::SinglePass;
  int trigger = 5;
  std::int64_t tenure = kLargeTenure;
  std::int64_t small_tenure = 0;  // drop-back tenure, 0 to 2
  TabuVariation tabu_variation = TabuVariation::HoldLastVbl;
  McVariant mc = McVariant::Off;
  int mc_capacity = 0;  // 0 selects McState::default_capacity(n)
  bool dp_use_list = true;
  long max_iter = 1000;
  std::uint64_t seed = 1;  // echoed into results; the engine is deterministic

  void validate() const {
    ee.validate();
    choice.validate();
    if (trigger < 1) throw std::invalid_argument("trigger must be >= 1");
    if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");
  }
};

enum class VarStatus { None, SPlus, S1, S2 };

/// Alternating-ascent search engine over an EvaluationProvider.
///
/// Iterations alternate between a scan that classifies every variable and
/// nominates a flip, and a post-iteration update that performs the flip,
/// maintains tabu/EE/status state, and handles the three phase events
/// (ascent launch, conditional local optimum, true local optimum).
template <class Scalar>
class Engine {
 public:
  struct StepResult {
    int k = 0;
    PhaseEvent event = PhaseEvent::None;
    SelectPath path = SelectPath::None;
    bool trigger_fired = false;
  };

  struct ScanFlags {
    bool aspiration = false;
    bool condition1 = false;
    bool condition2 = false;
    bool s1 = false;
    int status_count2 = 0;
    int k = 0;
    SelectPath path = SelectPath::None;
    std::vector<int> s2_vars;
  };

  Engine(EvaluationProvider& p, const AAConfig& cfg)
      : p_(p), cfg_(cfg), mem_(cfg.ee, p.size()) {
    cfg.validate();
    init_state(/*ascent=*/true);
  }

  /// Resume entry used by tests and the scripted replay: starts from an
  /// existing memory (and optional tabu marks) in the given phase.
  Engine(EvaluationProvider& p, const AAConfig& cfg, BasicEeMemory<Scalar> memory,
         std::vector<std::int64_t> tabu_iter, bool ascent)
      : p_(p), cfg_(cfg), mem_(std::move(memory)) {
    cfg.validate();
    if (mem_.size() != p.size()) throw std::invalid_argument("memory size mismatch");
    init_state(ascent);
    if (!tabu_iter.empty()) {
      if (static_cast<int>(tabu_iter.size()) != p.size() + 1)
        throw std::invalid_argument("tabu vector size mismatch");
      tabu_iter_ = std::move(tabu_iter);
    }
  }

  StepResult step(std::optional<int> forced = std::nullopt) {
    ++iter_;
    ScanFlags f = scan();
    int k = f.k;
    if (cfg_.algo != Algorithm::SinglePass && k > 0 && !f.aspiration)
      k = second_pass(f);
    if (forced) {
      k = *forced;
      if (k != f.k) f.path = SelectPath::Forced;
    }
    StepResult r = post_update(k, f);
    if (on_event && r.event != PhaseEvent::None) on_event(r.event, *this);
    return r;
  }

  RunResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    while (iter_ < cfg_.max_iter) {
      step();
      if (stop_at_objective && best_objective_ >= *stop_at_objective) break;
    }
    RunResult res;
    res.best_objective = best_objective_;
    res.best_assignment = best_assignment_;
    res.iterations = iter_;
    res.true_local_optima = true_local_optima_;
    res.conditional_local_optima = conditional_local_optima_;
    res.ascents_launched = ascents_launched_;
    res.trigger_firings = trigger_firings_;
    res.trace = trace_;
    res.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
  }

  // State accessors.
  long iteration() const { return iter_; }
  bool ascending() const { return ascent_; }
  int last_vbl() const { return last_vbl_; }
  long status_count1() const { return status_count1_; }
  bool is_tabu(int j) const { return tabu_iter_[j] >= iter_; }
  std::int64_t tabu_iter(int j) const { return tabu_iter_[j]; }
  Scalar ee_view(int j) const { return ee_[j]; }
  const BasicEeMemory<Scalar>& memory() const { return mem_; }
  const EvaluationProvider& provider() const { return p_; }
  std::int64_t best_objective() const { return best_objective_; }
  const Assignment& best_assignment() const { return best_assignment_; }
  std::int64_t xo_star() const { return xo_star_; }
  const std::vector<int>& s1_selected() const { return s1_selected_; }
  long true_local_optima() const { return true_local_optima_; }
  long conditional_local_optima() const { return conditional_local_optima_; }
  long ascents_launched() const { return ascents_launched_; }
  long trigger_firings() const { return trigger_firings_; }
  const std::vector<TraceRow>& trace() const { return trace_; }
  const McState* mc_state() const { return mc_ ? &*mc_ : nullptr; }

  /// Status of x_j against the most recent recorded optimum.
  VarStatus classify_status(int j) const {
    const std::int64_t e = p_.eval(j);
    const Scalar eej = ee_[j];
    const bool same = eej >= mem_.max_weight();
    if (same && e > 0 && eej >= mem_.threshold_r()) return VarStatus::S1;
    if (same && e > 0 && !is_tabu(j)) return VarStatus::SPlus;
    if (!same && e <= 0 && eej <= mem_.eebase() - mem_.threshold_r())
      return VarStatus::S2;
    return VarStatus::None;
  }

  bool trace_enabled = false;
  std::optional<std::int64_t> stop_at_objective;
  std::function<void(PhaseEvent, const Engine&)> on_event;

 private:
  void init_state(bool ascent) {
    const int n = p_.size();
    ascent_ = ascent;
    tabu_iter_.assign(n + 1, 0);
    ee_.resize(n + 1);
    rebuild_ee_views();
    xo_star_ = p_.objective();
    best_objective_ = xo_star_;
    capture_best();
    list_.init(n);
    if (cfg_.mc != McVariant::Off) {
      const int cap = cfg_.mc_capacity > 0 ? cfg_.mc_capacity
                                           : McState::default_capacity(n);
      mc_.emplace(n, cap,
                  cfg_.mc == McVariant::A ? McSchedule::variant_a()
                                          : McSchedule::variant_b());
    }
  }

  void rebuild_ee_views() {
    for (int j = 1; j <= p_.size(); ++j) ee_[j] = mem_.ee_value(j, p_.bit(j));
  }

  void capture_best() {
    best_assignment_.assign(p_.size() + 1, 0);
    for (int j = 1; j <= p_.size(); ++j) best_assignment_[j] = p_.bit(j);
  }

  void flip(int k, SelectPath path, bool trigger_fired, PhaseEvent event) {
    const std::int64_t ek = p_.eval(k);
    const bool tabu_sel = is_tabu(k);
    p_.apply_flip(k);
    ee_[k] = mem_.eebase() - ee_[k];
    if constexpr (std::is_integral_v<Scalar>) {
      assert(ee_[k] == mem_.ee_value(k, p_.bit(k)));
    }
    if (p_.objective() > best_objective_) {
      best_objective_ = p_.objective();
      capture_best();
    }
    if (trace_enabled)
      trace_.push_back({iter_, ascent_, k, ek, p_.objective(), xo_star_, event, path,
                        trigger_fired, tabu_sel});
  }

  void trace_no_flip(PhaseEvent event, SelectPath path, bool trigger_fired) {
    if (trace_enabled)
      trace_.push_back({iter_, ascent_, 0, 0, p_.objective(), xo_star_, event, path,
                        trigger_fired, false});
  }

  ScanFlags scan() {
    ScanFlags f;
    tracker_ = CandidateTracker<Scalar>{};
    const bool dp = cfg_.algo != Algorithm::SinglePass;
    if (dp) {
      stats_eval_.reset();
      stats_ee_.reset();
      list_.clear();
    }
    const Scalar thr = mem_.threshold_r();
    const Scalar ebase = mem_.eebase();
    const std::int64_t xo = p_.objective();
    for (int j = 1; j <= p_.size(); ++j) {
      const std::int64_t e = p_.eval(j);
      if (xo + e > xo_star_) {
        f.aspiration = true;
        f.k = j;
        f.path = SelectPath::Aspiration;
        xo_star_ = xo + e;
        continue;
      }
      if (f.aspiration) continue;
      const Scalar eej = ee_[j];
      if (e > 0) {
        if (is_tabu(j) && eej < thr) continue;
        if (!f.condition1 || (!f.s1 && eej >= thr)) {
          // First profitable candidate, or the first recency-qualified
          // one: restart the candidate set from j.
          f.condition1 = true;
          if (eej >= thr) f.s1 = true;
          f.k = j;
          f.path = f.s1 ? SelectPath::S1 : SelectPath::Condition1;
          if (dp) {
            stats_eval_.reset_to(static_cast<double>(e));
            stats_ee_.reset_to(static_cast<double>(eej));
            list_.clear();
            list_.push(j);
          } else {
            tracker_.reset_to(j, e, eej, cfg_.choice.w1, ebase);
          }
          continue;
        }
        if (f.s1 && eej < thr) continue;
        if (dp) {
          stats_eval_.admit(static_cast<double>(e));
          stats_ee_.admit(static_cast<double>(eej));
          list_.push(j);
        } else if (primary_dominates(e, eej, tracker_)) {
          tracker_.admit_full(j, e, eej, cfg_.choice.w1, ebase);
          f.k = j;
          f.path = f.s1 ? SelectPath::S1 : SelectPath::Condition1;
        } else if (condition1_choice(j, e, eej, tracker_, cfg_.choice, f.s1, thr,
                                     ebase)) {
          f.k = j;
          f.path = f.s1 ? SelectPath::S1 : SelectPath::Condition1;
        }
      } else if (!f.condition1 && !ascent_) {
        if (eej <= ebase - thr) {
          // S2: x_j moved away from a value it held in the r most recent
          // optima; count it instead of treating it as a candidate.
          ++f.status_count2;
          last_vbl_ = j;
          f.s2_vars.push_back(j);
        } else if (!is_tabu(j)) {
          f.condition2 = true;
          if (dp) {
            stats_eval_.admit(static_cast<double>(e));
            stats_ee_.admit(static_cast<double>(eej));
            list_.push(j);
            f.k = j;
            f.path = SelectPath::Condition2;
          } else if (primary_dominates(e, eej, tracker_)) {
            tracker_.admit_full(j, e, eej, cfg_.choice.w2, ebase);
            f.k = j;
            f.path = SelectPath::Condition2;
          } else if (condition2_choice(j, e, eej, tracker_, cfg_.choice, ebase)) {
            f.k = j;
            f.path = SelectPath::Condition2;
          }
        }
      }
    }
    if (!dp && !f.aspiration && tracker_.k != 0) f.k = tracker_.k;
    return f;
  }

  bool second_pass_admissible(int j, const ScanFlags& f, Scalar thr,
                              Scalar ebase) const {
    const std::int64_t e = p_.eval(j);
    if (f.condition1) {
      if (e <= 0) return false;
      if (is_tabu(j) && ee_[j] < thr) return false;
      if (f.s1 && ee_[j] < thr) return false;
      return true;
    }
    if (e > 0 || ascent_) return false;
    if (ee_[j] <= ebase - thr) return false;
    return !is_tabu(j);
  }

  /// Cutoff selection over the first-pass candidates; falls back to the
  /// first-pass flag variable when nothing qualifies.
  int second_pass(const ScanFlags& f) {
    const bool v1 = cfg_.algo == Algorithm::DoublePassV1;
    const PassStats& st = v1 ? stats_eval_ : stats_ee_;
    if (st.count == 0) return f.k;
    const double cutoff = interpolate_cutoff(st, cfg_.choice.f);
    const Scalar thr = mem_.threshold_r();
    const Scalar ebase = mem_.eebase();
    auto primary = [&](int j) {
      return v1 ? static_cast<double>(p_.eval(j)) : static_cast<double>(ee_[j]);
    };
    auto secondary = [&](int j) {
      return v1 ? static_cast<double>(ee_[j]) : static_cast<double>(p_.eval(j));
    };
    int k = 0;
    double best = -std::numeric_limits<double>::infinity();
    if (cfg_.dp_use_list) {
      for (int j = list_.first; j != 0; j = list_.link[j]) {
        if (primary(j) >= cutoff && secondary(j) > best) {
          best = secondary(j);
          k = j;
        }
      }
    } else {
      for (int j = list_.j_first; j >= 1 && j <= list_.j_last; ++j) {
        if (!second_pass_admissible(j, f, thr, ebase)) continue;
        if (primary(j) >= cutoff && secondary(j) >= best) {
          best = secondary(j);
          k = j;
        }
      }
    }
    return k != 0 ? k : f.k;
  }

  void clear_tabu_for_launch(const ScanFlags& f, bool trigger_launch) {
    std::vector<int> held;
    switch (cfg_.tabu_variation) {
      case TabuVariation::ReleaseAll:
        last_vbl_ = 0;
        break;
      case TabuVariation::HoldLastVbl:
        if (last_vbl_ > 0) held.push_back(last_vbl_);
        break;
      case TabuVariation::HoldStatusVars:
        if (last_vbl_ > 0) held.push_back(last_vbl_);
        for (int j : f.s2_vars) held.push_back(j);
        for (int j : s1_selected_) held.push_back(j);
        break;
    }
    std::fill(tabu_iter_.begin(), tabu_iter_.end(), 0);
    held_.clear();
    for (int j : held) {
      tabu_iter_[j] = trigger_launch ? kLargeTenure : iter_ + cfg_.tenure;
      held_.push_back(j);
    }
  }

  void launch_ascent(const ScanFlags& f, bool trigger_launch) {
    ascent_ = true;
    ++ascents_launched_;
    if (trigger_launch) ++trigger_firings_;
    clear_tabu_for_launch(f, trigger_launch);
    status_count1_ = 0;
    s1_selected_.clear();
    if (!trigger_launch) recent1_ = recent2_ = recent3_ = 0;
    if (mc_) mc_->reset();
  }

  void mc_record(int k, const ScanFlags& f) {
    if (!mc_) return;
    if (f.s1) {
      mc_->mark_stale(k);  // S1 selections are deliberate, never undone
      return;
    }
    if (!mc_->add(k)) return;
    const int drops = mc_->current_step().second;
    for (int m = 0; m < drops; ++m) {
      bool empty = false;
      const int kd = mc_->pop_oldest(empty);
      if (empty) break;
      if (kd != 0) {
        flip(kd, SelectPath::McDrop, false, PhaseEvent::None);
        tabu_iter_[kd] = iter_ + cfg_.small_tenure;
      }
    }
    mc_->finish_drop_round();
  }

  StepResult post_update(int k, ScanFlags& f) {
    StepResult r;
    r.k = k;
    r.path = f.path;
    if (k > 0) {
      if (!f.condition1 && status_count1_ + f.status_count2 >= cfg_.trigger) {
        // Launch without flipping: nothing profitable was admissible and
        // the accumulated statuses reached the trigger.
        r.trigger_fired = true;
        r.event = PhaseEvent::AscentLaunched;
        r.k = 0;
        launch_ascent(f, /*trigger_launch=*/true);
        trace_no_flip(r.event, f.path, true);
        return r;
      }
      const std::int64_t ek = p_.eval(k);
      flip(k, f.path, false, PhaseEvent::None);
      if (ascent_) {
        recent3_ = recent2_;
        recent2_ = recent1_;
        recent1_ = k;
      } else {
        tabu_iter_[k] = iter_ + cfg_.tenure;
        if (ek > 0) {
          last_vbl_ = k;
          f.status_count2 = 0;
        }
        if (f.aspiration || f.s1) {
          ++status_count1_;
          if (f.s1 && !f.aspiration) s1_selected_.push_back(k);
        }
        if (status_count1_ + f.status_count2 >= cfg_.trigger) {
          r.trigger_fired = true;
          r.event = PhaseEvent::AscentLaunched;
          launch_ascent(f, /*trigger_launch=*/true);
          if (trace_enabled && !trace_.empty()) {
            trace_.back().trigger_fired = true;
            trace_.back().event = PhaseEvent::AscentLaunched;
          }
        }
      }
      mc_record(k, f);
      return r;
    }
    // k = 0: phase boundary.
    if (ascent_) {
      if (last_vbl_ > 0) {
        // Conditional local optimum: release the held variable and keep
        // ascending if that opens a profitable move.
        tabu_iter_[last_vbl_] = 0;
        for (int j : held_) tabu_iter_[j] = 0;
        held_.clear();
        last_vbl_ = 0;
        ++conditional_local_optima_;
        r.event = PhaseEvent::ConditionalLocalOpt;
        trace_no_flip(r.event, SelectPath::None, false);
        return r;
      }
      // True local optimum: record it and return to the post-ascent phase.
      ascent_ = false;
      Assignment x(p_.size() + 1, 0);
      for (int j = 1; j <= p_.size(); ++j) x[j] = p_.bit(j);
      mem_.record(x);
      rebuild_ee_views();
      for (int rv : {recent1_, recent2_, recent3_})
        if (rv > 0) tabu_iter_[rv] = iter_ + cfg_.tenure;
      status_count1_ = 0;
      s1_selected_.clear();
      ++true_local_optima_;
      if (mc_) mc_->reset();
      r.event = PhaseEvent::TrueLocalOpt;
      trace_no_flip(r.event, SelectPath::None, false);
      return r;
    }
    // Post-ascent phase exhausted without an admissible move: launch.
    r.event = PhaseEvent::AscentLaunched;
    launch_ascent(f, /*trigger_launch=*/false);
    trace_no_flip(r.event, SelectPath::None, false);
    return r;
  }

  EvaluationProvider& p_;
  AAConfig cfg_;
  BasicEeMemory<Scalar> mem_;

  std::vector<std::int64_t> tabu_iter_;
  std::vector<Scalar> ee_;
  std::vector<int> held_;
  std::vector<int> s1_selected_;
  CandidateTracker<Scalar> tracker_;
  PassStats stats_eval_, stats_ee_;
  CandidateList list_;
  std::optional<McState> mc_;

  long iter_ = 0;
  bool ascent_ = true;
  int last_vbl_ = 0;
  int recent1_ = 0, recent2_ = 0, recent3_ = 0;
  long status_count1_ = 0;
  std::int64_t xo_star_ = 0;
  std::int64_t best_objective_ = 0;
  Assignment best_assignment_;
  long true_local_optima_ = 0;
  long conditional_local_optima_ = 0;
  long ascents_launched_ = 0;
  long trigger_firings_ = 0;
  std::vector<TraceRow> trace_;
};

using EngineInt = Engine<std::int64_t>;
using EngineReal = Engine<double>;

}  // namespace aa

#endif  // AA_ENGINE_HPP

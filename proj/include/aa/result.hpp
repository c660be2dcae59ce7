#ifndef AA_RESULT_HPP
#define AA_RESULT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aa/qubo.hpp"

namespace aa {

enum class PhaseEvent { None, AscentLaunched, ConditionalLocalOpt, TrueLocalOpt };

enum class SelectPath { None, Aspiration, S1, Condition1, Condition2, Forced, McDrop };

struct TraceRow {
  long iter = 0;
  bool ascent = false;
  int k = 0;
  std::int64_t eval_k = 0;
  std::int64_t xo = 0;
  std::int64_t xo_star = 0;
  PhaseEvent event = PhaseEvent::None;
  SelectPath path = SelectPath::None;
  bool trigger_fired = false;
  bool tabu_at_selection = false;
};

struct RunResult {
  std::int64_t best_objective = 0;
  Assignment best_assignment;
  long iterations = 0;
  long true_local_optima = 0;
  long conditional_local_optima = 0;
  long ascents_launched = 0;
  long trigger_firings = 0;
  double wall_time_ms = 0.0;
  std::vector<TraceRow> trace;
};

std::string phase_event_name(PhaseEvent e);
std::string select_path_name(SelectPath p);

/// CSV with header iter,phase,k,eval_k,xo,xo_star,status_event,trigger_fired.
std::string trace_to_csv(const std::vector<TraceRow>& trace);

}  // namespace aa

#endif  // AA_RESULT_HPP

#include "aa/result.hpp"

#include <sstream>

namespace aa {

std::string phase_event_name(PhaseEvent e) {
  switch (e) {
    case PhaseEvent::None: return "none";
    case PhaseEvent::AscentLaunched: return "ascent_launched";
    case PhaseEvent::ConditionalLocalOpt: return "conditional_local_opt";
    case PhaseEvent::TrueLocalOpt: return "true_local_opt";
  }
  return "none";
}

std::string select_path_name(SelectPath p) {
  switch (p) {
    case SelectPath::None: return "none";
    case SelectPath::Aspiration: return "aspiration";
    case SelectPath::S1: return "s1";
    case SelectPath::Condition1: return "condition1";
    case SelectPath::Condition2: return "condition2";
    case SelectPath::Forced: return "forced";
    case SelectPath::McDrop: return "mc_drop";
  }
  return "none";
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream out;
  out << "iter,phase,k,eval_k,xo,xo_star,status_event,trigger_fired\n";
  for (const TraceRow& r : trace) {
    out << r.iter << ',' << (r.ascent ? "ascent" : "post_ascent") << ',' << r.k
        << ',' << r.eval_k << ',' << r.xo << ',' << r.xo_star << ','
        << (r.event != PhaseEvent::None ? phase_event_name(r.event)
                                        : select_path_name(r.path))
        << ',' << (r.trigger_fired ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace aa

#include "aa/working_table.hpp"

#include <algorithm>

#include "aa/engine.hpp"
#include "aa/scripted.hpp"

namespace aa {

namespace {

Assignment row(std::initializer_list<int> bits) {
  Assignment x;
  x.push_back(0);
  for (int b : bits) x.push_back(static_cast<std::uint8_t>(b));
  return x;
}

std::vector<std::int64_t> evals(std::initializer_list<std::int64_t> e) {
  std::vector<std::int64_t> v;
  v.push_back(0);
  for (std::int64_t x : e) v.push_back(x);
  return v;
}

/// Status census matching the table's StatusCount column: selected-S1
/// variables are counted through the engine's locked counter, everything
/// else through the per-variable status conditions.
int census(const EngineInt& eng) {
  int count = static_cast<int>(eng.status_count1());
  const auto& locked = eng.s1_selected();
  for (int j = 1; j <= eng.provider().size(); ++j) {
    if (std::find(locked.begin(), locked.end(), j) != locked.end()) continue;
    const VarStatus s = eng.classify_status(j);
    if (s == VarStatus::S1 || s == VarStatus::S2) ++count;
  }
  return count;
}

}  // namespace

WorkingTableReport replay_working_table() {
  constexpr int n = 10;

  EEConfig ee;
  ee.window = 4;
  ee.depth = 3;
  ee.arithmetic = EEArithmetic::Integer;

  AAConfig cfg;
  cfg.ee = ee;
  cfg.choice.rule = ChoiceRule::SimpleCutoff;
  cfg.trigger = 3;
  cfg.max_iter = 100;

  // The four recorded optima, oldest first; the last one is the current
  // assignment the replay starts from.
  const Assignment h1 = row({1, 1, 1, 1, 0, 0, 0, 1, 1, 1});
  const Assignment h2 = row({0, 1, 0, 1, 1, 0, 1, 1, 0, 1});
  const Assignment h3 = row({0, 1, 0, 0, 0, 0, 1, 1, 1, 0});
  const Assignment h4 = row({1, 1, 0, 0, 0, 0, 1, 1, 1, 0});

  EeMemoryInt memory(ee, n);
  for (const Assignment* h : {&h1, &h2, &h3, &h4}) memory.record(*h);

  // Full Eval-sign script.  Flips negate the flipped variable's Eval; the
  // narrated side effects are the sign changes of x2 (souring after move 4,
  // cancelled by move 6, restored by move 7), x7/x10 (profitable after
  // move 5), and x3 (souring after move 8).  Eval(7) returning positive
  // after move 7 is fixture-internal: it keeps the flipped-and-tabu x7 out
  // of the S2 census so the trigger total reaches 3 at move 8, not before.
  std::vector<ScriptedProvider::Move> moves = {
      {1, evals({1, -2, -1, -1, -2, -1, -3, -1, -2, -1})},
      {2, evals({1, 2, -1, -1, -2, -1, -3, -1, -2, -1})},
      {3, evals({1, 2, 1, -1, -2, -1, -3, -1, -2, -1})},
      {4, evals({1, -2, 1, 1, -2, -1, -3, -1, -2, -1})},
      {5, evals({1, -2, 1, 1, 2, -1, 3, -1, -2, 1})},
      {7, evals({1, 2, 1, 1, 2, -1, -3, -1, -2, -1})},
      {6, evals({1, -2, 1, 1, 2, 1, 3, -1, -2, 1})},
      {10, evals({1, -2, -1, 1, 2, 1, 3, -1, -2, -1})},
      // Ascent after the launch, up to the new local optimum.
      {1, evals({-1, -2, -1, 1, 2, 1, 3, -1, -2, -1})},
      {4, evals({-1, -2, -1, -1, 2, 1, 3, -1, -2, -1})},
      {5, evals({-1, -2, -1, -1, -2, 1, 3, -1, -2, -1})},
      {7, evals({-1, -2, -1, -1, -2, -1, -3, -1, -2, -1})},
  };

  ScriptedProvider provider(h4, evals({-1, -2, -1, -1, -2, -1, -3, -1, -2, -1}),
                            std::move(moves));

  // x7 and x9 start tabu.
  std::vector<std::int64_t> tabu(n + 1, 0);
  tabu[7] = kLargeTenure;
  tabu[9] = kLargeTenure;

  EngineInt eng(provider, cfg, memory, tabu, /*ascent=*/false);

  WorkingTableReport rep;
  for (int j = 1; j <= n; ++j) {
    rep.initial_ee_row.push_back(eng.ee_view(j));
    if (eng.ee_view(j) >= eng.memory().threshold_r())
      rep.initial_asterisks.push_back(j);
  }

  // Moves 1..8.
  const int forced[] = {1, 2, 3, 4, 5, 7, 6, 10};
  for (int m = 1; m <= 8; ++m) {
    eng.step(forced[m - 1]);
    if (m >= 4) rep.status_count_trajectory.push_back(census(eng));
    switch (m) {
      case 4:
        rep.s2_on_x2_at_move4 = eng.classify_status(2) == VarStatus::S2;
        break;
      case 5:
        rep.s1_on_x7_at_move5 = eng.classify_status(7) == VarStatus::S1;
        rep.splus_on_x10_at_move5 = eng.classify_status(10) == VarStatus::SPlus;
        break;
      case 6:
        rep.statuses_cancelled_at_move6 =
            eng.classify_status(2) == VarStatus::None &&
            eng.classify_status(10) == VarStatus::None;
        break;
      case 7:
        rep.statuses_restored_at_move7 =
            eng.classify_status(2) == VarStatus::S2 &&
            eng.classify_status(10) == VarStatus::SPlus;
        break;
      case 8:
        rep.s2_on_x3_at_move8 = eng.classify_status(3) == VarStatus::S2;
        break;
    }
  }

  // The scan after move 8 should launch the ascent without flipping,
  // holding the last souring variable (x3) tabu.
  {
    const auto r = eng.step();
    rep.trigger_fired_after_move8 =
        r.trigger_fired && r.event == PhaseEvent::AscentLaunched;
    rep.held_variable = 0;
    rep.others_free_at_launch = true;
    for (int j = 1; j <= n; ++j) {
      if (eng.is_tabu(j)) {
        if (rep.held_variable == 0 && eng.tabu_iter(j) >= kLargeTenure)
          rep.held_variable = j;
        else
          rep.others_free_at_launch = false;
      }
    }
    rep.held_variable_tabu = rep.held_variable != 0;
  }

  // Ascent moves, then the conditional and true local optima.
  for (int k : {1, 4, 5, 7}) eng.step(k);
  const auto cond = eng.step();
  const auto opt = eng.step();
  rep.conditional_then_true_opt = cond.event == PhaseEvent::ConditionalLocalOpt &&
                                  opt.event == PhaseEvent::TrueLocalOpt;

  rep.new_optimum.assign(n + 1, 0);
  for (int j = 1; j <= n; ++j)
    rep.new_optimum[j] = static_cast<std::uint8_t>(eng.provider().bit(j));

  for (int j = 1; j <= n; ++j) {
    rep.post_ee_row.push_back(eng.ee_view(j));
    if (eng.ee_view(j) >= eng.memory().threshold_r())
      rep.post_asterisks.push_back(j);
  }
  return rep;
}

}  // namespace aa

#include <set>
#include <vector>

#include "doctest.h"

#include "aa/engine.hpp"
#include "aa/io.hpp"

using namespace aa;

namespace {

AAConfig base_config(int window = 8, int depth = 3, int trigger = 4) {
  AAConfig cfg;
  cfg.ee.window = window;
  cfg.ee.depth = depth;
  cfg.trigger = trigger;
  cfg.choice.rule = ChoiceRule::SimpleCutoff;
  return cfg;
}

}  // namespace

TEST_CASE("initial ascent climbs to a recorded local optimum") {
  // xo = 3 x1 + 2 x2 - 4 x3 + x1 x2: unique ascent from zero picks x1, x2.
  const QuboInstance q = QuboInstance::from_triplets(
      3, {{1, 1, 3}, {2, 2, 2}, {3, 3, -4}, {1, 2, 1}});
  QuboProvider p(q);
  AAConfig cfg = base_config();
  cfg.max_iter = 10;
  EngineInt eng(p, cfg);
  CHECK(eng.ascending());
  auto r1 = eng.step();
  CHECK(r1.k == 1);  // Eval = (3, 2, -4), best gain first
  auto r2 = eng.step();
  CHECK(r2.k == 2);
  auto r3 = eng.step();
  CHECK(r3.k == 0);
  CHECK(r3.event == PhaseEvent::TrueLocalOpt);
  CHECK_FALSE(eng.ascending());
  CHECK(eng.best_objective() == 6);
  CHECK(eng.memory().recorded() == 1);
  CHECK(eng.memory().same_as_last_optimum(1, 1));
  CHECK(eng.memory().same_as_last_optimum(3, 0));
}

TEST_CASE("recent ascent moves become tabu at the local optimum") {
  const QuboInstance q = QuboInstance::from_triplets(
      3, {{1, 1, 3}, {2, 2, 2}, {3, 3, -4}, {1, 2, 1}});
  QuboProvider p(q);
  EngineInt eng(p, base_config());
  eng.step();
  eng.step();
  eng.step();  // true local optimum
  CHECK(eng.is_tabu(1));
  CHECK(eng.is_tabu(2));
  CHECK_FALSE(eng.is_tabu(3));
}

TEST_CASE("phase events alternate and counters stay consistent") {
  const QuboInstance q = generate_instance(24, 0.5, 9, 11);
  QuboProvider p(q);
  AAConfig cfg = base_config();
  cfg.max_iter = 2000;
  EngineInt eng(p, cfg);
  bool in_ascent = true;
  long optima = 0;
  eng.on_event = [&](PhaseEvent e, const EngineInt& self) {
    switch (e) {
      case PhaseEvent::AscentLaunched:
        CHECK_FALSE(in_ascent);
        in_ascent = true;
        break;
      case PhaseEvent::ConditionalLocalOpt:
        CHECK(in_ascent);
        break;
      case PhaseEvent::TrueLocalOpt:
        CHECK(in_ascent);
        in_ascent = false;
        ++optima;
        for (int j = 1; j <= self.provider().size(); ++j)
          CHECK(self.provider().eval(j) <= 0);
        break;
      default:
        break;
    }
  };
  const RunResult res = eng.run();
  CHECK(optima == res.true_local_optima);
  CHECK(res.true_local_optima == eng.memory().recorded());
  CHECK(res.true_local_optima > 1);
  CHECK(res.ascents_launched >= res.trigger_firings);
}

TEST_CASE("best solution is reproducible and monotone") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const QuboInstance q = generate_instance(20, 0.4, 8, seed);
    QuboProvider p(q);
    AAConfig cfg = base_config();
    cfg.max_iter = 1000;
    EngineInt eng(p, cfg);
    eng.trace_enabled = true;
    const RunResult res = eng.run();
    CHECK(q.objective(res.best_assignment) == res.best_objective);
    std::int64_t running = std::numeric_limits<std::int64_t>::min();
    for (const TraceRow& row : res.trace) {
      running = std::max(running, row.xo);
      CHECK(row.xo_star >= row.xo);
    }
    CHECK(running == res.best_objective);
  }
}

TEST_CASE("classify_status matches the memory view") {
  const QuboInstance q = generate_instance(12, 0.5, 6, 5);
  QuboProvider p(q);
  AAConfig cfg = base_config(6, 3, 3);
  cfg.max_iter = 300;
  EngineInt eng(p, cfg);
  for (int t = 0; t < 300; ++t) {
    eng.step();
    if (eng.memory().recorded() == 0) continue;
    for (int j = 1; j <= q.size(); ++j) {
      const VarStatus st = eng.classify_status(j);
      const auto& mem = eng.memory();
      const bool same = eng.ee_view(j) >= mem.max_weight();
      const std::int64_t e = p.eval(j);
      if (st == VarStatus::S1) {
        CHECK(same);
        CHECK(e > 0);
        CHECK(eng.ee_view(j) >= mem.threshold_r());
      } else if (st == VarStatus::S2) {
        CHECK_FALSE(same);
        CHECK(e <= 0);
        CHECK(eng.ee_view(j) <= mem.eebase() - mem.threshold_r());
      } else if (st == VarStatus::SPlus) {
        CHECK(same);
        CHECK(e > 0);
        CHECK_FALSE(eng.is_tabu(j));
      }
    }
  }
}

TEST_CASE("tabu release variations at launch") {
  const QuboInstance q = generate_instance(16, 0.5, 7, 3);
  for (TabuVariation var :
       {TabuVariation::HoldLastVbl, TabuVariation::ReleaseAll,
        TabuVariation::HoldStatusVars}) {
    QuboProvider p(q);
    AAConfig cfg = base_config(6, 3, 3);
    cfg.tabu_variation = var;
    cfg.max_iter = 500;
    EngineInt eng(p, cfg);
    bool checked = false;
    eng.on_event = [&](PhaseEvent e, const EngineInt& self) {
      if (e != PhaseEvent::AscentLaunched) return;
      checked = true;
      int tabu_count = 0;
      for (int j = 1; j <= self.provider().size(); ++j)
        if (self.is_tabu(j)) ++tabu_count;
      if (var == TabuVariation::ReleaseAll) {
        CHECK(tabu_count == 0);
        CHECK(self.last_vbl() == 0);
      } else if (var == TabuVariation::HoldLastVbl) {
        CHECK(tabu_count <= 1);
        if (self.last_vbl() > 0) CHECK(self.is_tabu(self.last_vbl()));
      }
    };
    eng.run();
    CHECK(checked);
  }
}

TEST_CASE("trigger launches keep the held variable tabu through the ascent") {
  const QuboInstance q = generate_instance(30, 0.5, 9, 17);
  QuboProvider p(q);
  AAConfig cfg = base_config(8, 3, 3);
  cfg.max_iter = 3000;
  EngineInt eng(p, cfg);
  int held = 0;
  long conditionals = 0;
  eng.on_event = [&](PhaseEvent e, const EngineInt& self) {
    if (e == PhaseEvent::AscentLaunched) {
      held = self.last_vbl();
    } else if (e == PhaseEvent::ConditionalLocalOpt) {
      ++conditionals;
      CHECK(held > 0);
      CHECK_FALSE(self.is_tabu(held));  // just released
      CHECK(self.last_vbl() == 0);
    }
  };
  const RunResult res = eng.run();
  CHECK(res.trigger_firings > 0);
  CHECK(conditionals == res.conditional_local_optima);
}

TEST_CASE("stop_at_objective halts the run early") {
  const QuboInstance q = generate_instance(14, 0.5, 6, 9);
  QuboProvider p1(q), p2(q);
  AAConfig cfg = base_config();
  cfg.max_iter = 5000;
  EngineInt full(p1, cfg);
  const RunResult ref = full.run();
  EngineInt limited(p2, cfg);
  limited.stop_at_objective = ref.best_objective;
  const RunResult res = limited.run();
  CHECK(res.best_objective >= ref.best_objective);
  CHECK(res.iterations <= ref.iterations);
}

TEST_CASE("real-arithmetic engine runs and matches integer search quality") {
  const QuboInstance q = generate_instance(18, 0.5, 7, 21);
  QuboProvider p(q);
  AAConfig cfg = base_config();
  cfg.ee.arithmetic = EEArithmetic::Real;
  cfg.ee.alpha = 1.7;
  cfg.max_iter = 800;
  EngineReal eng(p, cfg);
  const RunResult res = eng.run();
  CHECK(q.objective(res.best_assignment) == res.best_objective);
  CHECK(res.true_local_optima > 0);
}

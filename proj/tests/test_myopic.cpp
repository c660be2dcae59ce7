#include <vector>

#include "doctest.h"

#include "aa/engine.hpp"
#include "aa/io.hpp"
#include "aa/myopic.hpp"

using namespace aa;

TEST_CASE("schedules") {
  const McSchedule a = McSchedule::variant_a();
  CHECK(a.at(0) == std::pair<int, int>{3, 1});
  CHECK(a.at(1) == std::pair<int, int>{4, 2});
  CHECK(a.at(4) == std::pair<int, int>{5, 1});
  CHECK(a.at(99) == std::pair<int, int>{5, 1});  // final pair repeats
  const McSchedule b = McSchedule::variant_b();
  CHECK(b.at(4) == std::pair<int, int>{6, 1});
  CHECK_THROWS_AS((McSchedule{{{2, 3}}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(McSchedule{}.validate(), std::invalid_argument);
}

TEST_CASE("pool conservation across random add/drop traffic") {
  const int n = 40, cap = 7;
  McState mc(n, cap, McSchedule{{{3, 1}}});
  SplitMix64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const int k = 1 + static_cast<int>(rng.next() % n);
    if (mc.add(k)) {
      bool empty = false;
      mc.pop_oldest(empty);
      mc.finish_drop_round();
    }
    REQUIRE(mc.pool_free() + mc.list_size() == cap);
    if (rng.next() % 97 == 0) {
      mc.reset();
      REQUIRE(mc.pool_free() == cap);
      REQUIRE(mc.list_size() == 0);
    }
  }
}

TEST_CASE("re-added variables leave their old slot stale") {
  McState mc(10, 4, McSchedule{{{99, 1}}});
  mc.add(3);
  mc.add(5);
  mc.add(3);  // slot for the first add of 3 is now stale
  CHECK(mc.recorded() == std::vector<int>{3, 5, 3});
  bool empty = false;
  CHECK(mc.pop_oldest(empty) == 0);  // stale: recycled, no flip back
  CHECK_FALSE(empty);
  CHECK(mc.pop_oldest(empty) == 5);  // fresh
  CHECK(mc.pop_oldest(empty) == 3);  // newest record of 3 is fresh
  CHECK(mc.pop_oldest(empty) == 0);
  CHECK(empty);
  CHECK(mc.empty_drops() == 1);
}

TEST_CASE("mark_stale suppresses a pending reversal") {
  McState mc(10, 4, McSchedule{{{99, 1}}});
  mc.add(2);
  mc.add(6);
  mc.mark_stale(2);
  bool empty = false;
  CHECK(mc.pop_oldest(empty) == 0);
  CHECK(mc.pop_oldest(empty) == 6);
}

TEST_CASE("adds beyond the pool capacity go unrecorded") {
  McState mc(10, 2, McSchedule{{{99, 1}}});
  mc.add(1);
  mc.add(2);
  mc.add(3);
  CHECK(mc.unrecorded_adds() == 1);
  CHECK(mc.list_size() == 2);
  bool empty = false;
  CHECK(mc.pop_oldest(empty) == 1);
  // an unrecorded re-add invalidates the variable's older slot
  McState mc2(10, 2, McSchedule{{{99, 1}}});
  mc2.add(1);
  mc2.add(2);
  mc2.add(1);
  CHECK(mc2.unrecorded_adds() == 1);
  CHECK(mc2.pop_oldest(empty) == 0);  // slot for 1 is stale now
}

TEST_CASE("drop rounds advance the schedule and reset the add count") {
  McState mc(10, 8, McSchedule::variant_a());
  CHECK(mc.current_step() == std::pair<int, int>{3, 1});
  CHECK_FALSE(mc.add(1));
  CHECK_FALSE(mc.add(2));
  CHECK(mc.add(3));  // third add reaches AddNum = 3
  bool empty = false;
  mc.pop_oldest(empty);
  mc.finish_drop_round();
  CHECK(mc.stage() == 1);
  CHECK(mc.moves_added() == 0);
  CHECK(mc.current_step() == std::pair<int, int>{4, 2});
  mc.reset();
  CHECK(mc.stage() == 0);
}

TEST_CASE("default capacity") {
  CHECK(McState::default_capacity(10) == 16);
  CHECK(McState::default_capacity(240) == 20);
}

TEST_CASE("engine with myopic correction keeps its solutions valid") {
  const QuboInstance q = generate_instance(36, 0.5, 9, 29);
  for (McVariant mv : {McVariant::A, McVariant::B}) {
    QuboProvider p(q);
    AAConfig cfg;
    cfg.ee.window = 8;
    cfg.ee.depth = 3;
    cfg.mc = mv;
    cfg.max_iter = 1500;
    EngineInt eng(p, cfg);
    eng.trace_enabled = true;
    const RunResult res = eng.run();
    CHECK(q.objective(res.best_assignment) == res.best_objective);
    CHECK(res.true_local_optima > 0);
    bool saw_drop = false;
    for (const TraceRow& row : res.trace)
      if (row.path == SelectPath::McDrop) saw_drop = true;
    CHECK(saw_drop);
  }
}

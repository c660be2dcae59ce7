#include <limits>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "aa/io.hpp"
#include "aa/scripted.hpp"
#include "aa/working_table.hpp"

using namespace aa;

TEST_CASE("instance text format round trip") {
  const QuboInstance q = generate_instance(12, 0.5, 9, 4);
  std::ostringstream out;
  save_qubo(q, out);
  std::istringstream in(out.str());
  const QuboInstance q2 = load_qubo(in);
  CHECK(q2.size() == q.size());
  CHECK(q2.cells().size() == q.cells().size());
  SplitMix64 rng(1);
  for (int t = 0; t < 30; ++t) {
    Assignment x(q.size() + 1, 0);
    for (int j = 1; j <= q.size(); ++j) x[j] = rng.next() & 1;
    CHECK(q.objective(x) == q2.objective(x));
  }
}

TEST_CASE("parser handles comments, blank lines, duplicates and errors") {
  std::istringstream good(
      "# tiny example\n"
      "3 4\n"
      "\n"
      "1 1 5   # diagonal\n"
      "1 2 -2\n"
      "1 2 -1\n"
      "2 3 4\n");
  const QuboInstance q = load_qubo(good);
  CHECK(q.size() == 3);
  CHECK(q.diag(1) == 5);
  Assignment x{0, 1, 1, 0};
  CHECK(q.objective(x) == 5 - 3);

  std::istringstream short_count("2 2\n1 1 1\n");
  CHECK_THROWS_AS(load_qubo(short_count), std::runtime_error);
  std::istringstream lower("2 1\n2 1 5\n");
  CHECK_THROWS_AS(load_qubo(lower), std::runtime_error);
  std::istringstream garbage("2 1\n1 x 5\n");
  CHECK_THROWS_AS(load_qubo(garbage), std::runtime_error);
}

TEST_CASE("generator is deterministic per seed") {
  const QuboInstance a = generate_instance(15, 0.4, 10, 123);
  const QuboInstance b = generate_instance(15, 0.4, 10, 123);
  const QuboInstance c = generate_instance(15, 0.4, 10, 124);
  std::ostringstream sa, sb, sc;
  save_qubo(a, sa);
  save_qubo(b, sb);
  save_qubo(c, sc);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str() != sc.str());
  // density bounds: diagonals always present, no zero coefficients stored
  const QuboInstance sparse = generate_instance(10, 0.0, 5, 1);
  CHECK(sparse.cells().size() == 10);
  const QuboInstance dense = generate_instance(10, 1.0, 5, 1);
  CHECK(dense.cells().size() == 10 * 11 / 2);
  for (const Triplet& t : dense.cells()) CHECK(t.value != 0);
}

TEST_CASE("gray-code enumeration matches plain exhaustion") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const QuboInstance q = generate_instance(10, 0.5, 7, seed);
    const BruteForceResult bf = brute_force(q);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    Assignment x(q.size() + 1, 0);
    for (unsigned mask = 0; mask < (1u << q.size()); ++mask) {
      for (int j = 1; j <= q.size(); ++j) x[j] = (mask >> (j - 1)) & 1;
      best = std::max(best, q.objective(x));
    }
    CHECK(bf.optimum == best);
    CHECK(q.objective(bf.argmax) == best);
  }
}

TEST_CASE("evaluation scaling anchors min, mean, max at 0, 50, 100") {
  CHECK(scale_eval(-4.0, -4.0, 2.0, 10.0) == doctest::Approx(0.0));
  CHECK(scale_eval(2.0, -4.0, 2.0, 10.0) == doctest::Approx(50.0));
  CHECK(scale_eval(10.0, -4.0, 2.0, 10.0) == doctest::Approx(100.0));
  CHECK(scale_eval(-1.0, -4.0, 2.0, 10.0) == doctest::Approx(25.0));
  CHECK(scale_eval(6.0, -4.0, 2.0, 10.0) == doctest::Approx(75.0));
  CHECK(scale_eval(3.0, 3.0, 3.0, 3.0) == doctest::Approx(50.0));
  SplitMix64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const double lo = rng.next_unit() * -10.0;
    const double hi = rng.next_unit() * 10.0 + 1.0;
    const double mid = lo + (hi - lo) * (0.1 + 0.8 * rng.next_unit());
    const double v = lo + (hi - lo) * rng.next_unit();
    const double s = scale_eval(v, lo, mid, hi);
    CHECK(s >= 0.0);
    CHECK(s <= 100.0);
    CHECK(unscale_eval(s, lo, mid, hi) == doctest::Approx(v).epsilon(1e-9));
  }
}

TEST_CASE("scripted provider replays flips in order only") {
  Assignment start{0, 0, 1};
  ScriptedProvider p(start, {0, 4, -2},
                     {{1, {0, -4, 3}}, {2, {0, -1, -3}}});
  CHECK(p.size() == 2);
  CHECK(p.eval(1) == 4);
  CHECK_THROWS_AS(p.apply_flip(2), std::logic_error);
  p.apply_flip(1);
  CHECK(p.bit(1) == 1);
  CHECK(p.eval(2) == 3);
  CHECK(p.objective() == 4);
  p.apply_flip(2);
  CHECK(p.objective() == 7);
  CHECK_THROWS_AS(p.apply_flip(1), std::logic_error);  // script exhausted
}

TEST_CASE("scripted ten-variable replay reproduces the derived walkthrough") {
  const WorkingTableReport rep = replay_working_table();
  CHECK(rep.initial_ee_row ==
        std::vector<std::int64_t>{9, 15, 14, 12, 13, 15, 14, 15, 13, 12});
  CHECK(rep.initial_asterisks == std::vector<int>{2, 3, 6, 7, 8});
  CHECK(rep.status_count_trajectory == std::vector<int>{1, 2, 1, 2, 3});
  CHECK(rep.s2_on_x2_at_move4);
  CHECK(rep.s1_on_x7_at_move5);
  CHECK(rep.splus_on_x10_at_move5);
  CHECK(rep.statuses_cancelled_at_move6);
  CHECK(rep.statuses_restored_at_move7);
  CHECK(rep.s2_on_x3_at_move8);
  CHECK(rep.trigger_fired_after_move8);
  CHECK(rep.held_variable == 3);
  CHECK(rep.held_variable_tabu);
  CHECK(rep.others_free_at_launch);
  CHECK(rep.conditional_then_true_opt);
  CHECK(rep.new_optimum == Assignment{0, 1, 0, 1, 0, 0, 1, 1, 1, 1, 1});
  CHECK(rep.post_ee_row ==
        std::vector<std::int64_t>{12, 8, 8, 14, 14, 8, 15, 15, 14, 9});
  CHECK(rep.post_asterisks == std::vector<int>{4, 5, 7, 8, 9});
}

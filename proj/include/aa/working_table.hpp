#ifndef AA_WORKING_TABLE_HPP
#define AA_WORKING_TABLE_HPP

#include <cstdint>
#include <vector>

#include "aa/qubo.hpp"

namespace aa {

/// Outcome of the scripted ten-variable replay (window 4, depth 3,
/// trigger 3): a fixed history of four recorded optima, eight forced
/// moves with scripted Eval signs, a trigger-driven ascent launch, and
/// the recording of the resulting new optimum.
struct WorkingTableReport {
  std::vector<std::int64_t> initial_ee_row;  // EE(j) against the current optimum
  std::vector<int> initial_asterisks;        // j meeting the recency threshold
  std::vector<std::int64_t> post_ee_row;     // EE(j) after the new optimum
  std::vector<int> post_asterisks;
  std::vector<int> status_count_trajectory;  // census after moves 4..8

  bool s2_on_x2_at_move4 = false;
  bool s1_on_x7_at_move5 = false;
  bool splus_on_x10_at_move5 = false;
  bool statuses_cancelled_at_move6 = false;
  bool statuses_restored_at_move7 = false;
  bool s2_on_x3_at_move8 = false;

  bool trigger_fired_after_move8 = false;
  int held_variable = 0;       // expected: 3
  bool held_variable_tabu = false;
  bool others_free_at_launch = false;
  bool conditional_then_true_opt = false;
  Assignment new_optimum;      // expected: 1 0 1 0 0 1 1 1 1 1
};

WorkingTableReport replay_working_table();

}  // namespace aa

#endif  // AA_WORKING_TABLE_HPP

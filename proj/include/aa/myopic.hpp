#ifndef AA_MYOPIC_HPP
#define AA_MYOPIC_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aa {

/// (add, drop) pairs applied in order; the final pair repeats forever.
struct McSchedule {
  std::vector<std::pair<int, int>> steps;

  static McSchedule variant_a() {
    return {{{3, 1}, {4, 2}, {5, 2}, {5, 2}, {5, 1}}};
  }
  static McSchedule variant_b() {
    return {{{3, 1}, {4, 1}, {5, 1}, {5, 1}, {6, 1}}};
  }

  std::pair<int, int> at(int stage) const {
    if (steps.empty()) throw std::invalid_argument("empty schedule");
    const int last = static_cast<int>(steps.size()) - 1;
    return steps[stage < last ? stage : last];
  }

  void validate() const {
    if (steps.empty()) throw std::invalid_argument("empty schedule");
    for (auto [a, d] : steps)
      if (a < 1 || d < 1 || d > a)
        throw std::invalid_argument("schedule needs 1 <= drop <= add");
  }
};

/// Bounded FIFO of recent flips backing the myopic correction: a slot pool
/// of capacity h_cap, an intrusive list ordered oldest-first, and the
/// id/rev_id pairing that detects stale entries (variables flipped again
/// after being recorded reclaim their slot, so the recorded flip no longer
/// represents the variable's newest move).
class McState {
 public:
  McState(int n, int h_cap, McSchedule schedule)
      : n_(n), h_cap_(h_cap), schedule_(std::move(schedule)) {
    if (n < 1 || h_cap < 1) throw std::invalid_argument("bad myopic sizes");
    schedule_.validate();
    rev_id_.assign(n + 1, 0);
    reset();
  }

  /// Default capacity used by the engine.
  static int default_capacity(int n) { return std::max(16, (n + 11) / 12); }

  /// Fresh list and full pool; stage counter keeps advancing across resets
  /// only if `keep_stage` (the engine restarts the schedule each phase).
  void reset(bool keep_stage = false) {
    if (!keep_stage) stage_ = 0;
    moves_added_ = 0;
    after_.assign(h_cap_ + 2, 0);
    id_.assign(h_cap_ + 2, 0);
    h_.resize(h_cap_ + 1);
    for (int h = 1; h <= h_cap_; ++h) h_[h] = h;
    h_last_ = h_cap_;
    begin_link_ = 0;
    end_link_ = 0;
    after_[begin_link_] = kEndMark;
    std::fill(rev_id_.begin(), rev_id_.end(), 0);
    unrecorded_adds_ = 0;
    empty_drops_ = 0;
  }

  int capacity() const { return h_cap_; }
  int moves_added() const { return moves_added_; }
  int stage() const { return stage_; }
  long unrecorded_adds() const { return unrecorded_adds_; }
  long empty_drops() const { return empty_drops_; }
  int pool_free() const { return h_last_; }

  int list_size() const {
    int count = 0;
    for (int h = after_[0]; h != kEndMark && h != 0; h = after_[h]) ++count;
    return count;
  }

  std::pair<int, int> current_step() const { return schedule_.at(stage_); }

  /// Records the flip of x_k (skipped by the caller for S1 selections).
  /// Returns true when a drop round is now due.
  bool add(int k) {
    if (k < 1 || k > n_) throw std::out_of_range("variable index out of range");
    ++moves_added_;
    if (h_last_ > 0) {
      const int h = h_[h_last_--];
      after_[end_link_] = h;
      after_[h] = kEndMark;
      end_link_ = h;
      id_[h] = k;
      rev_id_[k] = h;
    } else {
      ++unrecorded_adds_;
      rev_id_[k] = 0;  // the newest flip of k is not the recorded one
    }
    return moves_added_ >= current_step().first;
  }

  /// Pops one entry from the oldest end.  Returns the variable to flip
  /// back when the entry is fresh, 0 when it was stale or the list was
  /// empty; `list_was_empty` distinguishes the latter.
  int pop_oldest(bool& list_was_empty) {
    list_was_empty = false;
    const int h = after_[begin_link_];
    if (h == kEndMark || h == 0) {
      list_was_empty = true;
      ++empty_drops_;
      return 0;
    }
    after_[begin_link_] = after_[h];
    if (end_link_ == h) end_link_ = begin_link_;
    h_[++h_last_] = h;
    const int k = id_[h];
    if (rev_id_[k] == h) {
      rev_id_[k] = 0;
      return k;  // fresh: this slot still represents k's newest flip
    }
    return 0;  // stale: k moved again since; just recycle the slot
  }

  /// Ends a drop round: advances the schedule and restarts the add count.
  void finish_drop_round() {
    ++stage_;
    moves_added_ = 0;
  }

  /// A later flip of k invalidates the recorded entry.
  void mark_stale(int k) {
    if (k >= 1 && k <= n_ && rev_id_[k] != 0) rev_id_[k] = 0;
  }

  /// Oldest-first variable ids currently recorded (fresh and stale slots).
  std::vector<int> recorded() const {
    std::vector<int> out;
    for (int h = after_[0]; h != kEndMark && h != 0; h = after_[h])
      out.push_back(id_[h]);
    return out;
  }

 private:
  static constexpr int kEndMark = -1;

  int n_, h_cap_;
  McSchedule schedule_;
  int stage_ = 0;
  int moves_added_ = 0;
  std::vector<int> after_, id_, h_, rev_id_;
  int h_last_ = 0, begin_link_ = 0, end_link_ = 0;
  long unrecorded_adds_ = 0, empty_drops_ = 0;
};

}  // namespace aa

#endif  // AA_MYOPIC_HPP

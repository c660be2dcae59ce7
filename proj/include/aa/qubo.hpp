#ifndef AA_QUBO_HPP
#define AA_QUBO_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aa {

/// 0/1 assignment, 1-based; index 0 is unused padding.
using Assignment = std::vector<std::uint8_t>;

struct Triplet {
  int i;
  int j;
  std::int64_t value;
};

/// Symmetric pseudo-Boolean objective over binary variables:
///   xo(x) = sum_j q(j,j) x_j + sum_{i<j} q(i,j) x_i x_j
/// Each off-diagonal pair is counted once. Coefficients are integers.
class QuboInstance {
 public:
  /// Builds from upper-triangular triplets (i <= j, 1-based).
  /// Duplicate cells are summed. Throws std::invalid_argument on bad indices.
  static QuboInstance from_triplets(int n, const std::vector<Triplet>& cells);

  int size() const { return n_; }

  std::int64_t diag(int j) const { return diag_[check(j)]; }

  /// Off-diagonal neighbors of j as (i, q(i,j)) pairs, unordered.
  const std::vector<std::pair<int, std::int64_t>>& neighbors(int j) const {
    return adj_[check(j)];
  }

  std::int64_t objective(const Assignment& x) const;

  /// Gain of flipping x_j in place:
  ///   Eval(j) = (1 - 2 x_j) (q(j,j) + sum_{i != j} q(i,j) x_i)
  std::int64_t eval_flip(const Assignment& x, int j) const;

  std::vector<std::int64_t> all_evals(const Assignment& x) const;

  /// Incremental refresh after x_k has been flipped; `x` already holds the
  /// new value of x_k.  Eval(k) is negated and each neighbor j gets
  /// (1 - 2 x_j) q(j,k) (x_k_new - x_k_old) added.
  void update_evals_after_flip(const Assignment& x, int k,
                               std::vector<std::int64_t>& evals) const;

  /// Stored upper-triangular cells in (i, j) order; round-trips file I/O.
  std::vector<Triplet> cells() const;

 private:
  int check(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("variable index out of range");
    return j;
  }

  int n_ = 0;
  std::vector<std::int64_t> diag_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
};

}  // namespace aa

#endif  // AA_QUBO_HPP

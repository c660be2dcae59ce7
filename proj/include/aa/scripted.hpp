#ifndef AA_SCRIPTED_HPP
#define AA_SCRIPTED_HPP

#include <cstdint>
#include <vector>

#include "aa/provider.hpp"

namespace aa {

/// Replay provider: the full Eval vector after every scripted flip is
/// supplied up front, so sign-driven engine behavior can be exercised
/// without a coefficient matrix.  Flips must arrive in script order.
class ScriptedProvider final : public EvaluationProvider {
 public:
  struct Move {
    int k = 0;
    std::vector<std::int64_t> evals_after;  // 1-based, size n + 1
  };

  ScriptedProvider(Assignment start, std::vector<std::int64_t> initial_evals,
                   std::vector<Move> moves);

  int size() const override { return n_; }
  std::int64_t eval(int j) const override { return evals_[j]; }
  std::int64_t objective() const override { return xo_; }
  int bit(int j) const override { return x_[j]; }
  void apply_flip(int k) override;

  std::size_t applied() const { return pos_; }
  const Assignment& assignment() const { return x_; }

 private:
  int n_;
  Assignment x_;
  std::vector<std::int64_t> evals_;
  std::vector<Move> moves_;
  std::size_t pos_ = 0;
  std::int64_t xo_ = 0;
};

}  // namespace aa

#endif  // AA_SCRIPTED_HPP

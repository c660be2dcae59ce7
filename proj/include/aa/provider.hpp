#ifndef AA_PROVIDER_HPP
#define AA_PROVIDER_HPP

#include <cstdint>

#include "aa/qubo.hpp"

namespace aa {

/// Search-state facade the engines run against: current assignment, the
/// flip gains Eval(j), and the objective, kept consistent across flips.
class EvaluationProvider {
 public:
  virtual ~EvaluationProvider() = default;
  virtual int size() const = 0;
  virtual std::int64_t eval(int j) const = 0;
  virtual std::int64_t objective() const = 0;
  virtual int bit(int j) const = 0;
  virtual void apply_flip(int k) = 0;
};

/// Incremental evaluation over a QUBO instance.
class QuboProvider final : public EvaluationProvider {
 public:
  QuboProvider(const QuboInstance& q, Assignment start)
      : q_(q), x_(std::move(start)) {
    if (static_cast<int>(x_.size()) != q.size() + 1)
      throw std::invalid_argument("assignment size mismatch");
    evals_ = q_.all_evals(x_);
    xo_ = q_.objective(x_);
  }

  explicit QuboProvider(const QuboInstance& q)
      : QuboProvider(q, Assignment(q.size() + 1, 0)) {}

  int size() const override { return q_.size(); }
  std::int64_t eval(int j) const override { return evals_[j]; }
  std::int64_t objective() const override { return xo_; }
  int bit(int j) const override { return x_[j]; }

  void apply_flip(int k) override {
    xo_ += evals_[k];
    x_[k] ^= 1;
    q_.update_evals_after_flip(x_, k, evals_);
  }

  const Assignment& assignment() const { return x_; }
  const QuboInstance& instance() const { return q_; }

 private:
  const QuboInstance& q_;
  Assignment x_;
  std::vector<std::int64_t> evals_;
  std::int64_t xo_ = 0;
};

}  // namespace aa

#endif  // AA_PROVIDER_HPP

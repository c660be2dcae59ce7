#include "aa/scripted.hpp"

#include <stdexcept>
#include <string>

namespace aa {

ScriptedProvider::ScriptedProvider(Assignment start,
                                   std::vector<std::int64_t> initial_evals,
                                   std::vector<Move> moves)
    : n_(static_cast<int>(start.size()) - 1),
      x_(std::move(start)),
      evals_(std::move(initial_evals)),
      moves_(std::move(moves)) {
  if (n_ < 1) throw std::invalid_argument("empty scripted assignment");
  if (static_cast<int>(evals_.size()) != n_ + 1)
    throw std::invalid_argument("eval vector size mismatch");
  for (const Move& m : moves_) {
    if (m.k < 1 || m.k > n_) throw std::invalid_argument("scripted move out of range");
    if (static_cast<int>(m.evals_after.size()) != n_ + 1)
      throw std::invalid_argument("scripted eval vector size mismatch");
  }
}

void ScriptedProvider::apply_flip(int k) {
  if (pos_ >= moves_.size())
    throw std::logic_error("flip requested past the end of the script");
  if (moves_[pos_].k != k)
    throw std::logic_error("flip of x" + std::to_string(k) +
                           " deviates from scripted x" +
                           std::to_string(moves_[pos_].k));
  xo_ += evals_[k];
  x_[k] ^= 1;
  evals_ = moves_[pos_].evals_after;
  ++pos_;
}

}  // namespace aa

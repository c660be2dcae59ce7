#include "aa/qubo.hpp"

#include <algorithm>
#include <map>

namespace aa {

QuboInstance QuboInstance::from_triplets(int n, const std::vector<Triplet>& cells) {
  if (n < 1) throw std::invalid_argument("instance size must be positive");
  std::map<std::pair<int, int>, std::int64_t> merged;
  for (const Triplet& t : cells) {
    if (t.i < 1 || t.j < 1 || t.i > n || t.j > n)
      throw std::invalid_argument("coefficient index out of range");
    if (t.i > t.j) throw std::invalid_argument("coefficient must satisfy i <= j");
    merged[{t.i, t.j}] += t.value;
  }
  QuboInstance q;
  q.n_ = n;
  q.diag_.assign(n + 1, 0);
  q.adj_.assign(n + 1, {});
  for (const auto& [ij, v] : merged) {
    auto [i, j] = ij;
    if (v == 0) continue;  // cancellation: nothing to store
    if (i == j) {
      q.diag_[i] = v;
    } else {
      q.adj_[i].emplace_back(j, v);
      q.adj_[j].emplace_back(i, v);
    }
  }
  return q;
}

std::int64_t QuboInstance::objective(const Assignment& x) const {
  std::int64_t xo = 0;
  for (int j = 1; j <= n_; ++j) {
    if (!x[j]) continue;
    xo += diag_[j];
    for (const auto& [i, v] : adj_[j])
      if (i < j && x[i]) xo += v;
  }
  return xo;
}

std::int64_t QuboInstance::eval_flip(const Assignment& x, int j) const {
  check(j);
  std::int64_t s = diag_[j];
  for (const auto& [i, v] : adj_[j])
    if (x[i]) s += v;
  return (1 - 2 * static_cast<std::int64_t>(x[j])) * s;
}

std::vector<std::int64_t> QuboInstance::all_evals(const Assignment& x) const {
  std::vector<std::int64_t> evals(n_ + 1, 0);
  for (int j = 1; j <= n_; ++j) evals[j] = eval_flip(x, j);
  return evals;
}

void QuboInstance::update_evals_after_flip(const Assignment& x, int k,
                                           std::vector<std::int64_t>& evals) const {
  check(k);
  evals[k] = -evals[k];
  const std::int64_t delta = x[k] ? 1 : -1;  // new minus old value of x_k
  for (const auto& [j, v] : adj_[k])
    evals[j] += (1 - 2 * static_cast<std::int64_t>(x[j])) * v * delta;
}

std::vector<Triplet> QuboInstance::cells() const {
  std::vector<Triplet> out;
  for (int j = 1; j <= n_; ++j) {
    if (diag_[j] != 0) out.push_back({j, j, diag_[j]});
    for (const auto& [i, v] : adj_[j])
      if (j < i) out.push_back({j, i, v});
  }
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return out;
}

}  // namespace aa

#include "aa/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace aa {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " +
                           what);
}

}  // namespace

QuboInstance load_qubo(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long m = -1;
  std::vector<Triplet> cells;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(strip_comment(line));
    if (n < 0) {
      if (!(row >> n >> m)) {
        if (row.str().find_first_not_of(" \t\r") == std::string::npos) {
          n = -1;
          continue;
        }
        parse_error(line_no, "expected header 'n m'");
      }
      if (n < 1 || m < 0) parse_error(line_no, "bad header values");
      continue;
    }
    Triplet t;
    if (!(row >> t.i >> t.j >> t.value)) {
      if (row.str().find_first_not_of(" \t\r") == std::string::npos) continue;
      parse_error(line_no, "expected 'i j v'");
    }
    if (t.i < 1 || t.j < 1 || t.i > n || t.j > n)
      parse_error(line_no, "index out of range");
    if (t.i > t.j) parse_error(line_no, "need i <= j");
    cells.push_back(t);
  }
  if (n < 0) throw std::runtime_error("parse error: missing header");
  if (static_cast<long>(cells.size()) != m)
    throw std::runtime_error("parse error: header announced " + std::to_string(m) +
                             " entries, found " + std::to_string(cells.size()));
  return QuboInstance::from_triplets(n, cells);
}

QuboInstance load_qubo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_qubo(in);
}

void save_qubo(const QuboInstance& q, std::ostream& out) {
  const auto cells = q.cells();
  out << q.size() << ' ' << cells.size() << '\n';
  for (const Triplet& t : cells)
    out << t.i << ' ' << t.j << ' ' << t.value << '\n';
}

void save_qubo_file(const QuboInstance& q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  save_qubo(q, out);
}

QuboInstance generate_instance(int n, double density, std::int64_t coeff_range,
                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must be in [0, 1]");
  if (coeff_range < 1) throw std::invalid_argument("coeff_range must be >= 1");
  SplitMix64 rng(seed);
  auto draw_value = [&] {
    const std::int64_t mag =
        1 + static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(coeff_range));
    return (rng.next() & 1u) ? mag : -mag;
  };
  std::vector<Triplet> cells;
  for (int j = 1; j <= n; ++j) cells.push_back({j, j, draw_value()});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double u = rng.next_unit();
      if (u < density) cells.push_back({i, j, draw_value()});
    }
  return QuboInstance::from_triplets(n, cells);
}

BruteForceResult brute_force(const QuboInstance& q) {
  const int n = q.size();
  if (n > 22) throw std::invalid_argument("brute force limited to n <= 22");
  Assignment x(n + 1, 0);
  std::int64_t xo = 0;
  BruteForceResult best{0, x};
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int j = std::countr_zero(t) + 1;
    xo += q.eval_flip(x, j);
    x[j] ^= 1;
    if (xo > best.optimum) {
      best.optimum = xo;
      best.argmax = x;
    }
  }
  return best;
}

double scale_eval(double eval, double min, double mean, double max) {
  if (!(min <= mean && mean <= max)) throw std::invalid_argument("need min <= mean <= max");
  if (eval == mean) return 50.0;
  if (eval < mean) {
    if (mean == min) return 50.0;
    return 50.0 * (eval - min) / (mean - min);
  }
  if (max == mean) return 50.0;
  return 50.0 + 50.0 * (eval - mean) / (max - mean);
}

double unscale_eval(double scaled, double min, double mean, double max) {
  if (!(min <= mean && mean <= max)) throw std::invalid_argument("need min <= mean <= max");
  if (scaled == 50.0) return mean;
  if (scaled < 50.0) return min + scaled * (mean - min) / 50.0;
  return mean + (scaled - 50.0) * (max - mean) / 50.0;
}

}  // namespace aa

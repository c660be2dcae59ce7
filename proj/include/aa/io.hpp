#ifndef AA_IO_HPP
#define AA_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "aa/qubo.hpp"

namespace aa {

/// splitmix64; the fixed generator behind --random so equal seeds give
/// byte-identical instances on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Text format:
///   n m
///   i j v        (m lines, 1-based, i <= j; duplicates are summed)
/// '#' starts a comment; blank lines are ignored.
QuboInstance load_qubo(std::istream& in);
QuboInstance load_qubo_file(const std::string& path);

void save_qubo(const QuboInstance& q, std::ostream& out);
void save_qubo_file(const QuboInstance& q, const std::string& path);

/// Random instance: every diagonal cell is drawn; each off-diagonal pair
/// i < j is present with probability `density`.  Magnitudes are uniform in
/// [1, coeff_range] with a random sign, so no stored cell is zero and the
/// stored-entry count is a deterministic function of (n, density, seed).
QuboInstance generate_instance(int n, double density, std::int64_t coeff_range,
                               std::uint64_t seed);

struct BruteForceResult {
  std::int64_t optimum = 0;
  Assignment argmax;
};

/// Exhaustive maximization by Gray-code enumeration; n <= 22.
BruteForceResult brute_force(const QuboInstance& q);

/// Maps Eval onto a 0..100 scale anchored at Min -> 0, Mean -> 50,
/// Max -> 100 (piecewise linear).  Degenerate spans map to 50.
double scale_eval(double eval, double min, double mean, double max);

/// Inverse of scale_eval on the matching branch.
double unscale_eval(double scaled, double min, double mean, double max);

}  // namespace aa

#endif  // AA_IO_HPP

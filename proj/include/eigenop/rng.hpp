#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace eigenop {

/// Seeded generator that can derive independent child streams by tag, so a
/// run with a fixed seed draws identical samples regardless of which
/// subcommands or checks run before it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Child stream whose seed depends only on (this seed, tag).
  Rng split(std::string_view tag) const;

  double uniform(double lo, double hi);
  std::size_t uniform_index(std::size_t lo, std::size_t hi);  // inclusive
  /// Uniform in the closed disk of the given radius.
  std::complex<double> in_disk(double radius = 1.0);
  /// Uniform modulus in [r_lo, r_hi] with uniform argument.
  std::complex<double> in_annulus(double r_lo, double r_hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace eigenop

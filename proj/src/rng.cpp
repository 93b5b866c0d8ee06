#include "eigenop/rng.hpp"

#include <cmath>
#include <numbers>

namespace eigenop {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a
std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng Rng::split(std::string_view tag) const { return Rng(mix(seed_ ^ mix(hash_tag(tag)))); }

double Rng::uniform(double lo, double hi) {
  // 53 random mantissa bits; avoids implementation-defined distributions.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

std::complex<double> Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  const double theta = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, theta);
}

std::complex<double> Rng::in_annulus(double r_lo, double r_hi) {
  const double r = uniform(r_lo, r_hi);
  const double theta = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, theta);
}

}  // namespace eigenop

#include "eigenop/classify.hpp"

#include <cmath>
#include <sstream>

#include "eigenop/errors.hpp"

namespace eigenop {

namespace {

namespace cite {
constexpr const char* extended = "Th. extended";
constexpr const char* modulo1 = "Th. modulo1";
constexpr const char* infinitosceros = "Prop. infinitosceros";
constexpr const char* modulomayoruno = "Th. modulomayoruno";
constexpr const char* general = "Th. general";
constexpr const char* super1 = "Th. super1";
constexpr const char* super2 = "Th. super2";
constexpr const char* modulomenor1 = "Th. modulomenor1";
constexpr const char* bbc = "[bernalbonillacalderon]";
constexpr const char* jfa = "[jfa]";
constexpr const char* godefroy_shapiro = "Godefroy-Shapiro";
constexpr const char* mps = "Menet-Petersson-Shkarin";
constexpr const char* scalar = "scalar operator";
}  // namespace cite

Verdict yes(const char* citation, std::string note) { return {true, citation, std::move(note)}; }
Verdict no(const char* citation, std::string note) { return {false, citation, std::move(note)}; }

}  // namespace

std::size_t root_of_unity_order(cplx lambda, std::size_t max_order) {
  cplx power = 1.0;
  for (std::size_t j = 1; j <= max_order; ++j) {
    power *= lambda;
    if (std::abs(power - 1.0) <= 1e-10) return j;
  }
  return 0;
}

Classification classify(cplx lambda, const PhiSpec& phi) {
  if (lambda == cplx{}) throw Error(ErrorCode::invalid_argument, "classify needs lambda != 0");

  const ZeroMeta meta = zero_meta(phi);
  const double modulus = std::abs(lambda);
  const bool unit = std::abs(modulus - 1.0) <= kUnitModulusTolerance;
  const bool is_one = std::abs(lambda - 1.0) <= kUnitModulusTolerance;

  std::ostringstream base;
  base.precision(17);
  base << "|lambda| = " << modulus << "; zeros: " << to_string(meta.count)
       << "; order at origin m = " << meta.order_at_origin;
  const std::string note = base.str();

  // lambda = 1: phi(D) commutes with D.
  if (is_one) {
    const bool scalar = phi.poly_degree() == 0 && phi.b() == cplx{} && phi.builtin() == Builtin::none;
    if (scalar) {
      const std::string n = note + "; phi(D) is a multiple of the identity";
      return {no(cite::scalar, n), no(cite::scalar, n), no(cite::scalar, n), no(cite::scalar, n)};
    }
    const std::string n = note + "; lambda = 1: non-scalar operator commuting with D";
    return {yes(cite::godefroy_shapiro, n), yes(cite::godefroy_shapiro, n), yes(cite::mps, n),
            yes(cite::mps, n)};
  }

  // No zeros: a multiple of the affine composition operator C_{lambda,b}.
  if (meta.count == ZeroMeta::Count::zero_free) {
    const std::string n = note + "; L is a multiple of C_{lambda,b}";
    return {no(cite::extended, n), no(cite::bbc, n), no(cite::jfa, n), no(cite::bbc, n)};
  }

  const bool infinite = meta.count == ZeroMeta::Count::infinite;

  if (unit) {
    std::string n = note;
    if (const auto order = root_of_unity_order(lambda); order != 0) {
      n += "; lambda is a root of unity of order " + std::to_string(order) + " (Th. raizunidad)";
    }
    const char* sub = infinite ? cite::infinitosceros : cite::modulo1;
    return {yes(cite::extended, n), yes(cite::extended, n), yes(sub, n), yes(sub, n)};
  }

  if (modulus > 1.0) {
    if (infinite) {
      return {yes(cite::extended, note), yes(cite::extended, note), yes(cite::infinitosceros, note),
              yes(cite::infinitosceros, note)};
    }
    return {yes(cite::extended, note), yes(cite::extended, note), no(cite::modulomayoruno, note),
            no(cite::general, note)};
  }

  // 0 < |lambda| < 1
  if (meta.order_at_origin >= 1) {
    return {no(cite::extended, note), yes(cite::super1, note), no(cite::jfa, note),
            yes(cite::modulomenor1, note)};
  }
  return {no(cite::extended, note), no(cite::super2, note), no(cite::jfa, note), no(cite::super2, note)};
}

}  // namespace eigenop

#pragma once

// Exponential-type symbols phi(z) = P(z) * exp(b z) * builtin(z) and their
// iterated products Phi_n(z) = phi(w z) phi(w^2 z) ... phi(w^n z), w = 1/lambda.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eigenop/budget.hpp"
#include "eigenop/series.hpp"

namespace eigenop {

/// Catalogue of entire factors with infinitely many zeros, none vanishing at 0.
enum class Builtin { none, cos, sin_over_z, cosh };

std::string_view to_string(Builtin b);
Builtin parse_builtin(std::string_view name);

/// Jet of the catalogue factor through degree N (builtin none is the constant 1).
TruncatedSeries builtin_jet(Builtin b, std::size_t truncation);

class PhiSpec {
 public:
  /// `poly` lists P's coefficients lowest degree first. Trailing zeros are
  /// dropped; an all-zero or empty list throws Error(invalid_argument).
  PhiSpec(std::vector<cplx> poly, cplx b = 0.0, Builtin builtin = Builtin::none);

  static PhiSpec polynomial(std::vector<cplx> poly) { return PhiSpec(std::move(poly)); }

  const std::vector<cplx>& poly() const { return poly_; }
  cplx b() const { return b_; }
  Builtin builtin() const { return builtin_; }

  /// deg P.
  std::size_t poly_degree() const { return poly_.size() - 1; }
  /// b = 0 and no builtin factor.
  bool is_polynomial() const { return b_ == cplx{} && builtin_ == Builtin::none; }

  /// c * phi.
  PhiSpec scaled(cplx c) const;

  bool operator==(const PhiSpec&) const = default;

 private:
  std::vector<cplx> poly_;
  cplx b_;
  Builtin builtin_;
};

struct ZeroMeta {
  enum class Count { zero_free, finite_nonempty, infinite };

  Count count;
  std::size_t order_at_origin;  // m: phi(z) = z^m psi(z), psi(0) != 0

  bool operator==(const ZeroMeta&) const = default;
};

std::string_view to_string(ZeroMeta::Count c);

/// Degree-N Taylor jet of phi, built from the exact jets of its factors.
TruncatedSeries phi_coefficients(const PhiSpec& phi, std::size_t truncation);

/// Zero-set class from (deg P, builtin); the order at the origin counts the
/// exactly-zero low coefficients of P.
ZeroMeta zero_meta(const PhiSpec& phi);

/// Degree-N jet of Phi_n. Exact for polynomial phi once N >= n deg P.
/// Throws Error(truncation) if N exceeds budget.max_degree.
TruncatedSeries iterated_symbol(const PhiSpec& phi, cplx lambda, std::size_t n, std::size_t truncation,
                                const Budget& budget = {});

/// a_0^{(k)}..a_M^{(k)} = Phi_k^{(m)}(0), summed over compositions
/// h_1 + ... + h_k = m with multinomial weights. Exponential in k; guarded by
/// budget.leibniz_work >= k*M (Error(budget) otherwise).
std::vector<cplx> leibniz_coefficients(const PhiSpec& phi, cplx lambda, std::size_t k, std::size_t max_order,
                                       const Budget& budget = {});

/// Upper bound for |a_m^{(k)}| from the composition sum:
///   max(1,|phi(0)|)^k * max(1,C)^m * (|w| + ... + |w|^k)^m,
/// C = max_{t<=m} |phi^{(t)}(0)|. Reduces to C^m (|w|+...+|w|^k)^m
/// whenever |phi(0)| <= 1 <= C.
double leibniz_magnitude_bound(const PhiSpec& phi, cplx lambda, std::size_t k, std::size_t m);

}  // namespace eigenop

#pragma once

// Extended lambda-eigenoperators L = R_lambda phi(D) of the differentiation
// operator: application, iteration by two independent routes, the algebraic
// identity checks, and the eigenpolynomial / Volterra right-inverse machinery
// used to build supercyclic vectors when |lambda| < 1 and phi(0) = 0.

#include <cstddef>
#include <vector>

#include "eigenop/budget.hpp"
#include "eigenop/series.hpp"
#include "eigenop/symbols.hpp"

namespace eigenop {

class EigenOp {
 public:
  /// Throws Error(invalid_argument) when lambda = 0 or is not finite.
  EigenOp(cplx lambda, PhiSpec phi);

  cplx lambda() const { return lambda_; }
  cplx omega() const { return omega_; }
  const PhiSpec& phi() const { return phi_; }
  /// d = deg P.
  std::size_t d() const { return phi_.poly_degree(); }
  /// m = order of the zero of phi at the origin.
  std::size_t m() const { return meta_.order_at_origin; }
  const ZeroMeta& zero_meta() const { return meta_; }

  bool operator==(const EigenOp& other) const {
    return lambda_ == other.lambda_ && phi_ == other.phi_;
  }

 private:
  cplx lambda_;
  cplx omega_;
  PhiSpec phi_;
  ZeroMeta meta_;
};

/// sum_j c_j D^j f for the jet c of a symbol; exact on the stored polynomial.
/// The result keeps f's truncation.
TruncatedSeries apply_symbol(const TruncatedSeries& symbol_jet, const TruncatedSeries& f);

/// L f = R_lambda(phi(D) f).
TruncatedSeries apply(const EigenOp& op, const TruncatedSeries& f);

enum class IterateRoute { repeated, closed_form };

/// L^n f. `repeated` applies L n times; `closed_form` evaluates
/// Phi_n(D) R_lambda^n f with Phi_n from iterated_symbol.
TruncatedSeries iterate(const EigenOp& op, const TruncatedSeries& f, std::size_t n,
                        IterateRoute route = IterateRoute::repeated, const Budget& budget = {});

/// Normalizing scalar lambda_k = (lambda^m lambda^{2m} ... lambda^{(k-1)m})^{-1};
/// lambda_0 = lambda_1 = 1.
cplx normalizer(const EigenOp& op, std::size_t k);

/// lambda_k L^k f, scaling after every step so intermediate coefficients stay
/// representable. Exact zeros (annihilated blocks) stay exact.
TruncatedSeries normalized_iterate(const EigenOp& op, const TruncatedSeries& f, std::size_t k);

/// max over s <= max_degree of rho_1(D L z^s - lambda L D z^s) / max(1, rho_1(L z^s)).
double commutation_residual(const EigenOp& op, std::size_t max_degree);

/// Aron-Markose operator T f = f'(lambda z + b), i.e. phi(z) = z e^{b z}.
EigenOp aron_markose(cplx lambda, cplx b);

/// Conjugation check for R_lambda P(D) e^{bD} = e^{-aD} R_lambda P(D) e^{aD},
/// a = b / (1 - lambda): max relative rho_1 residual over z^s, s <= max_degree.
/// Throws Error(invalid_argument) for lambda = 1 or lambda = 0.
double similarity_check(cplx lambda, const std::vector<cplx>& poly, cplx b, std::size_t max_degree);

/// Long-double polynomial, lowest degree first. The eigen machinery runs in
/// this precision: lambda_k L^k S_k magnifies the non-eigen part of rounding
/// error by up to |lambda|^{-nk}.
using ExtendedPoly = std::vector<std::complex<long double>>;

/// Rounds to double; the truncation is the vector length minus one.
TruncatedSeries to_series(const ExtendedPoly& f);
ExtendedPoly to_extended(const TruncatedSeries& f);

/// Monic eigenpolynomials p_0..p_K of A_lambda = R_lambda psi(D), phi = z^m psi.
struct EigenBasis {
  std::vector<TruncatedSeries> polys;  // rounded from `extended`
  std::vector<ExtendedPoly> extended;
  cplx psi0;
  cplx lambda;

  std::size_t size() const { return polys.size(); }
};

/// Back-substitution on the triangular matrix of A_lambda over polynomials of
/// degree <= K. Throws Error(precondition) if |lambda^j - lambda^k| < 1e-10
/// for some j != k <= K, or if psi(0) = 0.
EigenBasis eigen_basis(const EigenOp& op, std::size_t max_index);

/// A_lambda p = R_lambda psi(D) p.
TruncatedSeries apply_reduced(const EigenOp& op, const TruncatedSeries& p);

/// Coefficients c_0..c_K with g = sum c_n p_n, for deg g <= K.
std::vector<cplx> expand_in_basis(const EigenBasis& basis, const TruncatedSeries& g);

/// S_k p_n = V^{mk} p_n / (psi(0) lambda^n)^k. Requires m >= 1
/// (Error(precondition) otherwise) and n < basis.size(). Throws
/// Error(truncation) when the result degree n + mk exceeds budget.max_degree.
TruncatedSeries right_inverse_on_basis(const EigenOp& op, const EigenBasis& basis, std::size_t k,
                                       std::size_t n, const Budget& budget = {});

/// S_k p_n without the final rounding.
ExtendedPoly right_inverse_extended(const EigenOp& op, const EigenBasis& basis, std::size_t k, std::size_t n,
                                    const Budget& budget = {});

/// lambda_k L^k f in long double, scaled stepwise like normalized_iterate.
ExtendedPoly normalized_iterate_extended(const EigenOp& op, const ExtendedPoly& f, std::size_t k);

/// S_k extended linearly: sum_n coeffs[n] S_k p_n.
TruncatedSeries right_inverse(const EigenOp& op, const EigenBasis& basis, const std::vector<cplx>& coeffs,
                              std::size_t k, const Budget& budget = {});

}  // namespace eigenop

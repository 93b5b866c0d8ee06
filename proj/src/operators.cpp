#include "eigenop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigenop/errors.hpp"

namespace eigenop {

namespace {

cplx ipow(cplx base, long long exponent) {
  if (exponent < 0) return 1.0 / ipow(base, -exponent);
  cplx result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

using xcplx = std::complex<long double>;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// psi = phi / z^m as a jet through degree N.
TruncatedSeries reduced_symbol_jet(const EigenOp& op, std::size_t truncation) {
  const TruncatedSeries phi_jet = phi_coefficients(op.phi(), truncation + op.m());
  std::vector<cplx> psi(truncation + 1);
  for (std::size_t j = 0; j <= truncation; ++j) psi[j] = phi_jet[j + op.m()];
  return TruncatedSeries(std::move(psi));
}

}  // namespace

TruncatedSeries to_series(const ExtendedPoly& f) {
  if (f.empty()) return TruncatedSeries();
  std::vector<cplx> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] = {static_cast<double>(f[i].real()), static_cast<double>(f[i].imag())};
  }
  return TruncatedSeries(std::move(c));
}

ExtendedPoly to_extended(const TruncatedSeries& f) {
  ExtendedPoly out(f.truncation() + 1);
  for (std::size_t i = 0; i <= f.truncation(); ++i) out[i] = {f[i].real(), f[i].imag()};
  return out;
}

EigenOp::EigenOp(cplx lambda, PhiSpec phi)
    : lambda_(lambda), omega_(), phi_(std::move(phi)), meta_(eigenop::zero_meta(phi_)) {
  if (lambda_ == cplx{} || !finite(lambda_)) {
    throw Error(ErrorCode::invalid_argument, "extended eigenoperator needs a finite lambda != 0");
  }
  omega_ = 1.0 / lambda_;
}

TruncatedSeries apply_symbol(const TruncatedSeries& symbol_jet, const TruncatedSeries& f) {
  const std::size_t n = f.truncation();
  const auto deg = f.degree();
  if (!deg) return TruncatedSeries::zero(n);
  if (symbol_jet.truncation() < *deg) {
    throw Error(ErrorCode::truncation, "symbol jet of degree " + std::to_string(symbol_jet.truncation()) +
                                           " cannot act on a polynomial of degree " + std::to_string(*deg));
  }
  std::vector<cplx> out(n + 1);
  for (std::size_t i = 0; i <= *deg; ++i) {
    cplx acc = 0.0;
    double falling = 1.0;  // (i+j)! / i!
    for (std::size_t j = 0; i + j <= *deg; ++j) {
      if (j > 0) falling *= static_cast<double>(i + j);
      const cplx c = symbol_jet[j];
      if (c != cplx{}) acc += c * falling * f[i + j];
    }
    out[i] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries apply(const EigenOp& op, const TruncatedSeries& f) {
  const std::size_t deg = f.degree().value_or(0);
  return dilate(apply_symbol(phi_coefficients(op.phi(), deg), f), op.lambda());
}

TruncatedSeries iterate(const EigenOp& op, const TruncatedSeries& f, std::size_t n, IterateRoute route,
                        const Budget& budget) {
  if (n > budget.max_iterations) {
    throw Error(ErrorCode::budget, "iterate index " + std::to_string(n) + " exceeds max_iterations");
  }
  if (n == 0) return f;
  if (route == IterateRoute::repeated) {
    TruncatedSeries g = f;
    for (std::size_t t = 0; t < n; ++t) g = apply(op, g);
    return g;
  }
  const std::size_t deg = f.degree().value_or(0);
  const TruncatedSeries symbol = iterated_symbol(op.phi(), op.lambda(), n, deg, budget);
  return apply_symbol(symbol, dilate(f, ipow(op.lambda(), static_cast<long long>(n))));
}

cplx normalizer(const EigenOp& op, std::size_t k) {
  if (k < 2) return 1.0;
  const auto kk = static_cast<long long>(k);
  const auto exponent = static_cast<long long>(op.m()) * kk * (kk - 1) / 2;
  return ipow(op.lambda(), -exponent);
}

TruncatedSeries normalized_iterate(const EigenOp& op, const TruncatedSeries& f, std::size_t k) {
  // lambda_k L^k = prod_{t=0}^{k-1} (lambda^{-m t} L)
  const cplx step = ipow(op.lambda(), -static_cast<long long>(op.m()));
  TruncatedSeries g = f;
  cplx scale = 1.0;
  for (std::size_t t = 0; t < k; ++t) {
    g = apply(op, g);
    if (t > 0) {
      scale *= step;
      g *= scale;
    }
    if (g.is_zero()) break;
  }
  return g;
}

double commutation_residual(const EigenOp& op, std::size_t max_degree) {
  double worst = 0.0;
  for (std::size_t s = 0; s <= max_degree; ++s) {
    const auto zs = TruncatedSeries::monomial(s, s);
    const auto lz = apply(op, zs);
    const auto lhs = differentiate(lz);
    const auto rhs = op.lambda() * apply(op, differentiate(zs));
    const double residual = rho(lhs - rhs, 1.0) / std::max(1.0, rho(lz, 1.0));
    worst = std::max(worst, residual);
  }
  return worst;
}

EigenOp aron_markose(cplx lambda, cplx b) { return EigenOp(lambda, PhiSpec({0.0, 1.0}, b)); }

double similarity_check(cplx lambda, const std::vector<cplx>& poly, cplx b, std::size_t max_degree) {
  if (lambda == cplx{1.0, 0.0}) {
    throw Error(ErrorCode::invalid_argument, "similarity needs lambda != 1 (alpha = b/(1-lambda))");
  }
  const EigenOp with_exp(lambda, PhiSpec(poly, b));
  const EigenOp plain(lambda, PhiSpec(poly));
  const cplx alpha = b / (1.0 - lambda);

  double worst = 0.0;
  for (std::size_t s = 0; s <= max_degree; ++s) {
    const auto f = TruncatedSeries::monomial(s, s);
    const auto direct = apply(with_exp, f);
    const auto conjugated = translate(apply(plain, translate(f, alpha)), -alpha);
    const double scale = std::max(rho(direct, 1.0), rho(conjugated, 1.0));
    if (scale == 0.0) continue;
    worst = std::max(worst, rho(direct - conjugated, 1.0) / scale);
  }
  return worst;
}

EigenBasis eigen_basis(const EigenOp& op, std::size_t max_index) {
  const TruncatedSeries psi_jet = reduced_symbol_jet(op, max_index);
  const cplx psi0 = psi_jet[0];
  if (psi0 == cplx{}) throw Error(ErrorCode::precondition, "psi(0) = 0: reduced symbol is degenerate");

  const cplx lambda = op.lambda();
  std::vector<cplx> powers(max_index + 1);
  powers[0] = 1.0;
  for (std::size_t k = 1; k <= max_index; ++k) powers[k] = powers[k - 1] * lambda;
  for (std::size_t j = 0; j <= max_index; ++j) {
    for (std::size_t k = j + 1; k <= max_index; ++k) {
      if (std::abs(powers[j] - powers[k]) < 1e-10) {
        throw Error(ErrorCode::precondition, "eigenvalues psi(0) lambda^" + std::to_string(j) +
                                                 " and psi(0) lambda^" + std::to_string(k) +
                                                 " are not separated (|lambda^j - lambda^k| < 1e-10)");
      }
    }
  }

  const ExtendedPoly psi = to_extended(psi_jet);
  const xcplx lambda_x(lambda.real(), lambda.imag());
  ExtendedPoly powers_x(max_index + 1);
  powers_x[0] = 1.0L;
  for (std::size_t k = 1; k <= max_index; ++k) powers_x[k] = powers_x[k - 1] * lambda_x;

  EigenBasis basis{{}, {}, psi0, lambda};
  basis.polys.reserve(max_index + 1);
  basis.extended.reserve(max_index + 1);
  for (std::size_t k = 0; k <= max_index; ++k) {
    // Row r of (A - psi0 lambda^k) x = 0 after dividing by lambda^r:
    //   psi0 (1 - lambda^{k-r}) x_r = -sum_{j>r} psi_{j-r} (j!/r!) x_j
    ExtendedPoly x(k + 1);
    x[k] = 1.0L;
    for (std::size_t r = k; r-- > 0;) {
      xcplx acc = 0.0L;
      long double falling = 1.0L;
      for (std::size_t j = r + 1; j <= k; ++j) {
        falling *= static_cast<long double>(j);  // j! / r!
        acc += psi[j - r] * falling * x[j];
      }
      x[r] = -acc / (psi[0] * (1.0L - powers_x[k - r]));
    }
    basis.polys.push_back(to_series(x));
    basis.extended.push_back(std::move(x));
  }
  return basis;
}

TruncatedSeries apply_reduced(const EigenOp& op, const TruncatedSeries& p) {
  const std::size_t deg = p.degree().value_or(0);
  return dilate(apply_symbol(reduced_symbol_jet(op, deg), p), op.lambda());
}

std::vector<cplx> expand_in_basis(const EigenBasis& basis, const TruncatedSeries& g) {
  const std::size_t deg = g.degree().value_or(0);
  if (deg >= basis.size()) {
    throw Error(ErrorCode::precondition, "basis of size " + std::to_string(basis.size()) +
                                             " cannot expand a polynomial of degree " + std::to_string(deg));
  }
  std::vector<cplx> residual(g.coeffs().begin(), g.coeffs().begin() + static_cast<std::ptrdiff_t>(deg) + 1);
  std::vector<cplx> coeffs(deg + 1);
  for (std::size_t n = deg + 1; n-- > 0;) {
    coeffs[n] = residual[n];
    if (coeffs[n] == cplx{}) continue;
    const auto& p = basis.polys[n];
    for (std::size_t i = 0; i <= n; ++i) residual[i] -= coeffs[n] * p[i];
  }
  return coeffs;
}

ExtendedPoly right_inverse_extended(const EigenOp& op, const EigenBasis& basis, std::size_t k, std::size_t n,
                                    const Budget& budget) {
  if (op.m() == 0) {
    throw Error(ErrorCode::precondition, "S_k needs phi(0) = 0 (order at origin m >= 1)");
  }
  if (n >= basis.size()) {
    throw Error(ErrorCode::invalid_argument, "basis index " + std::to_string(n) + " out of range");
  }
  if (n + op.m() * k > budget.max_degree) {
    throw Error(ErrorCode::truncation, "S_k p_n has degree " + std::to_string(n + op.m() * k) +
                                           " beyond max_degree " + std::to_string(budget.max_degree));
  }
  const xcplx psi0(basis.psi0.real(), basis.psi0.imag());
  const xcplx lambda(basis.lambda.real(), basis.lambda.imag());
  xcplx eigenvalue = psi0;
  for (std::size_t i = 0; i < n; ++i) eigenvalue *= lambda;
  const xcplx inverse = 1.0L / eigenvalue;

  ExtendedPoly q = basis.extended[n];
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t i = 0; i < op.m(); ++i) {
      ExtendedPoly next(q.size() + 1);
      for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] = q[j] / static_cast<long double>(j + 1);
      q = std::move(next);
    }
    for (auto& c : q) c *= inverse;
  }
  return q;
}

TruncatedSeries right_inverse_on_basis(const EigenOp& op, const EigenBasis& basis, std::size_t k,
                                       std::size_t n, const Budget& budget) {
  return to_series(right_inverse_extended(op, basis, k, n, budget));
}

ExtendedPoly normalized_iterate_extended(const EigenOp& op, const ExtendedPoly& f, std::size_t k) {
  const std::size_t size = f.size();
  const ExtendedPoly jet = to_extended(phi_coefficients(op.phi(), size == 0 ? 0 : size - 1));
  const xcplx lambda(op.lambda().real(), op.lambda().imag());
  ExtendedPoly powers(size);
  if (size > 0) powers[0] = 1.0L;
  for (std::size_t i = 1; i < size; ++i) powers[i] = powers[i - 1] * lambda;
  xcplx step = 1.0L;
  for (std::size_t i = 0; i < op.m(); ++i) step /= lambda;

  ExtendedPoly g = f;
  xcplx scale = 1.0L;
  for (std::size_t t = 0; t < k; ++t) {
    ExtendedPoly next(size);
    for (std::size_t i = 0; i < size; ++i) {
      xcplx acc = 0.0L;
      long double falling = 1.0L;  // (i+j)! / i!
      for (std::size_t j = 0; i + j < size; ++j) {
        if (j > 0) falling *= static_cast<long double>(i + j);
        if (jet[j] != xcplx{}) acc += jet[j] * falling * g[i + j];
      }
      next[i] = acc * powers[i];
    }
    g = std::move(next);
    if (t > 0) {
      scale *= step;
      for (auto& c : g) c *= scale;
    }
  }
  return g;
}

TruncatedSeries right_inverse(const EigenOp& op, const EigenBasis& basis, const std::vector<cplx>& coeffs,
                              std::size_t k, const Budget& budget) {
  TruncatedSeries sum;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] == cplx{}) continue;
    sum += coeffs[n] * right_inverse_on_basis(op, basis, k, n, budget);
  }
  return sum;
}

}  // namespace eigenop

#include "eigenop/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "eigenop/errors.hpp"

namespace eigenop {

std::string_view to_string(Builtin b) {
  switch (b) {
    case Builtin::none: return "none";
    case Builtin::cos: return "cos";
    case Builtin::sin_over_z: return "sin_over_z";
    case Builtin::cosh: return "cosh";
  }
  return "none";
}

Builtin parse_builtin(std::string_view name) {
  if (name == "none") return Builtin::none;
  if (name == "cos") return Builtin::cos;
  if (name == "sin_over_z") return Builtin::sin_over_z;
  if (name == "cosh") return Builtin::cosh;
  throw Error(ErrorCode::invalid_argument, "unknown builtin factor: " + std::string(name));
}

std::string_view to_string(ZeroMeta::Count c) {
  switch (c) {
    case ZeroMeta::Count::zero_free: return "zero-free";
    case ZeroMeta::Count::finite_nonempty: return "finite-nonempty";
    case ZeroMeta::Count::infinite: return "infinite";
  }
  return "zero-free";
}

TruncatedSeries builtin_jet(Builtin b, std::size_t truncation) {
  std::vector<cplx> c(truncation + 1);
  if (b == Builtin::none) {
    c[0] = 1.0;
    return TruncatedSeries(std::move(c));
  }
  // All catalogue entries are even: sum_j s_j z^{2j} / (2j + shift)!
  const double sign = b == Builtin::cosh ? 1.0 : -1.0;
  const std::size_t shift = b == Builtin::sin_over_z ? 1 : 0;
  double term = 1.0;  // 1/0! or 1/1!
  for (std::size_t k = 0; k <= truncation; k += 2) {
    c[k] = term;
    const double a = static_cast<double>(k + shift + 1);
    term *= sign / (a * (a + 1.0));
  }
  return TruncatedSeries(std::move(c));
}

PhiSpec::PhiSpec(std::vector<cplx> poly, cplx b, Builtin builtin)
    : poly_(std::move(poly)), b_(b), builtin_(builtin) {
  while (!poly_.empty() && poly_.back() == cplx{}) poly_.pop_back();
  if (poly_.empty()) {
    throw Error(ErrorCode::invalid_argument, "symbol polynomial part is identically zero");
  }
  auto finite = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!std::all_of(poly_.begin(), poly_.end(), finite) || !finite(b_)) {
    throw Error(ErrorCode::invalid_argument, "symbol has a non-finite coefficient");
  }
}

PhiSpec PhiSpec::scaled(cplx c) const {
  if (c == cplx{}) throw Error(ErrorCode::invalid_argument, "cannot scale a symbol by zero");
  auto p = poly_;
  for (auto& x : p) x *= c;
  return PhiSpec(std::move(p), b_, builtin_);
}

TruncatedSeries phi_coefficients(const PhiSpec& phi, std::size_t truncation) {
  std::vector<cplx> p(phi.poly().begin(), phi.poly().end());
  TruncatedSeries jet = TruncatedSeries(std::move(p)).with_truncation(truncation);
  if (phi.b() != cplx{}) jet = multiply(jet, TruncatedSeries::exp_jet(phi.b(), truncation), truncation);
  if (phi.builtin() != Builtin::none) {
    jet = multiply(jet, builtin_jet(phi.builtin(), truncation), truncation);
  }
  return jet;
}

ZeroMeta zero_meta(const PhiSpec& phi) {
  std::size_t m = 0;
  while (phi.poly()[m] == cplx{}) ++m;  // leading coefficient is nonzero, so this stops

  ZeroMeta::Count count = ZeroMeta::Count::finite_nonempty;
  if (phi.builtin() != Builtin::none) count = ZeroMeta::Count::infinite;
  else if (phi.poly_degree() == 0) count = ZeroMeta::Count::zero_free;
  return {count, m};
}

TruncatedSeries iterated_symbol(const PhiSpec& phi, cplx lambda, std::size_t n, std::size_t truncation,
                                const Budget& budget) {
  if (lambda == cplx{}) throw Error(ErrorCode::invalid_argument, "lambda must be nonzero");
  if (n == 0) throw Error(ErrorCode::invalid_argument, "iterated symbol needs n >= 1");
  if (truncation > budget.max_degree) {
    throw Error(ErrorCode::truncation, "iterated symbol degree " + std::to_string(truncation) +
                                           " exceeds max_degree " + std::to_string(budget.max_degree));
  }
  const cplx omega = 1.0 / lambda;
  const TruncatedSeries jet = phi_coefficients(phi, truncation);

  TruncatedSeries product = dilate(jet, omega);
  cplx scale = omega;
  for (std::size_t t = 2; t <= n; ++t) {
    scale *= omega;
    product = multiply(product, dilate(jet, scale), truncation);
  }
  return product;
}

std::vector<cplx> leibniz_coefficients(const PhiSpec& phi, cplx lambda, std::size_t k, std::size_t max_order,
                                       const Budget& budget) {
  if (lambda == cplx{}) throw Error(ErrorCode::invalid_argument, "lambda must be nonzero");
  if (k == 0) throw Error(ErrorCode::invalid_argument, "Leibniz coefficients need k >= 1");
  if (k * max_order > budget.leibniz_work) {
    throw Error(ErrorCode::budget, "Leibniz sum with k*M = " + std::to_string(k * max_order) +
                                       " exceeds budget " + std::to_string(budget.leibniz_work) +
                                       "; use iterated_symbol instead");
  }
  const cplx omega = 1.0 / lambda;

  // phi^{(h)}(0) = h! c_h, and 1/h! factorials for the multinomial weight.
  const TruncatedSeries jet = phi_coefficients(phi, max_order);
  std::vector<double> factorial(max_order + 1, 1.0);
  for (std::size_t h = 1; h <= max_order; ++h) factorial[h] = factorial[h - 1] * static_cast<double>(h);
  std::vector<cplx> derivative(max_order + 1);
  for (std::size_t h = 0; h <= max_order; ++h) derivative[h] = factorial[h] * jet[h];

  // (phi(w^t z))^{(h)}(0) = w^{t h} phi^{(h)}(0)
  std::vector<std::vector<cplx>> factor_derivative(k + 1, std::vector<cplx>(max_order + 1));
  for (std::size_t t = 1; t <= k; ++t) {
    const cplx wt = std::pow(omega, static_cast<double>(t));
    cplx power = 1.0;
    for (std::size_t h = 0; h <= max_order; ++h) {
      factor_derivative[t][h] = power * derivative[h];
      power *= wt;
    }
  }

  std::vector<cplx> out(max_order + 1);
  for (std::size_t m = 0; m <= max_order; ++m) {
    cplx sum = 0.0;
    // Depth-first over compositions; `weight` carries prod (w^{t h_t} phi^{(h_t)}(0) / h_t!).
    std::function<void(std::size_t, std::size_t, cplx)> visit = [&](std::size_t t, std::size_t remaining,
                                                                    cplx weight) {
      if (t == k) {
        const cplx d = factor_derivative[t][remaining];
        if (d != cplx{}) sum += weight * d / factorial[remaining];
        return;
      }
      for (std::size_t h = 0; h <= remaining; ++h) {
        const cplx d = factor_derivative[t][h];
        if (d == cplx{}) continue;
        visit(t + 1, remaining - h, weight * d / factorial[h]);
      }
    };
    visit(1, m, 1.0);
    out[m] = factorial[m] * sum;
  }
  return out;
}

double leibniz_magnitude_bound(const PhiSpec& phi, cplx lambda, std::size_t k, std::size_t m) {
  const TruncatedSeries jet = phi_coefficients(phi, m);
  double c = 0.0;
  double factorial = 1.0;
  for (std::size_t t = 0; t <= m; ++t) {
    if (t > 0) factorial *= static_cast<double>(t);
    c = std::max(c, factorial * std::abs(jet[t]));
  }
  const double w = 1.0 / std::abs(lambda);
  double geometric = 0.0;
  double power = 1.0;
  for (std::size_t t = 1; t <= k; ++t) {
    power *= w;
    geometric += power;
  }
  const double md = static_cast<double>(m);
  return std::pow(std::max(1.0, std::abs(jet[0])), static_cast<double>(k)) *
         std::pow(std::max(1.0, c), md) * std::pow(geometric, md);
}

}  // namespace eigenop

#include "eigenop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eigenop/classify.hpp"
#include "eigenop/errors.hpp"
#include "eigenop/symbols.hpp"

namespace eigenop {

namespace {

constexpr std::size_t kSampleSpan = 32;

// Running count of checks and the smallest normalized slack seen so far.
class Tally {
 public:
  // margin >= 0 means the inequality holds.
  bool record(double margin) {
    if (margin < 0.0 && margin >= -kLemmaTolerance) margin = 0.0;
    ++checked_;
    const bool ok = margin >= 0.0;
    if (!ok) ++violations_;
    worst_ = std::min(worst_, margin);
    return ok;
  }

  // lhs >= rhs, both given as logarithms (-inf for zero).
  bool at_least(double log_lhs, double log_rhs) {
    if (log_rhs == -kInf) return record(0.0);
    return record(std::expm1(log_lhs - log_rhs));
  }

  // lhs <= rhs, both given as logarithms (-inf for zero).
  bool at_most(double log_lhs, double log_rhs) {
    if (log_rhs == -kInf) return record(log_lhs == -kInf ? 0.0 : -1.0);
    return record(-std::expm1(log_lhs - log_rhs));
  }

  void fill(LemmaReport& report) const {
    report.checked = checked_;
    report.violations = violations_;
    report.worst_margin = checked_ == 0 ? 0.0 : worst_;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  std::size_t checked_ = 0;
  std::size_t violations_ = 0;
  double worst_ = kInf;
};

double safe_log(double x) { return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity(); }

// log(p! / (p-k)!)
double log_falling(std::size_t p, std::size_t k) {
  return std::lgamma(static_cast<double>(p) + 1.0) - std::lgamma(static_cast<double>(p - k) + 1.0);
}

// log of sum exp(terms), tolerant of -inf entries.
double log_sum_exp(const std::vector<double>& terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (double t : terms) top = std::max(top, t);
  if (top == -std::numeric_limits<double>::infinity()) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

// Random element of N_m: coefficients of z^m..z^{m+span'} drawn from the unit disk.
TruncatedSeries sample_vanishing(Rng& rng, std::size_t m) {
  const std::size_t top = m + rng.uniform_index(0, kSampleSpan);
  std::vector<cplx> c(top + 1);
  for (std::size_t p = m; p <= top; ++p) c[p] = rng.in_disk(1.0);
  return TruncatedSeries(std::move(c));
}

void require_polynomial(const EigenOp& op, const char* lemma) {
  if (!op.phi().is_polynomial() || op.d() < 1) {
    throw Error(ErrorCode::precondition, std::string(lemma) + " needs a polynomial symbol of degree >= 1");
  }
}

}  // namespace

LemmaReport verify_iteracionpolinomio(const EigenOp& op, double M, std::size_t n_max, std::size_t samples, Rng& rng,
                                      const Budget& budget) {
  require_polynomial(op, "iteracionpolinomio");
  const double modulus = std::abs(op.lambda());
  if (!(modulus > 1.0)) throw Error(ErrorCode::precondition, "iteracionpolinomio needs |lambda| > 1");
  if (!(M > 0.0)) throw Error(ErrorCode::invalid_argument, "iteracionpolinomio needs M > 0");

  const std::size_t d = op.d();
  const double c = std::abs(op.phi().poly().back()) / 2.0;
  const double log_mod = std::log(modulus);
  const double log_m = std::log(M);

  // Left side by repeated application, right side straight from h's coefficients.
  auto check = [&](Tally& tally, const TruncatedSeries& h, std::size_t n) {
    const double log_lhs = safe_log(rho(iterate(op, h, n, IterateRoute::repeated), M));
    const std::size_t nd = n * d;
    std::vector<double> terms;
    for (std::size_t p = nd; p <= h.truncation(); ++p) {
      if (h[p] == cplx{}) continue;
      const auto q = static_cast<double>(p - nd);
      terms.push_back(safe_log(std::abs(h[p])) + log_falling(p, nd) + static_cast<double>(n) * q * log_mod +
                      q * log_m);
    }
    const double nn = static_cast<double>(n);
    const double log_rhs =
        nn * std::log(c) + static_cast<double>(d) * nn * (nn - 1.0) / 2.0 * log_mod + log_sum_exp(terms);
    return tally.at_least(log_lhs, log_rhs);
  };

  auto batch = [&](Tally& tally, Rng& stream, std::size_t m, std::size_t n, bool stop_on_failure) {
    bool all = true;
    for (std::size_t p = m; p <= m + kSampleSpan; ++p) {
      all = check(tally, TruncatedSeries::monomial(p, p), n) && all;
      if (!all && stop_on_failure) return false;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      all = check(tally, sample_vanishing(stream, m), n) && all;
      if (!all && stop_on_failure) return false;
    }
    return all;
  };

  LemmaReport report;
  report.lemma = "iteracionpolinomio";
  report.parameters = {{"M", M}, {"c", c}, {"d", static_cast<double>(d)}, {"n_max", static_cast<double>(n_max)},
                       {"lambda_modulus", modulus}, {"samples", static_cast<double>(samples)}};
  report.sampling = "per n: monomials z^p, p in [m_n, m_n+32], plus random h in N_{m_n} of degree <= m_n+32 "
                    "with unit-disk coefficients; m_n confirmed on a fresh draw";

  Tally confirmed;
  std::size_t previous = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t m = std::max(n * d, previous);
    for (;; ++m) {
      if (m > budget.mn_search_cap) {
        throw Error(ErrorCode::budget, "m_" + std::to_string(n) + " search exceeded mn_search_cap");
      }
      Tally scratch;
      Rng stream = rng.split("iteracionpolinomio/search/n=" + std::to_string(n) + "/m=" + std::to_string(m));
      if (batch(scratch, stream, m, n, true)) break;
    }
    Rng stream = rng.split("iteracionpolinomio/confirm/n=" + std::to_string(n));
    batch(confirmed, stream, m, n, false);
    check(confirmed, TruncatedSeries::zero(m), n);
    report.thresholds.push_back(m);
    previous = m;
  }
  confirmed.fill(report);
  return report;
}

LemmaReport verify_infinf(std::size_t n, std::size_t d, cplx lambda, std::size_t samples, std::size_t m, Rng& rng) {
  const double modulus = std::abs(lambda);
  if (!(modulus > 1.0)) throw Error(ErrorCode::precondition, "infinf needs |lambda| > 1");
  if (m <= n * d) throw Error(ErrorCode::precondition, "infinf needs m > n d");

  const std::size_t nd = n * d;
  const double nn = static_cast<double>(n);
  const double log_mod = std::log(modulus);
  const cplx lambda_n = std::pow(lambda, static_cast<double>(n));
  const double radius = std::pow(modulus, nn / 2.0);
  const double log_const =
      log_falling(m, nd) + (static_cast<double>(m) * nn / 2.0 - nn * nn * static_cast<double>(d)) * log_mod;

  LemmaReport report;
  report.lemma = "infinf";
  report.parameters = {{"n", nn}, {"d", static_cast<double>(d)}, {"m", static_cast<double>(m)},
                       {"lambda_modulus", modulus}, {"samples", static_cast<double>(samples)}};
  report.sampling = "z^m, then random f in N_m of degree <= m+32 with unit-disk coefficients";

  Tally tally;
  Rng stream = rng.split("infinf");
  for (std::size_t s = 0; s < samples; ++s) {
    const TruncatedSeries f = s == 0 ? TruncatedSeries::monomial(m, m) : sample_vanishing(stream, m);
    TruncatedSeries g = f;
    for (std::size_t i = 0; i < nd; ++i) g = differentiate(g);
    const double lhs = rho(dilate(g, lambda_n), 1.0);
    tally.at_least(safe_log(lhs), log_const + safe_log(rho(f, radius)));
  }
  tally.fill(report);
  return report;
}

LemmaReport verify_supsup(const EigenOp& op, std::size_t n_max, std::size_t samples, Rng& rng) {
  require_polynomial(op, "supsup");
  const double modulus = std::abs(op.lambda());
  if (modulus < 1.0 - kUnitModulusTolerance) throw Error(ErrorCode::precondition, "supsup needs |lambda| >= 1");

  const std::size_t d = op.d();
  double B = 0.0;
  for (const auto& p : op.phi().poly()) B = std::max(B, std::abs(p));
  const double log_mod = std::log(modulus);

  // log of B^n ((d+1)n-1)!/(n-1)! |lambda|^{d n(n-1)/2}
  auto log_bound = [&](std::size_t n) {
    const double nn = static_cast<double>(n);
    double log_fact;
    if (n * (d + 1) <= 20) {
      double prod = 1.0;
      for (std::size_t j = n; j < (d + 1) * n; ++j) prod *= static_cast<double>(j);
      log_fact = std::log(prod);
    } else {
      log_fact = std::lgamma(static_cast<double>((d + 1) * n)) - std::lgamma(nn);
    }
    return nn * std::log(B) + log_fact + static_cast<double>(d) * nn * (nn - 1.0) / 2.0 * log_mod;
  };

  LemmaReport report;
  report.lemma = "supsup";
  report.parameters = {{"B", B}, {"d", static_cast<double>(d)}, {"n_max", static_cast<double>(n_max)},
                       {"lambda_modulus", modulus}, {"samples", static_cast<double>(samples)}};
  report.sampling = "f = 1, then random polynomials of degree <= 32 with unit-disk coefficients; every n <= n_max";

  Tally tally;
  Rng stream = rng.split("supsup");
  for (std::size_t s = 0; s < samples; ++s) {
    TruncatedSeries f = TruncatedSeries::monomial(0, 0);
    if (s > 0) {
      std::vector<cplx> c(stream.uniform_index(0, kSampleSpan) + 1);
      for (auto& x : c) x = stream.in_disk(1.0);
      f = TruncatedSeries(std::move(c));
    }
    const double log_rho = safe_log(rho(f, 1.0));
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double lhs = std::abs(iterate(op, f, n, IterateRoute::closed_form)[0]);
      tally.at_most(safe_log(lhs), log_bound(n) + log_rho);
    }
  }
  tally.fill(report);
  return report;
}

std::size_t modulo1_threshold(double c, std::size_t n, std::size_t d, const Budget& budget) {
  if (!(c > 0.0) || n == 0 || d == 0) {
    throw Error(ErrorCode::invalid_argument, "threshold search needs c > 0 and n, d >= 1");
  }
  // g(x) = x ln 2 - ln(c n d) - dn ln x is convex with its minimum at dn / ln 2.
  const double k = static_cast<double>(d * n);
  const double log_const = std::log(c * static_cast<double>(n * d));
  auto g = [&](double x) { return x * std::log(2.0) - log_const - k * std::log(x); };
  const double x_min = k / std::log(2.0);
  if (g(x_min) >= 0.0) return 1;
  for (auto x = static_cast<std::size_t>(std::ceil(x_min)); x <= budget.mn_search_cap; ++x) {
    if (g(static_cast<double>(x)) >= 0.0) return x;
  }
  throw Error(ErrorCode::budget, "M_n search exceeded mn_search_cap");
}

LemmaReport verify_modulo1_estimate(const EigenOp& op, double M, std::size_t n, std::size_t s_max,
                                    const Budget& budget) {
  require_polynomial(op, "modulo1_estimate");
  if (std::abs(std::abs(op.lambda()) - 1.0) > kUnitModulusTolerance) {
    throw Error(ErrorCode::precondition, "modulo1_estimate needs |lambda| = 1");
  }
  if (!(M >= 1.0)) throw Error(ErrorCode::precondition, "modulo1_estimate needs M >= 1");
  if (n == 0) throw Error(ErrorCode::invalid_argument, "modulo1_estimate needs n >= 1");

  const std::size_t d = op.d();
  double c_tilde = 0.0;
  double c_zero = 0.0;
  for (std::size_t r = 1; r <= n; ++r) {
    const TruncatedSeries product = iterated_symbol(op.phi(), op.lambda(), r, r * d, budget);
    c_zero = std::max(c_zero, std::abs(product[0]));
    for (std::size_t k = 1; k <= r * d; ++k) c_tilde = std::max(c_tilde, std::abs(product[k]));
  }
  c_zero = std::max(c_zero, c_tilde);

  const std::size_t nd = n * d;
  const double log_m = std::log(M);
  Tally tally;
  Tally corrected;
  for (std::size_t s = 0; s <= s_max; ++s) {
    const double lhs = rho(iterate(op, TruncatedSeries::monomial(s, s), n, IterateRoute::repeated), M);
    const double sd = static_cast<double>(s);
    const double log_stated = s == 0 ? -std::numeric_limits<double>::infinity()
                                     : std::log(c_tilde * static_cast<double>(nd)) +
                                           static_cast<double>(nd) * std::log(sd) + sd * log_m;
    tally.at_most(safe_log(lhs), log_stated);
    const double log_fixed = std::log(c_zero * static_cast<double>(nd + 1)) +
                             static_cast<double>(nd) * std::log(std::max(sd, 1.0)) + sd * log_m;
    corrected.at_most(safe_log(lhs), log_fixed);
  }

  const std::size_t threshold = c_tilde > 0.0 ? modulo1_threshold(c_tilde, n, d, budget) : 1;
  for (std::size_t x = threshold; x <= threshold + 64; ++x) {
    const double xd = static_cast<double>(x);
    tally.at_most(safe_log(c_tilde * static_cast<double>(nd)) + static_cast<double>(nd) * std::log(xd),
                  xd * std::log(2.0));
  }

  LemmaReport report;
  report.lemma = "modulo1_estimate";
  LemmaReport fixed;
  corrected.fill(fixed);
  report.parameters = {{"M", M},
                       {"n", static_cast<double>(n)},
                       {"d", static_cast<double>(d)},
                       {"s_max", static_cast<double>(s_max)},
                       {"C_n", c_tilde},
                       {"C0_n", c_zero},
                       {"M_n", static_cast<double>(threshold)},
                       {"corrected_violations", static_cast<double>(fixed.violations)}};
  report.thresholds = {threshold};
  report.sampling = "monomials z^s for s = 0..s_max, plus the M_n inequality on x = M_n..M_n+64";
  tally.fill(report);
  return report;
}

}  // namespace eigenop

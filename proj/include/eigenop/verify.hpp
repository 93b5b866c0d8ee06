#pragma once

// Desk-scale harnesses for the quantitative lemmas behind the subspace
// results. Each harness computes both sides of an inequality by separate code
// paths and tallies the outcome in a LemmaReport.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eigenop/budget.hpp"
#include "eigenop/operators.hpp"
#include "eigenop/rng.hpp"

namespace eigenop {

/// Relative slack below which a negative margin counts as rounding in a tight
/// case; such margins are reported as 0.
inline constexpr double kLemmaTolerance = 1e-12;

struct LemmaReport {
  std::string lemma;
  std::map<std::string, double> parameters;
  std::vector<std::size_t> thresholds;  // m_n or M_n found by a search, if any
  std::string sampling;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;  // min over checks of (slack / RHS)

  bool passed() const { return violations == 0; }
};

/// rho_M(L^n h) >= c^n |lambda|^{d(1+...+(n-1))} rho_M(h^{(nd)}(lambda^n z))
/// with c = |a_d| / 2. For n = 1..n_max searches the smallest m_n >= max(nd,
/// m_{n-1}) such that every sampled h in N_{m_n} (lowest power >= m_n) passes,
/// then confirms m_n on fresh samples; only the confirmation counts toward
/// `violations`.
///
/// Preconditions (Error(precondition)): phi polynomial of degree d >= 1 and
/// |lambda| > 1. Error(budget) if m_n passes budget.mn_search_cap.
LemmaReport verify_iteracionpolinomio(const EigenOp& op, double M, std::size_t n_max, std::size_t samples, Rng& rng,
                                      const Budget& budget = {});

/// rho_1(f^{(nd)}(lambda^n z)) >= m!/(m-nd)! |lambda|^{mn/2 - n^2 d} rho_{|lambda|^{n/2}}(f)
/// for f in N_m. Samples include z^m, where the inequality is an equality.
/// Preconditions: m > nd and |lambda| > 1.
LemmaReport verify_infinf(std::size_t n, std::size_t d, cplx lambda, std::size_t samples, std::size_t m, Rng& rng);

/// |L^n f(0)| <= B^n ((d+1)n-1)!/(n-1)! |lambda|^{d(1+...+(n-1))} rho_1(f),
/// B = max_k |p_k|, for every n <= n_max and `samples` random polynomials of
/// degree <= 32 plus f = 1. The left side uses the closed-form iterate.
/// Preconditions: phi polynomial of degree d >= 1 and |lambda| >= 1 (the
/// exponent bound on |lambda| runs the other way inside the unit disk).
LemmaReport verify_supsup(const EigenOp& op, std::size_t n_max, std::size_t samples, Rng& rng);

/// rho_M(L^n z^s) <= C_n n d s^{nd} M^s for s <= s_max, where C_n is the
/// largest |b_k^{(r)}| over 1 <= r <= n, 1 <= k <= dr. The constant term
/// b_0^{(n)} = P(0)^n is outside that maximum, so the displayed bound can fail
/// when P(0) != 0; parameters["corrected_violations"] counts failures of
/// C0_n (nd+1) max(s,1)^{nd} M^s with C0_n taken over 0 <= k <= dr.
/// Also reports M_n, the least integer with C_n n d x^{dn} <= 2^x for all real
/// x >= M_n, and checks it on x = M_n..M_n+64.
/// Preconditions: ||lambda| - 1| <= 1e-12, phi polynomial of degree d >= 1, M >= 1.
LemmaReport verify_modulo1_estimate(const EigenOp& op, double M, std::size_t n, std::size_t s_max,
                                    const Budget& budget = {});

/// Least integer x0 >= 1 with c n d x^{dn} <= 2^x for every real x >= x0.
/// Error(budget) beyond budget.mn_search_cap.
std::size_t modulo1_threshold(double c, std::size_t n, std::size_t d, const Budget& budget = {});

}  // namespace eigenop

#include <gtest/gtest.h>

#include <cmath>

#include "eigenop/dynamics.hpp"
#include "eigenop/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using eigenop::cplx;
using eigenop::EigenOp;
using eigenop::NamedSeries;
using eigenop::PhiSpec;
using eigenop::Seminorm;
using eigenop::TruncatedSeries;

namespace {

TruncatedSeries sin_jet(std::size_t n) {
  std::vector<cplx> c(n + 1);
  for (std::size_t k = 1; k <= n; k += 2) c[k] = ((k / 2) % 2 ? -1.0 : 1.0) / oracle::factorial(k);
  return TruncatedSeries(c);
}

// Rebuilds the blocks S_{k_j} g_j of a report from its schedule alone.
std::vector<TruncatedSeries> rebuild_blocks(const EigenOp& op, const std::vector<NamedSeries>& targets,
                                            const eigenop::ConstructionReport& report) {
  std::size_t K = 0;
  for (const auto& e : report.schedule) K = std::max(K, e.basis_degree);
  const auto basis = eigenop::eigen_basis(op, K);
  std::vector<TruncatedSeries> blocks;
  for (std::size_t j = 0; j < report.schedule.size(); ++j) {
    const auto& e = report.schedule[j];
    const auto c = eigenop::expand_in_basis(basis, targets[j].series.with_truncation(e.basis_degree));
    blocks.push_back(eigenop::right_inverse(op, basis, c, e.k));
  }
  return blocks;
}

}  // namespace

TEST(Dynamics, OrbitExample) {
  const EigenOp op(0.5, PhiSpec({0, 1}));
  const auto rec = eigenop::orbit(op, TruncatedSeries({0, 1}), 1, {Seminorm::rho(1)}, {}, false);
  ASSERT_EQ(rec.entries.size(), 2u);
  EXPECT_EQ(rec.entries[1].n, 1u);
  EXPECT_EQ(rec.entries[1].scalar, cplx(1));
  EXPECT_DOUBLE_EQ(rec.entries[1].seminorm_values[0], 1.0);
}

TEST(Dynamics, ZeroOrbit) {
  const EigenOp op(cplx{0.4, 0.7}, PhiSpec({1, 2}, 0.5));
  const auto rec = eigenop::orbit(op, TruncatedSeries::zero(6), 5, {Seminorm::rho(2), Seminorm::sup_disk(1)},
                                  {{"g", TruncatedSeries({0, 0})}}, false);
  for (const auto& e : rec.entries) {
    for (double v : e.seminorm_values) EXPECT_EQ(v, 0.0);
    for (double v : e.seminorm_upper) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(e.target_distances[0], 0.0);
  }
}

TEST(Dynamics, ProjectiveScalarRecoversMultiple) {
  const EigenOp op(cplx{0.8, 0.3}, PhiSpec({0.5, 1, -1}));
  const TruncatedSeries f({1, -1, 2, 0.5, 3});
  const cplx c{-2.5, 1.25};
  const auto g = eigenop::iterate(op, f, 3) * c;
  const auto rec = eigenop::orbit(op, f, 3, {Seminorm::rho(1)}, {{"g", g}}, true);
  EXPECT_LE(std::abs(rec.entries[3].scalar - c), 1e-12 * std::abs(c));
  EXPECT_LE(rec.entries[3].target_distances[0], 1e-12 * eigenop::rho(g, 1));
  for (const auto& e : rec.entries) EXPECT_NE(e.scalar, cplx(0));
  EXPECT_EQ(eigenop::projective_scalar(TruncatedSeries::zero(3), g), cplx(1));
}

TEST(Dynamics, OrbitLengthBudget) {
  eigenop::Budget budget;
  budget.max_iterations = 10;
  try {
    eigenop::orbit(EigenOp(2.0, PhiSpec({1})), TruncatedSeries({1}), 11, {}, {}, false, budget);
    FAIL();
  } catch (const eigenop::Error& e) {
    EXPECT_EQ(e.code(), eigenop::ErrorCode::budget);
  }
}

TEST(Dynamics, ConstructSingleEigenTarget) {
  const EigenOp op(0.5, PhiSpec({0, 1}));
  const auto report = eigenop::construct_supercyclic(op, {{"one", TruncatedSeries({1})}}, 1e-6, Seminorm::rho(1));
  ASSERT_EQ(report.schedule.size(), 1u);
  EXPECT_GE(report.schedule[0].k, 1u);
  EXPECT_LE(report.schedule[0].achieved_distance, 1e-14);
}

TEST(Dynamics, ConstructEmptyTargets) {
  const auto report =
      eigenop::construct_supercyclic(EigenOp(0.5, PhiSpec({0, 1})), {}, 1e-3, Seminorm::rho(1));
  EXPECT_TRUE(report.schedule.empty());
  EXPECT_TRUE(report.vector.is_zero());
}

TEST(Dynamics, ConstructPreconditions) {
  const std::vector<NamedSeries> t{{"one", TruncatedSeries({1})}};
  for (const auto& op : {EigenOp(2.0, PhiSpec({0, 1})), EigenOp(0.5, PhiSpec({1, 1})),
                         EigenOp(cplx{0, 1}, PhiSpec({0, 1}))}) {
    try {
      eigenop::construct_supercyclic(op, t, 1e-3, Seminorm::rho(1));
      FAIL();
    } catch (const eigenop::Error& e) {
      EXPECT_EQ(e.code(), eigenop::ErrorCode::precondition);
    }
  }
  EXPECT_THROW(eigenop::construct_supercyclic(EigenOp(0.5, PhiSpec({0, 1})), t, 0.0, Seminorm::rho(1)),
               eigenop::Error);
}

TEST(Dynamics, ConstructTwoExponentialTargets) {
  const EigenOp op(0.5, PhiSpec({0, 1}));
  const std::vector<NamedSeries> targets{{"exp", TruncatedSeries::exp_jet(1.0, 8)},
                                         {"exp2", TruncatedSeries::exp_jet(2.0, 8) * 2.0}};
  const auto report = eigenop::construct_supercyclic(op, targets, 1e-3, Seminorm::rho(1));
  ASSERT_EQ(report.schedule.size(), 2u);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& e = report.schedule[j];
    EXPECT_LT(e.achieved_distance, 1e-3);
    const auto image = eigenop::iterate(op, report.vector, e.k, eigenop::IterateRoute::closed_form) *
                       eigenop::normalizer(op, e.k);
    EXPECT_LT(eigenop::rho(image - targets[j].series, 1.0), 2e-3);
  }
}

TEST(DynamicsProperty, ScheduleAnnihilatesEarlierBlocksExactly) {
  const std::vector<std::pair<EigenOp, std::vector<NamedSeries>>> cases{
      {EigenOp(0.5, PhiSpec({0, 1})),
       {{"exp", TruncatedSeries::exp_jet(1.0, 8)}, {"sin", sin_jet(8)}, {"poly", TruncatedSeries({1, 0, 3})}}},
      {EigenOp(cplx{0.3, 0.4}, PhiSpec({0, 0, 1})),
       {{"a", TruncatedSeries({1, 2})}, {"b", TruncatedSeries({0, 1, 0, -1})}}},
      {EigenOp(0.7, PhiSpec({0, 1, 1})), {{"a", TruncatedSeries({2, -1, 0.5})}, {"b", TruncatedSeries({1})}}},
  };
  for (const auto& [op, targets] : cases) {
    const auto report = eigenop::construct_supercyclic(op, targets, 1e-3, Seminorm::rho(1));
    const auto blocks = rebuild_blocks(op, targets, report);
    TruncatedSeries sum;
    for (const auto& b : blocks) sum += b;
    EXPECT_LE(oracle::rel_gap(gen::poly_of(sum), gen::poly_of(report.vector)), 1e-15);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      EXPECT_LT(report.schedule[j].achieved_distance, report.tolerance);
      if (j > 0) EXPECT_GT(report.schedule[j].k, report.schedule[j - 1].k);
      for (std::size_t i = 0; i < j; ++i)
        EXPECT_TRUE(eigenop::normalized_iterate(op, blocks[i], report.schedule[j].k).is_zero())
            << "block " << i << " under index of target " << j;
    }
  }
}

TEST(DynamicsProperty, PolynomialsTendToZeroUnderNormalizedIterates) {
  for (std::size_t i = 0; i < 20; ++i) {
    auto rng = gen::case_rng("pointwise-zero", i);
    auto P = gen::poly(rng, rng.uniform_index(1, 3));
    P[0] = 0.0;
    const EigenOp op(rng.in_annulus(0.3, 0.9), PhiSpec(P));
    const auto p = gen::series(gen::poly(rng, rng.uniform_index(0, 10)));
    const std::size_t vanish = p.truncation() / op.m() + 1;
    for (std::size_t k = vanish; k < vanish + 5; ++k)
      EXPECT_TRUE(eigenop::normalized_iterate(op, p, k).is_zero()) << "case " << i << " k=" << k;
    EXPECT_LT(eigenop::rho(eigenop::normalized_iterate(op, p, vanish), 1.0),
              eigenop::rho(p, 1.0));
  }
}

TEST(Dynamics, RatioTraceTrivialCases) {
  const EigenOp op(0.5, PhiSpec({1, 1}));
  const auto flat = eigenop::super2_ratio_trace(op, TruncatedSeries({2, 1, 0.5}), 0.0, 0, 10);
  for (const auto& e : flat) {
    ASSERT_TRUE(e.ratio.has_value());
    EXPECT_NEAR(*e.ratio, 1.0, 1e-15);
  }
  const auto killed = eigenop::super2_ratio_trace(op, TruncatedSeries({1}), 1.0, 3, 10);
  for (const auto& e : killed) EXPECT_EQ(e.ratio, 0.0);
  const auto undefined = eigenop::super2_ratio_trace(op, TruncatedSeries::zero(3), 1.0, 1, 3);
  for (const auto& e : undefined) EXPECT_FALSE(e.ratio.has_value());
  EXPECT_THROW(eigenop::super2_ratio_trace(EigenOp(0.5, PhiSpec({0, 1})), TruncatedSeries({1}), 1.0, 1, 3),
               eigenop::Error);
}

TEST(Dynamics, RatioTraceDecaysAndMatchesDirectDerivative) {
  const EigenOp op(0.5, PhiSpec({1, 1}));
  const auto f = TruncatedSeries::exp_jet(1.0, 12);
  const auto trace = eigenop::super2_ratio_trace(op, f, 1.0, 4, 25);
  ASSERT_EQ(trace.size(), 25u);
  for (const auto& e : trace) ASSERT_TRUE(e.ratio.has_value());
  EXPECT_LT(*trace[24].ratio, 1e-3 * *trace[0].ratio);
  double tail = 0.0;
  for (std::size_t k = 12; k <= 25; ++k) tail = std::max(tail, *trace[k - 1].ratio);
  EXPECT_LT(tail, *trace[0].ratio);

  for (const std::size_t k : {5u, 20u}) {
    const auto lk = oracle::iterate_op(op.lambda(), op.phi().poly(), gen::poly_of(f), k);
    auto dm = lk;
    for (int i = 0; i < 4; ++i) dm = oracle::derivative(dm);
    const double direct = std::abs(oracle::evaluate(dm, 1.0)) / std::abs(lk[0]);
    EXPECT_NEAR(*trace[k - 1].ratio, direct, 1e-9 * direct) << "k=" << k;
  }
}

TEST(Dynamics, SuggestedDerivativeOrderDrivesDecay) {
  const EigenOp op(0.5, PhiSpec({1, 1}));
  const auto f = TruncatedSeries::exp_jet(1.0, 12);
  const std::size_t m = eigenop::suggest_derivative_order(op, f);
  EXPECT_GE(m, 1u);
  const auto trace = eigenop::super2_ratio_trace(op, f, 1.0, m, 25);
  EXPECT_LT(*trace.back().ratio, *trace.front().ratio);
}

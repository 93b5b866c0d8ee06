#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eigenop/classify.hpp"
#include "eigenop/errors.hpp"
#include "generators.hpp"

using eigenop::Builtin;
using eigenop::Classification;
using eigenop::cplx;
using eigenop::PhiSpec;

namespace {

struct Expect {
  bool hc, sc, hc_inf, sc_inf;
};

void expect_verdicts(const Classification& c, Expect e) {
  EXPECT_EQ(c.hc.yes, e.hc);
  EXPECT_EQ(c.sc.yes, e.sc);
  EXPECT_EQ(c.hc_inf.yes, e.hc_inf);
  EXPECT_EQ(c.sc_inf.yes, e.sc_inf);
}

void expect_chain(const Classification& c) {
  if (c.hc_inf.yes) EXPECT_TRUE(c.hc.yes);
  if (c.sc_inf.yes) EXPECT_TRUE(c.sc.yes);
  if (c.hc.yes) EXPECT_TRUE(c.sc.yes);
  if (c.hc_inf.yes) EXPECT_TRUE(c.sc_inf.yes);
}

}  // namespace

TEST(Classify, GridExamples) {
  {
    const auto c = eigenop::classify(2.0, PhiSpec({0, 1}, 1.0));
    expect_verdicts(c, {true, true, false, false});
    EXPECT_EQ(c.hc_inf.citation, "Th. modulomayoruno");
    EXPECT_EQ(c.sc_inf.citation, "Th. general");
  }
  {
    const auto c = eigenop::classify(0.5, PhiSpec({0, 1}));
    expect_verdicts(c, {false, true, false, true});
    EXPECT_EQ(c.sc.citation, "Th. super1");
    EXPECT_EQ(c.sc_inf.citation, "Th. modulomenor1");
  }
  {
    const auto c = eigenop::classify(0.5, PhiSpec({1, 1}));
    EXPECT_FALSE(c.sc.yes);
    EXPECT_EQ(c.sc.citation, "Th. super2");
  }
  {
    const auto c = eigenop::classify(cplx{0, 1}, PhiSpec({0, 1}));
    EXPECT_TRUE(c.hc_inf.yes);
    EXPECT_EQ(c.hc_inf.citation, "Th. modulo1");
    EXPECT_NE(c.hc_inf.note.find("root of unity of order 4"), std::string::npos);
  }
  {
    const auto c = eigenop::classify(3.0, PhiSpec({1}, 0.0, Builtin::cos));
    EXPECT_TRUE(c.hc_inf.yes);
    EXPECT_TRUE(c.sc_inf.yes);
    EXPECT_EQ(c.hc_inf.citation, "Prop. infinitosceros");
  }
  {
    const auto c = eigenop::classify(2.0, PhiSpec({1}, 1.0));
    EXPECT_FALSE(c.sc.yes);
    EXPECT_EQ(c.sc.citation, "[bernalbonillacalderon]");
  }
  {
    const auto c = eigenop::classify(1.0, PhiSpec({0, 1}));
    expect_verdicts(c, {true, true, true, true});
    EXPECT_EQ(c.hc.citation, "Godefroy-Shapiro");
    EXPECT_EQ(c.hc_inf.citation, "Menet-Petersson-Shkarin");
  }
  {
    const auto c = eigenop::classify(1.0, PhiSpec({2}));
    EXPECT_FALSE(c.hc.yes);
  }
}

TEST(Classify, RemainingTableCells) {
  // |lambda| = 1, infinitely many zeros
  const auto unit_inf = eigenop::classify(std::polar(1.0, 1.0), PhiSpec({1}, 0.0, Builtin::cosh));
  expect_verdicts(unit_inf, {true, true, true, true});
  EXPECT_EQ(unit_inf.hc.citation, "Th. extended");
  EXPECT_EQ(unit_inf.hc_inf.citation, "Prop. infinitosceros");
  // |lambda| = 1, zero-free, lambda != 1
  expect_verdicts(eigenop::classify(cplx{0, 1}, PhiSpec({3}, 2.0)), {false, false, false, false});
  // |lambda| < 1, infinitely many zeros, phi(0) != 0 vs phi(0) = 0
  const auto small_inf = eigenop::classify(0.5, PhiSpec({1}, 0.0, Builtin::sin_over_z));
  expect_verdicts(small_inf, {false, false, false, false});
  EXPECT_EQ(small_inf.sc.citation, "Th. super2");
  const auto small_inf0 = eigenop::classify(0.5, PhiSpec({0, 1}, 0.0, Builtin::cos));
  expect_verdicts(small_inf0, {false, true, false, true});
  EXPECT_EQ(small_inf0.hc.citation, "Th. extended");
  // |lambda| < 1, zero-free
  const auto small_free = eigenop::classify(0.25, PhiSpec({1}, 1.0));
  expect_verdicts(small_free, {false, false, false, false});
  EXPECT_EQ(small_free.sc.citation, "[bernalbonillacalderon]");
  // |lambda| > 1, finite zeros with phi(0) != 0
  expect_verdicts(eigenop::classify(cplx{1.5, 1.5}, PhiSpec({1, 1})), {true, true, false, false});
  // lambda = 1 with an exponential factor is not scalar
  expect_verdicts(eigenop::classify(1.0, PhiSpec({2}, 1.0)), {true, true, true, true});
}

TEST(Classify, NearUnitModulusUsesTolerance) {
  const auto inside = eigenop::classify(std::polar(1.0 - 1e-13, 0.3), PhiSpec({1, 1}));
  EXPECT_EQ(inside.hc_inf.citation, "Th. modulo1");
  EXPECT_EQ(eigenop::classify(1.0 - 1e-13, PhiSpec({1, 1})).hc_inf.citation, "Menet-Petersson-Shkarin");
  const auto below = eigenop::classify(cplx{0, 1.0 - 1e-9}, PhiSpec({1, 1}));
  EXPECT_FALSE(below.hc.yes);
  EXPECT_NE(below.hc.note.find("|lambda| = 0.999999999"), std::string::npos);
}

TEST(Classify, RejectsZeroLambda) {
  EXPECT_THROW(eigenop::classify(0.0, PhiSpec({1})), eigenop::Error);
}

TEST(Classify, RootOfUnityOrder) {
  EXPECT_EQ(eigenop::root_of_unity_order(cplx{0, 1}), 4u);
  EXPECT_EQ(eigenop::root_of_unity_order(-1.0), 2u);
  EXPECT_EQ(eigenop::root_of_unity_order(std::polar(1.0, 2 * std::numbers::pi / 7)), 7u);
  EXPECT_EQ(eigenop::root_of_unity_order(std::polar(1.0, 1.0)), 0u);
}

TEST(ClassifyProperty, ContainmentChainOnRandomGrid) {
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = gen::case_rng("chain", i);
    const std::size_t region = rng.uniform_index(0, 2);
    const double r = region == 0 ? rng.uniform(0.1, 0.9) : region == 1 ? 1.0 : rng.uniform(1.1, 3.0);
    const cplx lambda = std::polar(r, rng.uniform(0, 2 * std::numbers::pi));
    auto P = gen::poly(rng, rng.uniform_index(0, 3));
    if (rng.uniform_index(0, 1) && P.size() > 1) P[0] = 0.0;
    const PhiSpec phi(P, rng.uniform_index(0, 1) ? rng.in_disk(1.0) : cplx{},
                      static_cast<Builtin>(rng.uniform_index(0, 3)));
    expect_chain(eigenop::classify(lambda, phi));
  }
}

TEST(ClassifyProperty, SupercyclicNotHypercyclicExactlyInsideDiskWithZeroAtOrigin) {
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = gen::case_rng("main2", i);
    const cplx lambda = rng.in_annulus(0.05, 3.0);
    auto P = gen::poly(rng, rng.uniform_index(0, 3));
    if (rng.uniform_index(0, 1) && P.size() > 1) P[0] = 0.0;
    const PhiSpec phi(P, rng.uniform_index(0, 1) ? rng.in_disk(1.0) : cplx{},
                      static_cast<Builtin>(rng.uniform_index(0, 3)));
    const auto c = eigenop::classify(lambda, phi);
    const bool inside_with_zero = std::abs(lambda) < 1.0 && eigenop::zero_meta(phi).order_at_origin >= 1;
    EXPECT_EQ(c.sc.yes && !c.hc.yes, inside_with_zero) << "case " << i;
    EXPECT_EQ(c.sc_inf.yes && !c.hc_inf.yes, inside_with_zero) << "case " << i;
  }
}

TEST(ClassifyProperty, InvariantUnderSymbolScaling) {
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = gen::case_rng("scaling", i);
    const cplx lambda = rng.uniform_index(0, 4) == 0 ? std::polar(1.0, rng.uniform(0, 6)) : rng.in_annulus(0.2, 3.0);
    auto P = gen::poly(rng, rng.uniform_index(0, 3));
    const PhiSpec phi(P, rng.in_disk(1.0), static_cast<Builtin>(rng.uniform_index(0, 3)));
    const cplx c = rng.in_annulus(0.1, 10.0);
    const auto a = eigenop::classify(lambda, phi);
    const auto b = eigenop::classify(lambda, phi.scaled(c));
    EXPECT_EQ(a.hc.yes, b.hc.yes);
    EXPECT_EQ(a.sc.yes, b.sc.yes);
    EXPECT_EQ(a.hc_inf.yes, b.hc_inf.yes);
    EXPECT_EQ(a.sc_inf.yes, b.sc_inf.yes);
  }
}

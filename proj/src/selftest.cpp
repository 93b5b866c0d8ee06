#include "eigenop/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "eigenop/classify.hpp"
#include "eigenop/dynamics.hpp"
#include "eigenop/operators.hpp"
#include "eigenop/rng.hpp"
#include "eigenop/symbols.hpp"
#include "eigenop/verify.hpp"

namespace eigenop {

namespace {

double relative_gap(const TruncatedSeries& a, const TruncatedSeries& b) {
  const double scale = std::max({rho(a, 1.0), rho(b, 1.0), 1e-300});
  return rho(a - b, 1.0) / scale;
}

double relative_gap(const ExtendedPoly& a, const ExtendedPoly& b) {
  long double diff = 0.0L;
  long double norm_a = 0.0L;
  long double norm_b = 0.0L;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const auto x = i < a.size() ? a[i] : std::complex<long double>{};
    const auto y = i < b.size() ? b[i] : std::complex<long double>{};
    diff += std::abs(x - y);
    norm_a += std::abs(x);
    norm_b += std::abs(y);
  }
  const long double scale = std::max(norm_a, norm_b);
  return scale == 0.0L ? 0.0 : static_cast<double>(diff / scale);
}

std::vector<cplx> random_poly(Rng& rng, std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = rng.in_disk(1.0);
  if (std::abs(c.back()) < 0.1) c.back() = 0.5;
  return c;
}

EigenOp random_op(Rng& rng, double r_lo, double r_hi) {
  const cplx lambda = rng.in_annulus(r_lo, r_hi);
  const std::size_t degree = rng.uniform_index(1, 4);
  return EigenOp(lambda, PhiSpec(random_poly(rng, degree)));
}

TruncatedSeries random_series(Rng& rng, std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = rng.in_disk(1.0);
  return TruncatedSeries(std::move(c));
}

class Suite {
 public:
  // Passes when value <= limit.
  void at_most(const std::string& name, double value, double limit) {
    add(name, value <= limit, value, limit);
  }

  void flag(const std::string& name, bool ok) { add(name, ok, ok ? 1.0 : 0.0, 1.0); }

  Json result(std::uint64_t seed) const {
    return {{"seed", seed}, {"passed", all_}, {"checks", checks_}};
  }

 private:
  void add(const std::string& name, bool ok, double value, double limit) {
    all_ = all_ && ok;
    checks_.push_back({{"name", name}, {"passed", ok}, {"value", value}, {"limit", limit}});
  }

  Json checks_ = Json::array();
  bool all_ = true;
};

template <class F>
void guarded(Suite& suite, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    suite.flag(name + " (" + std::string(to_string(e.code())) + ": " + e.what() + ")", false);
  }
}

}  // namespace

Json selftest(std::uint64_t seed, const Budget& budget) {
  const Rng root(seed);
  Suite suite;

  guarded(suite, "series.translate_roundtrip", [&] {
    Rng rng = root.split("series.translate");
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      std::vector<cplx> c(33);
      double scale = 1.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) scale /= static_cast<double>(k);
        c[k] = scale * rng.in_disk(1.0);
      }
      const TruncatedSeries f(std::move(c));
      const cplx alpha = rng.in_disk(2.0);
      worst = std::max(worst, relative_gap(translate(translate(f, alpha), -alpha), f));
    }
    suite.at_most("series.translate_roundtrip", worst, 1e-10);
  });

  guarded(suite, "series.volterra_right_inverse", [&] {
    Rng rng = root.split("series.volterra");
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto f = random_series(rng, rng.uniform_index(0, 30));
      worst = std::max(worst, relative_gap(differentiate(integrate(f)), f));
    }
    suite.at_most("series.volterra_right_inverse", worst, 1e-15);
  });

  guarded(suite, "symbols.leibniz_vs_product", [&] {
    Rng rng = root.split("symbols.leibniz");
    double worst = 0.0;
    for (int s = 0; s < 8; ++s) {
      const EigenOp op = random_op(rng, 0.4, 2.5);
      for (std::size_t k = 1; k <= 4; ++k) {
        const auto direct = iterated_symbol(op.phi(), op.lambda(), k, 12, budget);
        const auto sum = leibniz_coefficients(op.phi(), op.lambda(), k, 12, budget);
        double fact = 1.0;
        double num = 0.0;
        double den = 0.0;
        for (std::size_t m = 0; m <= 12; ++m) {
          if (m > 0) fact *= static_cast<double>(m);
          num += std::abs(sum[m] - fact * direct[m]);
          den += std::abs(fact * direct[m]);
        }
        worst = std::max(worst, num / std::max(den, 1e-300));
      }
    }
    suite.at_most("symbols.leibniz_vs_product", worst, 1e-9);
  });

  guarded(suite, "operators.commutation", [&] {
    Rng rng = root.split("operators.commutation");
    double worst = 0.0;
    for (int s = 0; s < 12; ++s) worst = std::max(worst, commutation_residual(random_op(rng, 0.4, 2.5), 64));
    worst = std::max(worst, commutation_residual(EigenOp({0.0, 1.0}, PhiSpec({1.0, 2.0, 1.0})), 64));
    worst = std::max(worst, commutation_residual(EigenOp(-1.0, PhiSpec({0.0, 1.0, 0.5})), 64));
    suite.at_most("operators.commutation", worst, 1e-12);
  });

  guarded(suite, "operators.route_agreement", [&] {
    Rng rng = root.split("operators.routes");
    double worst = 0.0;
    for (int s = 0; s < 12; ++s) {
      const EigenOp op = random_op(rng, 0.4, 2.5);
      const auto f = random_series(rng, rng.uniform_index(0, 32));
      for (std::size_t n = 1; n <= 8; ++n) {
        worst = std::max(worst, relative_gap(iterate(op, f, n, IterateRoute::repeated, budget),
                                             iterate(op, f, n, IterateRoute::closed_form, budget)));
      }
    }
    suite.at_most("operators.route_agreement", worst, 1e-9);
  });

  guarded(suite, "operators.similarity", [&] {
    Rng rng = root.split("operators.similarity");
    double worst = 0.0;
    for (int s = 0; s < 6; ++s) {
      const cplx lambda = rng.in_annulus(0.4, 0.9);
      const auto poly = random_poly(rng, 2);
      worst = std::max(worst, similarity_check(lambda, poly, rng.in_disk(0.5), 12));
    }
    suite.at_most("operators.similarity", worst, 1e-9);
  });

  guarded(suite, "operators.eigen_machinery", [&] {
    const std::vector<EigenOp> ops = {EigenOp(0.5, PhiSpec({0.0, 1.0})), EigenOp(1.0 / 3.0, PhiSpec({0.0, 0.0, 1.0})),
                                      EigenOp(0.7, PhiSpec({0.0, 1.0, 1.0}))};
    double eigen = 0.0;
    double inverse = 0.0;
    for (const auto& op : ops) {
      const auto basis = eigen_basis(op, 20);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const cplx value = basis.psi0 * std::pow(op.lambda(), static_cast<double>(k));
        eigen = std::max(eigen, relative_gap(apply_reduced(op, basis.polys[k]), value * basis.polys[k]));
      }
      for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t n = 0; n <= 10; ++n) {
          const auto back = normalized_iterate_extended(op, right_inverse_extended(op, basis, k, n, budget), k);
          inverse = std::max(inverse, relative_gap(back, basis.extended[n]));
        }
      }
    }
    suite.at_most("operators.eigen_residual", eigen, 1e-10);
    suite.at_most("operators.right_inverse_identity", inverse, 1e-9);
  });

  guarded(suite, "classify.containment", [&] {
    Rng rng = root.split("classify.grid");
    const Builtin builtins[] = {Builtin::none, Builtin::cos, Builtin::sin_over_z, Builtin::cosh};
    bool ok = true;
    for (int s = 0; s < 200; ++s) {
      const double radius = std::array{0.5, 1.0, 2.0}[rng.uniform_index(0, 2)];
      const cplx lambda = std::polar(radius, rng.uniform(0.0, 2.0 * std::numbers::pi));
      auto poly = random_poly(rng, rng.uniform_index(0, 3));
      if (rng.uniform_index(0, 1) == 1 && poly.size() > 1) poly.front() = 0.0;
      const cplx b = rng.uniform_index(0, 1) ? rng.in_disk(1.0) : cplx{};
      const Builtin builtin = builtins[rng.uniform_index(0, 3)];
      const PhiSpec phi(poly, b, builtin);
      const auto c = classify(lambda, phi);
      ok = ok && (!c.hc.yes || c.sc.yes) && (!c.hc_inf.yes || c.hc.yes) && (!c.sc_inf.yes || c.sc.yes) &&
           (!c.hc_inf.yes || c.sc_inf.yes);
    }
    suite.flag("classify.containment", ok);
    suite.flag("classify.super1_cell", classify(0.5, PhiSpec({0.0, 1.0})).sc.citation == "Th. super1");
  });

  guarded(suite, "dynamics.construction", [&] {
    const EigenOp op(0.5, PhiSpec({0.0, 1.0}));
    const std::vector<NamedSeries> targets = {{"exp", TruncatedSeries::exp_jet(1.0, 8)},
                                              {"one_plus_3z2", TruncatedSeries({1.0, 0.0, 3.0})}};
    const auto report = construct_supercyclic(op, targets, 1e-3, Seminorm::rho(1.0), budget);
    double worst = 0.0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const auto image = normalizer(op, report.schedule[j].k) * iterate(op, report.vector, report.schedule[j].k);
      worst = std::max(worst, rho(image - targets[j].series, 1.0));
    }
    suite.at_most("dynamics.construction_distance", worst, 1e-3);
  });

  guarded(suite, "dynamics.ratio_trace", [&] {
    const EigenOp op(0.5, PhiSpec({1.0, 1.0}));
    const auto trace = super2_ratio_trace(op, TruncatedSeries::exp_jet(1.0, 12), 1.0, 4, 25, budget);
    const bool defined = std::all_of(trace.begin(), trace.end(), [](const RatioEntry& e) { return e.ratio.has_value(); });
    suite.flag("dynamics.ratio_defined", defined);
    if (defined) suite.at_most("dynamics.ratio_decay", *trace.back().ratio / *trace.front().ratio, 1e-3);
  });

  guarded(suite, "verify.lemmas", [&] {
    Rng rng = root.split("verify");
    const auto a = verify_iteracionpolinomio(EigenOp(2.0, PhiSpec({1.0, 1.0})), 1.0, 3, 20, rng, budget);
    suite.at_most("verify.iteracionpolinomio", static_cast<double>(a.violations), 0.0);
    const auto b = verify_infinf(2, 1, {1.5, 0.0}, 40, 4, rng);
    suite.at_most("verify.infinf", static_cast<double>(b.violations), 0.0);
    const auto c = verify_supsup(EigenOp(2.0, PhiSpec({1.0, 1.0})), 4, 20, rng);
    suite.at_most("verify.supsup", static_cast<double>(c.violations), 0.0);
    const auto d = verify_modulo1_estimate(EigenOp({0.0, 1.0}, PhiSpec({0.0, 1.0})), 1.0, 2, 32, budget);
    suite.at_most("verify.modulo1_estimate", static_cast<double>(d.violations), 0.0);
  });

  guarded(suite, "json.roundtrip", [&] {
    Rng rng = root.split("json");
    bool ok = true;
    for (int s = 0; s < 10; ++s) {
      const EigenOp op = random_op(rng, 0.4, 2.5);
      ok = ok && op_from_json(Json::parse(to_json(op).dump())) == op;
      const auto f = random_series(rng, 10);
      ok = ok && series_from_json(Json::parse(to_json(f).dump())) == f;
    }
    suite.flag("json.roundtrip", ok);
  });

  return suite.result(seed);
}

}  // namespace eigenop

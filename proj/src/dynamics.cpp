#include "eigenop/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigenop/classify.hpp"
#include "eigenop/errors.hpp"

namespace eigenop {

namespace {

// Seminorm of the coefficients above degree K; rho_r stands in for sup_disk(r)
// so the tail estimate is an upper bound either way.
double tail_seminorm(const TruncatedSeries& g, std::size_t k, const Seminorm& s) {
  std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
  for (std::size_t i = 0; i <= std::min(k, g.truncation()); ++i) c[i] = 0.0;
  return rho(TruncatedSeries(std::move(c)), s.parameter);
}

struct Plan {
  std::vector<std::size_t> indices;
  std::vector<TruncatedSeries> blocks;
};

}  // namespace

cplx projective_scalar(const TruncatedSeries& v, const TruncatedSeries& g) {
  cplx inner = 0.0;
  double norm2 = 0.0;
  for (std::size_t k = 0; k <= v.truncation(); ++k) {
    inner += std::conj(v[k]) * g[k];
    norm2 += std::norm(v[k]);
  }
  if (norm2 == 0.0) return 1.0;
  const cplx mu = inner / norm2;
  return mu == cplx{} ? cplx{1.0} : mu;
}

OrbitRecord orbit(const EigenOp& op, const TruncatedSeries& f, std::size_t n_max,
                  const std::vector<Seminorm>& seminorms, const std::vector<NamedSeries>& targets,
                  bool projective, const Budget& budget) {
  if (n_max > budget.max_iterations) {
    throw Error(ErrorCode::budget, "orbit length " + std::to_string(n_max) + " exceeds max_iterations");
  }
  OrbitRecord record{op, f, projective, seminorms, {}, {}};
  for (const auto& t : targets) record.target_ids.push_back(t.id);
  record.entries.reserve(n_max + 1);

  TruncatedSeries iterate_n = f;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) iterate_n = apply(op, iterate_n);
    const cplx scalar =
        projective && !targets.empty() ? projective_scalar(iterate_n, targets.front().series) : cplx{1.0};
    const TruncatedSeries point = scalar * iterate_n;

    OrbitEntry entry{n, scalar, {}, {}, {}};
    for (const auto& s : seminorms) {
      if (s.kind == Seminorm::Kind::sup_disk) {
        const auto bracket = sup_disk_bracket(point, s.parameter);
        entry.seminorm_values.push_back(bracket.lower);
        entry.seminorm_upper.push_back(bracket.upper);
      } else {
        const double v = seminorm_value(point, s);
        entry.seminorm_values.push_back(v);
        entry.seminorm_upper.push_back(v);
      }
    }
    for (const auto& t : targets) entry.target_distances.push_back(rho(point - t.series, 1.0));
    record.entries.push_back(std::move(entry));
  }
  return record;
}

ConstructionReport construct_supercyclic(const EigenOp& op, const std::vector<NamedSeries>& targets, double tol,
                                         const Seminorm& seminorm, const Budget& budget) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "construction tolerance must be > 0");
  if (!(std::abs(op.lambda()) < 1.0 - kUnitModulusTolerance) || op.m() == 0) {
    throw Error(ErrorCode::precondition,
                "supercyclic construction needs |lambda| < 1 and phi(0) = 0 (the super1 regime)");
  }
  ConstructionReport report{TruncatedSeries::zero(0), {}, tol, seminorm};
  if (targets.empty()) return report;

  const std::size_t count = targets.size();
  const std::size_t m = op.m();

  std::vector<std::size_t> basis_degree(count);
  for (std::size_t j = 0; j < count; ++j) {
    const auto& g = targets[j].series;
    std::size_t k = 0;
    while (k < g.truncation() && tail_seminorm(g, k, seminorm) >= tol / 3.0) ++k;
    basis_degree[j] = k;
  }
  const EigenBasis basis = eigen_basis(op, *std::max_element(basis_degree.begin(), basis_degree.end()));

  std::vector<std::vector<cplx>> expansions(count);
  for (std::size_t j = 0; j < count; ++j) {
    expansions[j] = expand_in_basis(basis, targets[j].series.with_truncation(basis_degree[j]));
  }

  const double cross_limit = tol / (3.0 * static_cast<double>(count));
  auto cross_small = [&](const TruncatedSeries& block, const std::vector<std::size_t>& earlier) {
    for (std::size_t k : earlier) {
      if (seminorm_value(normalized_iterate(op, block, k), seminorm) >= cross_limit) return false;
    }
    return true;
  };

  auto try_plan = [&](std::size_t first_index) -> std::optional<Plan> {
    Plan plan;
    plan.indices.push_back(first_index);
    plan.blocks.push_back(right_inverse(op, basis, expansions[0], first_index, budget));
    for (std::size_t j = 1; j < count; ++j) {
      std::size_t max_deg = 0;
      for (const auto& b : plan.blocks) max_deg = std::max(max_deg, b.degree().value_or(0));
      const std::size_t lower = std::max(plan.indices.back() + 1, max_deg / m + 1);
      bool placed = false;
      for (std::size_t k = lower; k < lower + budget.schedule_window && !placed; ++k) {
        try {
          auto block = right_inverse(op, basis, expansions[j], k, budget);
          if (cross_small(block, plan.indices)) {
            plan.indices.push_back(k);
            plan.blocks.push_back(std::move(block));
            placed = true;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::numeric && e.code() != ErrorCode::truncation) throw;
          break;  // larger k only grows the coefficients further
        }
      }
      if (!placed) return std::nullopt;
    }
    return plan;
  };

  for (std::size_t first = 1; first <= budget.schedule_window; ++first) {
    try {
      auto plan = try_plan(first);
      if (!plan) continue;

      TruncatedSeries f;
      for (const auto& b : plan->blocks) f += b;

      std::vector<ScheduleEntry> schedule;
      bool within = true;
      for (std::size_t j = 0; j < count && within; ++j) {
        const std::size_t k = plan->indices[j];
        const auto image = normalized_iterate(op, f, k);
        const double distance = seminorm_value(image - targets[j].series, seminorm);
        within = distance < tol;
        schedule.push_back({targets[j].id, k, normalizer(op, k), distance, basis_degree[j]});
      }
      if (!within) continue;
      report.vector = std::move(f);
      report.schedule = std::move(schedule);
      return report;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::numeric && e.code() != ErrorCode::truncation) throw;
    }
  }
  throw Error(ErrorCode::budget, "no supercyclic schedule found with first index <= " +
                                     std::to_string(budget.schedule_window) + " for tolerance " +
                                     std::to_string(tol));
}

std::vector<RatioEntry> super2_ratio_trace(const EigenOp& op, const TruncatedSeries& f, cplx z0,
                                           std::size_t m, std::size_t k_max, const Budget& budget) {
  if (!(std::abs(op.lambda()) < 1.0) || op.m() != 0) {
    throw Error(ErrorCode::precondition, "ratio trace needs |lambda| < 1 and phi(0) != 0 (the super2 regime)");
  }
  if (k_max > budget.max_iterations) {
    throw Error(ErrorCode::budget, "ratio trace length exceeds max_iterations");
  }
  TruncatedSeries derived = f;
  for (std::size_t i = 0; i < m; ++i) derived = differentiate(derived);

  const double lambda_m = std::pow(std::abs(op.lambda()), static_cast<double>(m));
  double damping = 1.0;
  TruncatedSeries lk_f = f;
  TruncatedSeries lk_dm_f = derived;

  std::vector<RatioEntry> trace;
  trace.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    lk_f = apply(op, lk_f);
    lk_dm_f = apply(op, lk_dm_f);
    damping *= lambda_m;
    const double denominator = std::abs(lk_f[0]);
    if (denominator < 1e-300) {
      trace.push_back({k, std::nullopt});
      continue;
    }
    trace.push_back({k, damping * std::abs(lk_dm_f.evaluate(z0)) / denominator});
  }
  return trace;
}

std::size_t suggest_derivative_order(const EigenOp& op, const TruncatedSeries& f, std::size_t k_probe) {
  const double modulus = std::abs(op.lambda());
  if (!(modulus < 1.0)) throw Error(ErrorCode::precondition, "derivative order suggestion needs |lambda| < 1");
  const double base = rho(f, 1.0);
  double growth = 1.0;
  if (base > 0.0) {
    TruncatedSeries g = f;
    for (std::size_t k = 1; k <= k_probe; ++k) {
      g = apply(op, g);
      const double r = rho(g, 1.0) / base;
      if (r > 0.0) growth = std::max(growth, std::pow(r, 1.0 / static_cast<double>(k)));
    }
  }
  std::size_t m = 1;
  double power = modulus;
  while (power * growth > 0.5 && m < 4096) {
    power *= modulus;
    ++m;
  }
  return m;
}

}  // namespace eigenop

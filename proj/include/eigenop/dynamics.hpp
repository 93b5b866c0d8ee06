#pragma once

// Orbit experiments for L = R_lambda phi(D): (projective) orbit traces, the
// finite supercyclic-vector builder for |lambda| < 1, phi(0) = 0, and the
// ratio trace that witnesses non-supercyclicity when phi(0) != 0.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eigenop/budget.hpp"
#include "eigenop/operators.hpp"
#include "eigenop/series.hpp"

namespace eigenop {

struct NamedSeries {
  std::string id;
  TruncatedSeries series;
};

struct OrbitEntry {
  std::size_t n;
  cplx scalar;
  std::vector<double> seminorm_values;  // aligned with OrbitRecord::seminorms
  std::vector<double> seminorm_upper;   // rho_r envelope for sup_disk entries, else == value
  std::vector<double> target_distances;  // aligned with OrbitRecord::targets, rho_1 distance
};

struct OrbitRecord {
  EigenOp op;
  TruncatedSeries start;
  bool projective;
  std::vector<Seminorm> seminorms;
  std::vector<std::string> target_ids;
  std::vector<OrbitEntry> entries;  // sorted by n
};

/// Least-squares scalar mu minimizing ||mu v - g|| over the coefficient inner
/// product. Falls back to 1 when v is zero or orthogonal to g, so the scalar
/// stays nonzero.
cplx projective_scalar(const TruncatedSeries& v, const TruncatedSeries& g);

/// L^n f for n = 0..n_max. In projective mode each iterate is scaled toward
/// the first target; otherwise the scalar is 1.
OrbitRecord orbit(const EigenOp& op, const TruncatedSeries& f, std::size_t n_max,
                  const std::vector<Seminorm>& seminorms, const std::vector<NamedSeries>& targets,
                  bool projective, const Budget& budget = {});

struct ScheduleEntry {
  std::string target_id;
  std::size_t k;             // iterate index
  cplx mu;                   // lambda_k
  double achieved_distance;  // seminorm(mu L^k f - g)
  std::size_t basis_degree;  // K: target expanded on p_0..p_K
};

struct ConstructionReport {
  TruncatedSeries vector;
  std::vector<ScheduleEntry> schedule;
  double tolerance;
  Seminorm seminorm;
};

/// Builds f = sum_j S_{k_j} g_j so that lambda_{k_j} L^{k_j} f is within `tol`
/// of each target. Targets are placed in order; each block's index makes
/// k_j m exceed the degree of every earlier block (exact annihilation) and is
/// raised until its contribution to every earlier target is below
/// tol / (3 * #targets). Each target is expanded on p_0..p_K with the smallest
/// K whose dropped tail is below tol / 3.
///
/// Throws Error(precondition) unless |lambda| < 1 and phi(0) = 0, and
/// Error(budget) if no schedule is found within the budget.
ConstructionReport construct_supercyclic(const EigenOp& op, const std::vector<NamedSeries>& targets, double tol,
                                         const Seminorm& seminorm, const Budget& budget = {});

struct RatioEntry {
  std::size_t k;
  std::optional<double> ratio;  // nullopt when |(L^k f)(0)| < 1e-300
};

/// |(D^m L^k f)(z0)| / |(L^k f)(0)| for k = 1..k_max, with the numerator
/// evaluated as |lambda|^{mk} |(L^k D^m f)(z0)| using D L = lambda L D.
std::vector<RatioEntry> super2_ratio_trace(const EigenOp& op, const TruncatedSeries& f, cplx z0,
                                           std::size_t m, std::size_t k_max, const Budget& budget = {});

/// Suggests a derivative order for super2_ratio_trace: the smallest m >= 1
/// with |lambda|^m * G <= 1/2, where G >= 1 is the largest observed geometric
/// growth rate of rho_1(L^k f) for k <= k_probe.
std::size_t suggest_derivative_order(const EigenOp& op, const TruncatedSeries& f, std::size_t k_probe = 16);

}  // namespace eigenop

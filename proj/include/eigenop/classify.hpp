#pragma once

// Decision procedure placing L = R_lambda phi(D) in the HC / SC / HC_inf /
// SC_inf taxonomy, each verdict tagged with the result that decides it.

#include <string>

#include "eigenop/operators.hpp"
#include "eigenop/symbols.hpp"

namespace eigenop {

struct Verdict {
  bool yes;
  std::string citation;
  std::string note;

  bool operator==(const Verdict&) const = default;
};

struct Classification {
  Verdict hc;      // hypercyclic
  Verdict sc;      // supercyclic
  Verdict hc_inf;  // has a hypercyclic subspace
  Verdict sc_inf;  // has a supercyclic subspace

  bool operator==(const Classification&) const = default;
};

/// ||lambda| - 1| <= this counts as the unit circle.
inline constexpr double kUnitModulusTolerance = 1e-12;

/// Throws Error(invalid_argument) for lambda = 0. phi is nonzero by construction.
Classification classify(cplx lambda, const PhiSpec& phi);
inline Classification classify(const EigenOp& op) { return classify(op.lambda(), op.phi()); }

/// Smallest j <= max_order with |lambda^j - 1| <= 1e-10, or 0 if none.
std::size_t root_of_unity_order(cplx lambda, std::size_t max_order = 64);

}  // namespace eigenop

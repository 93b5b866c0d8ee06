#include "eigenop/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "eigenop/errors.hpp"

namespace eigenop {

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::invalid_argument, "series needs at least one coefficient");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k].real()) || !std::isfinite(coeffs_[k].imag())) {
      throw Error(ErrorCode::numeric, "non-finite coefficient at z^" + std::to_string(k));
    }
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t truncation) {
  return TruncatedSeries(std::vector<cplx>(truncation + 1));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, std::size_t truncation, cplx coeff) {
  std::vector<cplx> c(std::max(power, truncation) + 1);
  c[power] = coeff;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exp_jet(cplx a, std::size_t truncation) {
  std::vector<cplx> c(truncation + 1);
  cplx term = 1.0;
  for (std::size_t k = 0; k <= truncation; ++k) {
    c[k] = term;
    term *= a / static_cast<double>(k + 1);
  }
  return TruncatedSeries(std::move(c));
}

std::optional<std::size_t> TruncatedSeries::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != cplx{}) return k;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::with_truncation(std::size_t truncation) const {
  auto c = coeffs_;
  c.resize(truncation + 1);
  return TruncatedSeries(std::move(c));
}

cplx TruncatedSeries::evaluate(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(cplx scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t truncation) {
  std::vector<cplx> c(truncation + 1);
  const auto da = a.degree();
  const auto db = b.degree();
  if (!da || !db) return TruncatedSeries(std::move(c));
  for (std::size_t i = 0; i <= std::min(*da, truncation); ++i) {
    const cplx ai = a[i];
    if (ai == cplx{}) continue;
    const std::size_t jmax = std::min(*db, truncation - i);
    for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += ai * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  const std::size_t n = f.truncation();
  if (n == 0) return TruncatedSeries::zero(0);
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<double>(k + 1) * f[k + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries dilate(const TruncatedSeries& f, cplx lambda) {
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  cplx power = 1.0;
  for (auto& ck : c) {
    ck *= power;
    power *= lambda;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries translate(const TruncatedSeries& f, cplx alpha) {
  // Repeated synthetic division by (z - alpha) leaves the Taylor
  // coefficients of f about -alpha, i.e. the coefficients of f(z + alpha).
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  if (alpha == cplx{}) return TruncatedSeries(std::move(c));
  const auto n = static_cast<std::ptrdiff_t>(c.size()) - 1;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = n - 1; j >= i; --j) c[j] += alpha * c[j + 1];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& f) {
  const std::size_t n = f.truncation();
  std::vector<cplx> c(n + 2);
  for (std::size_t k = 1; k <= n + 1; ++k) c[k] = f[k - 1] / static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

Seminorm Seminorm::rho(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::invalid_argument, "rho seminorm needs M > 0");
  }
  return {Kind::rho, m};
}

Seminorm Seminorm::sup_disk(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, "sup_disk seminorm needs r > 0");
  }
  return {Kind::sup_disk, r};
}

std::string Seminorm::name() const {
  std::ostringstream os;
  os.precision(17);
  os << (kind == Kind::rho ? "rho(" : "sup_disk(") << parameter << ')';
  return os.str();
}

Seminorm Seminorm::parse(const std::string& text) {
  std::string kind;
  std::string value;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    kind = text.substr(0, colon);
    value = text.substr(colon + 1);
  } else if (const auto open = text.find('('); open != std::string::npos && text.back() == ')') {
    kind = text.substr(0, open);
    value = text.substr(open + 1, text.size() - open - 2);
  } else {
    throw Error(ErrorCode::invalid_argument, "cannot parse seminorm: " + text);
  }
  char* end = nullptr;
  const double p = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw Error(ErrorCode::invalid_argument, "bad seminorm parameter: " + text);
  }
  if (kind == "rho") return rho(p);
  if (kind == "sup" || kind == "sup_disk") return sup_disk(p);
  throw Error(ErrorCode::invalid_argument, "unknown seminorm kind: " + kind);
}

double rho(const TruncatedSeries& f, double m) {
  double acc = 0.0;
  double power = 1.0;
  for (const auto& c : f.coeffs()) {
    acc += std::abs(c) * power;
    power *= m;
  }
  return acc;
}

SupBracket sup_disk_bracket(const TruncatedSeries& f, double radius, std::size_t samples) {
  if (!(radius > 0.0)) throw Error(ErrorCode::invalid_argument, "sup_disk radius must be > 0");
  if (samples == 0) throw Error(ErrorCode::invalid_argument, "sup_disk needs at least one sample");
  double lower = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
    lower = std::max(lower, std::abs(f.evaluate(std::polar(radius, theta))));
  }
  return {lower, rho(f, radius)};
}

double seminorm_value(const TruncatedSeries& f, const Seminorm& s, std::size_t samples) {
  if (!(s.parameter > 0.0)) throw Error(ErrorCode::invalid_argument, "seminorm parameter must be > 0");
  switch (s.kind) {
    case Seminorm::Kind::rho: return rho(f, s.parameter);
    case Seminorm::Kind::sup_disk: return sup_disk_bracket(f, s.parameter, samples).lower;
  }
  return 0.0;
}

bool jet_vanishes(const TruncatedSeries& f, std::size_t n, double tolerance) {
  const std::size_t last = std::min(n, f.truncation());
  for (std::size_t k = 0; k <= last; ++k) {
    if (std::abs(f[k]) > tolerance) return false;
  }
  return true;
}

}  // namespace eigenop

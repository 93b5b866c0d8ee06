#pragma once

// Truncated power-series calculus on jets a_0 + a_1 z + ... + a_N z^N with
// complex double coefficients. The truncation degree N is part of the value:
// every operation states how it changes N.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eigenop {

using cplx = std::complex<double>;

class TruncatedSeries {
 public:
  /// The zero series with N = 0.
  TruncatedSeries() : coeffs_(1, cplx{0.0, 0.0}) {}

  /// Takes a_0..a_N. Throws Error(invalid_argument) on an empty list and
  /// Error(numeric) on a non-finite coefficient.
  explicit TruncatedSeries(std::vector<cplx> coeffs);

  static TruncatedSeries zero(std::size_t truncation);
  static TruncatedSeries monomial(std::size_t power, std::size_t truncation, cplx coeff = 1.0);
  /// Jet of exp(a z) through degree N.
  static TruncatedSeries exp_jet(cplx a, std::size_t truncation);

  std::size_t truncation() const { return coeffs_.size() - 1; }

  /// Index of the last exactly-nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return !degree().has_value(); }

  std::span<const cplx> coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the truncation.
  cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

  /// Copy with truncation degree N: pads with zeros or drops higher terms.
  TruncatedSeries with_truncation(std::size_t truncation) const;

  /// Horner evaluation of the stored polynomial.
  cplx evaluate(cplx z) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(cplx scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, cplx s) { return a *= s; }
  friend TruncatedSeries operator*(cplx s, TruncatedSeries a) { return a *= s; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

/// Cauchy product truncated at degree N.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t truncation);

/// f' : a_k <- (k+1) a_{k+1}; truncation N-1 (min 0).
TruncatedSeries differentiate(const TruncatedSeries& f);

/// R_lambda f(z) = f(lambda z): a_k <- lambda^k a_k.
TruncatedSeries dilate(const TruncatedSeries& f, cplx lambda);

/// f(z + alpha), by Taylor shift of the stored polynomial; truncation kept.
TruncatedSeries translate(const TruncatedSeries& f, cplx alpha);

/// Volterra antiderivative with zero constant term; truncation N+1.
TruncatedSeries integrate(const TruncatedSeries& f);

struct Seminorm {
  enum class Kind { rho, sup_disk };

  Kind kind;
  double parameter;

  /// rho_M(f) = sum |a_k| M^k.
  static Seminorm rho(double m);
  /// max over |z| <= r of |f(z)|.
  static Seminorm sup_disk(double r);

  /// "rho(2)" / "sup_disk(1.5)"; accepted back by parse().
  std::string name() const;
  /// Parses "rho:2", "rho(2)", "sup:1.5", "sup_disk(1.5)".
  static Seminorm parse(const std::string& text);

  bool operator==(const Seminorm&) const = default;
};

/// Two-sided estimate of the disk sup-norm: `lower` is the maximum over an
/// angular sample of the boundary circle, `upper` the coefficient bound rho_r.
struct SupBracket {
  double lower;
  double upper;
};

inline constexpr std::size_t kDefaultSupSamples = 256;

SupBracket sup_disk_bracket(const TruncatedSeries& f, double radius,
                            std::size_t samples = kDefaultSupSamples);

/// rho(M): exact over stored coefficients. sup_disk(r): the sampled lower
/// estimate (see sup_disk_bracket for the certified upper envelope).
double seminorm_value(const TruncatedSeries& f, const Seminorm& s,
                      std::size_t samples = kDefaultSupSamples);

/// rho_M without building a Seminorm; M > 0 is not checked.
double rho(const TruncatedSeries& f, double m);

/// True iff |a_k| <= tolerance for every k <= n (f in N_n).
bool jet_vanishes(const TruncatedSeries& f, std::size_t n, double tolerance = 0.0);

}  // namespace eigenop

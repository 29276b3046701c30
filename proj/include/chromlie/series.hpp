#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <json.hpp>

#include "chromlie/rational.hpp"
#include "chromlie/root_vector.hpp"

namespace chromlie {

/// Truncated multivariate formal power series in v_1..v_n with exact
/// rational coefficients. A term v^gamma is kept only while
/// height(gamma) <= bound; zero coefficients are never stored. Binary
/// operations truncate at the smaller of the two bounds.
class QSeries {
 public:
  using Terms = std::map<RootVector, Rational>;

  QSeries(std::size_t n, long bound);

  static QSeries zero(std::size_t n, long bound) { return QSeries(n, bound); }
  static QSeries one(std::size_t n, long bound);
  static QSeries monomial(std::size_t n, long bound, const RootVector& exp, const Rational& c);

  std::size_t dimension() const { return n_; }
  long bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const RootVector& exp) const;
  Rational constant_term() const;

  /// Adds c * v^exp; silently dropped above the bound.
  void add_term(const RootVector& exp, const Rational& c);
  QSeries truncated(long bound) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.n_ == b.n_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }
  /// Equality of coefficients only, ignoring the declared bounds.
  bool same_terms(const QSeries& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  bool all_integral() const;
  std::string to_string() const;

 private:
  std::size_t n_;
  long bound_;
  Terms terms_;
};

QSeries series_mul(const QSeries& a, const QSeries& b);
/// Throws DomainError when the constant term vanishes.
QSeries series_inverse(const QSeries& a);
/// Mercator series; requires constant term 1.
QSeries series_log(const QSeries& a);
/// Requires constant term 0.
QSeries series_exp(const QSeries& a);
/// Product of (1 - v^gamma)^m over the given factors, truncated at bound.
QSeries power_with_multiplicity(std::size_t n, const std::map<RootVector, Integer>& factors,
                                long bound);

nlohmann::json series_to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace chromlie

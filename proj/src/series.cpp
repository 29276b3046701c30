#include "chromlie/series.hpp"

#include <algorithm>

#include "chromlie/error.hpp"

namespace chromlie {

QSeries::QSeries(std::size_t n, long bound) : n_(n), bound_(bound) {
  if (bound < 0) throw DomainError("negative truncation bound");
}

QSeries QSeries::one(std::size_t n, long bound) {
  QSeries s(n, bound);
  s.add_term(RootVector(n), 1);
  return s;
}

QSeries QSeries::monomial(std::size_t n, long bound, const RootVector& exp, const Rational& c) {
  QSeries s(n, bound);
  s.add_term(exp, c);
  return s;
}

Rational QSeries::coefficient(const RootVector& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QSeries::constant_term() const { return coefficient(RootVector(n_)); }

void QSeries::add_term(const RootVector& exp, const Rational& c) {
  if (exp.size() != n_) throw DomainError("series dimension mismatch");
  if (exp.height() > bound_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QSeries QSeries::truncated(long bound) const {
  QSeries r(n_, std::min(bound, bound_));
  for (const auto& [e, c] : terms_)
    if (e.height() <= r.bound_) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.n_ != n_) throw DomainError("series dimension mismatch");
  if (o.bound_ < bound_) *this = truncated(o.bound_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.n_ != n_) throw DomainError("series dimension mismatch");
  if (o.bound_ < bound_) *this = truncated(o.bound_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.n_ != b.n_) throw DomainError("series dimension mismatch");
  QSeries r(a.n_, std::min(a.bound_, b.bound_));
  // Terms are sorted by height, so the inner loop can stop early.
  for (const auto& [ea, ca] : a.terms_) {
    const long ha = ea.height();
    if (ha > r.bound_) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (ha + eb.height() > r.bound_) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

bool QSeries::all_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integral(t.second); });
}

std::string QSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += chromlie::to_string(c);
    if (!e.is_zero()) s += "*v^" + e.to_string();
  }
  return s;
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_inverse(const QSeries& a) {
  const Rational c0 = a.constant_term();
  if (c0 == 0) throw DomainError("series_inverse: zero constant term");
  // a = c0 (1 + u)  =>  1/a = (1/c0) * sum (-u)^m
  QSeries neg_u = a * Rational(-1 / c0);
  neg_u.add_term(RootVector(a.dimension()), 1);
  QSeries result = QSeries::one(a.dimension(), a.bound());
  QSeries power = result;
  for (long m = 1; m <= a.bound(); ++m) {
    power = power * neg_u;
    if (power.is_zero()) break;
    result += power;
  }
  return result * Rational(1 / c0);
}

QSeries series_log(const QSeries& a) {
  if (a.constant_term() != 1) throw DomainError("series_log: constant term must be 1");
  QSeries u = a;
  u.add_term(RootVector(a.dimension()), -1);
  QSeries result(a.dimension(), a.bound());
  QSeries power = QSeries::one(a.dimension(), a.bound());
  for (long m = 1; m <= a.bound(); ++m) {
    power = power * u;
    if (power.is_zero()) break;
    result += power * make_rational(m % 2 == 1 ? 1 : -1, m);
  }
  return result;
}

QSeries series_exp(const QSeries& a) {
  if (a.constant_term() != 0) throw DomainError("series_exp: constant term must be 0");
  QSeries result = QSeries::one(a.dimension(), a.bound());
  QSeries power = result;
  for (long m = 1; m <= a.bound(); ++m) {
    power = power * a * make_rational(1, m);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

QSeries power_with_multiplicity(std::size_t n, const std::map<RootVector, Integer>& factors,
                                long bound) {
  QSeries result = QSeries::one(n, bound);
  for (const auto& [gamma, m] : factors) {
    if (m < 0) throw DomainError("power_with_multiplicity: negative exponent");
    if (gamma.is_zero()) throw DomainError("power_with_multiplicity: zero factor vector");
    if (m == 0) continue;
    const long h = gamma.height();
    if (h > bound) continue;
    // (1 - v^gamma)^m expanded binomially up to the bound.
    QSeries factor(n, bound);
    RootVector e(n);
    for (long j = 0; j * h <= bound; ++j) {
      Integer c = binomial(m, static_cast<unsigned long>(j));
      if (c == 0) break;
      factor.add_term(e, Rational(j % 2 == 0 ? c : Integer(-c)));
      e += gamma;
    }
    result = result * factor;
  }
  return result;
}

nlohmann::json series_to_json(const QSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back({{"exp", e.coords()},
                     {"num", to_string(Integer(c.get_num()))},
                     {"den", to_string(Integer(c.get_den()))}});
  }
  return {{"n", s.dimension()}, {"bound", s.bound()}, {"terms", terms}};
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    QSeries s(j.at("n").get<std::size_t>(), j.at("bound").get<long>());
    for (const auto& t : j.at("terms")) {
      RootVector e(t.at("exp").get<std::vector<int>>());
      Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
      c.canonicalize();
      if (e.size() != s.dimension()) throw DomainError("term dimension mismatch");
      s.add_term(e, c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("malformed series JSON number: ") + e.what());
  }
}

}  // namespace chromlie

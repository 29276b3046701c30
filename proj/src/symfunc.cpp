#include "chromlie/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chromlie/error.hpp"

namespace chromlie {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Integer Partition::centralizer_size() const {
  Integer z = 1;
  for (auto [part, count] : multiplicities()) {
    for (int i = 0; i < count; ++i) z *= part;
    z *= factorial(static_cast<unsigned long>(count));
  }
  return z;
}

Partition Partition::scaled(int factor) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= factor;
  return Partition(std::move(p));
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts_;
  p.insert(p.end(), b.parts_.begin(), b.parts_.end());
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      parts.push_back(std::stoi(text.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw DomainError("malformed partition '" + text + "'");
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

namespace {
void gen_partitions(int left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(left - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 0) throw DomainError("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, std::max(max_part, 0), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------- PowerSumExpr

PowerSumExpr PowerSumExpr::single(const Partition& p, const Rational& c) {
  PowerSumExpr e;
  e.add_term(p, c);
  return e;
}

Rational PowerSumExpr::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumExpr::add_term(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PowerSumExpr& PowerSumExpr::operator+=(const PowerSumExpr& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PowerSumExpr& PowerSumExpr::operator-=(const PowerSumExpr& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PowerSumExpr& PowerSumExpr::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PowerSumExpr operator*(const PowerSumExpr& a, const PowerSumExpr& b) {
  PowerSumExpr r;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
  return r;
}

bool PowerSumExpr::all_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integral(t.second); });
}

std::vector<Rational> PowerSumExpr::principal_specialization() const {
  std::vector<Rational> coeffs;
  for (const auto& [p, c] : terms_) {
    const std::size_t deg = static_cast<std::size_t>(p.length());
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
    coeffs[deg] += c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string PowerSumExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += chromlie::to_string(c) + "*p[" + p.to_string() + "]";
  }
  return s;
}

// ------------------------------------------------------------------ NVarPoly

NVarPoly::NVarPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("polynomial needs at least one variable");
}

NVarPoly NVarPoly::constant(int nvars, const Rational& c) {
  NVarPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Rational NVarPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NVarPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NVarPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

NVarPoly NVarPoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_) throw DomainError("permutation length mismatch");
  NVarPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(f, c);
  }
  return r;
}

NVarPoly& NVarPoly::operator+=(const NVarPoly& o) {
  if (o.nvars_ != nvars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

NVarPoly& NVarPoly::operator-=(const NVarPoly& o) {
  if (o.nvars_ != nvars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

NVarPoly& NVarPoly::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

NVarPoly operator*(const NVarPoly& a, const NVarPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable count mismatch");
  NVarPoly r(a.nvars_);
  NVarPoly::Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string NVarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += chromlie::to_string(it->second);
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
    }
  }
  return s;
}

// --------------------------------------------------------------- expansions

NVarPoly powersum_expand(const PowerSumExpr& e, int nvars) {
  std::map<int, NVarPoly> power_sums;
  auto p_r = [&](int r) -> const NVarPoly& {
    auto it = power_sums.find(r);
    if (it != power_sums.end()) return it->second;
    NVarPoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
      NVarPoly::Exponent x(static_cast<std::size_t>(nvars), 0);
      x[static_cast<std::size_t>(i)] = r;
      p.add_term(x, 1);
    }
    return power_sums.emplace(r, std::move(p)).first->second;
  };
  NVarPoly result(nvars);
  for (const auto& [lambda, c] : e.terms()) {
    NVarPoly term = NVarPoly::constant(nvars, c);
    for (int part : lambda.parts()) term = term * p_r(part);
    result += term;
  }
  return result;
}

NVarPoly monomial_sym(const Partition& lambda, int nvars) {
  NVarPoly result(nvars);
  if (lambda.length() > nvars) return result;
  NVarPoly::Exponent e(static_cast<std::size_t>(nvars), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    result.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return result;
}

namespace {
void ordered_tuples(const Partition& lambda, std::size_t j, std::vector<bool>& used,
                    NVarPoly::Exponent& e, NVarPoly& out) {
  if (j == lambda.parts().size()) {
    out.add_term(e, 1);
    return;
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    e[i] = lambda.parts()[j];
    ordered_tuples(lambda, j + 1, used, e, out);
    e[i] = 0;
    used[i] = false;
  }
}
}  // namespace

NVarPoly augmented_monomial_sym(const Partition& lambda, int nvars) {
  NVarPoly result(nvars);
  std::vector<bool> used(static_cast<std::size_t>(nvars), false);
  NVarPoly::Exponent e(static_cast<std::size_t>(nvars), 0);
  ordered_tuples(lambda, 0, used, e, result);
  return result;
}

Integer augmented_monomial_count(const Partition& lambda) {
  Integer r = 1;
  for (auto [part, count] : lambda.multiplicities()) r *= factorial(static_cast<unsigned long>(count));
  return r;
}

// --------------------------------------------------------------------- JSON

nlohmann::json powersum_to_json(const PowerSumExpr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : e.terms()) terms.push_back({{"lambda", p.parts()}, {"coef", to_string(c)}});
  return {{"terms", terms}};
}

PowerSumExpr powersum_from_json(const nlohmann::json& j) {
  PowerSumExpr e;
  try {
    for (const auto& t : j.at("terms"))
      e.add_term(Partition(t.at("lambda").get<std::vector<int>>()),
                 rational_from_string(t.at("coef").get<std::string>()));
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed power-sum JSON: ") + ex.what());
  }
  return e;
}

nlohmann::json nvarpoly_to_json(const NVarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

}  // namespace chromlie

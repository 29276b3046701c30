#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromlie/rational.hpp"

namespace chromlie {

/// Integer partition, parts kept in weakly decreasing order.
/// Ordered by weight, then lexicographically on the parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  /// part -> number of occurrences
  std::map<int, int> multiplicities() const;
  /// z_lambda = prod_r r^{a_r} a_r!
  Integer centralizer_size() const;
  Partition scaled(int factor) const;
  friend Partition operator+(const Partition& a, const Partition& b);  // union of parts

  /// "3,1,1"; the empty partition is "".
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Partitions of n with every part <= max_part, in increasing order.
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// Linear combination of power-sum products p_lambda.
class PowerSumExpr {
 public:
  using Terms = std::map<Partition, Rational>;

  PowerSumExpr() = default;
  static PowerSumExpr single(const Partition& p, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& p) const;
  void add_term(const Partition& p, const Rational& c);

  PowerSumExpr& operator+=(const PowerSumExpr& o);
  PowerSumExpr& operator-=(const PowerSumExpr& o);
  PowerSumExpr& operator*=(const Rational& c);
  friend PowerSumExpr operator+(PowerSumExpr a, const PowerSumExpr& b) { return a += b; }
  friend PowerSumExpr operator-(PowerSumExpr a, const PowerSumExpr& b) { return a -= b; }
  friend PowerSumExpr operator*(PowerSumExpr a, const Rational& c) { return a *= c; }
  friend PowerSumExpr operator*(const PowerSumExpr& a, const PowerSumExpr& b);
  friend bool operator==(const PowerSumExpr&, const PowerSumExpr&) = default;

  bool all_integral() const;
  /// Image under p_r -> q for every r, as coefficients of q^0, q^1, ...
  std::vector<Rational> principal_specialization() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Polynomial in x_1..x_N with exact coefficients.
class NVarPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  explicit NVarPoly(int nvars);
  static NVarPoly constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  /// Sum of all coefficients (the value at x_1 = ... = x_N = 1).
  Rational coefficient_sum() const;
  /// Relabel x_i -> x_{perm[i]} (0-based permutation).
  NVarPoly permuted(const std::vector<int>& perm) const;

  NVarPoly& operator+=(const NVarPoly& o);
  NVarPoly& operator-=(const NVarPoly& o);
  NVarPoly& operator*=(const Rational& c);
  friend NVarPoly operator+(NVarPoly a, const NVarPoly& b) { return a += b; }
  friend NVarPoly operator-(NVarPoly a, const NVarPoly& b) { return a -= b; }
  friend NVarPoly operator*(NVarPoly a, const Rational& c) { return a *= c; }
  friend NVarPoly operator*(const NVarPoly& a, const NVarPoly& b);
  friend bool operator==(const NVarPoly&, const NVarPoly&) = default;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Substitutes p_r -> x_1^r + ... + x_N^r and multiplies out.
NVarPoly powersum_expand(const PowerSumExpr& e, int nvars);
/// m_lambda(x_1..x_N); zero when lambda has more than N parts.
NVarPoly monomial_sym(const Partition& lambda, int nvars);
/// Sum over ordered tuples of distinct indices of x_{i_1}^{l_1} ... x_{i_k}^{l_k}.
NVarPoly augmented_monomial_sym(const Partition& lambda, int nvars);
/// prod_j r_j! where r_j is the multiplicity of part j.
Integer augmented_monomial_count(const Partition& lambda);

nlohmann::json powersum_to_json(const PowerSumExpr& e);
PowerSumExpr powersum_from_json(const nlohmann::json& j);
nlohmann::json nvarpoly_to_json(const NVarPoly& p);

}  // namespace chromlie

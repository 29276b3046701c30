#include "chromlie/gsym.hpp"

namespace chromlie {

GSymSeries elementary_g(const Graph& g, int i) {
  if (i < 0) throw DomainError("elementary_g of negative degree");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GSymSeries s(n, i);
  for (VertexSet set : stable_sets(g, i)) {
    if (set.size() != i) continue;
    RootVector chi(n);
    for (int v : set.members()) chi[static_cast<std::size_t>(v - 1)] = 1;
    s.add_term(chi, 1);
  }
  return s;
}

GSymSeries elementary_g_partition(const Graph& g, const Partition& lambda) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GSymSeries s = QSeries::one(n, lambda.weight());
  for (int part : lambda.parts()) {
    GSymSeries e = elementary_g(g, part);
    // widen the bound of the factor so the product keeps height |lambda|
    GSymSeries wide(n, lambda.weight());
    for (const auto& [exp, c] : e.terms()) wide.add_term(exp, c);
    s = s * wide;
  }
  return s;
}

GSymSeries powersum_g_via_log(const Graph& g, int n) {
  if (n < 1) throw DomainError("powersum_g needs n >= 1");
  const auto dim = static_cast<std::size_t>(g.vertex_count());
  // E(X) = sum_S (-1)^{|S|} X^{|S|} v^{chi(S)}; X is the last coordinate.
  QSeries e(dim + 1, 2L * n);
  for (VertexSet set : stable_sets(g, n)) {
    RootVector exp(dim + 1);
    for (int v : set.members()) exp[static_cast<std::size_t>(v - 1)] = 1;
    exp[dim] = set.size();
    e.add_term(exp, set.size() % 2 == 0 ? 1 : -1);
  }
  QSeries neg_log = series_log(e) * Rational(-1);
  GSymSeries p(dim, n);
  for (const auto& [exp, c] : neg_log.terms()) {
    if (exp[dim] != n) continue;
    std::vector<int> v(exp.coords().begin(), exp.coords().end() - 1);
    Rational coef = c * n;
    if (!is_integral(coef))
      throw IntegralityError("p^G_" + std::to_string(n) + " coefficient " + to_string(coef) +
                             " at " + RootVector(v).to_string());
    p.add_term(RootVector(std::move(v)), coef);
  }
  return p;
}

GSymSeries powersum_g_closed_form(const Graph& g, int n, const MultTable& mults) {
  if (n < 1) throw DomainError("powersum_g needs n >= 1");
  if (mults.bound() < n) throw DomainError("multiplicity table bound too small for p^G_n");
  const auto dim = static_cast<std::size_t>(g.vertex_count());
  GSymSeries p(dim, n);
  for (const RootVector& gamma : vectors_of_height(dim, n)) {
    const long gcd = gamma.gcd();
    Integer coef = 0;
    for (long d = 1; d <= gcd; ++d)
      if (gcd % d == 0) coef += (n / d) * mults.at(gamma.divided(d));
    p.add_term(gamma, Rational(coef));
  }
  return p;
}

NVarPoly t_function_coefficient(const Graph& g, const WeightVector& k, int nvars,
                                const Budget& budget) {
  if (static_cast<int>(k.size()) != g.vertex_count())
    throw DomainError("weight vector length differs from vertex count");
  const long ht = k.height();
  Integer work = 1;
  for (int c : k.values()) work *= binomial(Integer(nvars), static_cast<unsigned long>(c));
  budget.require(work.fits_ulong_p() ? work.get_ui() : ~0UL, "t_function_coefficient");

  const RootVector eta = k.eta();
  NVarPoly result(nvars);
  for (const Partition& lambda : partitions_of(static_cast<int>(ht), independence_number(g))) {
    const Rational c = elementary_g_partition(g, lambda).coefficient(eta);
    if (c == 0) continue;
    result += monomial_sym(lambda, nvars) * c;
  }
  return result;
}

}  // namespace chromlie

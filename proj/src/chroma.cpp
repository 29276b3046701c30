#include "chromlie/chroma.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "chromlie/lattice.hpp"

namespace chromlie {

namespace {

using QPoly = std::vector<Rational>;  // coefficients in q, low to high

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_scaled(QPoly& acc, const QPoly& p, const Rational& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

/// C(m q, d) = prod_{j<d} (m q - j) / d!
QPoly binomial_in_q(const Integer& m, int d) {
  QPoly r{Rational(1)};
  for (int j = 0; j < d; ++j) r = poly_mul(r, QPoly{Rational(-j), Rational(m)});
  const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned long>(d)));
  for (auto& c : r) c *= inv;
  return r;
}

/// The result must take integer values at q = 0..deg, hence at every integer.
ChromaticPolynomial to_integer_valued_poly(const QPoly& p, const char* what) {
  ChromaticPolynomial poly(p);
  for (long q = 0; q <= std::max(poly.degree(), 0); ++q)
    if (!is_integral(poly.evaluate(q)))
      throw IntegralityError(std::string(what) + ": non-integral value at q=" + std::to_string(q));
  return poly;
}

void check_dimension(const Graph& g, const WeightVector& k) {
  if (static_cast<int>(k.size()) != g.vertex_count())
    throw DomainError("weight vector length " + std::to_string(k.size()) +
                      " differs from vertex count " + std::to_string(g.vertex_count()));
}

void check_bound(const MultTable& mults, long needed) {
  if (mults.bound() < needed)
    throw DomainError("multiplicity table bound " + std::to_string(mults.bound()) +
                      " below required height " + std::to_string(needed));
}

/// All bitmasks over q colours with exactly k bits set.
std::vector<std::uint64_t> colour_subsets(long q, int k) {
  std::vector<std::uint64_t> out;
  if (k > q) return out;
  if (k == 0) return {0};
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << q;
  while (m < limit) {
    out.push_back(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t colouring_space(const WeightVector& k, long q, const char* what, const Budget& budget) {
  if (q < 0) throw DomainError(std::string(what) + ": negative colour count");
  if (q > 62) throw BudgetExceeded(std::string(what) + ": more than 62 colours");
  Integer total = 1;
  for (int c : k.values()) total *= binomial(Integer(q), static_cast<unsigned long>(c));
  budget.require(total.fits_ulong_p() ? total.get_ui() : ~0UL, what);
  return total.get_ui();
}

template <typename Leaf>
void enumerate_colourings(const Graph& g, const WeightVector& k,
                          const std::vector<std::vector<std::uint64_t>>& subsets, int v,
                          std::vector<std::uint64_t>& assigned, Leaf&& leaf) {
  if (v > g.vertex_count()) {
    leaf(assigned);
    return;
  }
  std::uint64_t taken = 0;
  for (std::uint64_t nb = g.neighbour_mask(v) & ((std::uint64_t{1} << (v - 1)) - 1); nb; nb &= nb - 1)
    taken |= assigned[static_cast<std::size_t>(std::countr_zero(nb))];
  for (std::uint64_t s : subsets[static_cast<std::size_t>(k[static_cast<std::size_t>(v - 1)])]) {
    if (s & taken) continue;
    assigned[static_cast<std::size_t>(v - 1)] = s;
    enumerate_colourings(g, k, subsets, v + 1, assigned, leaf);
  }
}

std::vector<std::vector<std::uint64_t>> subsets_by_size(const WeightVector& k, long q) {
  int kmax = 0;
  for (int c : k.values()) kmax = std::max(kmax, c);
  std::vector<std::vector<std::uint64_t>> subsets;
  for (int c = 0; c <= kmax; ++c) subsets.push_back(colour_subsets(q, c));
  return subsets;
}

}  // namespace

// ------------------------------------------------------ ChromaticPolynomial

ChromaticPolynomial::ChromaticPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ChromaticPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational ChromaticPolynomial::evaluate(long q) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

ChromaticPolynomial ChromaticPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> r = coeffs_;
  for (auto& x : r) x *= c;
  return ChromaticPolynomial(std::move(r));
}

std::string ChromaticPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    c = abs(c);
    if (c != 1 || i == 0) s += chromlie::to_string(c);
    if (i > 0) s += (c != 1 ? "*q" : "q") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

// ---------------------------------------------------------------- counting

Integer count_colorings_brute(const Graph& g, const WeightVector& k, long q, const Budget& budget) {
  check_dimension(g, k);
  colouring_space(k, q, "count_colorings_brute", budget);
  auto subsets = subsets_by_size(k, q);
  std::vector<std::uint64_t> assigned(static_cast<std::size_t>(g.vertex_count()), 0);
  std::uint64_t count = 0;
  enumerate_colourings(g, k, subsets, 1, assigned, [&](const auto&) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

StableTupleFamily stable_tuple_counts(const Graph& g, const WeightVector& k, const Budget& budget) {
  check_dimension(g, k);
  std::vector<VertexSet> stables = stable_sets(g, g.vertex_count());
  stables.erase(stables.begin());  // drop the empty set
  std::uint64_t states = 1;
  for (int c : k.values()) states *= static_cast<std::uint64_t>(c + 1);
  budget.require(states * stables.size(), "stable_tuple_counts");

  // memo[r][t] = ordered t-tuples of non-empty stable sets covering multiset r
  std::unordered_map<RootVector, std::map<int, Integer>, RootVectorHash> memo;
  std::function<const std::map<int, Integer>&(const RootVector&)> solve =
      [&](const RootVector& r) -> const std::map<int, Integer>& {
    if (auto it = memo.find(r); it != memo.end()) return it->second;
    std::map<int, Integer> result;
    if (r.is_zero()) {
      result[0] = 1;
    } else {
      const std::uint64_t supp = r.support_mask();
      for (VertexSet s : stables) {
        if ((s.mask() & ~supp) != 0) continue;
        RootVector rest = r;
        for (int v : s.members()) rest[static_cast<std::size_t>(v - 1)] -= 1;
        for (const auto& [t, c] : solve(rest)) result[t + 1] += c;
      }
    }
    return memo.emplace(r, std::move(result)).first->second;
  };
  return StableTupleFamily{solve(k.eta())};
}

ChromaticPolynomial gen_chromatic_poly(const Graph& g, const WeightVector& k, const Budget& budget) {
  QPoly acc;
  for (const auto& [t, count] : stable_tuple_counts(g, k, budget).counts)
    poly_add_scaled(acc, binomial_in_q(1, t), Rational(count));
  return to_integer_valued_poly(acc, "gen_chromatic_poly");
}

NVarPoly csf_bruteforce(const Graph& g, const WeightVector& k, int nvars, const Budget& budget) {
  check_dimension(g, k);
  colouring_space(k, nvars, "csf_bruteforce", budget);
  auto subsets = subsets_by_size(k, nvars);
  std::vector<std::uint64_t> assigned(static_cast<std::size_t>(g.vertex_count()), 0);
  std::map<NVarPoly::Exponent, unsigned long> counts;
  NVarPoly::Exponent e(static_cast<std::size_t>(nvars));
  enumerate_colourings(g, k, subsets, 1, assigned, [&](const std::vector<std::uint64_t>& a) {
    std::fill(e.begin(), e.end(), 0);
    for (std::uint64_t s : a)
      for (; s; s &= s - 1) ++e[static_cast<std::size_t>(std::countr_zero(s))];
    ++counts[e];
  });
  NVarPoly result(nvars);
  for (const auto& [exp, c] : counts) result.add_term(exp, Rational(Integer(c)));
  return result;
}

// ------------------------------------------------------ power-sum expansions

namespace {
/// C(m p_h, D) in the power-sum basis.
PowerSumExpr plethystic_binomial(const Integer& m, int height, int d) {
  PowerSumExpr r;
  for (const Partition& rho : partitions_of(d)) {
    Integer mpow = 1;
    for (int i = 0; i < rho.length(); ++i) mpow *= m;
    Rational c = Rational(mpow) / Rational(rho.centralizer_size());
    if ((d - rho.length()) % 2 != 0) c = -c;
    r.add_term(rho.scaled(height), c);
  }
  return r;
}
}  // namespace

PowerSumExpr csf_mainthm(const Graph& g, const WeightVector& k, const MultTable& mults) {
  check_dimension(g, k);
  const long ht = k.height();
  check_bound(mults, ht);
  PowerSumExpr result;
  for (const WeightedBond& bond : weighted_bond_lattice(g, k)) {
    PowerSumExpr term = PowerSumExpr::single(Partition{}, ht % 2 == 0 ? 1 : -1);
    for (const auto& [part, d] : bond.distinct_parts()) {
      const Integer m = mults.at(part);
      if (m == 0) {
        term = PowerSumExpr{};
        break;
      }
      PowerSumExpr factor = plethystic_binomial(m, static_cast<int>(part.height()), d);
      if (d % 2 != 0) factor *= Rational(-1);
      term = term * factor;
    }
    result += term;
  }
  return result;
}

PowerSumExpr csf_mainthm_literal(const Graph& g, const WeightVector& k, const MultTable& mults) {
  check_dimension(g, k);
  const long ht = k.height();
  check_bound(mults, ht);
  PowerSumExpr result;
  for (const WeightedBond& bond : weighted_bond_lattice(g, k)) {
    const auto distinct = bond.distinct_parts();
    Integer coef = (ht + static_cast<long>(distinct.size())) % 2 == 0 ? 1 : -1;
    for (const auto& [part, d] : distinct) coef *= binomial(mults.at(part), static_cast<unsigned long>(d));
    result.add_term(bond_type(bond), Rational(coef));
  }
  return result;
}

PowerSumExpr csf_stanley(const Graph& g) {
  const auto lattice = bond_lattice(g);
  const auto mu = mobius_all(lattice);
  PowerSumExpr result;
  for (std::size_t i = 0; i < lattice.size(); ++i) result.add_term(lattice[i].type(), Rational(mu[i]));
  return result;
}

PowerSumExpr csf_bond_multiplicities(const Graph& g, const MultTable& mults) {
  const int n = g.vertex_count();
  check_bound(mults, n);
  PowerSumExpr result;
  for (const BondPartition& pi : bond_lattice(g)) {
    Integer coef = (n - pi.block_count()) % 2 == 0 ? 1 : -1;
    for (VertexSet b : pi.blocks()) {
      RootVector chi(static_cast<std::size_t>(n));
      for (int v : b.members()) chi[static_cast<std::size_t>(v - 1)] = 1;
      coef *= mults.at(chi);
    }
    result.add_term(pi.type(), Rational(coef));
  }
  return result;
}

Integer chromatic_discriminant(const Graph& g, const MultTable& mults) {
  if (!is_connected(g, g.all_vertices()))
    throw DomainError("chromatic discriminant needs a connected graph");
  const int n = g.vertex_count();
  check_bound(mults, n);
  const Rational linear = abs(gen_chromatic_poly(g, WeightVector::ones(n)).coefficient(1));
  if (!is_integral(linear)) throw ConsistencyError("chromatic polynomial has a non-integral linear term");
  const Integer from_poly = linear.get_num();
  const Rational from_csf = abs(csf_stanley(g).coefficient(Partition{n}));
  const Integer from_mult = mults.at(WeightVector::ones(n).eta());
  if (from_csf != Rational(from_poly) || from_mult != from_poly)
    throw ConsistencyError("chromatic discriminant disagrees: polynomial " + to_string(from_poly) +
                           ", p_(n) coefficient " + to_string(from_csf) + ", mult " +
                           to_string(from_mult));
  return from_poly;
}

ChromaticPolynomial chmply_from_mults(const Graph& g, const WeightVector& k, const MultTable& mults) {
  check_dimension(g, k);
  const long ht = k.height();
  check_bound(mults, ht);
  QPoly acc;
  for (const WeightedBond& bond : weighted_bond_lattice(g, k)) {
    const long parts = static_cast<long>(bond.parts().size());
    QPoly term{Rational((ht + parts) % 2 == 0 ? 1 : -1)};
    for (const auto& [part, d] : bond.distinct_parts()) term = poly_mul(term, binomial_in_q(mults.at(part), d));
    poly_add_scaled(acc, term, 1);
  }
  return to_integer_valued_poly(acc, "chmply_from_mults");
}

Graph join_graph(const Graph& g, const WeightVector& k) {
  check_dimension(g, k);
  if (k.support().empty()) throw DomainError("join graph needs non-empty support");
  std::vector<int> first(k.size() + 1, 0);  // first new id of vertex j's clique
  int next = 1;
  for (std::size_t j = 0; j < k.size(); ++j) {
    first[j] = next;
    next += k[j];
  }
  const int total = next - 1;
  std::vector<Graph::Edge> edges;
  for (std::size_t j = 0; j < k.size(); ++j) {
    for (int a = 0; a < k[j]; ++a)
      for (int b = a + 1; b < k[j]; ++b) edges.emplace_back(first[j] + a, first[j] + b);
    for (std::size_t i = j + 1; i < k.size(); ++i) {
      if (!g.adjacent(static_cast<int>(j + 1), static_cast<int>(i + 1))) continue;
      for (int a = 0; a < k[j]; ++a)
        for (int b = 0; b < k[i]; ++b) edges.emplace_back(first[j] + a, first[i] + b);
    }
  }
  return Graph(total, std::move(edges));
}

}  // namespace chromlie

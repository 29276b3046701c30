#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromlie/error.hpp"
#include "chromlie/graph.hpp"
#include "chromlie/rational.hpp"
#include "chromlie/root_mult.hpp"
#include "chromlie/symfunc.hpp"

namespace chromlie {

/// Integer-valued polynomial in q with rational coefficients; coeffs[i] is
/// the coefficient of q^i.
class ChromaticPolynomial {
 public:
  ChromaticPolynomial() = default;
  explicit ChromaticPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational evaluate(long q) const;
  ChromaticPolynomial scaled(const Rational& c) const;
  std::string to_string() const;

  friend bool operator==(const ChromaticPolynomial&, const ChromaticPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Number of ordered tuples of non-empty stable sets (P_1..P_t) whose
/// multiset union is eta(k), keyed by t.
struct StableTupleFamily {
  std::map<int, Integer> counts;
};

/// Proper k-multicolourings with colours in {1..q}, by exhaustive search.
Integer count_colorings_brute(const Graph& g, const WeightVector& k, long q,
                              const Budget& budget = {});
StableTupleFamily stable_tuple_counts(const Graph& g, const WeightVector& k,
                                      const Budget& budget = {});
/// sum_t |P_t(k, G)| * C(q, t)
ChromaticPolynomial gen_chromatic_poly(const Graph& g, const WeightVector& k,
                                       const Budget& budget = {});

/// The k-chromatic symmetric function restricted to colours 1..N, by
/// exhaustive enumeration of proper multicolourings.
NVarPoly csf_bruteforce(const Graph& g, const WeightVector& k, int nvars,
                        const Budget& budget = {});

/// Power-sum expansion of X^G_k from root multiplicities: for every
/// weighted bond, each distinct part J of height h and multiplicity D
/// contributes (-1)^D C(mult(J) p_h, D), where the binomial is taken in
/// the plethystic sense
///     C(m p_h, D) = sum_{rho |- D} (-1)^{D - l(rho)} m^{l(rho)} p_{h rho} / z_rho.
/// When every part occurs once this is mult(J) p_h and the whole sum is
/// sum (-1)^{ht + |J|} prod mult(J) p_type(J).
PowerSumExpr csf_mainthm(const Graph& g, const WeightVector& k, const MultTable& mults);

/// The closed form with ordinary binomials C(mult(J), D) and sign
/// (-1)^{ht + #distinct parts}. Agrees with csf_mainthm whenever no part
/// repeats (in particular for k = 1); kept for comparison.
PowerSumExpr csf_mainthm_literal(const Graph& g, const WeightVector& k, const MultTable& mults);

/// sum over the bond lattice of mu(0, pi) p_type(pi).
PowerSumExpr csf_stanley(const Graph& g);

/// sum over the bond lattice of (-1)^{n - |pi|} prod_B mult(B) p_type(pi).
PowerSumExpr csf_bond_multiplicities(const Graph& g, const MultTable& mults);

/// |[q] pi_G(q)|, checked against |[p_(n)] X_G| and mult(1,..,1).
/// Throws DomainError on a disconnected graph and ConsistencyError if the
/// three values disagree.
Integer chromatic_discriminant(const Graph& g, const MultTable& mults);

/// sum over weighted bonds of (-1)^{ht + |J|} prod C(q mult(J), D(J)),
/// |J| counting parts with multiplicity.
ChromaticPolynomial chmply_from_mults(const Graph& g, const WeightVector& k,
                                      const MultTable& mults);

/// G(k): a k_j-clique per vertex j in supp(k), cliques of adjacent
/// vertices completely joined. Vertices are numbered by (j, copy).
Graph join_graph(const Graph& g, const WeightVector& k);

}  // namespace chromlie

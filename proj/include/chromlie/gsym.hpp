#pragma once

#include "chromlie/error.hpp"
#include "chromlie/graph.hpp"
#include "chromlie/root_mult.hpp"
#include "chromlie/series.hpp"
#include "chromlie/symfunc.hpp"

namespace chromlie {

/// G-analogue of a symmetric function, as a series in v_1..v_n graded by height.
using GSymSeries = QSeries;

/// e^G_i: sum of v^{chi(S)} over stable S with |S| = i (bound i).
GSymSeries elementary_g(const Graph& g, int i);
/// e^G_lambda = prod_i e^G_{lambda_i} (bound |lambda|).
GSymSeries elementary_g_partition(const Graph& g, const Partition& lambda);

/// p^G_n from -log(1 - e_1 X + e_2 X^2 - ...) = sum_n p^G_n X^n / n.
/// X is carried as an extra series coordinate. Throws IntegralityError on
/// a non-integral coefficient.
GSymSeries powersum_g_via_log(const Graph& g, int n);

/// p^G_n = sum_{ht gamma = n} (sum_{d | gamma} (n/d) mult(gamma/d)) v^gamma.
GSymSeries powersum_g_closed_form(const Graph& g, int n, const MultTable& mults);

/// Coefficient of v^eta(k) in T(x, v) = sum_{lambda stable} m_lambda(x) e^G_lambda(v),
/// with x restricted to N variables.
NVarPoly t_function_coefficient(const Graph& g, const WeightVector& k, int nvars,
                                const Budget& budget = {});

}  // namespace chromlie

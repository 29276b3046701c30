#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "chromlie/error.hpp"
#include "chromlie/graph.hpp"
#include "chromlie/rational.hpp"
#include "chromlie/root_vector.hpp"
#include "chromlie/series.hpp"

namespace chromlie {

/// Root multiplicities dim g_alpha of the free partially commutative Lie
/// algebra on a graph, for every alpha of height <= bound. Zero entries
/// are omitted.
class MultTable {
 public:
  MultTable(std::string digest, std::size_t n, long bound, std::map<RootVector, Integer> mults);

  const std::string& digest() const { return digest_; }
  std::size_t dimension() const { return n_; }
  long bound() const { return bound_; }
  const std::map<RootVector, Integer>& entries() const { return mults_; }

  /// Multiplicity of gamma; throws DomainError when height(gamma) > bound.
  Integer at(const RootVector& gamma) const;
  /// The same table cut down to a smaller bound.
  MultTable restricted(long bound) const;

  friend bool operator==(const MultTable&, const MultTable&) = default;

 private:
  std::string digest_;
  std::size_t n_;
  long bound_;
  std::map<RootVector, Integer> mults_;
};

/// Hex FNV-1a hash of n and the sorted edge list (labelled graph, no
/// isomorphism canonicalisation).
std::string graph_digest(const Graph& g);

/// sum over stable S of (-1)^{|S|} v^{chi(S)}, truncated at bound.
QSeries independence_series(const Graph& g, long bound);

/// Inverts the denominator identity: c = -log(independence series),
/// mult(gamma) = sum_{d | gamma} (mu(d)/d) c_{gamma/d}. Throws
/// IntegralityError if any multiplicity is not a non-negative integer.
MultTable mult_table(const Graph& g, long bound);

/// Multigraded Witt formula for the free Lie algebra (complete graph).
Integer witt_oracle(const RootVector& gamma);

/// Number of commutation classes of words of multidegree gamma, where two
/// letters commute iff they are distinct and non-adjacent in g. Counted by
/// brute force over lexicographic normal forms; height must be <= 10.
Integer trace_monoid_dim(const Graph& g, const RootVector& gamma, const Budget& budget = {});

void cache_store(const MultTable& table, const std::filesystem::path& path);
/// Returns the cached table restricted to `bound`, or nothing when the file
/// is missing, unreadable, corrupt, for another graph, or of smaller bound.
/// `why` receives the reason when nothing is returned.
std::optional<MultTable> cache_load(const Graph& g, long bound, const std::filesystem::path& path,
                                    std::string* why = nullptr);
/// cache_load, falling back to mult_table + cache_store.
MultTable mult_table_cached(const Graph& g, long bound, const std::filesystem::path& path);

nlohmann::json mult_table_to_json(const MultTable& t);
MultTable mult_table_from_json(const nlohmann::json& j);

}  // namespace chromlie

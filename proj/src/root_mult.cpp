#include "chromlie/root_mult.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace chromlie {

MultTable::MultTable(std::string digest, std::size_t n, long bound,
                     std::map<RootVector, Integer> mults)
    : digest_(std::move(digest)), n_(n), bound_(bound), mults_(std::move(mults)) {
  for (const auto& [gamma, m] : mults_) {
    if (gamma.size() != n_) throw DomainError("multiplicity key of wrong dimension");
    if (gamma.height() > bound_) throw DomainError("multiplicity key above bound");
    if (m <= 0) throw DomainError("stored multiplicities must be positive");
  }
}

Integer MultTable::at(const RootVector& gamma) const {
  if (gamma.height() > bound_)
    throw DomainError("multiplicity table bound " + std::to_string(bound_) +
                      " too small for height " + std::to_string(gamma.height()));
  auto it = mults_.find(gamma);
  return it == mults_.end() ? Integer(0) : it->second;
}

MultTable MultTable::restricted(long bound) const {
  if (bound > bound_) throw DomainError("cannot extend a multiplicity table");
  std::map<RootVector, Integer> m;
  for (const auto& [gamma, v] : mults_)
    if (gamma.height() <= bound) m.emplace(gamma, v);
  return MultTable(digest_, n_, bound, std::move(m));
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  feed(g.to_string());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

QSeries independence_series(const Graph& g, long bound) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  QSeries s(n, bound);
  for (VertexSet set : stable_sets(g, static_cast<int>(std::min<long>(bound, g.vertex_count())))) {
    RootVector chi(n);
    for (int v : set.members()) chi[static_cast<std::size_t>(v - 1)] = 1;
    s.add_term(chi, set.size() % 2 == 0 ? 1 : -1);
  }
  return s;
}

namespace {
std::vector<long> divisors(long g) {
  std::vector<long> d;
  for (long i = 1; i <= g; ++i)
    if (g % i == 0) d.push_back(i);
  return d;
}
}  // namespace

MultTable mult_table(const Graph& g, long bound) {
  if (bound < 1) throw DomainError("mult_table needs bound >= 1");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  QSeries c = series_log(independence_series(g, bound)) * Rational(-1);
  std::map<RootVector, Integer> mults;
  // c_gamma = sum_{d | gamma} mult(gamma/d)/d with every mult >= 0, so
  // mult(gamma) can only be non-zero where c_gamma is.
  for (const auto& [gamma, cg] : c.terms()) {
    Rational m = 0;
    for (long d : divisors(gamma.gcd())) {
      const int mu = number_mobius(d);
      if (mu == 0) continue;
      m += make_rational(mu, d) * c.coefficient(gamma.divided(d));
    }
    if (!is_integral(m) || m < 0)
      throw IntegralityError("multiplicity of " + gamma.to_string() + " came out as " +
                             to_string(m));
    if (m == 0) continue;
    if (!has_connected_support(g, gamma))
      throw IntegralityError("non-zero multiplicity on disconnected support " + gamma.to_string());
    mults.emplace(gamma, m.get_num());
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = mults.find(RootVector::unit(n, i));
    if (it == mults.end() || it->second != 1)
      throw IntegralityError("simple root multiplicity is not 1");
  }
  return MultTable(graph_digest(g), n, bound, std::move(mults));
}

Integer witt_oracle(const RootVector& gamma) {
  if (gamma.is_zero()) throw DomainError("witt_oracle of the zero vector");
  const long total = gamma.height();
  Integer sum = 0;
  for (long d : divisors(gamma.gcd())) {
    const int mu = number_mobius(d);
    if (mu == 0) continue;
    Integer term = factorial(static_cast<unsigned long>(total / d));
    for (int c : gamma.coords()) term /= factorial(static_cast<unsigned long>(c / d));
    sum += mu * term;
  }
  if (sum % total != 0) throw IntegralityError("Witt sum not divisible by height");
  return sum / total;
}

namespace {
// Lexicographically least word in the commutation class of `word`: take,
// at each step, the smallest letter that can be shuffled to the front.
std::vector<int> lex_normal_form(const Graph& g, std::vector<int> word) {
  std::vector<int> out;
  out.reserve(word.size());
  while (!word.empty()) {
    int best = -1;
    std::size_t best_pos = 0;
    std::uint64_t blocked = 0;  // letters seen so far that block movement
    for (std::size_t p = 0; p < word.size(); ++p) {
      const int a = word[p];
      const std::uint64_t bit = std::uint64_t{1} << a;
      // a passes every earlier letter iff none equals a or is adjacent to a
      bool free = !(blocked & bit);
      if (free) {
        for (std::uint64_t b = blocked; b; b &= b - 1) {
          int other = std::countr_zero(b);
          if (g.adjacent(a + 1, other + 1)) {
            free = false;
            break;
          }
        }
      }
      if (free && (best < 0 || a < best)) {
        best = a;
        best_pos = p;
      }
      blocked |= bit;
    }
    out.push_back(best);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }
  return out;
}
}  // namespace

Integer trace_monoid_dim(const Graph& g, const RootVector& gamma, const Budget& budget) {
  if (gamma.size() != static_cast<std::size_t>(g.vertex_count()))
    throw DomainError("trace_monoid_dim: dimension mismatch");
  const long h = gamma.height();
  if (h > 10) throw BudgetExceeded("trace_monoid_dim: height " + std::to_string(h) + " > 10");
  Integer words = factorial(static_cast<unsigned long>(h));
  for (int c : gamma.coords()) words /= factorial(static_cast<unsigned long>(c));
  budget.require(words.fits_ulong_p() ? words.get_ui() : ~0UL, "trace_monoid_dim");
  std::vector<int> word;
  for (std::size_t i = 0; i < gamma.size(); ++i) word.insert(word.end(), gamma[i], static_cast<int>(i));
  std::set<std::vector<int>> classes;
  do {
    classes.insert(lex_normal_form(g, word));
  } while (std::next_permutation(word.begin(), word.end()));
  return Integer(static_cast<unsigned long>(classes.size()));
}

nlohmann::json mult_table_to_json(const MultTable& t) {
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& [gamma, m] : t.entries())
    mults.push_back({{"exp", gamma.coords()}, {"m", to_string(m)}});
  return {{"digest", t.digest()}, {"n", t.dimension()}, {"bound", t.bound()}, {"mults", mults}};
}

MultTable mult_table_from_json(const nlohmann::json& j) {
  try {
    std::map<RootVector, Integer> mults;
    for (const auto& e : j.at("mults"))
      mults.emplace(RootVector(e.at("exp").get<std::vector<int>>()),
                    Integer(e.at("m").get<std::string>()));
    return MultTable(j.at("digest").get<std::string>(), j.at("n").get<std::size_t>(),
                     j.at("bound").get<long>(), std::move(mults));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed multiplicity cache: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("malformed multiplicity value: ") + e.what());
  }
}

void cache_store(const MultTable& table, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << mult_table_to_json(table).dump() << '\n';
    if (!out) throw Error("failed writing cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move cache file into place: " + ec.message());
}

std::optional<MultTable> cache_load(const Graph& g, long bound, const std::filesystem::path& path,
                                    std::string* why) {
  auto reject = [why](std::string reason) -> std::optional<MultTable> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  std::ifstream in(path);
  if (!in) return reject("cache file not readable");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    MultTable t = mult_table_from_json(nlohmann::json::parse(buf.str()));
    if (t.digest() != graph_digest(g) ||
        t.dimension() != static_cast<std::size_t>(g.vertex_count()))
      return reject("cache belongs to a different graph");
    if (t.bound() < bound) return reject("cached bound smaller than requested");
    return t.restricted(bound);
  } catch (const nlohmann::json::exception& e) {
    return reject(std::string("corrupt cache: ") + e.what());
  } catch (const Error& e) {
    return reject(std::string("corrupt cache: ") + e.what());
  }
}

MultTable mult_table_cached(const Graph& g, long bound, const std::filesystem::path& path) {
  if (auto t = cache_load(g, bound, path)) return *t;
  MultTable t = mult_table(g, bound);
  cache_store(t, path);
  return t;
}

}  // namespace chromlie

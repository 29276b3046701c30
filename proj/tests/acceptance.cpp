#include <cstdio>
#include <string>
#include <vector>

#include "chromlie/corpus.hpp"
#include "chromlie/verify.hpp"

using namespace chromlie;

namespace {

struct Outcome {
  bool pass = true;
  bool expected_failure = false;
  std::string detail;
};

std::vector<Graph> connected_of_size(int lo, int hi) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_corpus(hi, true))
    if (g.vertex_count() >= lo) out.push_back(g);
  return out;
}

std::string summary(const VerificationReport& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: %llu cases, %llu skipped, %zu failures, %.1f s", r.suite.c_str(),
                static_cast<unsigned long long>(r.cases), static_cast<unsigned long long>(r.skipped),
                r.failures.size(), r.seconds);
  return buf;
}

Outcome judge(const std::vector<VerificationReport>& reports, double limit_seconds) {
  Outcome o;
  double seconds = 0;
  for (const auto& r : reports) {
    o.pass = o.pass && r.failures.empty() && r.skipped == 0 && r.cases > 0;
    seconds += r.seconds;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += summary(r);
    if (!r.failures.empty()) o.detail += " [first: " + r.failures.front().graph + " " + r.failures.front().detail + "]";
  }
  if (seconds > limit_seconds) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
  }
  return o;
}

Outcome criterion_bijection() {
  const VerificationReport r = run_verify(Suite::bijection);
  Outcome o = judge({r}, 120);
  if (o.pass) return o;
  bool only_simple_multiples = r.skipped == 0 && r.seconds <= 120;
  for (const auto& f : r.failures)
    only_simple_multiples = only_simple_multiples && f.detail.rfind("weighted bond part", 0) == 0;
  for (const auto& n : r.notes)
    if (n.rfind("weighted bond parts rejected", 0) == 0) {
      only_simple_multiples = only_simple_multiples && n.find(", 0 other") != std::string::npos;
      o.detail += "; " + n;
    }
  o.expected_failure = only_simple_multiples;
  if (o.expected_failure)
    o.detail += "; the Moebius bridge holds on every graph, the rejections are all multiples of simple roots";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "three-route chromatic symmetric function equality on connected 5- and 6-vertex graphs",
       [] {
         VerifyOptions opt;
         opt.graphs = connected_of_size(5, 6);
         Outcome o = judge({run_verify(Suite::stanley, opt)}, 300);
         if (opt.graphs->size() != 133) o.pass = false;
         return o;
       }},
      {2, "generalized weights: root-multiplicity expansion and chromatic polynomial",
       [] { return judge({run_verify(Suite::mainthm), run_verify(Suite::chmply)}, 300); }},
      {3, "denominator identity at height 8 on connected graphs up to 5 vertices",
       [] { return judge({run_verify(Suite::denominator)}, 120); }},
      {4, "Witt formula and trace monoid oracles", [] { return judge({run_verify(Suite::oracles)}, 120); }},
      {5, "G-power sums: integrality, positivity and dual routes",
       [] { return judge({run_verify(Suite::gsym_dual)}, 180); }},
      {6, "chromatic discriminant and equal-X pairs", [] { return judge({run_verify(Suite::discriminant)}, 180); }},
      {7, "T-function coefficients against colourings", [] { return judge({run_verify(Suite::tfunction)}, 180); }},
      {8, "weighted bond bijection and Moebius bridge", criterion_bijection},
      {9, "join graph identity", [] { return judge({run_verify(Suite::join)}, 60); }},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const Outcome o = c.run();
    std::printf("%s %d %s -- %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                !o.pass && o.expected_failure ? " (known counterexample, see README)" : "");
    std::fflush(stdout);
    if (!o.pass && !o.expected_failure) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

// Acceptance gate: runs the full desk-scale corpus behind each headline
// guarantee and prints one verdict line per item.  Exits with the number
// of failed items, so a zero exit means the build is good.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hiso/selftest.hpp"

using hiso::CheckResult;

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, std::function<CheckResult()>>> items = {
      {"algebra round trip, all graph pairs on <= 3 vertices",
       [] { return hiso::check_algebra_roundtrip(3, 3, 0); }},
      {"transport multiplicativity, 1000 samples, p in {3,5}",
       [] { return hiso::check_transport_multiplicativity(4, 1000, 0); }},
      {"algebra reconstruction from the group, all graphs on <= 4 vertices",
       [] { return hiso::check_renewal_reconstruction(4); }},
      {"multigraph iso agrees with the table oracle on the group corpus",
       [] { return hiso::check_gamma_group_agreement(); }},
      {"homomorphism extension preserves arcs on 10 validated maps",
       [] { return hiso::check_hom_extension(); }},
      {"exponent p^3 and class-2 nilpotency, 10000 samples",
       [] { return hiso::check_exponent_nilpotency(4, 10000, 0); }},
      {"exact size accounting for both constructions",
       [] { return hiso::check_size_bounds(4); }},
      {"every presentation relator evaluates to the identity",
       [] { return hiso::check_presentation_soundness(4); }},
      {"similarity is an equivalence with validated witnesses; center bound",
       [] { return hiso::check_similarity_and_center(50, 4, 0); }},
  };

  int failures = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    auto start = clock::now();
    CheckResult r = items[i].second();
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (!r.passed) ++failures;
    std::printf("[%zu/%zu] %s ... %s (%.2f s) %s\n", i + 1, items.size(),
                items[i].first.c_str(), r.passed ? "PASS" : "FAIL", secs,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu items passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              items.size() - failures, items.size());
  return failures;
}

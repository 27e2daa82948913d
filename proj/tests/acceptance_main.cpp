// Acceptance runner: one line per criterion, nonzero exit if any fails.
// --expect-fail ID marks a criterion known to be out of reach: its FAIL line
// is still printed, and the run then fails if that criterion passes instead.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <set>

#include "amlt/acceptance.hpp"

int main(int argc, char** argv) {
  amlt::acceptance::SuiteOptions o;
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) o.quick = true;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) o.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) expected_fail.insert(std::atoi(argv[++i]));
    else {
      std::cerr << "usage: amlt_acceptance [--quick] [--seed N] [--expect-fail ID]...\n";
      return 2;
    }
  }
  o.on_result = [](const amlt::acceptance::CriterionResult& r) {
    std::cout << amlt::acceptance::format_line(r) << std::endl;
  };
  const auto results = amlt::acceptance::run(o);
  std::size_t passed = 0;
  bool as_expected = true;
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    if (r.pass == expected_fail.count(r.id) > 0) {
      as_expected = false;
      if (r.pass) std::cout << "criterion " << r.id << " was expected to fail but passed\n";
    }
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  if (!expected_fail.empty()) return as_expected ? 0 : 1;
  return passed == results.size() ? 0 : 1;
}

#include <cstring>
#include <iostream>

#include "golden.hpp"

// Usage: golden_test <golden dir> [--update]. Run from the tests directory so
// that fixture paths inside the .cmd files resolve.
int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_test <golden dir> [--update]\n";
    return 2;
  }
  const bool update = argc > 2 && std::strcmp(argv[2], "--update") == 0;
  const auto results = golden::run_cases(argv[1], update);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    failed += r.passed ? 0 : 1;
  }
  if (results.empty()) {
    std::cout << "FAIL no golden cases found\n";
    return 1;
  }
  return failed == 0 ? 0 : 1;
}

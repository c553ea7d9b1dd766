// Acceptance runner: one PASS/FAIL line per criterion, followed by its failures.
// With arguments, runs only the listed criterion ids. Exit status is 1 if any ran red.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "skein/verify/suites.hpp"

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  int red = 0;
  for (const auto& c : skein::acceptance_criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    skein::CheckReport r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << c.id << ": " << (r.passed() ? "PASS" : "FAIL") << "  " << c.title << " (" << r.cases
              << " checks, " << timing << ")" << std::endl;
    constexpr std::size_t kShown = 10;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) std::cout << "    fail: " << r.failures[i] << "\n";
    if (r.failures.size() > kShown) std::cout << "    ... " << r.failures.size() - kShown << " more failures\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    red += !r.passed();
  }
  return red ? 1 : 0;
}

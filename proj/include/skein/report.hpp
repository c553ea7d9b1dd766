#pragma once

#include <string>
#include <vector>

namespace skein {

/// Outcome of a property check: passes unless some failure was recorded.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::size_t cases = 0;

  bool passed() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void note(std::string what) { notes.push_back(std::move(what)); }
  /// Counts one case; records `what` as a failure when `ok` is false.
  bool expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
    return ok;
  }
  void absorb(const CheckReport& other) {
    cases += other.cases;
    for (const auto& f : other.failures) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
    for (const auto& n : other.notes) notes.push_back(other.name.empty() ? n : other.name + ": " + n);
  }
};

}  // namespace skein

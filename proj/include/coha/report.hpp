#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coha {

/// Outcome of a mechanical identity check.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<std::string> counterexample;  // first failure only
  std::vector<std::string> notes;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (!ok) {
      if (passed) counterexample = what;
      passed = false;
    }
  }

  void absorb(const CheckReport& other) {
    instances += other.instances;
    if (!other.passed) {
      if (passed) counterexample = other.counterexample;
      passed = false;
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace coha

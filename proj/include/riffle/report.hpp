#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace riffle {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named pass/fail checks from one verification suite. A failed check is
/// data here, not an exception.
struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& i : items) f += !i.passed;
    return f;
  }
  bool passed() const { return failures() == 0; }
};

}  // namespace riffle

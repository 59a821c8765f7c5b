#pragma once

#include <map>
#include <string>
#include <vector>

namespace trialg {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;  // violating tuples etc., empty when pass
};

/// Machine-readable verification report; checks and quantities keep a stable
/// order so identical inputs yield byte-identical output.
struct Report {
  std::string subject;
  std::vector<CheckItem> checks;
  std::map<std::string, std::string> quantities;  // dims, ranks, ...

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  CheckItem& add(const std::string& name) {
    checks.push_back(CheckItem{name, true, {}});
    return checks.back();
  }
  void fail(CheckItem& item, std::string witness) {
    item.pass = false;
    item.witnesses.push_back(std::move(witness));
  }
  void set_quantity(const std::string& key, const std::string& value) {
    quantities[key] = value;
  }
  void merge(const Report& other);

  std::string to_text() const;
};

}  // namespace trialg

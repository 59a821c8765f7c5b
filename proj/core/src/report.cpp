#include "trialg/report.hpp"

#include <sstream>

namespace trialg {

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
  for (const auto& [k, v] : other.quantities) quantities[k] = v;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "subject: " << subject << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
    std::size_t shown = 0;
    for (const auto& w : c.witnesses) {
      if (shown++ == 8) {
        os << "      ... (" << c.witnesses.size() - 8 << " more)\n";
        break;
      }
      os << "      " << w << "\n";
    }
  }
  for (const auto& [k, v] : quantities) os << "  " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace trialg

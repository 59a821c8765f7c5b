#include "trialg/scalar.hpp"

#include <cctype>
#include <ostream>

namespace trialg {

Scalar Scalar::parse(const std::string& text) {
  // Accepted forms: [-]digits and [-]digits/digits.
  auto fail = [&]() -> Scalar {
    throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    if (i == text.size()) return fail();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) return fail();
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) return fail();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace trialg

#include "minkdec/rational.hpp"

#include <stdexcept>

namespace minkdec {

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

}  // namespace minkdec

#include "treeembed/series.hpp"

#include <stdexcept>

namespace treeembed {

RationalSeries to_rational(const IntSeries& s) {
  RationalSeries out(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) out[i] = Rational(s[i]);
  return out;
}

IntSeries to_integer(const RationalSeries& s) {
  IntSeries out(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) {
    Rational q = s[i];
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("to_integer: coefficient " + q.get_str() + " at z^" + std::to_string(i));
    out[i] = q.get_num();
  }
  return out;
}

}  // namespace treeembed

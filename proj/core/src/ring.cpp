#include "z4u/ring.hpp"

#include "parse.hpp"
#include "z4u/errors.hpp"

namespace z4u {

RElem inverse(RElem x) {
  if (!x.is_unit()) throw NonUnit("inverse: " + to_string(x) + " is not a unit");
  // a^-1 = a and a^-2 = 1 for a in {1,3}.
  return {x.a, -x.b};
}

std::string to_string(Z4 x) { return std::to_string(x.value()); }

std::string to_string(RElem x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (!x.a.is_zero()) out += to_string(x.a);
  if (!x.b.is_zero()) {
    if (!out.empty()) out += '+';
    if (x.b != Z4(1)) out += to_string(x.b);
    out += 'u';
  }
  return out;
}

RElem parse_relem(std::string_view text) {
  detail::Reader r(text);
  RElem v{};
  if (r.accept('(')) {
    v = r.read_relem_sum();
    r.expect(')');
  } else {
    v = r.read_relem_sum();
  }
  if (!r.at_end()) r.fail("unexpected trailing input");
  return v;
}

}  // namespace z4u

#include "mvsr/tropical.hpp"

#include "mvsr/error.hpp"

namespace mvsr {

TropicalRational trop_sum(const TropicalRational& a, const TropicalRational& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  return TropicalRational(a.value() <= b.value() ? a.value() : b.value());
}

TropicalRational trop_prod(const TropicalRational& a,
                           const TropicalRational& b) {
  if (a.is_top() || b.is_top()) return TropicalRational::top();
  return TropicalRational(a.value() + b.value());
}

TropicalRational trop_neg(const TropicalRational& a) {
  if (a.is_top()) fail(ErrorKind::NegationOfTop, "Top has no inverse");
  return TropicalRational(Rational(-a.value()));
}

TropicalRational trop_join(const TropicalRational& a,
                           const TropicalRational& b) {
  if (a.is_top() || b.is_top()) return TropicalRational::top();
  return TropicalRational(a.value() >= b.value() ? a.value() : b.value());
}

TropicalRational trop_one() { return TropicalRational(Rational(0)); }

std::string to_string(const TropicalRational& a) {
  return a.is_top() ? std::string("top") : to_string(a.value());
}

TropicalRational parse_tropical(const std::string& text) {
  if (text == "top" || text == "Top") return TropicalRational::top();
  return TropicalRational(parse_rational(text));
}

TropicalUSemifield::TropicalUSemifield(Rational unit) : unit_(std::move(unit)) {
  if (unit_ <= 0)
    fail(ErrorKind::InvalidArgument, "strong unit must be positive");
}

}  // namespace mvsr

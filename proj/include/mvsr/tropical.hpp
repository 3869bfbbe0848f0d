#pragma once

#include <optional>
#include <string>

#include "mvsr/rational.hpp"

namespace mvsr {

/// Element of the min-plus semifield Q u {Top}: sum is min with Top neutral,
/// product is rational addition with Top absorbing.
class TropicalRational {
 public:
  /// Top.
  TropicalRational() = default;
  explicit TropicalRational(Rational value) : value_(std::move(value)) {}
  TropicalRational(long long num, long long den) : value_(Rational(num, den)) {}

  static TropicalRational top() { return {}; }

  [[nodiscard]] bool is_top() const noexcept { return !value_.has_value(); }
  /// Requires !is_top().
  [[nodiscard]] const Rational& value() const { return *value_; }

  friend TropicalRational trop_sum(const TropicalRational& a,
                                   const TropicalRational& b);
  friend TropicalRational trop_prod(const TropicalRational& a,
                                    const TropicalRational& b);

  bool operator==(const TropicalRational& other) const = default;

 private:
  std::optional<Rational> value_;
};

/// min(a, b); Top is neutral. This is the semifield meet a ^ b.
TropicalRational trop_sum(const TropicalRational& a, const TropicalRational& b);
/// a + b; Top absorbs.
TropicalRational trop_prod(const TropicalRational& a, const TropicalRational& b);
/// Multiplicative inverse -a; throws NegationOfTop.
TropicalRational trop_neg(const TropicalRational& a);
/// Lattice join max(a, b) of non-Top elements, Top absorbing.
TropicalRational trop_join(const TropicalRational& a, const TropicalRational& b);

/// Multiplicative identity 0.
TropicalRational trop_one();

std::string to_string(const TropicalRational& a);
/// Accepts "top" or a rational literal.
TropicalRational parse_tropical(const std::string& text);

/// Idempotent semifield with a distinguished strong order unit u > 0.
class TropicalUSemifield {
 public:
  /// Throws InvalidArgument unless u > 0.
  explicit TropicalUSemifield(Rational unit);

  [[nodiscard]] const Rational& unit() const noexcept { return unit_; }

 private:
  Rational unit_;
};

}  // namespace mvsr

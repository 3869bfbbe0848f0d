#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mvsr/mv_algebra.hpp"
#include "mvsr/tropical.hpp"

namespace mvsr {

/// (a v 0) ^ u as an exact rational; Top goes to u, the additive neutral of
/// the wedge-oplus reduct.
Rational gamma(const TropicalUSemifield& f, const TropicalRational& a);

/// One failed sampled identity.
struct GammaFailure {
  std::string law;
  TropicalRational a;
  TropicalRational b;
};

/// Sampling domain: all of Q u {Top}, or its nonnegative cone u {Top}.
enum class GammaDomain { Full, NonNegative };

struct GammaReport {
  Rational unit;
  GammaDomain domain = GammaDomain::Full;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t meet_failures = 0;
  std::uint64_t sum_failures = 0;
  std::optional<GammaFailure> first_failure;
  [[nodiscard]] bool passed() const noexcept {
    return meet_failures == 0 && sum_failures == 0;
  }
};

/// Checks gamma(a ^ b) = gamma(a) ^ gamma(b) and
/// gamma(a + b) = (gamma(a) + gamma(b)) ^ u on seeded pairs. Samples have
/// numerator in [-20, 20] (or [0, 20]), denominator in [1, 12], and are Top
/// with probability 1/20. The sum identity fails on pairs of mixed sign such
/// as (3/2, -1); on the nonnegative cone both identities hold.
GammaReport gamma_property_report(const Rational& unit, std::uint64_t samples,
                                  std::uint64_t seed,
                                  GammaDomain domain = GammaDomain::Full);

struct GammaChain {
  /// [0,1] n (1/k)Z with x oplus y = (x+y) ^ 1 and x* = 1-x.
  MvAlgebra algebra;
  /// Tables, zero and rational labels coincide with lukasiewicz_chain(k+1).
  bool matches_chain = false;
  /// Sampled homomorphism checks of gamma from (1/k)Z u {Top} (or its
  /// nonnegative cone) onto the wedge-oplus reduct of the chain.
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

/// Throws InvalidArgument for k < 1.
GammaChain gamma_chain(std::size_t k, std::uint64_t samples = 1000,
                       std::uint64_t seed = 42,
                       GammaDomain domain = GammaDomain::Full);

std::string to_string(GammaDomain d);

}  // namespace mvsr

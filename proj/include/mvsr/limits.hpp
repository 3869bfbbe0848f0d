#pragma once

#include <cstdint>
#include <string_view>

namespace mvsr {

/// Bounds on constructed carriers and on exhaustive enumerations.
struct Limits {
  std::uint64_t max_carrier = 4096;
  std::uint64_t max_enum = 10'000'000;
};

/// Process-wide bounds. Reads are safe from any thread; set_limits is meant
/// for start-up (CLI flags, test fixtures).
const Limits& limits() noexcept;
void set_limits(const Limits& l) noexcept;

/// Restores the previous bounds on scope exit.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) noexcept;
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

/// base^exp, saturating at cap + 1.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t cap) noexcept;

/// Throws Error(SizeGuard) if n exceeds limits().max_carrier.
void guard_carrier(std::uint64_t n, std::string_view what);
/// Throws Error(EnumGuard) if n exceeds limits().max_enum.
void guard_enum(std::uint64_t n, std::string_view what);

}  // namespace mvsr

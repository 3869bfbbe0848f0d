#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvsr/report.hpp"
#include "mvsr/table.hpp"

namespace mvsr {

/// A finite semiring given by its operation tables.
///
/// Construction validates only the shape of the data (indices in range, size
/// guard); the algebraic laws are checked by check_semiring_axioms.
class FiniteSemiring {
 public:
  FiniteSemiring(std::size_t size, Table add, Table mul, Elem zero, Elem one,
                 std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_(a, b); }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem one() const noexcept { return one_; }
  [[nodiscard]] const Table& add_table() const noexcept { return add_; }
  [[nodiscard]] const Table& mul_table() const noexcept { return mul_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  /// Label of a, or its index when no labels are attached.
  [[nodiscard]] std::string label(Elem a) const;

  [[nodiscard]] bool is_commutative() const noexcept;

  /// Equality of tables and constants; labels are ignored.
  [[nodiscard]] bool same_structure(const FiniteSemiring& other) const noexcept;

 private:
  std::size_t size_;
  Table add_;
  Table mul_;
  Elem zero_;
  Elem one_;
  std::vector<std::string> labels_;
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

template <typename... Args>
SemiringPtr make_semiring(Args&&... args) {
  return std::make_shared<const FiniteSemiring>(std::forward<Args>(args)...);
}

/// S1-S4 as eight named laws: add_associative, add_commutative, add_identity,
/// mul_associative, mul_identity, left_distributive, right_distributive,
/// zero_absorbing.
AxiomReport check_semiring_axioms(const FiniteSemiring& s);

bool is_additively_idempotent(const FiniteSemiring& s) noexcept;

/// Reflexive relation table; leq(a, b) iff a + b = b.
class PartialOrder {
 public:
  explicit PartialOrder(std::size_t size) : size_(size), rel_(size * size, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
    return rel_[a * size_ + b] != 0;
  }
  void set(Elem a, Elem b, bool v) noexcept { rel_[a * size_ + b] = v ? 1 : 0; }

  [[nodiscard]] bool is_reflexive() const noexcept;
  [[nodiscard]] bool is_antisymmetric() const noexcept;
  [[nodiscard]] bool is_transitive() const noexcept;
  /// Least upper bound of a and b, if it exists.
  [[nodiscard]] std::optional<Elem> join(Elem a, Elem b) const noexcept;
  /// True iff the order is total; `chain` then lists elements bottom to top.
  [[nodiscard]] bool is_chain(std::vector<Elem>* chain = nullptr) const;

 private:
  std::size_t size_;
  std::vector<char> rel_;
};

/// Natural order of an additively idempotent semiring; throws NotIdempotent.
PartialOrder natural_order(const FiniteSemiring& s);

/// True iff map is a semiring homomorphism S -> T preserving 0 and 1.
bool is_semiring_hom(const FiniteSemiring& source, const FiniteSemiring& target,
                     std::span<const Elem> map) noexcept;

/// Semiring with multiplication reversed.
FiniteSemiring opposite(const FiniteSemiring& s);

/// ({0,1}, or, and).
FiniteSemiring boolean_semiring();
/// One-element semiring (0 = 1).
FiniteSemiring trivial_semiring();
/// Integers modulo n (n >= 2) as a ring, used for non-idempotent checks.
FiniteSemiring integers_mod(std::size_t n);
/// Componentwise product of two semirings; element (a, b) has index a*|T|+b.
FiniteSemiring product(const FiniteSemiring& s, const FiniteSemiring& t);

}  // namespace mvsr

#include "mvsr/semiring.hpp"

#include <string>
#include <utility>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"

namespace mvsr {

FiniteSemiring::FiniteSemiring(std::size_t size, Table add, Table mul,
                               Elem zero, Elem one,
                               std::vector<std::string> labels)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      labels_(std::move(labels)) {
  if (size_ == 0) fail(ErrorKind::MalformedTable, "semiring carrier is empty");
  guard_carrier(size_, "semiring");
  require_table(add_, size_, size_, size_, "semiring add");
  require_table(mul_, size_, size_, size_, "semiring mul");
  if (zero_ >= size_ || one_ >= size_)
    fail(ErrorKind::MalformedTable, "semiring constant out of range");
  if (!labels_.empty() && labels_.size() != size_)
    fail(ErrorKind::MalformedTable, "semiring labels do not match size");
}

std::string FiniteSemiring::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

bool FiniteSemiring::is_commutative() const noexcept {
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = a + 1; b < size_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteSemiring::same_structure(const FiniteSemiring& o) const noexcept {
  return size_ == o.size_ && zero_ == o.zero_ && one_ == o.one_ &&
         add_ == o.add_ && mul_ == o.mul_;
}

AxiomReport check_semiring_axioms(const FiniteSemiring& s) {
  const auto n = static_cast<Elem>(s.size());
  AxiomReport report;

  auto triple_law = [&](const std::string& name, auto&& holds) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            report.add(name, false, {a, b, c});
            return;
          }
    report.add(name, true);
  };

  triple_law("add_associative", [&](Elem a, Elem b, Elem c) {
    return s.add(s.add(a, b), c) == s.add(a, s.add(b, c));
  });
  {
    std::vector<Elem> witness;
    for (Elem a = 0; a < n && witness.empty(); ++a)
      for (Elem b = 0; b < n; ++b)
        if (s.add(a, b) != s.add(b, a)) {
          witness = {a, b};
          break;
        }
    report.add("add_commutative", witness.empty(), witness);
  }
  {
    std::vector<Elem> witness;
    for (Elem a = 0; a < n; ++a)
      if (s.add(s.zero(), a) != a || s.add(a, s.zero()) != a) {
        witness = {a};
        break;
      }
    report.add("add_identity", witness.empty(), witness);
  }
  triple_law("mul_associative", [&](Elem a, Elem b, Elem c) {
    return s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c));
  });
  {
    std::vector<Elem> witness;
    for (Elem a = 0; a < n; ++a)
      if (s.mul(s.one(), a) != a || s.mul(a, s.one()) != a) {
        witness = {a};
        break;
      }
    report.add("mul_identity", witness.empty(), witness);
  }
  triple_law("left_distributive", [&](Elem a, Elem b, Elem c) {
    return s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c));
  });
  triple_law("right_distributive", [&](Elem a, Elem b, Elem c) {
    return s.mul(s.add(b, c), a) == s.add(s.mul(b, a), s.mul(c, a));
  });
  {
    std::vector<Elem> witness;
    for (Elem a = 0; a < n; ++a)
      if (s.mul(s.zero(), a) != s.zero() || s.mul(a, s.zero()) != s.zero()) {
        witness = {a};
        break;
      }
    report.add("zero_absorbing", witness.empty(), witness);
  }
  return report;
}

bool is_additively_idempotent(const FiniteSemiring& s) noexcept {
  for (Elem a = 0; a < s.size(); ++a)
    if (s.add(a, a) != a) return false;
  return true;
}

bool PartialOrder::is_reflexive() const noexcept {
  for (Elem a = 0; a < size_; ++a)
    if (!leq(a, a)) return false;
  return true;
}

bool PartialOrder::is_antisymmetric() const noexcept {
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = a + 1; b < size_; ++b)
      if (leq(a, b) && leq(b, a)) return false;
  return true;
}

bool PartialOrder::is_transitive() const noexcept {
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) {
      if (!leq(a, b)) continue;
      for (Elem c = 0; c < size_; ++c)
        if (leq(b, c) && !leq(a, c)) return false;
    }
  return true;
}

std::optional<Elem> PartialOrder::join(Elem a, Elem b) const noexcept {
  std::optional<Elem> best;
  for (Elem c = 0; c < size_; ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (!best || leq(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < size_; ++c)
    if (leq(a, c) && leq(b, c) && !leq(*best, c)) return std::nullopt;
  return best;
}

bool PartialOrder::is_chain(std::vector<Elem>* chain) const {
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = a + 1; b < size_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  if (chain) {
    // In a chain the number of elements below a fixes its position.
    chain->assign(size_, 0);
    for (Elem a = 0; a < size_; ++a) {
      std::size_t below = 0;
      for (Elem b = 0; b < size_; ++b)
        if (b != a && leq(b, a)) ++below;
      (*chain)[below] = a;
    }
  }
  return true;
}

PartialOrder natural_order(const FiniteSemiring& s) {
  if (!is_additively_idempotent(s))
    fail(ErrorKind::NotIdempotent, "natural order needs an idempotent sum");
  PartialOrder order(s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) order.set(a, b, s.add(a, b) == b);
  return order;
}

bool is_semiring_hom(const FiniteSemiring& source, const FiniteSemiring& target,
                     std::span<const Elem> map) noexcept {
  if (map.size() != source.size()) return false;
  for (Elem v : map)
    if (v >= target.size()) return false;
  if (map[source.zero()] != target.zero() || map[source.one()] != target.one())
    return false;
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = 0; b < source.size(); ++b) {
      if (map[source.add(a, b)] != target.add(map[a], map[b])) return false;
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
    }
  return true;
}

FiniteSemiring opposite(const FiniteSemiring& s) {
  Table mul(s.size(), s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) mul(a, b) = s.mul(b, a);
  return FiniteSemiring(s.size(), s.add_table(), std::move(mul), s.zero(),
                        s.one(), s.labels());
}

FiniteSemiring boolean_semiring() {
  return FiniteSemiring(2, Table::from_rows({{0, 1}, {1, 1}}),
                        Table::from_rows({{0, 0}, {0, 1}}), 0, 1, {"0", "1"});
}

FiniteSemiring trivial_semiring() {
  return FiniteSemiring(1, Table::from_rows({{0}}), Table::from_rows({{0}}), 0,
                        0, {"0"});
}

FiniteSemiring integers_mod(std::size_t n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "integers_mod needs n >= 2");
  Table add(n, n), mul(n, n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add(a, b) = static_cast<Elem>((a + b) % n);
      mul(a, b) = static_cast<Elem>((a * b) % n);
    }
  }
  return FiniteSemiring(n, std::move(add), std::move(mul), 0, 1,
                        std::move(labels));
}

FiniteSemiring product(const FiniteSemiring& s, const FiniteSemiring& t) {
  const std::size_t n = s.size() * t.size();
  guard_carrier(n, "semiring product");
  const auto pair = [&](Elem a, Elem b) {
    return static_cast<Elem>(a * t.size() + b);
  };
  Table add(n, n), mul(n, n);
  std::vector<std::string> labels(n);
  for (Elem a1 = 0; a1 < s.size(); ++a1)
    for (Elem b1 = 0; b1 < t.size(); ++b1) {
      const Elem x = pair(a1, b1);
      labels[x] = "(" + s.label(a1) + "," + t.label(b1) + ")";
      for (Elem a2 = 0; a2 < s.size(); ++a2)
        for (Elem b2 = 0; b2 < t.size(); ++b2) {
          const Elem y = pair(a2, b2);
          add(x, y) = pair(s.add(a1, a2), t.add(b1, b2));
          mul(x, y) = pair(s.mul(a1, a2), t.mul(b1, b2));
        }
    }
  return FiniteSemiring(n, std::move(add), std::move(mul),
                        pair(s.zero(), t.zero()), pair(s.one(), t.one()),
                        std::move(labels));
}

}  // namespace mvsr

#include "mvsr/mv_algebra.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"

namespace mvsr {

MvAlgebra::MvAlgebra(std::size_t size, Table oplus, std::vector<Elem> star,
                     Elem zero, std::vector<std::string> labels,
                     std::vector<Rational> values)
    : size_(size),
      oplus_(std::move(oplus)),
      star_(std::move(star)),
      zero_(zero),
      labels_(std::move(labels)),
      values_(std::move(values)) {
  if (size_ == 0) fail(ErrorKind::MalformedTable, "MV carrier is empty");
  guard_carrier(size_, "MV-algebra");
  require_table(oplus_, size_, size_, size_, "MV oplus");
  if (star_.size() != size_)
    fail(ErrorKind::MalformedTable, "MV star has wrong length");
  for (Elem s : star_)
    if (s >= size_) fail(ErrorKind::MalformedTable, "MV star entry out of range");
  if (zero_ >= size_) fail(ErrorKind::MalformedTable, "MV zero out of range");
  if (!labels_.empty() && labels_.size() != size_)
    fail(ErrorKind::MalformedTable, "MV labels do not match size");
  if (!values_.empty() && values_.size() != size_)
    fail(ErrorKind::MalformedTable, "MV values do not match size");

  odot_ = Table(size_, size_);
  vee_ = Table(size_, size_);
  wedge_ = Table(size_, size_);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      odot_(a, b) = star_[oplus_(star_[a], star_[b])];
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) vee_(a, b) = oplus_(odot_(a, star_[b]), b);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      wedge_(a, b) = star_[vee_(star_[a], star_[b])];
}

std::string MvAlgebra::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::optional<Elem> MvAlgebra::find_value(const Rational& v) const {
  for (Elem a = 0; a < values_.size(); ++a)
    if (values_[a] == v) return a;
  return std::nullopt;
}

bool MvAlgebra::same_structure(const MvAlgebra& o) const noexcept {
  return size_ == o.size_ && zero_ == o.zero_ && oplus_ == o.oplus_ &&
         star_ == o.star_;
}

AxiomReport check_mv_axioms(const MvAlgebra& a) {
  const auto n = static_cast<Elem>(a.size());
  AxiomReport report;
  auto unary = [&](const std::string& name, auto&& holds) {
    for (Elem x = 0; x < n; ++x)
      if (!holds(x)) return report.add(name, false, {x});
    report.add(name, true);
  };
  auto binary = [&](const std::string& name, auto&& holds) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!holds(x, y)) return report.add(name, false, {x, y});
    report.add(name, true);
  };
  auto ternary = [&](const std::string& name, auto&& holds) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!holds(x, y, z)) return report.add(name, false, {x, y, z});
    report.add(name, true);
  };

  ternary("oplus_associative", [&](Elem x, Elem y, Elem z) {
    return a.oplus(a.oplus(x, y), z) == a.oplus(x, a.oplus(y, z));
  });
  binary("oplus_commutative",
         [&](Elem x, Elem y) { return a.oplus(x, y) == a.oplus(y, x); });
  unary("oplus_identity", [&](Elem x) { return a.oplus(x, a.zero()) == x; });
  unary("mv1_involution", [&](Elem x) { return a.star(a.star(x)) == x; });
  unary("mv2_one_absorbs",
        [&](Elem x) { return a.oplus(x, a.one()) == a.one(); });
  binary("mv3", [&](Elem x, Elem y) {
    return a.oplus(a.star(a.oplus(a.star(x), y)), y) ==
           a.oplus(a.star(a.oplus(a.star(y), x)), x);
  });
  binary("oplus_via_odot", [&](Elem x, Elem y) {
    return a.oplus(x, y) == a.star(a.odot(a.star(x), a.star(y)));
  });
  binary("wedge_via_odot", [&](Elem x, Elem y) {
    return a.wedge(x, y) == a.odot(x, a.oplus(a.star(x), y));
  });
  unary("complement_is_one",
        [&](Elem x) { return a.oplus(x, a.star(x)) == a.one(); });

  // Natural order: partial order, bounded by 0 and 1, with vee/wedge as
  // join/meet.
  ternary("order_transitive", [&](Elem x, Elem y, Elem z) {
    return !(a.leq(x, y) && a.leq(y, z)) || a.leq(x, z);
  });
  binary("order_antisymmetric", [&](Elem x, Elem y) {
    return !(a.leq(x, y) && a.leq(y, x)) || x == y;
  });
  unary("order_bounds", [&](Elem x) {
    return a.leq(x, x) && a.leq(a.zero(), x) && a.leq(x, a.one());
  });
  ternary("vee_is_join", [&](Elem x, Elem y, Elem z) {
    const Elem j = a.vee(x, y);
    if (!a.leq(x, j) || !a.leq(y, j)) return false;
    return !(a.leq(x, z) && a.leq(y, z)) || a.leq(j, z);
  });
  ternary("wedge_is_meet", [&](Elem x, Elem y, Elem z) {
    const Elem m = a.wedge(x, y);
    if (!a.leq(m, x) || !a.leq(m, y)) return false;
    return !(a.leq(z, x) && a.leq(z, y)) || a.leq(z, m);
  });
  return report;
}

MvAlgebra lukasiewicz_chain(std::size_t k) {
  if (k < 2) fail(ErrorKind::ChainTooShort, "a chain needs at least 2 elements");
  guard_carrier(k, "Lukasiewicz chain");
  const auto top = static_cast<Elem>(k - 1);
  Table oplus(k, k);
  std::vector<Elem> star(k);
  std::vector<std::string> labels(k);
  std::vector<Rational> values(k);
  for (Elem i = 0; i < k; ++i) {
    star[i] = top - i;
    values[i] = Rational(i, top);
    labels[i] = to_string(values[i]);
    for (Elem j = 0; j < k; ++j) oplus(i, j) = std::min<Elem>(i + j, top);
  }
  return MvAlgebra(k, std::move(oplus), std::move(star), 0, std::move(labels),
                   std::move(values));
}

MvAlgebra trivial_mv() {
  return MvAlgebra(1, Table::from_rows({{0}}), {0}, 0, {"0"});
}

MvAlgebra product(const MvAlgebra& a, const MvAlgebra& b) {
  const std::size_t n = a.size() * b.size();
  guard_carrier(n, "MV product");
  const auto pair = [&](Elem x, Elem y) {
    return static_cast<Elem>(x * b.size() + y);
  };
  Table oplus(n, n);
  std::vector<Elem> star(n);
  std::vector<std::string> labels(n);
  for (Elem x1 = 0; x1 < a.size(); ++x1)
    for (Elem y1 = 0; y1 < b.size(); ++y1) {
      const Elem p = pair(x1, y1);
      star[p] = pair(a.star(x1), b.star(y1));
      labels[p] = "(" + a.label(x1) + "," + b.label(y1) + ")";
      for (Elem x2 = 0; x2 < a.size(); ++x2)
        for (Elem y2 = 0; y2 < b.size(); ++y2)
          oplus(p, pair(x2, y2)) = pair(a.oplus(x1, x2), b.oplus(y1, y2));
    }
  return MvAlgebra(n, std::move(oplus), std::move(star),
                   pair(a.zero(), b.zero()), std::move(labels));
}

LeqVerdict leq_equivalence_check(const MvAlgebra& a, Elem x, Elem y) {
  LeqVerdict v;
  v.star_oplus = a.oplus(a.star(x), y) == a.one();
  v.odot_star = a.odot(x, a.star(y)) == a.zero();
  v.decomposition = y == a.oplus(x, a.odot(y, a.star(x)));
  for (Elem z = 0; z < a.size(); ++z)
    if (a.oplus(x, z) == y) {
      v.exists_summand = true;
      v.witness = z;
      break;
    }
  v.inconsistent = !(v.star_oplus == v.odot_star &&
                     v.odot_star == v.decomposition &&
                     v.decomposition == v.exists_summand);
  return v;
}

namespace {

FiniteSemiring reduct_from(const MvAlgebra& a, bool vee_odot) {
  const std::size_t n = a.size();
  Table add(n, n), mul(n, n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      add(x, y) = vee_odot ? a.vee(x, y) : a.wedge(x, y);
      mul(x, y) = vee_odot ? a.odot(x, y) : a.oplus(x, y);
    }
  std::vector<std::string> labels;
  if (!a.labels().empty()) labels = a.labels();
  return vee_odot ? FiniteSemiring(n, std::move(add), std::move(mul), a.zero(),
                                   a.one(), std::move(labels))
                  : FiniteSemiring(n, std::move(add), std::move(mul), a.one(),
                                   a.zero(), std::move(labels));
}

}  // namespace

FiniteSemiring reduct_vee_odot(const MvAlgebra& a) { return reduct_from(a, true); }

FiniteSemiring reduct_wedge_oplus(const MvAlgebra& a) {
  return reduct_from(a, false);
}

bool star_is_reduct_isomorphism(const MvAlgebra& a) {
  const FiniteSemiring first = reduct_vee_odot(a);
  const FiniteSemiring second = reduct_wedge_oplus(a);
  for (Elem x = 0; x < a.size(); ++x)
    if (a.star(a.star(x)) != x) return false;
  return is_semiring_hom(first, second, a.star_table()) &&
         is_semiring_hom(second, first, a.star_table());
}

bool mv_semiring_negation_check(const FiniteSemiring& s,
                                std::span<const Elem> star) {
  if (star.size() != s.size()) return false;
  for (Elem v : star)
    if (v >= s.size()) return false;
  if (!s.is_commutative() || !is_additively_idempotent(s)) return false;
  const auto leq = [&](Elem x, Elem y) { return s.add(x, y) == y; };
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) {
      if ((s.mul(x, y) == s.zero()) != leq(y, star[x])) return false;
      if (s.add(x, y) != star[s.mul(star[x], star[s.mul(star[x], y)])])
        return false;
    }
  return true;
}

MvAlgebra mv_from_mv_semiring(const FiniteSemiring& s,
                              std::span<const Elem> star) {
  if (star.size() != s.size())
    fail(ErrorKind::MalformedTable, "negation has wrong length");
  Table oplus(s.size(), s.size());
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      oplus(x, y) = star[s.mul(star[x], star[y])];
  return MvAlgebra(s.size(), std::move(oplus),
                   std::vector<Elem>(star.begin(), star.end()), s.zero(),
                   s.labels());
}

bool is_mv_hom(const MvAlgebra& source, const MvAlgebra& target,
               std::span<const Elem> map) noexcept {
  if (map.size() != source.size()) return false;
  for (Elem v : map)
    if (v >= target.size()) return false;
  if (map[source.zero()] != target.zero()) return false;
  for (Elem x = 0; x < source.size(); ++x) {
    if (map[source.star(x)] != target.star(map[x])) return false;
    for (Elem y = 0; y < source.size(); ++y)
      if (map[source.oplus(x, y)] != target.oplus(map[x], map[y])) return false;
  }
  return true;
}

bool is_ideal(const MvAlgebra& a, std::span<const Elem> members) {
  std::vector<char> in(a.size(), 0);
  for (Elem m : members) {
    if (m >= a.size()) return false;
    in[m] = 1;
  }
  if (!in[a.zero()]) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!in[x]) continue;
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(y, x) && !in[y]) return false;
      if (in[y] && !in[a.oplus(x, y)]) return false;
    }
  }
  return true;
}

Elem distance(const MvAlgebra& a, Elem x, Elem y) noexcept {
  return a.oplus(a.odot(x, a.star(y)), a.odot(y, a.star(x)));
}

std::vector<MvIdeal> ideals(const MvAlgebra& a) {
  const std::size_t n = a.size();
  if (n > 20) fail(ErrorKind::EnumGuard, "ideal enumeration limited to 2^20 subsets");
  std::vector<MvIdeal> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> a.zero()) & 1U)) continue;
    MvIdeal members;
    for (Elem x = 0; x < n; ++x)
      if ((mask >> x) & 1U) members.push_back(x);
    if (is_ideal(a, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const MvIdeal& l, const MvIdeal& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

Partition congruence_from_ideal(const MvAlgebra& a, const MvIdeal& ideal) {
  if (!is_ideal(a, ideal)) fail(ErrorKind::NotAnIdeal, "subset is not an MV-ideal");
  std::vector<char> in(a.size(), 0);
  for (Elem m : ideal) in[m] = 1;
  std::vector<Elem> class_of(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    class_of[x] = x;
    for (Elem y = 0; y < x; ++y)
      if (in[distance(a, x, y)]) {
        class_of[x] = class_of[y];
        break;
      }
  }
  return canonical_partition(class_of);
}

bool is_congruence(const MvAlgebra& a, const Partition& p) {
  if (p.size() != a.size()) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (p[x] != p[y]) continue;
      if (p[a.star(x)] != p[a.star(y)]) return false;
      for (Elem z = 0; z < a.size(); ++z)
        if (p[a.oplus(x, z)] != p[a.oplus(y, z)]) return false;
    }
  return true;
}

MvIdeal ideal_from_congruence(const MvAlgebra& a, const Partition& partition) {
  if (!is_congruence(a, partition))
    fail(ErrorKind::NotACongruence, "partition is not an MV-congruence");
  MvIdeal out;
  for (Elem x = 0; x < a.size(); ++x)
    if (partition[x] == partition[a.zero()]) out.push_back(x);
  return out;
}

std::vector<Partition> congruences(const MvAlgebra& a) {
  const std::size_t n = a.size();
  // Bell numbers bound the restricted-growth-string enumeration.
  std::vector<std::uint64_t> bell_row{1};
  std::uint64_t bell = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{bell_row.back()};
    for (std::uint64_t v : bell_row) next.push_back(next.back() + v);
    bell_row = std::move(next);
    bell = bell_row.front();
    if (bell > limits().max_enum) break;
  }
  guard_enum(bell, "congruence enumeration");

  std::vector<Partition> out;
  Partition rgs(n, 0);
  std::vector<Elem> max_prefix(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (is_congruence(a, rgs)) out.push_back(rgs);
      return;
    }
    const Elem limit = i == 0 ? 0 : max_prefix[i - 1] + 1;
    for (Elem c = 0; c <= limit; ++c) {
      rgs[i] = c;
      max_prefix[i] = i == 0 ? c : std::max(max_prefix[i - 1], c);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

bool ideal_congruence_bijection_holds(const MvAlgebra& a) {
  const auto all_ideals = ideals(a);
  const auto all_congruences = congruences(a);
  if (all_ideals.size() != all_congruences.size()) return false;
  for (const auto& i : all_ideals)
    if (ideal_from_congruence(a, congruence_from_ideal(a, i)) != i) return false;
  for (const auto& c : all_congruences)
    if (congruence_from_ideal(a, ideal_from_congruence(a, c)) != c) return false;
  return true;
}

MvQuotient quotient(const MvAlgebra& a, const MvIdeal& ideal) {
  const Partition p = congruence_from_ideal(a, ideal);
  const auto classes = static_cast<std::size_t>(
      *std::max_element(p.begin(), p.end()) + 1);
  std::vector<Elem> rep(classes, 0);
  std::vector<char> seen(classes, 0);
  for (Elem x = 0; x < a.size(); ++x)
    if (!seen[p[x]]) {
      seen[p[x]] = 1;
      rep[p[x]] = x;
    }
  Table oplus(classes, classes);
  std::vector<Elem> star(classes);
  std::vector<std::string> labels(classes);
  for (Elem c = 0; c < classes; ++c) {
    star[c] = p[a.star(rep[c])];
    labels[c] = "[" + a.label(rep[c]) + "]";
    for (Elem d = 0; d < classes; ++d) oplus(c, d) = p[a.oplus(rep[c], rep[d])];
  }
  MvAlgebra q(classes, std::move(oplus), std::move(star), p[a.zero()],
              std::move(labels));
  return {std::move(q), p};
}

BooleanCenter boolean_center(const MvAlgebra& a) {
  BooleanCenter bc;
  std::vector<char> in(a.size(), 0);
  bc.idempotents_agree = true;
  for (Elem x = 0; x < a.size(); ++x) {
    const bool add_idem = a.oplus(x, x) == x;
    const bool mul_idem = a.odot(x, x) == x;
    if (add_idem != mul_idem) bc.idempotents_agree = false;
    if (add_idem) {
      bc.members.push_back(x);
      in[x] = 1;
    }
  }
  bc.closed = true;
  for (Elem u : bc.members) {
    if (!in[a.star(u)]) bc.closed = false;
    for (Elem v : bc.members)
      if (!in[a.oplus(u, v)] || !in[a.odot(u, v)]) bc.closed = false;
  }
  bc.decompositions = true;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem u : bc.members) {
      const Elem us = a.star(u);
      if (a.wedge(a.oplus(x, u), a.oplus(x, us)) != x) bc.decompositions = false;
      if (a.vee(a.odot(x, u), a.odot(x, us)) != x) bc.decompositions = false;
    }
  return bc;
}

}  // namespace mvsr

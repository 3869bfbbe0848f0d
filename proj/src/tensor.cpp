#include "mvsr/tensor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "mvsr/error.hpp"
#include "mvsr/families.hpp"
#include "mvsr/gamma.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/rational.hpp"

namespace mvsr {

bool subset_less(SubsetMask a, SubsetMask b) noexcept {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Equal size: the set holding the lowest differing element sorts first.
  const SubsetMask d = a ^ b;
  return (a & (d & (~d + 1))) != 0;
}

bool subset_less(std::span<const Elem> a, std::span<const Elem> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct UnionFind {
  std::vector<SubsetMask> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), SubsetMask{0});
  }
  SubsetMask find(SubsetMask x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

void require_tensor_scalars(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "tensor factors over different scalars");
  if (!is_additively_idempotent(m.scalars()))
    fail(ErrorKind::NotIdempotent, "tensor product needs additively idempotent scalars");
  if (!m.scalars().is_commutative())
    fail(ErrorKind::InvalidArgument, "tensor product implemented for commutative scalars");
}

CommutativeMonoid two_element_semilattice() {
  CommutativeMonoid two;
  two.size = 2;
  two.add = Table::from_rows({{0, 1}, {1, 1}});
  two.zero = 0;
  return two;
}

// Representatives in canonical order, tensor table and join table: enough to
// fold maps over classes before the module is assembled.
struct Core {
  std::vector<std::vector<Elem>> reps;
  Table tensors;
  Table join;
};

// k[c] = sum of f over the representative of c, accepted only when k is a
// monoid hom T -> L with k(x (x) y) = f(x, y).
template <typename Sum>
std::optional<ElemMap> factor_core(const Core& core, std::size_t l_size, Elem l_zero,
                                   const Sum& sum, const Table& f) {
  const std::size_t size = core.reps.size();
  const std::size_t q = f.cols();
  ElemMap k(size);
  for (std::size_t c = 0; c < size; ++c) {
    Elem v = l_zero;
    for (Elem p : core.reps[c]) v = sum(v, f(p / q, p % q));
    k[c] = v;
  }
  if (k[0] != l_zero) return std::nullopt;
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t d = 0; d < size; ++d)
      if (k[core.join(c, d)] != sum(k[c], k[d])) return std::nullopt;
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t y = 0; y < q; ++y)
      if (k[core.tensors(x, y)] != f(x, y) || f(x, y) >= l_size) return std::nullopt;
  return k;
}

std::optional<ElemMap> factor(const TensorProduct& t, const CommutativeMonoid& l, const Table& f) {
  Core core{t.representatives, t.tensors, t.module.add_table()};
  return factor_core(core, l.size, l.zero, [&](Elem a, Elem b) { return l.sum(a, b); }, f);
}

std::optional<ElemMap> factor_into(const TensorProduct& t, const FiniteSemimodule& p,
                                   const Table& f) {
  Core core{t.representatives, t.tensors, t.module.add_table()};
  return factor_core(core, p.size(), p.zero(), [&](Elem a, Elem b) { return p.add(a, b); }, f);
}

// Class action induced by a map on pairs, certified by factoring; throws
// IllDefinedAction.
ElemMap induced_class_map(const Core& core, const Table& images, const char* what) {
  const std::size_t size = core.reps.size();
  auto k = factor_core(core, size, 0, [&](Elem a, Elem b) { return core.join(a, b); }, images);
  if (!k) fail(ErrorKind::IllDefinedAction, std::string(what) + " does not respect the tensor classes");
  return *k;
}

std::string class_label(const std::vector<Elem>& rep, const FiniteSemimodule& m,
                        const FiniteSemimodule& n) {
  if (rep.empty()) return "0";
  std::string out;
  for (Elem p : rep) {
    if (!out.empty()) out += " v ";
    out += m.label(p / n.size()) + "(x)" + n.label(p % n.size());
  }
  return out;
}

TensorProduct assemble(const FiniteSemimodule& m, const FiniteSemimodule& n, TensorMethod method,
                       Core core, std::vector<Elem> mask_class) {
  const std::size_t size = core.reps.size();
  const std::size_t q = m.scalars().size();
  Table action(q, size);
  for (Elem a = 0; a < q; ++a) {
    Table images(m.size(), n.size());
    Table images_right(m.size(), n.size());
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < n.size(); ++y) {
        images(x, y) = core.tensors(m.act(a, x), y);
        images_right(x, y) = core.tensors(x, n.act(a, y));
      }
    const ElemMap k = induced_class_map(core, images, "scalar action");
    if (images != images_right)
      fail(ErrorKind::IllDefinedAction, "left and right scalar actions disagree on tensors");
    for (std::size_t c = 0; c < size; ++c) action(a, c) = k[c];
  }
  std::vector<std::string> labels;
  for (const auto& rep : core.reps) labels.push_back(class_label(rep, m, n));
  FiniteSemimodule module(m.scalars_ptr(), size, core.join, 0, std::move(action), std::move(labels));
  return TensorProduct{m, n, method, std::move(core.reps), std::move(core.tensors),
                       std::move(module), std::move(mask_class)};
}

TensorProduct quotient_tensor(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  const std::size_t p = m.size(), q = n.size(), base = p * q;
  if (base > 31)
    fail(ErrorKind::SizeGuard, "free semilattice on M x N needs 2^" + std::to_string(base) +
                                   " elements, max_carrier is " + std::to_string(limits().max_carrier));
  guard_carrier(std::uint64_t{1} << base, "free semilattice on M x N");
  const auto bit = [&](Elem x, Elem y) { return SubsetMask{1} << (x * q + y); };

  std::vector<std::pair<SubsetMask, SubsetMask>> rel;
  for (Elem y = 0; y < q; ++y)
    for (SubsetMask s = 0; s < (SubsetMask{1} << p); ++s) {
      Elem join = m.zero();
      SubsetMask pairs = 0;
      for (Elem x = 0; x < p; ++x)
        if (s >> x & 1) {
          join = m.add(join, x);
          pairs |= bit(x, y);
        }
      rel.emplace_back(bit(join, y), pairs);
    }
  for (Elem x = 0; x < p; ++x)
    for (SubsetMask s = 0; s < (SubsetMask{1} << q); ++s) {
      Elem join = n.zero();
      SubsetMask pairs = 0;
      for (Elem y = 0; y < q; ++y)
        if (s >> y & 1) {
          join = n.add(join, y);
          pairs |= bit(x, y);
        }
      rel.emplace_back(bit(x, join), pairs);
    }
  for (Elem a = 0; a < m.scalars().size(); ++a)
    for (Elem x = 0; x < p; ++x)
      for (Elem y = 0; y < q; ++y) rel.emplace_back(bit(m.act(a, x), y), bit(x, n.act(a, y)));

  const SemilatticeCongruence cong = congruence_closure(base, rel);
  if (!cong.union_compatible)
    fail(ErrorKind::InvalidArgument, "congruence closure is not union-compatible");

  const SubsetMask count = SubsetMask{1} << base;
  std::vector<SubsetMask> least(cong.classes, 0);
  std::vector<char> seen(cong.classes, 0);
  for (SubsetMask s = 0; s < count; ++s) {
    const Elem c = cong.class_of[s];
    if (!seen[c] || subset_less(s, least[c])) {
      least[c] = s;
      seen[c] = 1;
    }
  }
  std::vector<Elem> order(cong.classes);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return subset_less(least[a], least[b]); });
  std::vector<Elem> renumber(cong.classes);
  for (Elem i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  Core core;
  for (Elem c : order) {
    std::vector<Elem> rep;
    for (Elem i = 0; i < base; ++i)
      if (least[c] >> i & 1) rep.push_back(i);
    core.reps.push_back(std::move(rep));
  }
  std::vector<Elem> mask_class(count);
  for (SubsetMask s = 0; s < count; ++s) mask_class[s] = renumber[cong.class_of[s]];
  core.tensors = Table(p, q);
  for (Elem x = 0; x < p; ++x)
    for (Elem y = 0; y < q; ++y) core.tensors(x, y) = mask_class[bit(x, y)];
  const std::size_t size = order.size();
  core.join = Table(size, size);
  for (Elem c = 0; c < size; ++c)
    for (Elem d = 0; d < size; ++d) core.join(c, d) = mask_class[least[order[c]] | least[order[d]]];
  return assemble(m, n, TensorMethod::Quotient, std::move(core), std::move(mask_class));
}

using Signature = std::vector<std::uint64_t>;

TensorProduct separating_tensor(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  const std::size_t p = m.size(), q = n.size(), base = p * q;
  const std::vector<Table> bims = bimorphisms(m, n, two_element_semilattice());
  const std::size_t words = (bims.size() + 63) / 64;
  std::vector<Signature> sig(base, Signature(words, 0));
  for (std::size_t b = 0; b < bims.size(); ++b)
    for (Elem x = 0; x < p; ++x)
      for (Elem y = 0; y < q; ++y)
        if (bims[b](x, y)) sig[x * q + y][b / 64] |= std::uint64_t{1} << (b % 64);
  const auto unite = [&](const Signature& a, const Signature& b) {
    Signature out(words);
    for (std::size_t w = 0; w < words; ++w) out[w] = a[w] | b[w];
    return out;
  };
  const auto below = [&](const Signature& a, const Signature& b) {
    for (std::size_t w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  };

  std::map<Signature, Elem> index;
  std::vector<Signature> elems{Signature(words, 0)};
  index.emplace(elems[0], 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t pr = 0; pr < base; ++pr) {
      Signature s = unite(elems[i], sig[pr]);
      if (index.emplace(s, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(s));
        guard_carrier(elems.size(), "tensor product");
      }
    }

  // Least pair set with the given join: combinations of the pairs below it,
  // by increasing size in lexicographic order.
  std::uint64_t budget = 0;
  std::vector<std::vector<Elem>> reps(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    std::vector<Elem> cand;
    for (Elem pr = 0; pr < base; ++pr)
      if (below(sig[pr], elems[e])) cand.push_back(pr);
    bool found = false;
    for (std::size_t r = 0; r <= cand.size() && !found; ++r) {
      std::vector<std::size_t> pick(r);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        guard_enum(++budget, "tensor representatives");
        Signature s(words, 0);
        for (std::size_t i : pick) s = unite(s, sig[cand[i]]);
        if (s == elems[e]) {
          for (std::size_t i : pick) reps[e].push_back(cand[i]);
          found = true;
          break;
        }
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == cand.size() - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  std::vector<Elem> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return subset_less(reps[a], reps[b]); });
  std::vector<Elem> renumber(elems.size());
  for (Elem i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  Core core;
  for (Elem e : order) core.reps.push_back(reps[e]);
  core.tensors = Table(p, q);
  for (Elem x = 0; x < p; ++x)
    for (Elem y = 0; y < q; ++y) core.tensors(x, y) = renumber[index.at(sig[x * q + y])];
  const std::size_t size = elems.size();
  core.join = Table(size, size);
  for (Elem c = 0; c < size; ++c)
    for (Elem d = 0; d < size; ++d)
      core.join(c, d) = renumber[index.at(unite(elems[order[c]], elems[order[d]]))];
  return assemble(m, n, TensorMethod::Separating, std::move(core), {});
}

}  // namespace

SemilatticeCongruence congruence_closure(
    std::size_t base_size, std::span<const std::pair<SubsetMask, SubsetMask>> pairs) {
  if (base_size > 31)
    fail(ErrorKind::SizeGuard, "free semilattice needs 2^" + std::to_string(base_size) +
                                   " elements, max_carrier is " + std::to_string(limits().max_carrier));
  const SubsetMask count = SubsetMask{1} << base_size;
  guard_carrier(count, "free semilattice");
  UnionFind uf(count);
  std::vector<std::pair<SubsetMask, SubsetMask>> work;
  for (const auto& [a, b] : pairs) {
    if (a >= count || b >= count) fail(ErrorKind::InvalidArgument, "pair outside the free semilattice");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    const SubsetMask ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) continue;
    uf.parent[std::max(ra, rb)] = std::min(ra, rb);
    // Singleton witnesses suffice: every c is a union of singletons.
    for (std::size_t i = 0; i < base_size; ++i) {
      const SubsetMask c = SubsetMask{1} << i;
      if ((a | c) != (b | c)) work.emplace_back(a | c, b | c);
    }
  }
  std::vector<Elem> root(count);
  for (SubsetMask s = 0; s < count; ++s) root[s] = uf.find(s);

  SemilatticeCongruence out;
  out.base_size = base_size;
  out.class_of = canonical_partition(root);
  out.classes = count == 0 ? 0 : *std::max_element(out.class_of.begin(), out.class_of.end()) + 1;
  // a ~ rep(a) must give a|c ~ rep(a)|c for every c.
  out.union_compatible = true;
  for (SubsetMask a = 0; a < count && out.union_compatible; ++a)
    for (SubsetMask c = 0; c < count; ++c)
      if (root[a | c] != root[root[a] | c]) {
        out.union_compatible = false;
        break;
      }
  return out;
}

Elem TensorProduct::class_of(std::span<const Elem> pairs) const {
  Elem c = 0;
  for (Elem p : pairs) {
    if (p >= left.size() * right.size()) fail(ErrorKind::InvalidArgument, "pair index out of range");
    c = module.add(c, tensors(p / right.size(), p % right.size()));
  }
  return c;
}

TensorProduct tensor_product(const FiniteSemimodule& m, const FiniteSemimodule& n,
                             TensorMethod method) {
  require_tensor_scalars(m, n);
  return method == TensorMethod::Quotient ? quotient_tensor(m, n) : separating_tensor(m, n);
}

bool same_tensor_product(const TensorProduct& a, const TensorProduct& b) noexcept {
  return a.representatives == b.representatives && a.tensors == b.tensors &&
         a.module.same_structure(b.module);
}

bool is_bimorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const CommutativeMonoid& l, const Table& f) noexcept {
  if (f.rows() != m.size() || f.cols() != n.size() || !f.entries_below(l.size)) return false;
  for (Elem y = 0; y < n.size(); ++y)
    if (f(m.zero(), y) != l.zero) return false;
  for (Elem x = 0; x < m.size(); ++x)
    if (f(x, n.zero()) != l.zero) return false;
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < n.size(); ++y) {
      for (Elem x2 = 0; x2 < m.size(); ++x2)
        if (f(m.add(x, x2), y) != l.sum(f(x, y), f(x2, y))) return false;
      for (Elem y2 = 0; y2 < n.size(); ++y2)
        if (f(x, n.add(y, y2)) != l.sum(f(x, y), f(x, y2))) return false;
      for (Elem a = 0; a < m.scalars().size(); ++a)
        if (f(m.act(a, x), y) != f(x, n.act(a, y))) return false;
    }
  return true;
}

std::vector<Table> bimorphisms(const FiniteSemimodule& m, const FiniteSemimodule& n,
                               const CommutativeMonoid& l) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "bimorphism factors over different scalars");
  const std::vector<ElemMap> slot = monoid_homs(n.monoid(), l);
  guard_carrier(slot.size(), "hom(N, L)");
  std::map<ElemMap, Elem> where;
  for (Elem i = 0; i < slot.size(); ++i) where.emplace(slot[i], i);
  CommutativeMonoid h;
  h.size = slot.size();
  h.add = Table(h.size, h.size);
  ElemMap tmp(n.size());
  for (Elem i = 0; i < h.size; ++i)
    for (Elem j = 0; j < h.size; ++j) {
      for (Elem y = 0; y < n.size(); ++y) tmp[y] = l.sum(slot[i][y], slot[j][y]);
      h.add(i, j) = where.at(tmp);
    }
  h.zero = where.at(ElemMap(n.size(), l.zero));

  std::vector<Table> out;
  for_each_monoid_hom(m.monoid(), h, [&](const ElemMap& g) {
    Table f(m.size(), n.size());
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < n.size(); ++y) f(x, y) = slot[g[x]][y];
    for (Elem a = 0; a < m.scalars().size(); ++a)
      for (Elem x = 0; x < m.size(); ++x)
        for (Elem y = 0; y < n.size(); ++y)
          if (f(m.act(a, x), y) != f(x, n.act(a, y))) return true;
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

AxiomReport check_tensor_laws(const TensorProduct& t) {
  const FiniteSemimodule& m = t.left;
  const FiniteSemimodule& n = t.right;
  const FiniteSemimodule& tm = t.module;
  AxiomReport r;
  const auto law = [&](const std::string& name, auto&& body) {
    std::vector<Elem> witness;
    r.add(name, body(witness), std::move(witness));
  };
  law("left_additive", [&](std::vector<Elem>& w) {
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem x2 = 0; x2 < m.size(); ++x2)
        for (Elem y = 0; y < n.size(); ++y)
          if (t.tensor(m.add(x, x2), y) != tm.add(t.tensor(x, y), t.tensor(x2, y))) {
            w = {x, x2, y};
            return false;
          }
    return true;
  });
  law("right_additive", [&](std::vector<Elem>& w) {
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < n.size(); ++y)
        for (Elem y2 = 0; y2 < n.size(); ++y2)
          if (t.tensor(x, n.add(y, y2)) != tm.add(t.tensor(x, y), t.tensor(x, y2))) {
            w = {x, y, y2};
            return false;
          }
    return true;
  });
  law("zero_tensors", [&](std::vector<Elem>& w) {
    for (Elem x = 0; x < m.size(); ++x)
      if (t.tensor(x, n.zero()) != tm.zero()) {
        w = {x};
        return false;
      }
    for (Elem y = 0; y < n.size(); ++y)
      if (t.tensor(m.zero(), y) != tm.zero()) {
        w = {y};
        return false;
      }
    return true;
  });
  law("balanced", [&](std::vector<Elem>& w) {
    for (Elem a = 0; a < m.scalars().size(); ++a)
      for (Elem x = 0; x < m.size(); ++x)
        for (Elem y = 0; y < n.size(); ++y)
          if (t.tensor(m.act(a, x), y) != t.tensor(x, n.act(a, y))) {
            w = {a, x, y};
            return false;
          }
    return true;
  });
  law("joins_of_tensors", [&](std::vector<Elem>& w) {
    for (Elem c = 0; c < t.size(); ++c)
      if (t.class_of(t.representatives[c]) != c) {
        w = {c};
        return false;
      }
    return true;
  });
  law("representatives_least", [&](std::vector<Elem>& w) {
    for (Elem c = 0; c + 1 < t.size(); ++c)
      if (!subset_less(t.representatives[c], t.representatives[c + 1])) {
        w = {c};
        return false;
      }
    return true;
  });
  r.merge(check_semimodule(tm), "module.");
  return r;
}

UniversalProperty universal_property(const TensorProduct& t,
                                     std::span<const CommutativeMonoid> family) {
  std::vector<CommutativeMonoid> owned;
  if (family.empty()) {
    owned = small_monoid_family();
    owned.push_back(t.left.monoid());
    owned.push_back(t.right.monoid());
    family = owned;
  }
  UniversalProperty out;
  const CommutativeMonoid tm = t.module.monoid();
  const std::size_t p = t.left.size(), q = t.right.size();
  for (const CommutativeMonoid& l : family) {
    ++out.monoids;
    const std::vector<Table> bims = bimorphisms(t.left, t.right, l);
    out.bimorphisms += bims.size();
    std::map<std::vector<Elem>, std::size_t> through;
    for_each_monoid_hom(tm, l, [&](const ElemMap& k) {
      std::vector<Elem> comp(p * q);
      for (Elem x = 0; x < p; ++x)
        for (Elem y = 0; y < q; ++y) comp[x * q + y] = k[t.tensor(x, y)];
      ++through[comp];
      return true;
    });
    std::size_t matched = 0;
    for (const Table& f : bims) {
      if (!factor(t, l, f)) ++out.existence_failures;
      const auto it = through.find(f.data());
      if (it == through.end() || it->second != 1) ++out.uniqueness_failures;
      if (it != through.end()) matched += it->second;
    }
    std::size_t total = 0;
    for (const auto& [comp, count] : through) total += count;
    out.uniqueness_failures += total - matched;
  }
  return out;
}

namespace {

void require_same_monoid(const FiniteSemimodule& a, const FiniteSemimodule& b, const char* what) {
  if (a.size() != b.size() || a.add_table() != b.add_table() || a.zero() != b.zero())
    fail(ErrorKind::InvalidArgument, std::string(what) + ": action on a different monoid");
}

void require_commuting(const FiniteSemimodule& a, const FiniteSemimodule& b, const char* what) {
  for (Elem s = 0; s < a.scalars().size(); ++s)
    for (Elem r = 0; r < b.scalars().size(); ++r)
      for (Elem x = 0; x < a.size(); ++x)
        if (a.act(s, b.act(r, x)) != b.act(r, a.act(s, x)))
          fail(ErrorKind::InvalidArgument, std::string(what) + ": actions do not commute");
}

FiniteSemimodule induced_side(const TensorProduct& t, const FiniteSemimodule& action, bool left) {
  Core core{t.representatives, t.tensors, t.module.add_table()};
  const std::size_t q = action.scalars().size();
  const std::size_t base = t.left.size() * t.right.size();
  Table table(q, t.size());
  for (Elem b = 0; b < q; ++b) {
    Table images(t.left.size(), t.right.size());
    for (Elem x = 0; x < t.left.size(); ++x)
      for (Elem y = 0; y < t.right.size(); ++y)
        images(x, y) = left ? t.tensor(action.act(b, x), y) : t.tensor(x, action.act(b, y));
    const ElemMap k = induced_class_map(core, images, "induced action");
    if (!t.mask_class.empty()) {
      // Every member of every class, not only the representatives.
      for (SubsetMask s = 0; s < t.mask_class.size(); ++s) {
        Elem image = 0;
        for (Elem i = 0; i < base; ++i)
          if (s >> i & 1) image = t.module.add(image, images(i / t.right.size(), i % t.right.size()));
        if (image != k[t.mask_class[s]])
          fail(ErrorKind::IllDefinedAction, "induced action differs within a class");
      }
    }
    for (Elem c = 0; c < t.size(); ++c) table(b, c) = k[c];
  }
  return FiniteSemimodule(action.scalars_ptr(), t.size(), t.module.add_table(), t.module.zero(),
                          std::move(table), t.module.labels());
}

}  // namespace

ScalarStructures scalar_structures(const TensorProduct& t, const FiniteSemimodule* left_action,
                                   const FiniteSemimodule* right_action) {
  ScalarStructures out;
  if (left_action) {
    require_same_monoid(t.left, *left_action, "left action");
    require_commuting(t.left, *left_action, "left action");
    out.left = induced_side(t, *left_action, true);
    out.left_laws = check_semimodule(*out.left);
  }
  if (right_action) {
    require_same_monoid(t.right, *right_action, "right action");
    require_commuting(t.right, *right_action, "right action");
    out.right = induced_side(t, *right_action, false);
    out.right_laws = check_semimodule(*out.right);
  }
  const auto commutes = [&](const FiniteSemimodule& s) {
    for (Elem a = 0; a < t.module.scalars().size(); ++a)
      for (Elem b = 0; b < s.scalars().size(); ++b)
        for (Elem c = 0; c < t.size(); ++c)
          if (t.module.act(a, s.act(b, c)) != s.act(b, t.module.act(a, c))) return false;
    return true;
  };
  out.bisemimodule = (!out.left || commutes(*out.left)) && (!out.right || commutes(*out.right));
  return out;
}

HomAction hom_lattice_structure(const FiniteSemimodule& m, const FiniteSemimodule& m_b,
                                const FiniteSemimodule& n) {
  require_same_monoid(m, m_b, "hom action");
  require_commuting(m, m_b, "hom action");
  HomSemilattice hs = hom_set(m, n);
  const std::size_t q = m_b.scalars().size();
  Table action(q, hs.size());
  ElemMap tmp(m.size());
  for (Elem b = 0; b < q; ++b)
    for (Elem i = 0; i < hs.size(); ++i) {
      for (Elem x = 0; x < m.size(); ++x) tmp[x] = hs.homs[i][m_b.act(b, x)];
      const auto idx = hs.index_of(tmp);
      if (!idx) fail(ErrorKind::IllDefinedAction, "shifted hom is not a hom");
      action(b, i) = *idx;
    }
  FiniteSemimodule module(m_b.scalars_ptr(), hs.size(), hs.add, hs.zero, std::move(action));
  AxiomReport laws = check_semimodule(module);
  return HomAction{std::move(hs), std::move(module), std::move(laws)};
}

namespace {

// outer is the factor that becomes the source of the right-hand homs.
ZetaReport zeta_impl(const TensorProduct& t, const FiniteSemimodule& t_b,
                     const FiniteSemimodule& p, const HomAction& inner,
                     const FiniteSemimodule& outer, bool outer_is_left) {
  const HomSemilattice lhs = hom_set(t_b, p);
  const HomSemilattice rhs = hom_set(outer, inner.module);
  const FiniteSemimodule& other = outer_is_left ? t.right : t.left;
  const auto tensor = [&](Elem o, Elem r) {
    return outer_is_left ? t.tensor(o, r) : t.tensor(r, o);
  };
  ZetaReport out;
  out.lhs = lhs.size();
  out.rhs = rhs.size();
  out.well_defined = true;
  const Elem none = static_cast<Elem>(-1);
  out.forward.assign(lhs.size(), none);
  out.backward.assign(rhs.size(), none);
  ElemMap slot(other.size()), image(outer.size());
  for (Elem i = 0; i < lhs.size(); ++i) {
    bool ok = true;
    for (Elem o = 0; o < outer.size() && ok; ++o) {
      for (Elem r = 0; r < other.size(); ++r) slot[r] = lhs.homs[i][tensor(o, r)];
      const auto idx = inner.homs.index_of(slot);
      if (!idx) ok = false;
      else image[o] = *idx;
    }
    const auto idx = ok ? rhs.index_of(image) : std::nullopt;
    if (!idx) out.well_defined = false;
    else out.forward[i] = *idx;
  }
  for (Elem j = 0; j < rhs.size(); ++j) {
    Table f(t.left.size(), t.right.size());
    for (Elem o = 0; o < outer.size(); ++o)
      for (Elem r = 0; r < other.size(); ++r) {
        const Elem v = inner.homs.homs[rhs.homs[j][o]][r];
        if (outer_is_left) f(o, r) = v;
        else f(r, o) = v;
      }
    const auto k = factor_into(t, p, f);
    const auto idx = k ? lhs.index_of(*k) : std::nullopt;
    if (!idx) out.well_defined = false;
    else out.backward[j] = *idx;
  }
  if (!out.well_defined) return out;
  out.inverse = lhs.size() == rhs.size();
  for (Elem i = 0; i < lhs.size() && out.inverse; ++i)
    out.inverse = out.backward[out.forward[i]] == i;
  for (Elem j = 0; j < rhs.size() && out.inverse; ++j)
    out.inverse = out.forward[out.backward[j]] == j;
  out.preserves_joins = out.forward[lhs.zero] == rhs.zero;
  for (Elem i = 0; i < lhs.size() && out.preserves_joins; ++i)
    for (Elem k = 0; k < lhs.size(); ++k)
      if (out.forward[lhs.add(i, k)] != rhs.add(out.forward[i], out.forward[k])) {
        out.preserves_joins = false;
        break;
      }
  return out;
}

}  // namespace

ZetaReport zeta_isomorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                            const FiniteSemimodule& n_b, const FiniteSemimodule& p) {
  const TensorProduct t = tensor_product(m, n);
  const ScalarStructures ss = scalar_structures(t, nullptr, &n_b);
  const HomAction inner = hom_lattice_structure(n_b, n, p);
  return zeta_impl(t, *ss.right, p, inner, m, true);
}

ZetaReport zeta_isomorphism_prime(const FiniteSemimodule& m, const FiniteSemimodule& m_b,
                                  const FiniteSemimodule& n, const FiniteSemimodule& p) {
  const TensorProduct t = tensor_product(m, n);
  const ScalarStructures ss = scalar_structures(t, &m_b, nullptr);
  const HomAction inner = hom_lattice_structure(m_b, m, p);
  return zeta_impl(t, *ss.left, p, inner, n, false);
}

HomRegularReport hom_A_A_M_iso(const FiniteSemimodule& m) {
  const FiniteSemimodule reg = regular_module(m.scalars_ptr());
  const HomSemilattice hs = hom_set(reg, m);
  HomRegularReport out;
  out.homs = hs.size();
  out.module = m.size();
  const Elem none = static_cast<Elem>(-1);
  out.phi.assign(m.size(), none);
  out.psi.assign(hs.size(), none);
  ElemMap g(reg.size());
  bool defined = true;
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem a = 0; a < reg.size(); ++a) g[a] = m.act(a, x);
    const auto idx = hs.index_of(g);
    if (!idx) defined = false;
    else out.phi[x] = *idx;
  }
  const Elem one = m.scalars().one();
  for (Elem f = 0; f < hs.size(); ++f) out.psi[f] = hs.homs[f][one];
  if (!defined) return out;
  out.phi_additive = out.phi[m.zero()] == hs.zero;
  for (Elem x = 0; x < m.size() && out.phi_additive; ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (out.phi[m.add(x, y)] != hs.add(out.phi[x], out.phi[y])) {
        out.phi_additive = false;
        break;
      }
  out.inverse = hs.size() == m.size();
  for (Elem x = 0; x < m.size() && out.inverse; ++x) out.inverse = out.psi[out.phi[x]] == x;
  for (Elem f = 0; f < hs.size() && out.inverse; ++f) out.inverse = out.phi[out.psi[f]] == f;
  return out;
}

bool AdjunctionReport::holds() const noexcept {
  for (const AdjunctionEntry& e : entries)
    if (e.left_lhs != e.left_rhs || e.right_lhs != e.right_rhs || !e.left_bijection ||
        !e.right_bijection || !e.unit_is_hom)
      return false;
  return naturality_failures == 0;
}

namespace {

std::vector<ElemMap> first_homs(const FiniteSemimodule& m, const FiniteSemimodule& n,
                                std::size_t limit) {
  std::vector<ElemMap> out;
  for_each_hom(m, n, generating_set(m), [&](const ElemMap& h) {
    out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

struct Extension {
  TensorProduct tensor;
  FiniteSemimodule module;  // B (x)_A M over B
};

}  // namespace

AdjunctionReport adjunction_witness(const SemiringPtr& a, const SemiringPtr& b,
                                    std::span<const Elem> h,
                                    std::span<const FiniteSemimodule> ms,
                                    std::span<const FiniteSemimodule> ns) {
  if (!is_semiring_hom(*a, *b, h)) fail(ErrorKind::NotAHom, "adjunction along a non-hom");
  const FiniteSemimodule b_reg = regular_module(b);
  const FiniteSemimodule b_h = restrict_scalars(a, h, b_reg);
  const Elem one = b->one();
  AdjunctionReport out;

  std::vector<Extension> ext;
  for (const FiniteSemimodule& m : ms) {
    TensorProduct t = tensor_product(b_h, m);
    FiniteSemimodule tb = *scalar_structures(t, &b_reg, nullptr).left;
    ext.push_back({std::move(t), std::move(tb)});
  }
  std::vector<FiniteSemimodule> ns_h;
  for (const FiniteSemimodule& n : ns) ns_h.push_back(restrict_scalars(a, h, n));

  // Left-adjoint transpose g : M -> N_h  |->  (b (x) x |-> b.g(x)).
  const auto transpose = [&](const Extension& e, const FiniteSemimodule& n, const ElemMap& g) {
    Table f(b_h.size(), g.size());
    for (Elem c = 0; c < b_h.size(); ++c)
      for (Elem x = 0; x < g.size(); ++x) f(c, x) = n.act(c, g[x]);
    return factor_into(e.tensor, n, f);
  };

  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    const FiniteSemimodule& m = ms[mi];
    const Extension& e = ext[mi];
    ElemMap unit(m.size());
    for (Elem x = 0; x < m.size(); ++x) unit[x] = e.tensor.tensor(one, x);
    const bool unit_ok = is_hom(m, restrict_scalars(a, h, e.module), unit);
    const HomAction hr = hom_lattice_structure(b_h, b_reg, m);

    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
      const FiniteSemimodule& n = ns[ni];
      AdjunctionEntry entry;
      entry.m = m.size();
      entry.n = n.size();
      entry.unit_is_hom = unit_ok;

      const HomSemilattice lhs = hom_set(e.module, n);
      const HomSemilattice rhs = hom_set(m, ns_h[ni]);
      entry.left_lhs = lhs.size();
      entry.left_rhs = rhs.size();
      bool ok = lhs.size() == rhs.size();
      ElemMap g(m.size());
      for (Elem i = 0; i < lhs.size() && ok; ++i) {
        for (Elem x = 0; x < m.size(); ++x) g[x] = lhs.homs[i][unit[x]];
        const auto j = rhs.index_of(g);
        const auto back = j ? transpose(e, n, rhs.homs[*j]) : std::nullopt;
        ok = back && *back == lhs.homs[i];
      }
      for (Elem j = 0; j < rhs.size() && ok; ++j) {
        const auto k = transpose(e, n, rhs.homs[j]);
        ok = k && lhs.index_of(*k);
      }
      entry.left_bijection = ok;

      const HomSemilattice rlhs = hom_set(n, hr.module);
      const HomSemilattice rrhs = hom_set(ns_h[ni], m);
      entry.right_lhs = rlhs.size();
      entry.right_rhs = rrhs.size();
      ok = rlhs.size() == rrhs.size();
      ElemMap gy(n.size()), fc(b_h.size());
      const auto lift = [&](const ElemMap& gm) -> std::optional<ElemMap> {
        ElemMap out_map(n.size());
        for (Elem y = 0; y < n.size(); ++y) {
          for (Elem c = 0; c < b_h.size(); ++c) fc[c] = gm[n.act(c, y)];
          const auto idx = hr.homs.index_of(fc);
          if (!idx) return std::nullopt;
          out_map[y] = *idx;
        }
        return out_map;
      };
      for (Elem i = 0; i < rlhs.size() && ok; ++i) {
        for (Elem y = 0; y < n.size(); ++y) gy[y] = hr.homs.homs[rlhs.homs[i][y]][one];
        const auto j = rrhs.index_of(gy);
        const auto back = j ? lift(rrhs.homs[*j]) : std::nullopt;
        ok = back && *back == rlhs.homs[i];
      }
      for (Elem j = 0; j < rrhs.size() && ok; ++j) {
        const auto up = lift(rrhs.homs[j]);
        ok = up && rlhs.index_of(*up);
      }
      entry.right_bijection = ok;
      out.entries.push_back(entry);
    }
  }

  // Naturality of the left transpose in M along s : M1 -> M2, and of the
  // right transpose in N along t : N1 -> N2.
  for (std::size_t i1 = 0; i1 < ms.size(); ++i1)
    for (std::size_t i2 = 0; i2 < ms.size(); ++i2) {
      if (!same_scalars(ms[i1], ms[i2])) continue;
      for (const ElemMap& s : first_homs(ms[i1], ms[i2], 4)) {
        // B (x) s on classes.
        Table images(b_h.size(), ms[i1].size());
        for (Elem c = 0; c < b_h.size(); ++c)
          for (Elem x = 0; x < ms[i1].size(); ++x) images(c, x) = ext[i2].tensor.tensor(c, s[x]);
        const auto bs = factor_into(ext[i1].tensor, ext[i2].module, images);
        for (std::size_t ni = 0; ni < ns.size(); ++ni) {
          const HomSemilattice rhs = hom_set(ms[i2], ns_h[ni]);
          for (const ElemMap& g : rhs.homs) {
            ++out.naturality_checks;
            ElemMap gs(ms[i1].size());
            for (Elem x = 0; x < gs.size(); ++x) gs[x] = g[s[x]];
            const auto lhs_map = transpose(ext[i1], ns[ni], gs);
            const auto rhs_map = transpose(ext[i2], ns[ni], g);
            bool ok = bs && lhs_map && rhs_map;
            for (Elem c = 0; ok && c < ext[i1].tensor.size(); ++c)
              ok = (*lhs_map)[c] == (*rhs_map)[(*bs)[c]];
            if (!ok) ++out.naturality_failures;
          }
        }
      }
    }
  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    const HomAction hr = hom_lattice_structure(b_h, b_reg, ms[mi]);
    for (std::size_t n1 = 0; n1 < ns.size(); ++n1)
      for (std::size_t n2 = 0; n2 < ns.size(); ++n2)
        for (const ElemMap& t : first_homs(ns[n1], ns[n2], 4)) {
          const HomSemilattice rrhs = hom_set(ns_h[n2], ms[mi]);
          for (const ElemMap& g : rrhs.homs) {
            ++out.naturality_checks;
            bool ok = true;
            ElemMap fc(b_h.size()), fc2(b_h.size());
            for (Elem y = 0; y < ns[n1].size() && ok; ++y) {
              for (Elem c = 0; c < b_h.size(); ++c) {
                fc[c] = g[t[ns[n1].act(c, y)]];
                fc2[c] = g[ns[n2].act(c, t[y])];
              }
              const auto i = hr.homs.index_of(fc), j = hr.homs.index_of(fc2);
              ok = i && j && *i == *j;
            }
            if (!ok) ++out.naturality_failures;
          }
        }
  }
  return out;
}

FullEmbeddingReport full_embedding_check(const SemiringPtr& a, const SemiringPtr& b,
                                         std::span<const Elem> h,
                                         std::span<const FiniteSemimodule> ms) {
  if (!is_semiring_hom(*a, *b, h)) fail(ErrorKind::NotAHom, "embedding along a non-hom");
  std::vector<char> hit(b->size(), 0);
  for (Elem v : h) hit[v] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    fail(ErrorKind::NotOnto, "semiring hom is not onto");
  const FiniteSemimodule b_reg = regular_module(b);
  const FiniteSemimodule b_h = restrict_scalars(a, h, b_reg);
  FullEmbeddingReport out;
  std::vector<FiniteSemimodule> restricted;
  for (const FiniteSemimodule& m : ms) restricted.push_back(restrict_scalars(a, h, m));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      ++out.pairs;
      const HomSemilattice homs = hom_set(restricted[i], restricted[j]);
      out.hom_pairs_compared += homs.size();
      for (const ElemMap& g : homs.homs)
        if (!is_hom(ms[i], ms[j], g)) {
          ++out.fullness_failures;
          break;
        }
    }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ++out.modules;
    const TensorProduct t = tensor_product(b_h, restricted[i]);
    const FiniteSemimodule tb = *scalar_structures(t, &b_reg, nullptr).left;
    ElemMap counit(ms[i].size());
    for (Elem x = 0; x < ms[i].size(); ++x) counit[x] = t.tensor(b->one(), x);
    if (!is_isomorphism(ms[i], tb, counit)) ++out.counit_failures;
  }
  return out;
}

TruncationDemo truncation_demo(std::size_t k, std::size_t rank) {
  if (k < 1 || rank < 1) fail(ErrorKind::InvalidArgument, "truncation demo needs k, |X| >= 1");
  TruncationDemo out;
  out.k = k;
  out.rank = rank;
  const auto a = make_semiring(reduct_wedge_oplus(gamma_chain(k, 0).algebra));
  const FiniteSemiring wide = reduct_wedge_oplus(lukasiewicz_chain(2 * k + 1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= 2 * k; ++i)
    labels.push_back(to_string(Rational(static_cast<long>(i), static_cast<long>(k))));
  const auto f = make_semiring(wide.size(), wide.add_table(), wide.mul_table(), wide.zero(),
                               wide.one(), std::move(labels));
  ElemMap shadow(f->size());
  for (Elem i = 0; i < f->size(); ++i) shadow[i] = std::min<Elem>(i, static_cast<Elem>(k));
  std::vector<char> hit(a->size(), 0);
  for (Elem v : shadow) hit[v] = 1;
  out.shadow_is_onto_hom = is_semiring_hom(*f, *a, shadow) &&
                           std::find(hit.begin(), hit.end(), 0) == hit.end();
  if (!out.shadow_is_onto_hom) return out;

  const FiniteSemimodule a_reg = regular_module(a);
  const FiniteSemimodule a_h = restrict_scalars(f, shadow, a_reg);
  const FreeSemimodule free_f = free_semimodule(f, rank);
  const FreeSemimodule free_a = free_semimodule(a, rank);
  const TensorProduct t = tensor_product(a_h, free_f.module, TensorMethod::Separating);
  if (a_h.size() * free_f.module.size() <= 31 &&
      (std::uint64_t{1} << (a_h.size() * free_f.module.size())) <= limits().max_carrier)
    out.cross_checked = same_tensor_product(t, tensor_product(a_h, free_f.module));
  const FiniteSemimodule ta = *scalar_structures(t, &a_reg, nullptr).left;
  out.free_size = free_a.module.size();
  out.tensor_size = t.size();

  // f(a, alpha) = a . (shadow o alpha), coordinatewise a (+) shadow(alpha_x).
  Table bim(a_h.size(), free_f.module.size());
  for (Elem s = 0; s < a_h.size(); ++s)
    for (Elem v = 0; v < free_f.module.size(); ++v) {
      std::vector<Elem> coords = free_f.decode(v);
      for (Elem& c : coords) c = a->mul(s, shadow[c]);
      bim(s, v) = free_a.encode(coords);
    }
  const CommutativeMonoid target = free_a.module.monoid();
  out.f_is_bimorphism = is_bimorphism(a_h, free_f.module, target, bim);
  const auto phi = factor(t, target, bim);
  out.phi_is_hom = phi && is_hom(ta, free_a.module, *phi);
  if (!phi) return out;

  // psi(alpha) = 0 (x) alpha, alpha read in F through the inclusion.
  const auto psi = [&](Elem alpha) {
    return t.tensor(a->one(), free_f.encode(free_a.decode(alpha)));
  };
  out.phi_psi_identity = true;
  for (Elem alpha = 0; alpha < free_a.module.size(); ++alpha)
    if ((*phi)[psi(alpha)] != alpha) out.phi_psi_identity = false;
  out.psi_phi_identity = true;
  for (Elem c = 0; c < t.size(); ++c)
    if (psi((*phi)[c]) != c) out.psi_phi_identity = false;
  return out;
}

}  // namespace mvsr

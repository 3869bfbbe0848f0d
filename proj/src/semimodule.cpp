#include "mvsr/semimodule.hpp"

#include <algorithm>
#include <map>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"

namespace mvsr {

std::string CommutativeMonoid::label(Elem a) const {
  return labels.empty() ? std::to_string(a) : labels[a];
}

AxiomReport check_commutative_monoid(const CommutativeMonoid& m) {
  require_table(m.add, m.size, m.size, m.size, "monoid add");
  const auto n = static_cast<Elem>(m.size);
  AxiomReport r;
  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (m.sum(m.sum(x, y), z) != m.sum(x, m.sum(y, z)))
            return r.add("add_associative", false, {x, y, z});
    r.add("add_associative", true);
  }();
  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (m.sum(x, y) != m.sum(y, x)) return r.add("add_commutative", false, {x, y});
    r.add("add_commutative", true);
  }();
  [&] {
    for (Elem x = 0; x < n; ++x)
      if (m.sum(x, m.zero) != x) return r.add("add_identity", false, {x});
    r.add("add_identity", true);
  }();
  return r;
}

bool is_monoid_hom(const CommutativeMonoid& source, const CommutativeMonoid& target,
                   std::span<const Elem> map) noexcept {
  if (map.size() != source.size) return false;
  for (Elem v : map)
    if (v >= target.size) return false;
  if (map[source.zero] != target.zero) return false;
  for (Elem x = 0; x < source.size; ++x)
    for (Elem y = 0; y < source.size; ++y)
      if (map[source.sum(x, y)] != target.sum(map[x], map[y])) return false;
  return true;
}

FiniteSemimodule::FiniteSemimodule(SemiringPtr scalars, std::size_t size,
                                   Table add, Elem zero, Table action,
                                   std::vector<std::string> labels)
    : scalars_(std::move(scalars)),
      size_(size),
      add_(std::move(add)),
      zero_(zero),
      action_(std::move(action)),
      labels_(std::move(labels)) {
  if (!scalars_) fail(ErrorKind::InvalidArgument, "semimodule without scalars");
  if (size_ == 0) fail(ErrorKind::MalformedTable, "semimodule carrier is empty");
  guard_carrier(size_, "semimodule");
  require_table(add_, size_, size_, size_, "semimodule add");
  require_table(action_, scalars_->size(), size_, size_, "semimodule action");
  if (zero_ >= size_) fail(ErrorKind::MalformedTable, "semimodule zero out of range");
  if (!labels_.empty() && labels_.size() != size_)
    fail(ErrorKind::MalformedTable, "semimodule labels do not match size");
}

std::string FiniteSemimodule::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

CommutativeMonoid FiniteSemimodule::monoid() const {
  return {size_, add_, zero_, labels_};
}

bool FiniteSemimodule::same_structure(const FiniteSemimodule& o) const noexcept {
  return scalars_->same_structure(*o.scalars_) && size_ == o.size_ &&
         zero_ == o.zero_ && add_ == o.add_ && action_ == o.action_;
}

bool same_scalars(const FiniteSemimodule& m, const FiniteSemimodule& n) noexcept {
  return m.scalars_ptr() == n.scalars_ptr() ||
         m.scalars().same_structure(n.scalars());
}

AxiomReport check_semimodule(const FiniteSemimodule& m) {
  const FiniteSemiring& s = m.scalars();
  const auto n = static_cast<Elem>(m.size());
  const auto k = static_cast<Elem>(s.size());
  AxiomReport r = check_commutative_monoid(m.monoid());
  [&] {
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        for (Elem x = 0; x < n; ++x)
          if (m.act(s.mul(a, b), x) != m.act(a, m.act(b, x)))
            return r.add("sm1", false, {a, b, x});
    r.add("sm1", true);
  }();
  [&] {
    for (Elem a = 0; a < k; ++a)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)))
            return r.add("sm2", false, {a, x, y});
    r.add("sm2", true);
  }();
  [&] {
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        for (Elem x = 0; x < n; ++x)
          if (m.act(s.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)))
            return r.add("sm3", false, {a, b, x});
    r.add("sm3", true);
  }();
  [&] {
    for (Elem x = 0; x < n; ++x)
      if (m.act(s.zero(), x) != m.zero()) return r.add("sm4", false, {s.zero(), x});
    for (Elem a = 0; a < k; ++a)
      if (m.act(a, m.zero()) != m.zero()) return r.add("sm4", false, {a, m.zero()});
    r.add("sm4", true);
  }();
  [&] {
    for (Elem x = 0; x < n; ++x)
      if (m.act(s.one(), x) != x) return r.add("sm5", false, {x});
    r.add("sm5", true);
  }();
  if (is_additively_idempotent(s)) {
    [&] {
      for (Elem x = 0; x < n; ++x)
        if (m.add(x, x) != x) return r.add("add_idempotent", false, {x});
      r.add("add_idempotent", true);
    }();
  }
  return r;
}

Elem FreeSemimodule::encode(std::span<const Elem> coords) const {
  if (coords.size() != rank) fail(ErrorKind::InvalidArgument, "coordinate count");
  const std::size_t base = module.scalars().size();
  std::size_t v = 0;
  for (Elem c : coords) {
    if (c >= base) fail(ErrorKind::InvalidArgument, "coordinate out of range");
    v = v * base + c;
  }
  return static_cast<Elem>(v);
}

std::vector<Elem> FreeSemimodule::decode(Elem v) const {
  const std::size_t base = module.scalars().size();
  std::vector<Elem> out(rank);
  std::size_t rest = v;
  for (std::size_t i = rank; i > 0; --i) {
    out[i - 1] = static_cast<Elem>(rest % base);
    rest /= base;
  }
  return out;
}

FreeSemimodule free_semimodule(SemiringPtr scalars, std::size_t rank) {
  const std::size_t q = scalars->size();
  const std::uint64_t m = saturating_pow(q, rank, limits().max_carrier);
  guard_carrier(m, "free semimodule");
  const auto decode = [&](std::size_t v) {
    std::vector<Elem> out(rank);
    for (std::size_t i = rank; i > 0; --i) {
      out[i - 1] = static_cast<Elem>(v % q);
      v /= q;
    }
    return out;
  };
  const auto encode = [&](const std::vector<Elem>& c) {
    std::size_t v = 0;
    for (Elem e : c) v = v * q + e;
    return static_cast<Elem>(v);
  };
  std::vector<std::vector<Elem>> coords(m);
  for (std::size_t v = 0; v < m; ++v) coords[v] = decode(v);
  Table add(m, m), action(q, m);
  std::vector<Elem> tmp(rank);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < rank; ++i)
        tmp[i] = scalars->add(coords[x][i], coords[y][i]);
      add(x, y) = encode(tmp);
    }
    for (Elem a = 0; a < q; ++a) {
      for (std::size_t i = 0; i < rank; ++i) tmp[i] = scalars->mul(a, coords[x][i]);
      action(a, x) = encode(tmp);
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t v = 0; v < m; ++v) {
    std::string s = "(";
    for (std::size_t i = 0; i < rank; ++i) {
      if (i) s += ",";
      s += scalars->label(coords[v][i]);
    }
    labels[v] = s + ")";
  }
  std::vector<Elem> basis(rank);
  for (std::size_t x = 0; x < rank; ++x) {
    std::vector<Elem> chi(rank, scalars->zero());
    chi[x] = scalars->one();
    basis[x] = encode(chi);
  }
  const Elem zero = encode(std::vector<Elem>(rank, scalars->zero()));
  FiniteSemimodule module(std::move(scalars), m, std::move(add), zero,
                          std::move(action), std::move(labels));
  return {std::move(module), rank, std::move(basis)};
}

FiniteSemimodule regular_module(SemiringPtr scalars) {
  const FiniteSemiring& s = *scalars;
  return FiniteSemimodule(scalars, s.size(), s.add_table(), s.zero(), s.mul_table(),
                          s.labels());
}

FiniteSemimodule trivial_module(SemiringPtr scalars) {
  const std::size_t q = scalars->size();
  return FiniteSemimodule(std::move(scalars), 1, Table(1, 1), 0, Table(q, 1), {"0"});
}

std::vector<char> span_mask(const FiniteSemimodule& m, std::span<const Elem> gens) {
  std::vector<char> in(m.size(), 0);
  std::vector<Elem> members{m.zero()};
  in[m.zero()] = 1;
  for (Elem g : gens) {
    if (g >= m.size()) fail(ErrorKind::InvalidArgument, "generator out of range");
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i)
      for (Elem a = 0; a < m.scalars().size(); ++a) {
        const Elem y = m.add(members[i], m.act(a, g));
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
  }
  return in;
}

Submodule submodule_on(const FiniteSemimodule& m, std::span<const Elem> members) {
  std::vector<Elem> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Elem> pos(m.size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= m.size()) fail(ErrorKind::InvalidArgument, "member out of range");
    pos[sorted[i]] = i;
  }
  const auto at = [&](Elem x) {
    if (pos[x] == static_cast<Elem>(-1))
      fail(ErrorKind::InvalidArgument, "subset is not a subsemimodule");
    return pos[x];
  };
  const std::size_t k = sorted.size();
  if (k == 0) fail(ErrorKind::InvalidArgument, "empty subset");
  Table add(k, k), action(m.scalars().size(), k);
  std::vector<std::string> labels(k);
  for (Elem i = 0; i < k; ++i) {
    labels[i] = m.label(sorted[i]);
    for (Elem j = 0; j < k; ++j) add(i, j) = at(m.add(sorted[i], sorted[j]));
    for (Elem a = 0; a < m.scalars().size(); ++a) action(a, i) = at(m.act(a, sorted[i]));
  }
  FiniteSemimodule sub(m.scalars_ptr(), k, std::move(add), at(m.zero()), std::move(action),
                       std::move(labels));
  return {std::move(sub), std::move(sorted)};
}

Submodule generate(const FiniteSemimodule& m, std::span<const Elem> gens) {
  const std::vector<char> in = span_mask(m, gens);
  std::vector<Elem> members;
  for (Elem x = 0; x < m.size(); ++x)
    if (in[x]) members.push_back(x);
  return submodule_on(m, members);
}

namespace {

// Exact minimum (lexicographically first) generating set while the number of
// candidate subsets stays under a fixed budget, else an irredundant greedy set.
template <typename SpanFn>
std::vector<Elem> greedy_generators(std::size_t size, SpanFn&& span) {
  const auto covers = [](const std::vector<char>& in) {
    return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
  };
  std::vector<Elem> gens;
  std::vector<char> in = span(gens);
  for (Elem x = 0; x < size; ++x)
    if (!in[x]) {
      gens.push_back(x);
      in = span(gens);
    }
  for (std::size_t i = gens.size(); i > 0; --i) {
    std::vector<Elem> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i - 1));
    if (covers(span(rest))) gens = rest;
  }

  constexpr std::uint64_t budget = 20000;
  std::uint64_t spent = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    // C(size, k) combinations in lexicographic order.
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k && c <= budget; ++i) c = c * (size - i) / (i + 1);
    spent += c;
    if (spent > budget) break;
    std::vector<Elem> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Elem>(i);
    for (;;) {
      if (covers(span(pick))) return pick;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == size - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return gens;
}

std::vector<char> monoid_span(const CommutativeMonoid& m, std::span<const Elem> gens) {
  std::vector<char> in(m.size, 0);
  std::vector<Elem> members{m.zero};
  in[m.zero] = 1;
  for (Elem g : gens) {
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      Elem y = members[i];
      for (;;) {
        y = m.sum(y, g);
        if (in[y]) break;
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return in;
}

// Multiples t.g of a generator, indexed by a token; the hom is then
// h(s + t.g) = h(s) + t.h(g).
struct Step {
  Elem y;
  Elem s;
  Elem token;
  bool defines;
};

struct HomPlan {
  std::vector<std::vector<Step>> levels;
};

HomPlan make_plan(std::size_t size, const Table& add, Elem zero,
                  const std::vector<std::vector<Elem>>& multiples) {
  HomPlan plan;
  std::vector<char> defined(size, 0);
  std::vector<Elem> members{zero};
  defined[zero] = 1;
  for (const auto& mult : multiples) {
    std::vector<Step> steps;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i)
      for (Elem t = 0; t < mult.size(); ++t) {
        const Elem y = add(members[i], mult[t]);
        const bool fresh = !defined[y];
        if (fresh) {
          defined[y] = 1;
          members.push_back(y);
        }
        steps.push_back({y, members[i], t, fresh});
      }
    plan.levels.push_back(std::move(steps));
  }
  if (members.size() != size)
    fail(ErrorKind::InvalidArgument, "generators do not generate the source");
  return plan;
}

template <typename TargetMultiples>
void run_plan(const HomPlan& plan, std::size_t source_size, Elem source_zero,
              std::size_t target_size, const Table& target_add, Elem target_zero,
              TargetMultiples&& target_multiples,
              const std::function<bool(const ElemMap&)>& visit) {
  const std::size_t r = plan.levels.size();
  const std::uint64_t cap = limits().max_enum;
  if (saturating_pow(target_size, r, cap) > cap)
    fail(ErrorKind::EnumGuard, "hom enumeration needs " + std::to_string(target_size) +
                                   "^" + std::to_string(r) + " candidates, over max_enum");
  ElemMap h(source_size, 0);
  h[source_zero] = target_zero;
  bool stop = false;
  std::vector<Elem> tm;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      if (!visit(h)) stop = true;
      return;
    }
    for (Elem n = 0; n < target_size && !stop; ++n) {
      target_multiples(i, n, tm);
      bool ok = true;
      for (const Step& st : plan.levels[i]) {
        const Elem v = target_add(h[st.s], tm[st.token]);
        if (st.defines) {
          h[st.y] = v;
        } else if (h[st.y] != v) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<Elem> generating_set(const FiniteSemimodule& m) {
  return greedy_generators(m.size(), [&](std::span<const Elem> g) { return span_mask(m, g); });
}

std::vector<Elem> monoid_generating_set(const CommutativeMonoid& m) {
  return greedy_generators(m.size, [&](std::span<const Elem> g) { return monoid_span(m, g); });
}

bool is_hom(const FiniteSemimodule& source, const FiniteSemimodule& target,
            std::span<const Elem> map) noexcept {
  if (!same_scalars(source, target)) return false;
  if (!is_monoid_hom(source.monoid(), target.monoid(), map)) return false;
  for (Elem a = 0; a < source.scalars().size(); ++a)
    for (Elem x = 0; x < source.size(); ++x)
      if (map[source.act(a, x)] != target.act(a, map[x])) return false;
  return true;
}

void for_each_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                  std::span<const Elem> gens,
                  const std::function<bool(const ElemMap&)>& visit) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "hom between modules over different scalars");
  const std::size_t q = m.scalars().size();
  std::vector<std::vector<Elem>> multiples;
  for (Elem g : gens) {
    if (g >= m.size()) fail(ErrorKind::InvalidArgument, "generator out of range");
    std::vector<Elem> mult(q);
    for (Elem a = 0; a < q; ++a) mult[a] = m.act(a, g);
    multiples.push_back(std::move(mult));
  }
  const HomPlan plan = make_plan(m.size(), m.add_table(), m.zero(), multiples);
  run_plan(plan, m.size(), m.zero(), n.size(), n.add_table(), n.zero(),
           [&](std::size_t, Elem t, std::vector<Elem>& out) {
             out.resize(q);
             for (Elem a = 0; a < q; ++a) out[a] = n.act(a, t);
           },
           visit);
}

void for_each_monoid_hom(const CommutativeMonoid& m, const CommutativeMonoid& n,
                         const std::function<bool(const ElemMap&)>& visit) {
  const std::vector<Elem> gens = monoid_generating_set(m);
  std::vector<std::vector<Elem>> multiples;
  for (Elem g : gens) {
    // 0.g, 1.g, ... up to and including the first repeat.
    std::vector<Elem> mult{m.zero};
    std::vector<char> seen(m.size, 0);
    seen[m.zero] = 1;
    for (;;) {
      const Elem next = m.sum(mult.back(), g);
      mult.push_back(next);
      if (seen[next]) break;
      seen[next] = 1;
    }
    multiples.push_back(std::move(mult));
  }
  const HomPlan plan = make_plan(m.size, m.add, m.zero, multiples);
  run_plan(plan, m.size, m.zero, n.size, n.add, n.zero,
           [&](std::size_t i, Elem t, std::vector<Elem>& out) {
             out.resize(multiples[i].size());
             out[0] = n.zero;
             for (std::size_t k = 1; k < out.size(); ++k) out[k] = n.sum(out[k - 1], t);
           },
           visit);
}

std::vector<ElemMap> monoid_homs(const CommutativeMonoid& m, const CommutativeMonoid& n) {
  std::vector<ElemMap> out;
  for_each_monoid_hom(m, n, [&](const ElemMap& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::optional<Elem> HomSemilattice::index_of(const ElemMap& h) const {
  const auto it = std::lower_bound(
      sorted.begin(), sorted.end(), h,
      [&](Elem i, const ElemMap& key) { return homs[i] < key; });
  if (it == sorted.end() || homs[*it] != h) return std::nullopt;
  return *it;
}

CommutativeMonoid HomSemilattice::as_monoid() const { return {homs.size(), add, zero, {}}; }

FiniteSemimodule HomSemilattice::as_semimodule() const {
  if (!action) fail(ErrorKind::InvalidArgument, "hom-set action needs commutative scalars");
  return FiniteSemimodule(scalars, homs.size(), add, zero, *action);
}

HomSemilattice hom_set(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  HomSemilattice hs;
  hs.scalars = m.scalars_ptr();
  hs.generators = generating_set(m);
  for_each_hom(m, n, hs.generators, [&](const ElemMap& h) {
    hs.homs.push_back(h);
    return true;
  });
  guard_carrier(hs.homs.size(), "hom-set");
  hs.sorted.resize(hs.homs.size());
  for (Elem i = 0; i < hs.homs.size(); ++i) hs.sorted[i] = i;
  std::sort(hs.sorted.begin(), hs.sorted.end(),
            [&](Elem i, Elem j) { return hs.homs[i] < hs.homs[j]; });
  const std::size_t k = hs.homs.size();
  const auto lookup = [&](const ElemMap& h) {
    const auto idx = hs.index_of(h);
    if (!idx) fail(ErrorKind::InvalidArgument, "hom-set not closed");
    return *idx;
  };
  hs.add = Table(k, k);
  ElemMap tmp(m.size());
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      for (Elem x = 0; x < m.size(); ++x) tmp[x] = n.add(hs.homs[i][x], hs.homs[j][x]);
      hs.add(i, j) = lookup(tmp);
    }
  hs.zero = lookup(ElemMap(m.size(), n.zero()));
  if (m.scalars().is_commutative()) {
    Table action(m.scalars().size(), k);
    for (Elem a = 0; a < m.scalars().size(); ++a)
      for (Elem i = 0; i < k; ++i) {
        for (Elem x = 0; x < m.size(); ++x) tmp[x] = n.act(a, hs.homs[i][x]);
        action(a, i) = lookup(tmp);
      }
    hs.action = std::move(action);
  }
  return hs;
}

EndSemiring end_semiring(const FiniteSemimodule& m, Composition order) {
  HomSemilattice hs = hom_set(m, m);
  const std::size_t k = hs.size();
  Table mul(k, k);
  ElemMap tmp(m.size());
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      const ElemMap& first = order == Composition::Reverse ? hs.homs[i] : hs.homs[j];
      const ElemMap& second = order == Composition::Reverse ? hs.homs[j] : hs.homs[i];
      for (Elem x = 0; x < m.size(); ++x) tmp[x] = second[first[x]];
      mul(i, j) = *hs.index_of(tmp);
    }
  ElemMap id(m.size());
  for (Elem x = 0; x < m.size(); ++x) id[x] = x;
  const auto one = hs.index_of(id);
  FiniteSemiring s(k, hs.add, std::move(mul), hs.zero, *one);
  return {std::move(s), std::move(hs.homs)};
}

XiEmbedding xi_embedding(const FiniteSemiring& s) {
  const auto n = static_cast<Elem>(s.size());
  XiEmbedding xi;
  xi.images.assign(n, ElemMap(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) xi.images[a][x] = s.mul(a, x);
  const CommutativeMonoid plus{s.size(), s.add_table(), s.zero(), {}};
  xi.endomorphisms = std::all_of(xi.images.begin(), xi.images.end(),
                                 [&](const ElemMap& h) { return is_monoid_hom(plus, plus, h); });
  bool hom = true;
  for (Elem x = 0; x < n; ++x) {
    hom = hom && xi.images[s.zero()][x] == s.zero() && xi.images[s.one()][x] == x;
  }
  for (Elem a = 0; a < n && hom; ++a)
    for (Elem b = 0; b < n && hom; ++b)
      for (Elem x = 0; x < n && hom; ++x) {
        if (xi.images[s.add(a, b)][x] != s.add(xi.images[a][x], xi.images[b][x])) hom = false;
        if (xi.images[s.mul(a, b)][x] != xi.images[a][xi.images[b][x]]) hom = false;
      }
  xi.homomorphism = hom;
  xi.injective = true;
  for (Elem a = 0; a < n; ++a)
    if (xi.images[a][s.one()] != a) xi.injective = false;
  return xi;
}

std::vector<ElemMap> scalar_maps(const FiniteSemimodule& m) {
  std::vector<ElemMap> out(m.scalars().size(), ElemMap(m.size()));
  for (Elem a = 0; a < m.scalars().size(); ++a)
    for (Elem x = 0; x < m.size(); ++x) out[a][x] = m.act(a, x);
  return out;
}

namespace {

void require_reduct_scalars(const MvAlgebra& a, const FiniteSemimodule& m) {
  if (m.scalars().size() == a.size() &&
      (m.scalars().same_structure(reduct_vee_odot(a)) ||
       m.scalars().same_structure(reduct_wedge_oplus(a))))
    return;
  fail(ErrorKind::ScalarMismatch, "module scalars are not a reduct of the MV-algebra");
}

}  // namespace

StrongVerdict is_strong(const MvAlgebra& a, const FiniteSemimodule& m) {
  require_reduct_scalars(a, m);
  const std::vector<ElemMap> maps = scalar_maps(m);
  StrongVerdict v;
  for (Elem s = 0; s < a.size(); ++s)
    for (Elem t = 0; t < a.size(); ++t) {
      if (maps[s] != maps[t]) continue;
      const ElemMap& ls = maps[a.star(s)];
      const ElemMap& lt = maps[a.star(t)];
      for (Elem x = 0; x < m.size(); ++x)
        if (ls[x] != lt[x]) {
          v.strong = false;
          v.counterexample = std::array<Elem, 3>{s, t, x};
          return v;
        }
    }
  return v;
}

bool is_strong_counterexample(const MvAlgebra& a, const FiniteSemimodule& m, Elem s,
                              Elem t, Elem x) {
  require_reduct_scalars(a, m);
  if (s >= a.size() || t >= a.size() || x >= m.size()) return false;
  for (Elem y = 0; y < m.size(); ++y)
    if (m.act(s, y) != m.act(t, y)) return false;
  return m.act(a.star(s), x) != m.act(a.star(t), x);
}

EndMvVerdict endmv_check(const MvAlgebra& a, const FiniteSemimodule& m) {
  require_reduct_scalars(a, m);
  const FiniteSemiring& s = m.scalars();
  const std::vector<ElemMap> maps = scalar_maps(m);
  EndMvVerdict v;
  // Class of each scalar in xi[A], numbered by least preimage.
  std::vector<Elem> cls(a.size());
  std::vector<Elem> reps;
  for (Elem x = 0; x < a.size(); ++x) {
    Elem c = static_cast<Elem>(reps.size());
    for (Elem r = 0; r < reps.size(); ++r)
      if (maps[reps[r]] == maps[x]) {
        c = r;
        break;
      }
    if (c == reps.size()) reps.push_back(x);
    cls[x] = c;
  }
  v.image_size = reps.size();
  v.star_well_defined = true;
  for (Elem x = 0; x < a.size() && v.star_well_defined; ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (cls[x] == cls[y] && cls[a.star(x)] != cls[a.star(y)]) {
        v.star_well_defined = false;
        v.conflict = std::make_pair(x, y);
        break;
      }
  if (!v.star_well_defined) return v;

  const auto find_class = [&](const ElemMap& h) -> std::optional<Elem> {
    for (Elem r = 0; r < reps.size(); ++r)
      if (maps[reps[r]] == h) return r;
    return std::nullopt;
  };
  const std::size_t k = reps.size();
  Table add(k, k), mul(k, k);
  ElemMap tmp(m.size());
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      for (Elem x = 0; x < m.size(); ++x) tmp[x] = m.add(maps[reps[i]][x], maps[reps[j]][x]);
      const auto sum = find_class(tmp);
      for (Elem x = 0; x < m.size(); ++x) tmp[x] = maps[reps[i]][maps[reps[j]][x]];
      const auto prod = find_class(tmp);
      if (!sum || !prod) return v;
      add(i, j) = *sum;
      mul(i, j) = *prod;
    }
  std::vector<Elem> star(k);
  for (Elem i = 0; i < k; ++i) star[i] = cls[a.star(reps[i])];
  const FiniteSemiring image(k, std::move(add), std::move(mul), cls[s.zero()], cls[s.one()]);
  v.mv_semiring = check_semiring_axioms(image).valid() &&
                  mv_semiring_negation_check(image, star);
  return v;
}

QuotientModule quotient_module_from_ideal(const MvAlgebra& a, const MvIdeal& ideal) {
  MvQuotient q = quotient(a, ideal);
  const MvAlgebra& qa = q.algebra;
  const std::size_t k = qa.size();
  std::vector<Elem> rep(k, 0);
  std::vector<char> seen(k, 0);
  for (Elem x = 0; x < a.size(); ++x)
    if (!seen[q.projection[x]]) {
      seen[q.projection[x]] = 1;
      rep[q.projection[x]] = x;
    }
  Table add(k, k), action(a.size(), k);
  for (Elem c = 0; c < k; ++c) {
    for (Elem d = 0; d < k; ++d) add(c, d) = qa.vee(c, d);
    for (Elem s = 0; s < a.size(); ++s) action(s, c) = q.projection[a.odot(s, rep[c])];
  }
  for (Elem s = 0; s < a.size(); ++s)
    for (Elem x = 0; x < a.size(); ++x)
      if (q.projection[a.odot(s, x)] != action(s, q.projection[x]))
        fail(ErrorKind::IllDefinedAction, "quotient action depends on the representative");
  FiniteSemimodule module(make_semiring(reduct_vee_odot(a)), k, std::move(add), qa.zero(),
                          std::move(action), qa.labels());
  StrongVerdict strong = is_strong(a, module);
  return {std::move(module), std::move(q.projection), std::move(strong)};
}

FiniteSemimodule restrict_scalars(SemiringPtr source, std::span<const Elem> h,
                                  const FiniteSemimodule& n) {
  if (!is_semiring_hom(*source, n.scalars(), h))
    fail(ErrorKind::NotAHom, "restriction map is not a semiring homomorphism");
  Table action(source->size(), n.size());
  for (Elem a = 0; a < source->size(); ++a)
    for (Elem x = 0; x < n.size(); ++x) action(a, x) = n.act(h[a], x);
  return FiniteSemimodule(std::move(source), n.size(), n.add_table(), n.zero(),
                          std::move(action), n.labels());
}

bool is_isomorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                    std::span<const Elem> map) noexcept {
  if (m.size() != n.size() || map.size() != m.size()) return false;
  ElemMap inverse(n.size(), static_cast<Elem>(-1));
  for (Elem x = 0; x < m.size(); ++x) {
    if (map[x] >= n.size() || inverse[map[x]] != static_cast<Elem>(-1)) return false;
    inverse[map[x]] = x;
  }
  return is_hom(m, n, map) && is_hom(n, m, inverse);
}

}  // namespace mvsr

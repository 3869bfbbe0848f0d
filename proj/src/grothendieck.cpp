#include "mvsr/grothendieck.hpp"

#include <algorithm>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/projective.hpp"

namespace mvsr {

std::optional<std::size_t> ProjClassMonoid::classify(const FiniteSemimodule& m) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].module.size() == m.size() && are_isomorphic(classes[i].module, m))
      return i;
  return std::nullopt;
}

ProjClassMonoid enumerate_projective_classes(SemiringPtr scalars, std::size_t n_max) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_max must be at least 1");
  guard_enum(saturating_pow(scalars->size(), n_max * n_max, limits().max_enum),
             "projective class enumeration");
  ProjClassMonoid p;
  p.scalars = scalars;
  p.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (SemiringMatrix& u : all_idempotents(scalars, n)) {
      RowSpace rs = row_space(u);
      if (p.classify(rs.space.module)) continue;
      const bool trivial = rs.space.module.size() == 1;
      p.classes.push_back({std::move(u), trivial ? 0 : n, std::move(rs.space.module)});
      if (trivial) p.trivial = p.classes.size() - 1;
    }
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (std::size_t j = i; j < p.classes.size(); ++j) {
      const ProjClass& a = p.classes[i];
      const ProjClass& b = p.classes[j];
      if (a.size + b.size > n_max) continue;
      const SemiringMatrix block = block_diagonal(a.rep, b.rep);
      const auto k = p.classify(row_space(block).space.module);
      if (!k) fail(ErrorKind::InvalidArgument, "block sum outside the enumerated classes");
      p.relations.push_back({i, j, *k});
    }
  return p;
}

MonoidPresentation presentation(const ProjClassMonoid& p) {
  MonoidPresentation mp;
  mp.generators = p.classes.size();
  for (const auto& r : p.relations) mp.relations.push_back({{r[0], r[1]}, {r[2]}});
  return mp;
}

std::string to_string(const AbelianGroupSNF& g) {
  std::string s;
  if (g.rank > 0) s = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (const BigInt& d : g.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
  return s.empty() ? "0" : s;
}

GroupCompletion grothendieck_completion(const MonoidPresentation& p) {
  const std::size_t g = p.generators;
  IntMatrix rel;
  for (const auto& [lhs, rhs] : p.relations) {
    std::vector<BigInt> row(g, 0);
    for (std::size_t i : lhs) {
      if (i >= g) fail(ErrorKind::InvalidArgument, "relation names an unknown generator");
      row[i] += 1;
    }
    for (std::size_t i : rhs) {
      if (i >= g) fail(ErrorKind::InvalidArgument, "relation names an unknown generator");
      row[i] -= 1;
    }
    rel.push_back(std::move(row));
  }
  GroupCompletion c;
  c.snf = smith_normal_form(rel, g);
  const std::size_t r = c.snf.invariants.size();
  c.group.rank = g - r;
  for (const BigInt& d : c.snf.invariants)
    if (d > 1) c.group.torsion.push_back(d);
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<BigInt> e(g, 0);
    e[i] = 1;
    c.images.push_back(c.element(e));
  }
  return c;
}

std::vector<BigInt> GroupCompletion::element(const std::vector<BigInt>& coeffs) const {
  const std::size_t g = snf.cols;
  if (coeffs.size() != g) fail(ErrorKind::InvalidArgument, "coefficient count");
  // x |-> x V carries the relation lattice onto the row space of D.
  std::vector<BigInt> y(g, 0);
  for (std::size_t i = 0; i < g; ++i)
    if (coeffs[i] != 0)
      for (std::size_t j = 0; j < g; ++j) y[j] += coeffs[i] * snf.v[i][j];
  std::vector<BigInt> out;
  const std::size_t r = snf.invariants.size();
  for (std::size_t j = 0; j < r; ++j) {
    const BigInt& d = snf.invariants[j];
    if (d == 1) continue;
    BigInt m = y[j] % d;
    if (m < 0) m += d;
    out.push_back(m);
  }
  for (std::size_t j = r; j < g; ++j) out.push_back(y[j]);
  return out;
}

GroupCompletion grothendieck_completion(const ProjClassMonoid& p) {
  return grothendieck_completion(presentation(p));
}

GroupHomMatrix k0_of_hom(const ProjClassMonoid& source, const ProjClassMonoid& target,
                         std::span<const Elem> f) {
  if (!is_semiring_hom(*source.scalars, *target.scalars, f))
    fail(ErrorKind::NotAHom, "K0 needs a semiring homomorphism");
  GroupHomMatrix h;
  const std::size_t n = source.classes.size(), m = target.classes.size();
  h.entries.assign(m, std::vector<BigInt>(n, 0));
  h.images_idempotent = true;
  for (std::size_t i = 0; i < n; ++i) {
    const SemiringMatrix img = mat_image(source.classes[i].rep, target.scalars, f);
    if (!is_mult_idempotent(img)) h.images_idempotent = false;
    const auto k = target.classify(row_space(img).space.module);
    if (!k) fail(ErrorKind::InvalidArgument, "image class outside the target truncation");
    h.class_map.push_back(*k);
    h.entries[*k][i] = 1;
  }
  const GroupCompletion tg = grothendieck_completion(target);
  h.relations_preserved = true;
  for (const auto& r : source.relations) {
    std::vector<BigInt> coeffs(m, 0);
    coeffs[h.class_map[r[0]]] += 1;
    coeffs[h.class_map[r[1]]] += 1;
    coeffs[h.class_map[r[2]]] -= 1;
    const auto e = tg.element(coeffs);
    if (std::any_of(e.begin(), e.end(), [](const BigInt& x) { return x != 0; }))
      h.relations_preserved = false;
  }
  return h;
}

std::vector<std::vector<BigInt>> int_matrix_product(const std::vector<std::vector<BigInt>>& a,
                                                    const std::vector<std::vector<BigInt>>& b) {
  if (!a.empty() && a[0].size() != b.size()) fail(ErrorKind::ShapeMismatch, "integer product shapes");
  return int_mul(a, b, b.size());
}

K0Result k0(SemiringPtr scalars, std::size_t n_max) {
  ProjClassMonoid p = enumerate_projective_classes(scalars, n_max);
  GroupCompletion c = grothendieck_completion(p);
  std::optional<AbelianGroupSNF> previous;
  if (n_max >= 2)
    previous = grothendieck_completion(enumerate_projective_classes(scalars, n_max - 1)).group;
  return {std::move(p), std::move(c), std::move(previous)};
}

}  // namespace mvsr

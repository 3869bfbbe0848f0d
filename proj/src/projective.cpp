#include "mvsr/projective.hpp"

#include <algorithm>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"

namespace mvsr {

RowSpace row_space(const SemiringMatrix& u) {
  FreeSemimodule ambient = free_semimodule(u.scalars, u.cols);
  std::vector<Elem> rows;
  for (std::size_t i = 0; i < u.rows; ++i) rows.push_back(ambient.encode(u.entries.row(i)));
  Submodule space = generate(ambient.module, rows);
  return {std::move(ambient), std::move(space)};
}

namespace {

// Sorted sizes of the cyclic submodules S.x; isomorphic modules agree.
std::vector<std::size_t> fingerprint(const FiniteSemimodule& m) {
  std::vector<std::size_t> out(m.size());
  std::vector<char> seen(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t count = 0;
    for (Elem a = 0; a < m.scalars().size(); ++a) {
      const Elem y = m.act(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
      }
    }
    std::size_t idem = m.add(x, x) == x ? 1 : 0;
    out[x] = count * 2 + idem;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<ElemMap> are_isomorphic(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "isomorphism across different scalars");
  if (m.size() != n.size()) return std::nullopt;
  if (fingerprint(m) != fingerprint(n)) return std::nullopt;
  const std::vector<Elem> gens = generating_set(m);
  std::optional<ElemMap> found;
  std::vector<char> hit(n.size());
  for_each_hom(m, n, gens, [&](const ElemMap& h) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Elem v : h) {
      if (hit[v]) return true;
      hit[v] = 1;
    }
    if (is_isomorphism(m, n, h)) {
      found = h;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Retraction> is_projective_retract_oracle(const FiniteSemimodule& m,
                                                       std::optional<std::size_t> n) {
  std::vector<Elem> gens = generating_set(m);
  const std::size_t bound = n.value_or(gens.size());
  if (gens.size() > bound) return std::nullopt;
  gens.resize(bound, m.zero());
  const FreeSemimodule cover = free_semimodule(m.scalars_ptr(), bound);
  ElemMap pi = cover_map(cover, m, gens);
  std::optional<Retraction> out;
  const std::vector<Elem> mgens = generating_set(m);
  for_each_hom(m, cover.module, mgens, [&](const ElemMap& mu) {
    for (Elem x = 0; x < m.size(); ++x)
      if (pi[mu[x]] != x) return true;
    out = Retraction{gens, pi, mu};
    return false;
  });
  return out;
}

std::optional<ProjectivePresentation> is_projective_matrix_criterion(
    const FiniteSemimodule& m, std::optional<std::size_t> n) {
  const std::size_t bound = n.value_or(generating_set(m).size());
  if (bound == 0) {
    // The trivial module is presented by the 1 x 1 zero matrix.
    if (m.size() != 1) return std::nullopt;
    SemiringMatrix u = mat_zero(m.scalars_ptr(), 1, 1);
    RowSpace rs = row_space(u);
    return ProjectivePresentation{std::move(u), std::move(rs.space.module), ElemMap{0}};
  }
  const std::uint64_t count = saturating_pow(m.scalars().size(), bound * bound, limits().max_enum);
  guard_enum(count, "idempotent matrix search");
  for (std::uint64_t i = 0; i < count; ++i) {
    SemiringMatrix u = matrix_at(m.scalars_ptr(), bound, bound, i);
    if (!is_mult_idempotent(u)) continue;
    RowSpace rs = row_space(u);
    if (rs.space.module.size() != m.size()) continue;
    if (auto iso = are_isomorphic(m, rs.space.module))
      return ProjectivePresentation{std::move(u), std::move(rs.space.module), std::move(*iso)};
  }
  return std::nullopt;
}

DirectSum direct_sum(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "direct sum across different scalars");
  const std::size_t p = m.size(), q = n.size(), size = p * q;
  guard_carrier(size, "direct sum");
  const auto pair = [&](Elem x, Elem y) { return static_cast<Elem>(x * q + y); };
  Table add(size, size), action(m.scalars().size(), size);
  std::vector<std::string> labels(size);
  for (Elem x = 0; x < p; ++x)
    for (Elem y = 0; y < q; ++y) {
      const Elem v = pair(x, y);
      labels[v] = "(" + m.label(x) + "," + n.label(y) + ")";
      for (Elem x2 = 0; x2 < p; ++x2)
        for (Elem y2 = 0; y2 < q; ++y2) add(v, pair(x2, y2)) = pair(m.add(x, x2), n.add(y, y2));
      for (Elem a = 0; a < m.scalars().size(); ++a) action(a, v) = pair(m.act(a, x), n.act(a, y));
    }
  DirectSum d{FiniteSemimodule(m.scalars_ptr(), size, std::move(add), pair(m.zero(), n.zero()),
                               std::move(action), std::move(labels)),
              ElemMap(p), ElemMap(q), ElemMap(size), ElemMap(size)};
  for (Elem x = 0; x < p; ++x) d.inj_left[x] = pair(x, n.zero());
  for (Elem y = 0; y < q; ++y) d.inj_right[y] = pair(m.zero(), y);
  for (Elem v = 0; v < size; ++v) {
    d.proj_left[v] = static_cast<Elem>(v / q);
    d.proj_right[v] = static_cast<Elem>(v % q);
  }
  return d;
}

SemiringMatrix block_diagonal(const SemiringMatrix& u, const SemiringMatrix& v) {
  if (!(u.scalars == v.scalars || u.scalars->same_structure(*v.scalars)))
    fail(ErrorKind::ScalarMismatch, "block matrix across different scalars");
  SemiringMatrix b = mat_zero(u.scalars, u.rows + v.rows, u.cols + v.cols);
  for (std::size_t i = 0; i < u.rows; ++i)
    for (std::size_t j = 0; j < u.cols; ++j) b.entries(i, j) = u(i, j);
  for (std::size_t i = 0; i < v.rows; ++i)
    for (std::size_t j = 0; j < v.cols; ++j) b.entries(u.rows + i, u.cols + j) = v(i, j);
  return b;
}

std::vector<std::vector<Elem>> all_submodules(const FiniteSemimodule& m) {
  if (m.size() > 20) fail(ErrorKind::EnumGuard, "submodule enumeration limited to 2^20 subsets");
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    if (!((mask >> m.zero()) & 1U)) continue;
    const auto in = [&](Elem x) { return ((mask >> x) & 1U) != 0; };
    bool closed = true;
    for (Elem x = 0; x < m.size() && closed; ++x) {
      if (!in(x)) continue;
      for (Elem y = 0; y < m.size() && closed; ++y)
        if (in(y) && !in(m.add(x, y))) closed = false;
      for (Elem a = 0; a < m.scalars().size() && closed; ++a)
        if (!in(m.act(a, x))) closed = false;
    }
    if (!closed) continue;
    std::vector<Elem> members;
    for (Elem x = 0; x < m.size(); ++x)
      if (in(x)) members.push_back(x);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

bool boolean_split_holds(const MvAlgebra& a, Elem u) {
  if (a.oplus(u, u) != u) return false;
  const FiniteSemimodule reg = regular_module(make_semiring(reduct_vee_odot(a)));
  const Elem us = a.star(u);
  const Submodule left = generate(reg, std::vector<Elem>{u});
  const Submodule right = generate(reg, std::vector<Elem>{us});
  const DirectSum sum = direct_sum(left.module, right.module);
  const auto local = [](const Submodule& s, Elem x) {
    return static_cast<Elem>(std::lower_bound(s.inclusion.begin(), s.inclusion.end(), x) -
                             s.inclusion.begin());
  };
  ElemMap h(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem l = local(left, a.odot(x, u));
    const Elem r = local(right, a.odot(x, us));
    h[x] = static_cast<Elem>(l * right.module.size() + r);
  }
  if (!is_isomorphism(reg, sum.module, h)) return false;
  // The inverse is the join of the two components.
  for (Elem v = 0; v < sum.module.size(); ++v) {
    const Elem x = left.inclusion[sum.proj_left[v]];
    const Elem y = right.inclusion[sum.proj_right[v]];
    if (h[a.vee(x, y)] != v) return false;
  }
  return true;
}

TrichotomyReport cyclic_mv_trichotomy(const MvAlgebra& a, const FiniteSemimodule& m) {
  const FiniteSemimodule reg = regular_module(make_semiring(reduct_vee_odot(a)));
  if (!same_scalars(reg, m))
    fail(ErrorKind::ScalarMismatch, "module is not over the vee-odot reduct");
  if (generating_set(m).size() > 1) fail(ErrorKind::NotCyclic, "module is not cyclic");
  TrichotomyReport r;
  r.retract = is_projective_retract_oracle(m, 1).has_value();
  r.matrix = is_projective_matrix_criterion(m, 1).has_value();

  std::vector<Elem> idem;
  for (Elem x = 0; x < a.size(); ++x)
    if (a.odot(x, x) == x) idem.push_back(x);
  r.idempotents_are_center = idem == boolean_center(a).members;
  if (!r.idempotents_are_center)
    fail(ErrorKind::InvalidArgument, "odot-idempotents differ from the Boolean center");
  for (Elem u : idem) {
    const Submodule au = generate(reg, std::vector<Elem>{u});
    if (au.module.size() == m.size() && are_isomorphic(m, au.module)) {
      r.idempotent = u;
      break;
    }
  }
  for (const auto& members : all_submodules(reg)) {
    if (members.size() * m.size() != a.size()) continue;
    const Submodule n = submodule_on(reg, members);
    if (are_isomorphic(reg, direct_sum(m, n.module).module)) {
      r.complement = members;
      break;
    }
  }
  return r;
}

}  // namespace mvsr

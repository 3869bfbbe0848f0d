#include "mvsr/matrix.hpp"

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/rng.hpp"

namespace mvsr {

namespace {

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) noexcept {
  return a == b || a->same_structure(*b);
}

void require_same(const SemiringMatrix& a, const SemiringMatrix& b) {
  if (!same_semiring(a.scalars, b.scalars))
    fail(ErrorKind::ScalarMismatch, "matrices over different scalars");
}

}  // namespace

bool SemiringMatrix::operator==(const SemiringMatrix& o) const noexcept {
  return rows == o.rows && cols == o.cols && entries == o.entries &&
         same_semiring(scalars, o.scalars);
}

SemiringMatrix make_matrix(SemiringPtr scalars, const std::vector<std::vector<Elem>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(ErrorKind::MalformedTable, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) fail(ErrorKind::MalformedTable, "ragged matrix rows");
  Table t = Table::from_rows(rows);
  if (!t.entries_below(scalars->size()))
    fail(ErrorKind::MalformedTable, "matrix entry out of range");
  return {std::move(scalars), rows.size(), rows[0].size(), std::move(t)};
}

SemiringMatrix mat_zero(SemiringPtr scalars, std::size_t rows, std::size_t cols) {
  Table t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = scalars->zero();
  return {std::move(scalars), rows, cols, std::move(t)};
}

SemiringMatrix mat_identity(SemiringPtr scalars, std::size_t n) {
  SemiringMatrix m = mat_zero(scalars, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries(i, i) = scalars->one();
  return m;
}

SemiringMatrix mat_add(const SemiringMatrix& a, const SemiringMatrix& b) {
  require_same(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    fail(ErrorKind::ShapeMismatch, "mat_add needs equal shapes");
  SemiringMatrix c = a;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) c.entries(i, j) = a.scalars->add(a(i, j), b(i, j));
  return c;
}

SemiringMatrix mat_star_mul(const SemiringMatrix& a, const SemiringMatrix& b) {
  require_same(a, b);
  if (a.cols != b.rows) fail(ErrorKind::ShapeMismatch, "mat_star_mul needs a.cols == b.rows");
  const FiniteSemiring& s = *a.scalars;
  SemiringMatrix c = mat_zero(a.scalars, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      Elem acc = s.zero();
      for (std::size_t k = 0; k < a.cols; ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      c.entries(i, j) = acc;
    }
  return c;
}

bool is_mult_idempotent(const SemiringMatrix& u) {
  if (!u.is_square()) fail(ErrorKind::ShapeMismatch, "idempotency needs a square matrix");
  return mat_star_mul(u, u).entries == u.entries;
}

SemiringMatrix mat_image(const SemiringMatrix& a, SemiringPtr target, std::span<const Elem> map) {
  if (map.size() != a.scalars->size())
    fail(ErrorKind::InvalidArgument, "scalar map has wrong length");
  Table t(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(i, j) = map[a(i, j)];
  if (!t.entries_below(target->size())) fail(ErrorKind::MalformedTable, "image out of range");
  return {std::move(target), a.rows, a.cols, std::move(t)};
}

std::uint64_t matrix_count(const FiniteSemiring& s, std::size_t rows, std::size_t cols) {
  return saturating_pow(s.size(), rows * cols, UINT64_MAX - 1);
}

SemiringMatrix matrix_at(SemiringPtr scalars, std::size_t rows, std::size_t cols,
                         std::uint64_t index) {
  const std::uint64_t q = scalars->size();
  Table t(rows, cols);
  for (std::size_t k = rows * cols; k > 0; --k) {
    t((k - 1) / cols, (k - 1) % cols) = static_cast<Elem>(index % q);
    index /= q;
  }
  return {std::move(scalars), rows, cols, std::move(t)};
}

std::uint64_t matrix_index(const SemiringMatrix& a) {
  std::uint64_t v = 0;
  for (Elem e : a.entries.data()) v = v * a.scalars->size() + e;
  return v;
}

std::vector<SemiringMatrix> all_idempotents(SemiringPtr scalars, std::size_t n) {
  const std::uint64_t count = saturating_pow(scalars->size(), n * n, limits().max_enum);
  guard_enum(count, "idempotent matrix enumeration");
  std::vector<SemiringMatrix> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    SemiringMatrix u = matrix_at(scalars, n, n, i);
    if (is_mult_idempotent(u)) out.push_back(std::move(u));
  }
  return out;
}

FiniteSemiring matrix_semiring(SemiringPtr scalars, std::size_t n) {
  const std::uint64_t count = saturating_pow(scalars->size(), n * n, limits().max_carrier);
  guard_carrier(count, "matrix semiring");
  std::vector<SemiringMatrix> all;
  all.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) all.push_back(matrix_at(scalars, n, n, i));
  Table add(count, count), mul(count, count);
  for (std::uint64_t i = 0; i < count; ++i)
    for (std::uint64_t j = 0; j < count; ++j) {
      add(i, j) = static_cast<Elem>(matrix_index(mat_add(all[i], all[j])));
      mul(i, j) = static_cast<Elem>(matrix_index(mat_star_mul(all[i], all[j])));
    }
  return FiniteSemiring(count, std::move(add), std::move(mul),
                        static_cast<Elem>(matrix_index(mat_zero(scalars, n, n))),
                        static_cast<Elem>(matrix_index(mat_identity(scalars, n))));
}

AxiomReport check_matrix_semiring(SemiringPtr scalars, std::size_t n, std::uint64_t samples,
                                  std::uint64_t seed) {
  const std::uint64_t count = saturating_pow(scalars->size(), n * n, limits().max_carrier);
  if (count <= limits().max_carrier) return check_semiring_axioms(matrix_semiring(scalars, n));
  SeededRng rng(seed);
  const auto draw = [&] {
    return matrix_at(scalars, n, n,
                     static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(
                                                                   std::min<std::uint64_t>(count, INT64_MAX) - 1))));
  };
  const SemiringMatrix o = mat_zero(scalars, n, n);
  const SemiringMatrix id = mat_identity(scalars, n);
  bool laws[8] = {true, true, true, true, true, true, true, true};
  for (std::uint64_t s = 0; s < samples; ++s) {
    const SemiringMatrix a = draw(), b = draw(), c = draw();
    laws[0] = laws[0] && mat_add(mat_add(a, b), c) == mat_add(a, mat_add(b, c));
    laws[1] = laws[1] && mat_add(a, b) == mat_add(b, a);
    laws[2] = laws[2] && mat_add(a, o) == a;
    laws[3] = laws[3] && mat_star_mul(mat_star_mul(a, b), c) == mat_star_mul(a, mat_star_mul(b, c));
    laws[4] = laws[4] && mat_star_mul(a, id) == a && mat_star_mul(id, a) == a;
    laws[5] = laws[5] && mat_star_mul(a, mat_add(b, c)) == mat_add(mat_star_mul(a, b), mat_star_mul(a, c));
    laws[6] = laws[6] && mat_star_mul(mat_add(a, b), c) == mat_add(mat_star_mul(a, c), mat_star_mul(b, c));
    laws[7] = laws[7] && mat_star_mul(a, o) == o && mat_star_mul(o, a) == o;
  }
  const char* names[8] = {"add_associative",   "add_commutative",    "add_identity",
                          "mul_associative",   "mul_identity",       "left_distributive",
                          "right_distributive", "zero_absorbing"};
  AxiomReport r;
  for (int i = 0; i < 8; ++i) r.add(names[i], laws[i]);
  return r;
}

ElemMap right_action(const FreeSemimodule& source, const FreeSemimodule& target,
                     const SemiringMatrix& a) {
  if (a.rows != source.rank || a.cols != target.rank)
    fail(ErrorKind::ShapeMismatch, "matrix shape does not match the free ranks");
  const FiniteSemiring& s = *a.scalars;
  ElemMap h(source.module.size());
  std::vector<Elem> out(target.rank);
  for (Elem v = 0; v < source.module.size(); ++v) {
    const std::vector<Elem> c = source.decode(v);
    for (std::size_t j = 0; j < target.rank; ++j) {
      Elem acc = s.zero();
      for (std::size_t i = 0; i < source.rank; ++i) acc = s.add(acc, s.mul(c[i], a(i, j)));
      out[j] = acc;
    }
    h[v] = target.encode(out);
  }
  return h;
}

EtaCertificate eta(SemiringPtr scalars, std::size_t n) {
  const FreeSemimodule f = free_semimodule(scalars, n);
  const std::uint64_t count = saturating_pow(scalars->size(), n * n, limits().max_enum);
  guard_enum(count, "eta matrix enumeration");
  const HomSemilattice end = hom_set(f.module, f.module);
  EtaCertificate c;
  c.matrices = count;
  c.endomorphisms = end.size();
  std::vector<ElemMap> h(count);
  std::vector<SemiringMatrix> mats;
  for (std::uint64_t i = 0; i < count; ++i) {
    mats.push_back(matrix_at(scalars, n, n, i));
    h[i] = right_action(f, f, mats.back());
  }
  c.into_end = true;
  std::vector<char> hit(end.size(), 0);
  bool injective = true;
  for (const auto& hi : h) {
    const auto idx = end.index_of(hi);
    if (!idx) {
      c.into_end = false;
      continue;
    }
    if (hit[*idx]) injective = false;
    hit[*idx] = 1;
  }
  c.bijective = c.into_end && injective && count == end.size();
  c.additive = true;
  c.composition = true;
  const std::size_t m = f.module.size();
  for (std::uint64_t i = 0; i < count; ++i)
    for (std::uint64_t j = 0; j < count; ++j) {
      const ElemMap& hs = h[matrix_index(mat_add(mats[i], mats[j]))];
      const ElemMap& hp = h[matrix_index(mat_star_mul(mats[i], mats[j]))];
      for (Elem v = 0; v < m; ++v) {
        if (hs[v] != f.module.add(h[i][v], h[j][v])) c.additive = false;
        if (hp[v] != h[j][h[i][v]]) c.composition = false;
      }
    }
  const ElemMap& hid = h[matrix_index(mat_identity(scalars, n))];
  c.identity = true;
  for (Elem v = 0; v < m; ++v)
    if (hid[v] != v) c.identity = false;
  return c;
}

namespace {

void require_free(const FreeSemimodule& f) {
  if (f.basis.size() != f.rank) fail(ErrorKind::NotFreeBasis, "basis size differs from rank");
  const FiniteSemiring& s = f.module.scalars();
  for (std::size_t x = 0; x < f.rank; ++x) {
    if (f.basis[x] >= f.module.size()) fail(ErrorKind::NotFreeBasis, "basis element out of range");
    const std::vector<Elem> c = f.decode(f.basis[x]);
    for (std::size_t y = 0; y < f.rank; ++y)
      if (c[y] != (x == y ? s.one() : s.zero()))
        fail(ErrorKind::NotFreeBasis, "recorded basis is not chi_x");
  }
}

}  // namespace

ElemMap hom_from_matrix(const FreeSemimodule& source, const FreeSemimodule& target,
                        const SemiringMatrix& k) {
  require_free(source);
  require_free(target);
  return right_action(source, target, k);
}

SemiringMatrix matrix_from_hom(const FreeSemimodule& source, const FreeSemimodule& target,
                               std::span<const Elem> h) {
  require_free(source);
  require_free(target);
  if (h.size() != source.module.size()) fail(ErrorKind::ShapeMismatch, "hom has wrong length");
  SemiringMatrix k = mat_zero(source.module.scalars_ptr(), source.rank, target.rank);
  for (std::size_t x = 0; x < source.rank; ++x) {
    const std::vector<Elem> row = target.decode(h[source.basis[x]]);
    for (std::size_t y = 0; y < target.rank; ++y) k.entries(x, y) = row[y];
  }
  return k;
}

ElemMap cover_map(const FreeSemimodule& cover, const FiniteSemimodule& m,
                  std::span<const Elem> gens) {
  if (gens.size() != cover.rank) fail(ErrorKind::ShapeMismatch, "generator count differs from rank");
  ElemMap pi(cover.module.size());
  for (Elem v = 0; v < cover.module.size(); ++v) {
    const std::vector<Elem> c = cover.decode(v);
    Elem acc = m.zero();
    for (std::size_t i = 0; i < cover.rank; ++i) acc = m.add(acc, m.act(c[i], gens[i]));
    pi[v] = acc;
  }
  return pi;
}

HomLift lift_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                 std::span<const Elem> h, std::span<const Elem> xs,
                 std::span<const Elem> ys) {
  if (!same_scalars(m, n)) fail(ErrorKind::ScalarMismatch, "lift across different scalars");
  if (!is_hom(m, n, h)) fail(ErrorKind::NotAHom, "lift_hom needs a hom");
  const SemiringPtr& s = m.scalars_ptr();
  const FreeSemimodule fx = free_semimodule(s, xs.size());
  const FreeSemimodule fy = free_semimodule(s, ys.size());
  const ElemMap pi = cover_map(fx, m, xs);
  const ElemMap pi2 = cover_map(fy, n, ys);
  SemiringMatrix k = mat_zero(s, xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Elem want = h[xs[i]];
    // First coefficient tuple in lexicographic order expressing h(x_i).
    std::optional<Elem> found;
    for (Elem v = 0; v < fy.module.size(); ++v)
      if (pi2[v] == want) {
        found = v;
        break;
      }
    if (!found) fail(ErrorKind::NoDecomposition, "h(x) is not a combination of the target generators");
    const std::vector<Elem> c = fy.decode(*found);
    for (std::size_t j = 0; j < ys.size(); ++j) k.entries(i, j) = c[j];
  }
  const ElemMap hk = hom_from_matrix(fx, fy, k);
  HomLift out{std::move(k), true};
  for (Elem v = 0; v < fx.module.size(); ++v)
    if (h[pi[v]] != pi2[hk[v]]) out.square_commutes = false;
  return out;
}

}  // namespace mvsr

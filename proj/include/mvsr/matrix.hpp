#pragma once

#include <cstdint>
#include <vector>

#include "mvsr/report.hpp"
#include "mvsr/semimodule.hpp"
#include "mvsr/semiring.hpp"
#include "mvsr/table.hpp"

namespace mvsr {

/// Rectangular array of scalar indices. Vectors are rows and matrices act on
/// the right, v |-> v * a.
struct SemiringMatrix {
  SemiringPtr scalars;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Table entries;

  [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return entries(r, c);
  }
  [[nodiscard]] bool is_square() const noexcept { return rows == cols; }
  /// Shape and entries; scalars compared structurally.
  bool operator==(const SemiringMatrix& o) const noexcept;
};

/// Throws MalformedTable on ragged rows or entries out of range.
SemiringMatrix make_matrix(SemiringPtr scalars,
                           const std::vector<std::vector<Elem>>& rows);
SemiringMatrix mat_identity(SemiringPtr scalars, std::size_t n);
SemiringMatrix mat_zero(SemiringPtr scalars, std::size_t rows, std::size_t cols);
/// Entrywise sum; throws ShapeMismatch.
SemiringMatrix mat_add(const SemiringMatrix& a, const SemiringMatrix& b);
/// (a * b)_ij = sum_k a_ik b_kj; throws ShapeMismatch.
SemiringMatrix mat_star_mul(const SemiringMatrix& a, const SemiringMatrix& b);
/// u * u = u; throws ShapeMismatch for non-square u.
bool is_mult_idempotent(const SemiringMatrix& u);
/// Entrywise image under a map of scalars.
SemiringMatrix mat_image(const SemiringMatrix& a, SemiringPtr target,
                         std::span<const Elem> map);

/// All n x n matrices with index = row-major base-|S| digits.
std::uint64_t matrix_count(const FiniteSemiring& s, std::size_t rows, std::size_t cols);
SemiringMatrix matrix_at(SemiringPtr scalars, std::size_t rows, std::size_t cols,
                         std::uint64_t index);
std::uint64_t matrix_index(const SemiringMatrix& a);
/// Every multiplicatively idempotent n x n matrix, in row-major lexicographic
/// order; throws EnumGuard above max_enum candidates.
std::vector<SemiringMatrix> all_idempotents(SemiringPtr scalars, std::size_t n);

/// M_n(S) with + and *; carrier ordered as in matrix_at. Throws SizeGuard.
FiniteSemiring matrix_semiring(SemiringPtr scalars, std::size_t n);
/// Semiring laws of M_n(S): exhaustive when M_n(S) fits under max_carrier,
/// otherwise on `samples` seeded triples.
AxiomReport check_matrix_semiring(SemiringPtr scalars, std::size_t n,
                                  std::uint64_t samples = 2000, std::uint64_t seed = 42);

/// The map a |-> h_a, h_a(v) = v * a, against End_S(S^n) enumerated
/// independently.
struct EtaCertificate {
  std::size_t matrices = 0;
  std::size_t endomorphisms = 0;
  bool into_end = false;      ///< every h_a is a hom
  bool bijective = false;
  bool additive = false;      ///< h_{a+b} = h_a + h_b
  bool identity = false;      ///< h_iota = id
  bool composition = false;   ///< h_{a*b} = h_b o h_a
  [[nodiscard]] bool valid() const noexcept {
    return into_end && bijective && additive && identity && composition;
  }
};
EtaCertificate eta(SemiringPtr scalars, std::size_t n);

/// v |-> v * a as a map on the free module of rank a.rows to rank a.cols.
ElemMap right_action(const FreeSemimodule& source, const FreeSemimodule& target,
                     const SemiringMatrix& a);

/// f |-> sum_x f(x).k(x, -); throws NotFreeBasis, ShapeMismatch.
ElemMap hom_from_matrix(const FreeSemimodule& source, const FreeSemimodule& target,
                        const SemiringMatrix& k);
/// k(x, y) = h(chi_x)(y).
SemiringMatrix matrix_from_hom(const FreeSemimodule& source, const FreeSemimodule& target,
                               std::span<const Elem> h);

/// Canonical onto hom S^n -> M sending chi_i to gens[i].
ElemMap cover_map(const FreeSemimodule& cover, const FiniteSemimodule& m,
                  std::span<const Elem> gens);

struct HomLift {
  SemiringMatrix k;
  /// h o pi = pi' o h_k on every element of S^X.
  bool square_commutes = false;
};
/// Finds k row by row, taking the first coefficient tuple (lexicographic) that
/// expresses h(x_i) over ys. Throws NoDecomposition.
HomLift lift_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                 std::span<const Elem> h, std::span<const Elem> xs,
                 std::span<const Elem> ys);

}  // namespace mvsr

#pragma once

#include <optional>
#include <vector>

#include "mvsr/matrix.hpp"
#include "mvsr/mv_algebra.hpp"
#include "mvsr/semimodule.hpp"

namespace mvsr {

/// Subsemimodule of S^n generated by the rows of u.
struct RowSpace {
  FreeSemimodule ambient;
  Submodule space;
};
RowSpace row_space(const SemiringMatrix& u);

struct ProjectivePresentation {
  SemiringMatrix u;
  FiniteSemimodule module;  ///< the row space of u
  ElemMap iso;              ///< M -> row space
};

struct Retraction {
  std::vector<Elem> generators;  ///< padded with zeros to n
  ElemMap pi;                    ///< S^n -> M
  ElemMap mu;                    ///< M -> S^n with pi o mu = id
};

/// Searches hom(M, S^n) for a section of the canonical cover; n defaults to
/// the size of generating_set(M). Returns nullopt when no section exists or
/// M needs more than n generators.
std::optional<Retraction> is_projective_retract_oracle(const FiniteSemimodule& m,
                                                       std::optional<std::size_t> n = {});
/// First idempotent n x n matrix (row-major lexicographic) whose row space is
/// isomorphic to M.
std::optional<ProjectivePresentation> is_projective_matrix_criterion(
    const FiniteSemimodule& m, std::optional<std::size_t> n = {});

/// First isomorphism M -> N in hom enumeration order. Throws ScalarMismatch.
std::optional<ElemMap> are_isomorphic(const FiniteSemimodule& m, const FiniteSemimodule& n);

struct DirectSum {
  FiniteSemimodule module;  ///< (x, y) has index x*|N|+y
  ElemMap inj_left, inj_right, proj_left, proj_right;
};
/// Throws ScalarMismatch.
DirectSum direct_sum(const FiniteSemimodule& m, const FiniteSemimodule& n);
/// [[u, 0], [0, v]].
SemiringMatrix block_diagonal(const SemiringMatrix& u, const SemiringMatrix& v);

/// Every subsemimodule of M as sorted member lists, by (size, members).
/// Guarded at 2^20 subsets.
std::vector<std::vector<Elem>> all_submodules(const FiniteSemimodule& m);

struct TrichotomyReport {
  bool retract = false;               ///< (a) via the retract oracle
  bool matrix = false;                ///< (a) via the idempotent-matrix criterion
  bool idempotents_are_center = false;  ///< odot-idempotents = Boolean center
  std::optional<Elem> idempotent;     ///< (b) u with M iso A.u
  std::optional<std::vector<Elem>> complement;  ///< (c) N with A iso M + N
  [[nodiscard]] bool a() const noexcept { return retract && matrix; }
  [[nodiscard]] bool b() const noexcept { return idempotent.has_value(); }
  [[nodiscard]] bool c() const noexcept { return complement.has_value(); }
  [[nodiscard]] bool coincide() const noexcept {
    return retract == matrix && a() == b() && b() == c();
  }
};
/// M must be a cyclic module over the vee-odot reduct of A; throws NotCyclic.
TrichotomyReport cyclic_mv_trichotomy(const MvAlgebra& a, const FiniteSemimodule& m);

/// a |-> (a odot u, a odot u*) is an isomorphism A -> A.u + A.u* with inverse
/// (x, y) |-> x v y; u must be in the Boolean center.
bool boolean_split_holds(const MvAlgebra& a, Elem u);

}  // namespace mvsr

#pragma once

#include <array>
#include <string>
#include <vector>

#include "mvsr/matrix.hpp"
#include "mvsr/mv_algebra.hpp"
#include "mvsr/smith.hpp"

namespace mvsr {

struct ProjClass {
  /// Canonical representative: least matrix size, then row-major
  /// lexicographic order. The trivial class is presented by [0] and counts
  /// as size 0 (zero rows contribute nothing after padding).
  SemiringMatrix rep;
  std::size_t size = 0;
  FiniteSemimodule module;
};

/// Projective classes presented by idempotent matrices up to n_max x n_max.
struct ProjClassMonoid {
  SemiringPtr scalars;
  std::size_t n_max = 1;
  std::vector<ProjClass> classes;
  /// (i, j, k): [P_i] + [P_j] = [P_k], recorded for i <= j whenever
  /// size_i + size_j <= n_max.
  std::vector<std::array<std::size_t, 3>> relations;
  std::size_t trivial = 0;

  /// Index of the class of a module; nullopt if none matches.
  [[nodiscard]] std::optional<std::size_t> classify(const FiniteSemimodule& m) const;
};

/// Throws EnumGuard when |S|^(n_max^2) exceeds max_enum.
ProjClassMonoid enumerate_projective_classes(SemiringPtr scalars, std::size_t n_max);

/// Commutative monoid presentation: generators and relations lhs = rhs, each
/// side a list of generator indices with repetition.
struct MonoidPresentation {
  std::size_t generators = 0;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> relations;
};
MonoidPresentation presentation(const ProjClassMonoid& p);

struct AbelianGroupSNF {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1, d_1 | d_2 | ...
  bool operator==(const AbelianGroupSNF&) const = default;
};
std::string to_string(const AbelianGroupSNF& g);

/// Z^generators modulo the relation rows lhs - rhs.
struct GroupCompletion {
  AbelianGroupSNF group;
  SmithResult snf;
  /// Coordinates of each generator's image: torsion coordinates reduced mod
  /// d_i, then free coordinates.
  std::vector<std::vector<BigInt>> images;

  /// Normal form of a sum of generators with integer coefficients.
  [[nodiscard]] std::vector<BigInt> element(const std::vector<BigInt>& coeffs) const;
};
GroupCompletion grothendieck_completion(const MonoidPresentation& p);
GroupCompletion grothendieck_completion(const ProjClassMonoid& p);

/// Integer matrix on class generators, column convention: column i has a 1 in
/// the row of the class of B.f(u_i).
struct GroupHomMatrix {
  std::vector<std::vector<BigInt>> entries;
  std::vector<std::size_t> class_map;
  /// Every entrywise image f(u) is idempotent.
  bool images_idempotent = false;
  /// Images of recorded relations hold in the target group.
  bool relations_preserved = false;
};

/// f must be a semiring hom A -> B; throws NotAHom.
GroupHomMatrix k0_of_hom(const ProjClassMonoid& source, const ProjClassMonoid& target,
                         std::span<const Elem> f);
std::vector<std::vector<BigInt>> int_matrix_product(const std::vector<std::vector<BigInt>>& a,
                                                    const std::vector<std::vector<BigInt>>& b);

/// K0 of the monoid truncated at n_max, with the n_max - 1 value for
/// comparison when n_max >= 2.
struct K0Result {
  ProjClassMonoid monoid;
  GroupCompletion completion;
  std::optional<AbelianGroupSNF> previous;
  [[nodiscard]] bool stable() const noexcept {
    return !previous || *previous == completion.group;
  }
};
K0Result k0(SemiringPtr scalars, std::size_t n_max);

}  // namespace mvsr

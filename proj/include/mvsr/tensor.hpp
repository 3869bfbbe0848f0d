#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvsr/report.hpp"
#include "mvsr/semimodule.hpp"

namespace mvsr {

/// Element of the free semilattice on a base set of at most 32 points.
using SubsetMask = std::uint32_t;

/// Order used for canonical class representatives: cardinality first, then
/// lexicographic on the sorted member lists.
bool subset_less(SubsetMask a, SubsetMask b) noexcept;
bool subset_less(std::span<const Elem> a, std::span<const Elem> b) noexcept;

/// Partition of all 2^base_size subsets.
struct SemilatticeCongruence {
  std::size_t base_size = 0;
  /// Class id per mask, numbered in order of first appearance.
  Partition class_of;
  std::size_t classes = 0;
  /// Exhaustive check that a ~ b implies a|c ~ b|c.
  bool union_compatible = false;
};

/// Least union-compatible equivalence containing the pairs. Throws SizeGuard
/// when 2^base_size exceeds max_carrier.
SemilatticeCongruence congruence_closure(
    std::size_t base_size, std::span<const std::pair<SubsetMask, SubsetMask>> pairs);

enum class TensorMethod {
  /// Closure of the defining relations on every subset of M x N.
  Quotient,
  /// Image of the free semilattice in 2^B, B the bimorphisms into {0,1}.
  Separating,
};

/// M (x)_S N for commutative additively idempotent S, M read as a right
/// module through commutativity. Pair (x, y) has index x*|N| + y.
struct TensorProduct {
  FiniteSemimodule left;
  FiniteSemimodule right;
  TensorMethod method = TensorMethod::Quotient;
  /// Least member of each class, sorted pair indices; class 0 is empty.
  std::vector<std::vector<Elem>> representatives;
  /// |M| x |N| table of x (x) y.
  Table tensors;
  /// Classes with join, zero class 0, and a.[U] = [{(a x, y)}].
  FiniteSemimodule module;
  /// Class per subset mask; only filled by the quotient method.
  std::vector<Elem> mask_class;

  [[nodiscard]] std::size_t size() const noexcept { return module.size(); }
  [[nodiscard]] Elem pair(Elem x, Elem y) const noexcept {
    return static_cast<Elem>(x * right.size() + y);
  }
  [[nodiscard]] Elem tensor(Elem x, Elem y) const noexcept { return tensors(x, y); }
  /// Class of a finite set of pairs (the join of its tensors).
  [[nodiscard]] Elem class_of(std::span<const Elem> pairs) const;
};

/// Throws ScalarMismatch, NotIdempotent, InvalidArgument (noncommutative
/// scalars), SizeGuard (quotient method needs 2^{|M||N|} <= max_carrier) and
/// IllDefinedAction.
TensorProduct tensor_product(const FiniteSemimodule& m, const FiniteSemimodule& n,
                             TensorMethod method = TensorMethod::Quotient);

/// Same classes, representatives, tensors and module tables.
bool same_tensor_product(const TensorProduct& a, const TensorProduct& b) noexcept;

/// f : M x N -> L as an |M| x |N| table. Checks additivity in each slot,
/// f(0, y) = f(x, 0) = 0, and f(x a, y) = f(x, a y).
bool is_bimorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const CommutativeMonoid& l, const Table& f) noexcept;

/// Every bimorphism into L, found as the balanced monoid homs M -> hom(N, L).
std::vector<Table> bimorphisms(const FiniteSemimodule& m, const FiniteSemimodule& n,
                               const CommutativeMonoid& l);

/// The laws of x (x) y checked on every element.
AxiomReport check_tensor_laws(const TensorProduct& t);

struct UniversalProperty {
  std::size_t monoids = 0;
  std::size_t bimorphisms = 0;
  /// Bimorphisms whose constructed factorization is not a hom through the
  /// tensors.
  std::size_t existence_failures = 0;
  /// Bimorphisms with a number of factoring homs other than one, plus homs
  /// T -> L whose composite with (x) is not a listed bimorphism.
  std::size_t uniqueness_failures = 0;
  [[nodiscard]] bool holds() const noexcept {
    return existence_failures == 0 && uniqueness_failures == 0;
  }
};

/// Against the given monoids, or the <= 3 element family plus the additive
/// monoids of M and N when `family` is empty.
UniversalProperty universal_property(const TensorProduct& t,
                                     std::span<const CommutativeMonoid> family = {});

/// Induced actions b * [U] = [{(b x, y)}] and [U] * c = [{(x, y c)}].
struct ScalarStructures {
  std::optional<FiniteSemimodule> left;
  std::optional<FiniteSemimodule> right;
  AxiomReport left_laws;
  AxiomReport right_laws;
  /// The induced actions commute with the action of the tensor scalars.
  bool bisemimodule = true;
};

/// left_action: M with an extra action by B on the same monoid; right_action
/// likewise for N. Either may be null. Throws InvalidArgument when the monoid
/// differs or the actions do not commute with the tensor scalars, and
/// IllDefinedAction when an induced action does not respect the classes.
ScalarStructures scalar_structures(const TensorProduct& t, const FiniteSemimodule* left_action,
                                   const FiniteSemimodule* right_action);

/// hom_A(M, N) with (b . h)(x) = h(x . b).
struct HomAction {
  HomSemilattice homs;
  FiniteSemimodule module;
  AxiomReport laws;
};

/// m and m_b share their monoid; m is over A and m_b over B with commuting
/// actions. Throws InvalidArgument, IllDefinedAction.
HomAction hom_lattice_structure(const FiniteSemimodule& m, const FiniteSemimodule& m_b,
                                const FiniteSemimodule& n);

/// hom_B(M (x)_A N, P) against hom_A(M, hom_B(N, P)) (or, primed,
/// hom_A(N, hom_B(M, P))).
struct ZetaReport {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  /// zeta(h) and its inverse, as hom indices.
  std::vector<Elem> forward;
  std::vector<Elem> backward;
  bool well_defined = false;
  bool inverse = false;
  bool preserves_joins = false;
  [[nodiscard]] bool holds() const noexcept {
    return lhs == rhs && well_defined && inverse && preserves_joins;
  }
};

/// M over A; N over A with n_b the same monoid over B; P over B.
ZetaReport zeta_isomorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                            const FiniteSemimodule& n_b, const FiniteSemimodule& p);
/// M over A with m_b the same monoid over B; N over A; P over B.
ZetaReport zeta_isomorphism_prime(const FiniteSemimodule& m, const FiniteSemimodule& m_b,
                                  const FiniteSemimodule& n, const FiniteSemimodule& p);

/// phi : x |-> (a |-> a.x) and psi : f |-> f(1) between M and hom_A(A, M).
struct HomRegularReport {
  std::size_t homs = 0;
  std::size_t module = 0;
  std::vector<Elem> phi;
  std::vector<Elem> psi;
  bool phi_additive = false;
  bool inverse = false;
  [[nodiscard]] bool holds() const noexcept { return homs == module && phi_additive && inverse; }
};
HomRegularReport hom_A_A_M_iso(const FiniteSemimodule& m);

struct AdjunctionEntry {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t left_lhs = 0;  ///< |hom_B(B (x)_A M, N)|
  std::size_t left_rhs = 0;  ///< |hom_A(M, N_h)|
  std::size_t right_lhs = 0; ///< |hom_B(N, hom_A(B_h, M))|
  std::size_t right_rhs = 0; ///< |hom_A(N_h, M)|
  bool left_bijection = false;
  bool right_bijection = false;
  bool unit_is_hom = false;
};

struct AdjunctionReport {
  std::vector<AdjunctionEntry> entries;
  std::size_t naturality_checks = 0;
  std::size_t naturality_failures = 0;
  [[nodiscard]] bool holds() const noexcept;
};

/// Restriction along h : A -> B against B (x)_A - and hom_A(B_h, -), on every
/// pair from ms (over A) and ns (over B). Naturality is checked in N along up
/// to four B-homs per ordered pair of ns. Throws NotAHom.
AdjunctionReport adjunction_witness(const SemiringPtr& a, const SemiringPtr& b,
                                    std::span<const Elem> h,
                                    std::span<const FiniteSemimodule> ms,
                                    std::span<const FiniteSemimodule> ns);

struct FullEmbeddingReport {
  std::size_t pairs = 0;
  /// Pairs where some A-hom between restrictions is not a B-hom.
  std::size_t fullness_failures = 0;
  std::size_t hom_pairs_compared = 0;
  std::size_t modules = 0;
  /// Modules where x |-> 1 (x) x is not a B-isomorphism M -> B (x)_A M_h.
  std::size_t counit_failures = 0;
  [[nodiscard]] bool holds() const noexcept {
    return fullness_failures == 0 && counit_failures == 0;
  }
};

/// Throws NotOnto, NotAHom.
FullEmbeddingReport full_embedding_check(const SemiringPtr& a, const SemiringPtr& b,
                                         std::span<const Elem> h,
                                         std::span<const FiniteSemimodule> ms);

/// Finite shadow of A^(X) ~ A (x)_F F^(X). A is the wedge-oplus reduct of
/// gamma_chain(k); F is the wedge-oplus reduct of the chain on {0, 1/k, ...,
/// 2} (values capped at 2u), mapped onto A by v |-> min(v, u).
struct TruncationDemo {
  std::size_t k = 0;
  std::size_t rank = 0;
  std::size_t free_size = 0;    ///< |A^(X)|
  std::size_t tensor_size = 0;  ///< |A (x)_F F^(X)|
  bool shadow_is_onto_hom = false;
  bool f_is_bimorphism = false;
  bool phi_is_hom = false;
  bool phi_psi_identity = false;  ///< phi(psi(alpha)) = alpha on A^(X)
  bool psi_phi_identity = false;  ///< psi(phi(t)) = t on every class
  /// Agreement with the quotient method; empty when the quotient is too large.
  std::optional<bool> cross_checked;
  [[nodiscard]] bool isomorphic() const noexcept {
    return shadow_is_onto_hom && f_is_bimorphism && phi_is_hom && phi_psi_identity &&
           psi_phi_identity;
  }
};
TruncationDemo truncation_demo(std::size_t k, std::size_t rank);

}  // namespace mvsr

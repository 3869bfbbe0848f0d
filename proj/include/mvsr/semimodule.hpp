#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvsr/mv_algebra.hpp"
#include "mvsr/report.hpp"
#include "mvsr/semiring.hpp"
#include "mvsr/table.hpp"

namespace mvsr {

/// Map between finite carriers, one image per source index.
using ElemMap = std::vector<Elem>;

/// Finite commutative monoid given by its table.
struct CommutativeMonoid {
  std::size_t size = 1;
  Table add = Table(1, 1);
  Elem zero = 0;
  std::vector<std::string> labels;

  [[nodiscard]] Elem sum(Elem a, Elem b) const noexcept { return add(a, b); }
  [[nodiscard]] std::string label(Elem a) const;
};

AxiomReport check_commutative_monoid(const CommutativeMonoid& m);
bool is_monoid_hom(const CommutativeMonoid& source,
                   const CommutativeMonoid& target,
                   std::span<const Elem> map) noexcept;

/// Left semimodule over a finite semiring: monoid table plus an |S| x m
/// action table.
class FiniteSemimodule {
 public:
  FiniteSemimodule(SemiringPtr scalars, std::size_t size, Table add, Elem zero,
                   Table action, std::vector<std::string> labels = {});

  [[nodiscard]] const FiniteSemiring& scalars() const noexcept { return *scalars_; }
  [[nodiscard]] const SemiringPtr& scalars_ptr() const noexcept { return scalars_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] Elem add(Elem x, Elem y) const noexcept { return add_(x, y); }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem act(Elem a, Elem x) const noexcept { return action_(a, x); }
  [[nodiscard]] const Table& add_table() const noexcept { return add_; }
  [[nodiscard]] const Table& action_table() const noexcept { return action_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] std::string label(Elem x) const;
  [[nodiscard]] CommutativeMonoid monoid() const;

  /// Same scalar tables and same module tables; labels ignored.
  [[nodiscard]] bool same_structure(const FiniteSemimodule& other) const noexcept;

 private:
  SemiringPtr scalars_;
  std::size_t size_;
  Table add_;
  Elem zero_;
  Table action_;
  std::vector<std::string> labels_;
};

/// Monoid laws and SM1 (ab)x = a(bx), SM2 a(x+y) = ax+ay, SM3 (a+b)x = ax+bx,
/// SM4 0x = 0 = a0, SM5 1x = x; plus add_idempotent when the scalars are
/// additively idempotent.
AxiomReport check_semimodule(const FiniteSemimodule& m);

bool same_scalars(const FiniteSemimodule& m, const FiniteSemimodule& n) noexcept;

/// Free module S^X with pointwise operations. Coordinates are encoded in base
/// |S| with coordinate 0 most significant.
struct FreeSemimodule {
  FiniteSemimodule module;
  std::size_t rank = 0;
  /// chi_x: one at x, zero elsewhere.
  std::vector<Elem> basis;

  [[nodiscard]] Elem encode(std::span<const Elem> coords) const;
  [[nodiscard]] std::vector<Elem> decode(Elem v) const;
};

/// Throws SizeGuard above |S|^rank > max_carrier.
FreeSemimodule free_semimodule(SemiringPtr scalars, std::size_t rank);
/// S acting on itself by left multiplication.
FiniteSemimodule regular_module(SemiringPtr scalars);
FiniteSemimodule trivial_module(SemiringPtr scalars);

struct Submodule {
  FiniteSemimodule module;
  /// Sorted indices in the ambient module; element i of `module` is
  /// inclusion[i].
  std::vector<Elem> inclusion;
};

/// Least subsemimodule containing gens.
Submodule generate(const FiniteSemimodule& m, std::span<const Elem> gens);
/// Closure as a member mask.
std::vector<char> span_mask(const FiniteSemimodule& m, std::span<const Elem> gens);
/// Builds the submodule on an already closed subset; throws InvalidArgument
/// otherwise.
Submodule submodule_on(const FiniteSemimodule& m, std::span<const Elem> members);

/// Minimum generating set, lexicographically first, when the subset search
/// fits a fixed budget; otherwise an ascending greedy pass followed by
/// elimination in descending index order (irredundant, not always minimum).
std::vector<Elem> generating_set(const FiniteSemimodule& m);

bool is_hom(const FiniteSemimodule& source, const FiniteSemimodule& target,
            std::span<const Elem> map) noexcept;

/// Visits every hom M -> N in lexicographic order of the image tuple of
/// `gens` (sorted, must generate M). The visitor returns false to stop.
/// Throws ScalarMismatch, EnumGuard when |N|^|gens| exceeds max_enum.
void for_each_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                  std::span<const Elem> gens,
                  const std::function<bool(const ElemMap&)>& visit);
void for_each_monoid_hom(const CommutativeMonoid& m, const CommutativeMonoid& n,
                         const std::function<bool(const ElemMap&)>& visit);
std::vector<ElemMap> monoid_homs(const CommutativeMonoid& m,
                                 const CommutativeMonoid& n);
std::vector<Elem> monoid_generating_set(const CommutativeMonoid& m);

/// hom_S(M, N) with pointwise sum.
struct HomSemilattice {
  SemiringPtr scalars;
  std::vector<Elem> generators;
  std::vector<ElemMap> homs;
  /// Hom indices sorted by map, for lookup.
  std::vector<Elem> sorted;
  /// Index of the pointwise sum of homs i and j.
  Table add;
  Elem zero = 0;
  /// (a.f)(x) = a.f(x); only filled when the scalars are commutative.
  std::optional<Table> action;

  [[nodiscard]] std::size_t size() const noexcept { return homs.size(); }
  [[nodiscard]] std::optional<Elem> index_of(const ElemMap& h) const;
  [[nodiscard]] CommutativeMonoid as_monoid() const;
  /// Throws InvalidArgument when the scalars are not commutative.
  [[nodiscard]] FiniteSemimodule as_semimodule() const;
};

HomSemilattice hom_set(const FiniteSemimodule& m, const FiniteSemimodule& n);

enum class Composition {
  Reverse,  ///< f.g = g o f (apply f first)
  Forward,  ///< f.g = f o g
};

struct EndSemiring {
  FiniteSemiring semiring;
  std::vector<ElemMap> maps;
};
EndSemiring end_semiring(const FiniteSemimodule& m,
                         Composition order = Composition::Reverse);

/// a |-> h_a with h_a(x) = a.x on the additive monoid of S.
struct XiEmbedding {
  std::vector<ElemMap> images;
  bool endomorphisms = false;  ///< every h_a preserves + and 0
  bool homomorphism = false;   ///< xi(a+b), xi(ab) = xi(a) o xi(b), xi(0), xi(1)
  bool injective = false;      ///< witnessed by h_a(1) = a
};
XiEmbedding xi_embedding(const FiniteSemiring& s);
/// x |-> a.x for every scalar a.
std::vector<ElemMap> scalar_maps(const FiniteSemimodule& m);

struct StrongVerdict {
  bool strong = true;
  /// First (a, b, x) in ascending order with a.y = b.y for all y but
  /// a*.x != b*.x.
  std::optional<std::array<Elem, 3>> counterexample;
};
/// The scalars of M must be one of the two reducts of A; throws
/// ScalarMismatch otherwise.
StrongVerdict is_strong(const MvAlgebra& a, const FiniteSemimodule& m);
bool is_strong_counterexample(const MvAlgebra& a, const FiniteSemimodule& m,
                              Elem s, Elem t, Elem x);

struct EndMvVerdict {
  /// xi(a) |-> xi(a*) is a function on xi[A].
  bool star_well_defined = false;
  std::optional<std::pair<Elem, Elem>> conflict;
  /// xi[A] with the transported star satisfies the MV-semiring laws.
  bool mv_semiring = false;
  std::size_t image_size = 0;
  [[nodiscard]] bool holds() const noexcept { return star_well_defined && mv_semiring; }
};
EndMvVerdict endmv_check(const MvAlgebra& a, const FiniteSemimodule& m);

struct QuotientModule {
  FiniteSemimodule module;
  std::vector<Elem> projection;
  StrongVerdict strong;
};
/// Join reduct of A/I over the vee-odot reduct, with (a, x/I) |-> (a odot x)/I.
/// Throws NotAnIdeal.
QuotientModule quotient_module_from_ideal(const MvAlgebra& a, const MvIdeal& ideal);

/// N with a.x = h(a).x; throws NotAHom.
FiniteSemimodule restrict_scalars(SemiringPtr source, std::span<const Elem> h,
                                  const FiniteSemimodule& n);

/// Structure-preserving relabelling check: map is a bijective hom whose
/// inverse is a hom.
bool is_isomorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                    std::span<const Elem> map) noexcept;

}  // namespace mvsr

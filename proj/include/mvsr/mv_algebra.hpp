#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvsr/rational.hpp"
#include "mvsr/report.hpp"
#include "mvsr/semiring.hpp"
#include "mvsr/table.hpp"

namespace mvsr {

/// Finite MV-algebra <A, oplus, star, 0>. The derived operations
/// one = 0*, x odot y = (x* oplus y*)*, x vee y = (x odot y*) oplus y and
/// x wedge y = (x* vee y*)* are tabulated at construction.
class MvAlgebra {
 public:
  MvAlgebra(std::size_t size, Table oplus, std::vector<Elem> star, Elem zero,
            std::vector<std::string> labels = {},
            std::vector<Rational> values = {});

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem one() const noexcept { return star_[zero_]; }
  [[nodiscard]] Elem oplus(Elem a, Elem b) const noexcept { return oplus_(a, b); }
  [[nodiscard]] Elem star(Elem a) const noexcept { return star_[a]; }
  [[nodiscard]] Elem odot(Elem a, Elem b) const noexcept { return odot_(a, b); }
  [[nodiscard]] Elem vee(Elem a, Elem b) const noexcept { return vee_(a, b); }
  [[nodiscard]] Elem wedge(Elem a, Elem b) const noexcept { return wedge_(a, b); }
  /// Natural order: a <= b iff a* oplus b = 1.
  [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
    return oplus(star(a), b) == one();
  }

  [[nodiscard]] const Table& oplus_table() const noexcept { return oplus_; }
  [[nodiscard]] const std::vector<Elem>& star_table() const noexcept {
    return star_;
  }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] std::string label(Elem a) const;
  /// Rational value of each element for chains built from [0,1]; empty
  /// otherwise.
  [[nodiscard]] const std::vector<Rational>& values() const noexcept {
    return values_;
  }
  /// Index of the element with the given rational value.
  [[nodiscard]] std::optional<Elem> find_value(const Rational& v) const;

  /// Same tables and zero; labels and values are ignored.
  [[nodiscard]] bool same_structure(const MvAlgebra& other) const noexcept;

 private:
  std::size_t size_;
  Table oplus_;
  std::vector<Elem> star_;
  Elem zero_;
  std::vector<std::string> labels_;
  std::vector<Rational> values_;
  Table odot_;
  Table vee_;
  Table wedge_;
};

/// Commutative monoid laws, MV1-MV3, the derived identities and the bounded
/// lattice order, each checked exhaustively.
AxiomReport check_mv_axioms(const MvAlgebra& a);

/// Chain {0, 1/(k-1), ..., 1} with x oplus y = min(x+y, 1) and x* = 1-x;
/// throws ChainTooShort for k < 2.
MvAlgebra lukasiewicz_chain(std::size_t k);
/// The one-element algebra (0 = 1).
MvAlgebra trivial_mv();
/// Componentwise operations on pairs; (a, b) has index a*|B|+b.
MvAlgebra product(const MvAlgebra& a, const MvAlgebra& b);

/// The four equivalent conditions for x <= y.
struct LeqVerdict {
  bool star_oplus = false;      ///< x* oplus y = 1
  bool odot_star = false;       ///< x odot y* = 0
  bool decomposition = false;   ///< y = x oplus (y odot x*)
  bool exists_summand = false;  ///< exists z with x oplus z = y
  std::optional<Elem> witness;  ///< least such z
  bool inconsistent = false;    ///< the four verdicts disagree
  [[nodiscard]] bool holds() const noexcept {
    return !inconsistent && star_oplus;
  }
};
LeqVerdict leq_equivalence_check(const MvAlgebra& a, Elem x, Elem y);

/// <A, vee, odot, 0, 1>.
FiniteSemiring reduct_vee_odot(const MvAlgebra& a);
/// <A, wedge, oplus, 1, 0>.
FiniteSemiring reduct_wedge_oplus(const MvAlgebra& a);
/// Exhaustively checks that star maps the first reduct isomorphically onto
/// the second.
bool star_is_reduct_isomorphism(const MvAlgebra& a);

/// Conditions (i) a*b = 0 iff b <= a*, and (ii) a + b = (a* (a* b)*)*, for
/// a commutative additively idempotent semiring with a candidate negation.
bool mv_semiring_negation_check(const FiniteSemiring& s,
                                std::span<const Elem> star);
/// The MV-algebra with a oplus b = (a* b*)* and zero = s.zero().
MvAlgebra mv_from_mv_semiring(const FiniteSemiring& s,
                              std::span<const Elem> star);

/// Preserves oplus, star and zero.
bool is_mv_hom(const MvAlgebra& source, const MvAlgebra& target,
               std::span<const Elem> map) noexcept;

/// MV-ideal as a sorted member list.
using MvIdeal = std::vector<Elem>;

bool is_ideal(const MvAlgebra& a, std::span<const Elem> members);
/// d(a, b) = (a odot b*) oplus (b odot a*).
Elem distance(const MvAlgebra& a, Elem x, Elem y) noexcept;
/// All ideals ordered by (size, members); exhaustive over subsets, guarded at
/// 2^20 subsets.
std::vector<MvIdeal> ideals(const MvAlgebra& a);
/// a ~ b iff d(a, b) in I; throws NotAnIdeal.
Partition congruence_from_ideal(const MvAlgebra& a, const MvIdeal& ideal);
/// Class of zero; throws NotACongruence if the partition is not compatible.
MvIdeal ideal_from_congruence(const MvAlgebra& a, const Partition& partition);
bool is_congruence(const MvAlgebra& a, const Partition& partition);
/// All congruences as canonical partitions (set-partition enumeration).
std::vector<Partition> congruences(const MvAlgebra& a);
/// Checks that the two maps are mutually inverse and the counts match.
bool ideal_congruence_bijection_holds(const MvAlgebra& a);

struct MvQuotient {
  MvAlgebra algebra;
  /// Element of A -> its class; classes ordered by least representative.
  std::vector<Elem> projection;
};
MvQuotient quotient(const MvAlgebra& a, const MvIdeal& ideal);

struct BooleanCenter {
  std::vector<Elem> members;
  bool closed = false;            ///< under oplus, odot and star
  bool decompositions = false;    ///< a = (a+u)^(a+u*) = (a.u)v(a.u*)
  bool idempotents_agree = false; ///< a+a = a iff a.a = a
};
BooleanCenter boolean_center(const MvAlgebra& a);

}  // namespace mvsr

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mvsr/mv_algebra.hpp"

namespace mvsr {

/// Term over the primitive signature {variables, 0, oplus, star}.
struct Term {
  enum class Op { Var, Zero, Oplus, Star };
  Op op = Op::Zero;
  std::string name;  ///< variable name for Op::Var
  std::vector<std::shared_ptr<const Term>> args;
};
using TermPtr = std::shared_ptr<const Term>;

TermPtr term_var(std::string name);
TermPtr term_zero();
TermPtr term_oplus(TermPtr a, TermPtr b);
TermPtr term_star(TermPtr a);

/// Parses a prefix s-expression such as "(oplus x (star x))". Besides the
/// primitives, 1, odot, vee and wedge are accepted and elaborated into them.
/// Throws ParseError with the offending position.
TermPtr parse_term(const std::string& text);
/// Prints the primitive form.
std::string to_string(const Term& t);

/// Distinct variable names in sorted order.
std::vector<std::string> variables(const Term& t);
Elem evaluate(const MvAlgebra& a, const Term& t,
              const std::vector<std::string>& vars,
              const std::vector<Elem>& values);

struct EquationResult {
  bool holds = true;
  /// First failing assignment in lexicographic order, as (variable, element).
  std::vector<std::pair<std::string, Elem>> counterexample;
};

/// Exhaustive over all assignments; throws TooManyVariables above 4.
EquationResult equation_holds(const MvAlgebra& a, const Term& lhs,
                              const Term& rhs);
EquationResult equation_holds(const MvAlgebra& a, const std::string& lhs,
                              const std::string& rhs);

}  // namespace mvsr

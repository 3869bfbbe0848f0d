#include "mvsr/mv_term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mvsr/error.hpp"

namespace mvsr {

TermPtr term_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->op = Term::Op::Var;
  t->name = std::move(name);
  return t;
}

TermPtr term_zero() { return std::make_shared<Term>(); }

TermPtr term_oplus(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->op = Term::Op::Oplus;
  t->args = {std::move(a), std::move(b)};
  return t;
}

TermPtr term_star(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->op = Term::Op::Star;
  t->args = {std::move(a)};
  return t;
}

namespace {

TermPtr term_odot(TermPtr a, TermPtr b) {
  return term_star(term_oplus(term_star(std::move(a)), term_star(std::move(b))));
}

TermPtr term_vee(TermPtr a, TermPtr b) {
  return term_oplus(term_odot(a, term_star(b)), b);
}

TermPtr term_wedge(TermPtr a, TermPtr b) {
  return term_star(term_vee(term_star(std::move(a)), term_star(std::move(b))));
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  TermPtr parse_all() {
    TermPtr t = parse();
    skip_space();
    if (pos_ != s_.size()) error("trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError,
         "term: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) error("expected a symbol");
    return s_.substr(start, pos_ - start);
  }

  TermPtr parse() {
    skip_space();
    if (pos_ >= s_.size()) error("unexpected end of input");
    if (s_[pos_] == ')') error("unexpected ')'");
    if (s_[pos_] != '(') {
      const std::string a = atom();
      if (a == "0") return term_zero();
      if (a == "1") return term_star(term_zero());
      if (!std::isalpha(static_cast<unsigned char>(a[0])))
        error("invalid variable '" + a + "'");
      if (a == "oplus" || a == "star" || a == "odot" || a == "vee" ||
          a == "wedge")
        error("operator '" + a + "' used as a variable");
      return term_var(a);
    }
    ++pos_;
    const std::string head = atom();
    std::vector<TermPtr> args;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size()) error("missing ')'");
      if (s_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(parse());
    }
    const auto arity = [&](std::size_t n) {
      if (args.size() != n)
        error("'" + head + "' expects " + std::to_string(n) + " arguments");
    };
    if (head == "star") {
      arity(1);
      return term_star(args[0]);
    }
    if (head == "oplus" || head == "odot" || head == "vee" || head == "wedge") {
      arity(2);
      if (head == "oplus") return term_oplus(args[0], args[1]);
      if (head == "odot") return term_odot(args[0], args[1]);
      if (head == "vee") return term_vee(args[0], args[1]);
      return term_wedge(args[0], args[1]);
    }
    error("unknown operator '" + head + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void collect(const Term& t, std::set<std::string>& out) {
  if (t.op == Term::Op::Var) out.insert(t.name);
  for (const auto& c : t.args) collect(*c, out);
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse_all(); }

std::string to_string(const Term& t) {
  switch (t.op) {
    case Term::Op::Var:
      return t.name;
    case Term::Op::Zero:
      return "0";
    case Term::Op::Star:
      return "(star " + to_string(*t.args[0]) + ")";
    case Term::Op::Oplus:
      return "(oplus " + to_string(*t.args[0]) + " " + to_string(*t.args[1]) +
             ")";
  }
  return {};
}

std::vector<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return {out.begin(), out.end()};
}

Elem evaluate(const MvAlgebra& a, const Term& t,
              const std::vector<std::string>& vars,
              const std::vector<Elem>& values) {
  switch (t.op) {
    case Term::Op::Var: {
      const auto it = std::lower_bound(vars.begin(), vars.end(), t.name);
      if (it == vars.end() || *it != t.name)
        fail(ErrorKind::InvalidArgument, "unbound variable " + t.name);
      return values[static_cast<std::size_t>(it - vars.begin())];
    }
    case Term::Op::Zero:
      return a.zero();
    case Term::Op::Star:
      return a.star(evaluate(a, *t.args[0], vars, values));
    case Term::Op::Oplus:
      return a.oplus(evaluate(a, *t.args[0], vars, values),
                     evaluate(a, *t.args[1], vars, values));
  }
  return a.zero();
}

EquationResult equation_holds(const MvAlgebra& a, const Term& lhs,
                              const Term& rhs) {
  std::set<std::string> names;
  collect(lhs, names);
  collect(rhs, names);
  if (names.size() > 4)
    fail(ErrorKind::TooManyVariables,
         "equation has " + std::to_string(names.size()) + " variables (max 4)");
  const std::vector<std::string> vars(names.begin(), names.end());
  std::vector<Elem> values(vars.size(), 0);
  for (;;) {
    if (evaluate(a, lhs, vars, values) != evaluate(a, rhs, vars, values)) {
      EquationResult r;
      r.holds = false;
      for (std::size_t i = 0; i < vars.size(); ++i)
        r.counterexample.emplace_back(vars[i], values[i]);
      return r;
    }
    // Odometer with the first variable most significant.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++values[i] < a.size()) break;
      values[i] = 0;
      if (i == 0) return {};
    }
    if (vars.empty()) return {};
  }
}

EquationResult equation_holds(const MvAlgebra& a, const std::string& lhs,
                              const std::string& rhs) {
  return equation_holds(a, *parse_term(lhs), *parse_term(rhs));
}

}  // namespace mvsr

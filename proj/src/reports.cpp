#include "mvsr/reports.hpp"

#include <algorithm>

#include "mvsr/matrix.hpp"
#include "mvsr/projective.hpp"

namespace mvsr {

namespace {

Json group_json(const AbelianGroupSNF& g) {
  Json torsion = Json::array();
  for (const BigInt& d : g.torsion) {
    if (d <= BigInt(INT64_MAX)) torsion.push_back(d.convert_to<std::int64_t>());
    else torsion.push_back(d.str());
  }
  return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}, {"text", to_string(g)}};
}

Json entries_json(const Table& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (Elem v : t.row(r)) row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json axiom_report_json(const AxiomReport& r) {
  Json laws = Json::array();
  for (const LawOutcome& l : r.laws)
    laws.push_back(Json{{"law", l.law}, {"passed", l.passed}, {"witness", l.witness}});
  return Json{{"valid", r.valid()}, {"laws", std::move(laws)}};
}

VerifyOutcome verify_report(const Algebra& a) {
  VerifyOutcome out;
  if (const auto* s = std::get_if<FiniteSemiring>(&a)) {
    const AxiomReport r = check_semiring_axioms(*s);
    out.valid = r.valid();
    out.report = Json{{"kind", "semiring"},
                      {"size", s->size()},
                      {"axioms", axiom_report_json(r)},
                      {"additively_idempotent", is_additively_idempotent(*s)},
                      {"commutative", s->is_commutative()}};
  } else if (const auto* m = std::get_if<MvAlgebra>(&a)) {
    const AxiomReport r = check_mv_axioms(*m);
    out.valid = r.valid();
    out.report = Json{{"kind", "mv"}, {"size", m->size()}, {"axioms", axiom_report_json(r)}};
    if (r.valid()) {
      const AxiomReport v = check_semiring_axioms(reduct_vee_odot(*m));
      const AxiomReport w = check_semiring_axioms(reduct_wedge_oplus(*m));
      const bool star = star_is_reduct_isomorphism(*m);
      out.valid = v.valid() && w.valid() && star;
      out.report["reducts"] = Json{{"vee_odot", axiom_report_json(v)},
                                   {"wedge_oplus", axiom_report_json(w)},
                                   {"star_is_isomorphism", star}};
    }
  } else if (const auto* mod = std::get_if<FiniteSemimodule>(&a)) {
    const AxiomReport r = check_semimodule(*mod);
    const AxiomReport s = check_semiring_axioms(mod->scalars());
    out.valid = r.valid() && s.valid();
    out.report = Json{{"kind", "semimodule"},
                      {"size", mod->size()},
                      {"scalars", axiom_report_json(s)},
                      {"axioms", axiom_report_json(r)}};
  } else {
    const auto& u = std::get<SemiringMatrix>(a);
    const AxiomReport s = check_semiring_axioms(*u.scalars);
    out.valid = s.valid();
    out.report = Json{{"kind", "matrix"},
                      {"rows", u.rows},
                      {"cols", u.cols},
                      {"scalars", axiom_report_json(s)},
                      {"idempotent", u.is_square() && is_mult_idempotent(u)}};
  }
  return out;
}

Json k0_report(const K0Result& r) {
  const ProjClassMonoid& p = r.monoid;
  Json classes = Json::array();
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const ProjClass& c = p.classes[i];
    classes.push_back(Json{{"index", i},
                           {"size", c.size},
                           {"module_size", c.module.size()},
                           {"rep", entries_json(c.rep.entries)}});
  }
  Json relations = Json::array();
  for (const auto& rel : p.relations) relations.push_back(Json{rel[0], rel[1], rel[2]});
  Json stability{{"stable", r.stable()},
                 {"previous", r.previous ? group_json(*r.previous) : Json(nullptr)}};
  return Json{{"scalars", to_json(*p.scalars)},
              {"n_max", p.n_max},
              {"classes", std::move(classes)},
              {"trivial", p.trivial},
              {"relations", std::move(relations)},
              {"group", group_json(r.completion.group)},
              {"truncated", true},
              {"stability", std::move(stability)}};
}

Json projective_report(const FiniteSemimodule& m, std::optional<std::size_t> bound) {
  const auto retract = is_projective_retract_oracle(m, bound);
  const auto matrix = is_projective_matrix_criterion(m, bound);
  Json retraction = nullptr;
  if (retract)
    retraction = Json{{"generators", retract->generators}, {"pi", retract->pi}, {"mu", retract->mu}};
  Json presentation = nullptr;
  if (matrix) {
    presentation = to_json(matrix->u);
    presentation["iso"] = matrix->iso;
  }
  return Json{{"projective", retract.has_value()},
              {"presentation", std::move(presentation)},
              {"retraction", std::move(retraction)},
              {"witnesses", Json{{"retract", retract.has_value()},
                                 {"matrix", matrix.has_value()},
                                 {"agree", retract.has_value() == matrix.has_value()},
                                 {"generators", generating_set(m).size()}}}};
}

Json tensor_report(const TensorProduct& t, const UniversalProperty& up) {
  Json tensors = Json::array();
  for (Elem x = 0; x < t.left.size(); ++x)
    for (Elem y = 0; y < t.right.size(); ++y) tensors.push_back(Json{x, y, t.tensor(x, y)});
  Json reps = Json::array();
  for (const auto& r : t.representatives) reps.push_back(r);
  return Json{{"left", to_json(t.left)},
              {"right", to_json(t.right)},
              {"classes", t.size()},
              {"representatives", std::move(reps)},
              {"tensors", std::move(tensors)},
              {"module", to_json(t.module)},
              {"method", t.method == TensorMethod::Quotient ? "quotient" : "separating"},
              {"universal_property", up.holds() ? "verified" : "failed"},
              {"universal_property_detail", Json{{"monoids", up.monoids},
                                                 {"bimorphisms", up.bimorphisms},
                                                 {"existence_failures", up.existence_failures},
                                                 {"uniqueness_failures", up.uniqueness_failures}}}};
}

Json gamma_report(const GammaReport& r) {
  Json failure = nullptr;
  if (r.first_failure)
    failure = Json{{"law", r.first_failure->law},
                   {"a", to_string(r.first_failure->a)},
                   {"b", to_string(r.first_failure->b)}};
  return Json{{"unit", to_string(r.unit)},
              {"domain", to_string(r.domain)},
              {"samples", r.samples},
              {"seed", r.seed},
              {"meet_failures", r.meet_failures},
              {"sum_failures", r.sum_failures},
              {"first_failure", std::move(failure)},
              {"passed", r.passed()}};
}

Json homset_report(const FiniteSemimodule& m, const FiniteSemimodule& n, const HomSemilattice& hs) {
  std::vector<ElemMap> homs = hs.homs;
  std::sort(homs.begin(), homs.end());
  return Json{{"source_size", m.size()},
              {"target_size", n.size()},
              {"generators", hs.generators},
              {"count", homs.size()},
              {"homs", homs}};
}

Json idempotents_report(const SemiringPtr& s, std::size_t n) {
  Json matrices = Json::array();
  const std::vector<SemiringMatrix> all = all_idempotents(s, n);
  for (const SemiringMatrix& u : all) matrices.push_back(entries_json(u.entries));
  return Json{{"scalars", to_json(*s)}, {"n", n}, {"count", all.size()}, {"matrices", std::move(matrices)}};
}

}  // namespace mvsr

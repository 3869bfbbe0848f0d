// One [PASS]/[FAIL] line per acceptance criterion. Exit status is the number
// of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mvsr/cli.hpp"
#include "mvsr/families.hpp"
#include "mvsr/gamma.hpp"
#include "mvsr/grothendieck.hpp"
#include "mvsr/json_io.hpp"
#include "mvsr/projective.hpp"
#include "mvsr/rng.hpp"
#include "mvsr/smith.hpp"
#include "mvsr/tensor.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kAc1Seconds = 5.0;
constexpr double kAc2Seconds = 10.0;
constexpr std::uint64_t kGammaSamples = 10'000;
constexpr std::uint64_t kGammaSeed = 42;
constexpr int kSnfMatrices = 1000;
constexpr std::size_t kSnfMaxDim = 4;
constexpr std::size_t kTensorPairBound = 12;
constexpr std::size_t kTensorFamilyMax = 6;
constexpr std::size_t kZetaFamilyMax = 3;
constexpr std::size_t kEmbeddingFamilyMax = 4;
constexpr int kDeterminismRuns = 3;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

std::vector<MvAlgebra> ac1_algebras() {
  std::vector<MvAlgebra> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(lukasiewicz_chain(n));
  out.push_back(product(lukasiewicz_chain(2), lukasiewicz_chain(2)));
  out.push_back(product(lukasiewicz_chain(2), lukasiewicz_chain(3)));
  return out;
}

Verdict ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t laws = 0, failures = 0;
  for (const MvAlgebra& a : ac1_algebras()) {
    for (const AxiomReport& r :
         {check_mv_axioms(a), check_semiring_axioms(reduct_vee_odot(a)), check_semiring_axioms(reduct_wedge_oplus(a))}) {
      laws += r.laws.size();
      for (const auto& l : r.laws) failures += l.passed ? 0 : 1;
    }
    ++laws;
    if (!star_is_reduct_isomorphism(a)) ++failures;
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t < kAc1Seconds,
          std::to_string(laws) + " law checks on 7 algebras, " + std::to_string(failures) + " failures, " +
              fmt_seconds(t) + " (limit " + fmt_seconds(kAc1Seconds) + ")"};
}

Verdict ac2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;
  for (const auto& [s, name] : {std::pair{boolean(), "L2"}, std::pair{vee_odot(3), "L3"}}) {
    const EtaCertificate c = eta(s, 2);
    const std::size_t brute = brute_homs(free_semimodule(s, 2).module, free_semimodule(s, 2).module).size();
    ok = ok && c.valid() && c.matrices == c.endomorphisms && c.endomorphisms == brute;
    os << name << ": |M_2| = " << c.matrices << ", |End| = " << c.endomorphisms << " (brute " << brute
       << "), hom " << (c.valid() ? "yes" : "no") << "; ";
  }
  const EtaCertificate b = eta(boolean(), 2);
  ok = ok && b.matrices == 16;
  const double t = seconds_since(t0);
  ok = ok && t < kAc2Seconds;
  os << fmt_seconds(t) << " (limit " << fmt_seconds(kAc2Seconds) << ")";
  return {ok, os.str()};
}

Verdict ac3() {
  std::size_t idempotents = 0, agree = 0;
  for (const SemiringPtr& s : {boolean(), vee_odot(3)}) {
    for (const SemiringMatrix& u : all_idempotents(s, 2)) {
      ++idempotents;
      const FiniteSemimodule m = row_space(u).space.module;
      const bool retract = is_projective_retract_oracle(m, 2).has_value();
      const bool matrix = is_projective_matrix_criterion(m, 2).has_value();
      if (retract == matrix && retract) ++agree;
    }
  }
  const MvAlgebra l5 = lukasiewicz_chain(5);
  const FiniteSemimodule low =
      regular_sub(vee_odot(5), {l5.zero(), chain_elem(l5, 1, 4), chain_elem(l5, 1, 2)});
  const bool low_retract = is_projective_retract_oracle(low).has_value();
  const bool low_matrix = is_projective_matrix_criterion(low).has_value();
  const bool ok = idempotents == agree && !low_retract && !low_matrix;
  return {ok, std::to_string(agree) + "/" + std::to_string(idempotents) +
                  " idempotents agree; L5 interval {0,1/4,1/2} rejected by retract: " +
                  (low_retract ? "no" : "yes") + ", by matrix: " + (low_matrix ? "no" : "yes")};
}

Verdict ac4() {
  const MvAlgebra a = product(lukasiewicz_chain(2), lukasiewicz_chain(2));
  const FiniteSemimodule reg = regular_module(make_semiring(reduct_vee_odot(a)));
  std::size_t cyclic = 0, coincide = 0;
  for (Elem x = 0; x < a.size(); ++x) {
    const TrichotomyReport r = cyclic_mv_trichotomy(a, generate(reg, std::vector<Elem>{x}).module);
    ++cyclic;
    if (r.coincide()) ++coincide;
  }
  std::size_t splits = 0;
  const auto center = boolean_center(a).members;
  for (Elem u : center) splits += boolean_split_holds(a, u) ? 1 : 0;
  return {coincide == cyclic && splits == center.size() && center.size() == 4,
          std::to_string(coincide) + "/" + std::to_string(cyclic) + " cyclic modules coincide; " +
              std::to_string(splits) + "/" + std::to_string(center.size()) + " Boolean splits"};
}

Verdict ac5() {
  bool ok = true;
  std::ostringstream os;
  const ProjClassMonoid b1 = enumerate_projective_classes(boolean(), 1);
  ok = ok && b1.classes.size() == 2;
  os << "L2 n_max 1: " << b1.classes.size() << " classes; ";

  const AbelianGroupSNF idem = grothendieck_completion(MonoidPresentation{1, {{{0, 0}, {0}}}}).group;
  const AbelianGroupSNF free = grothendieck_completion(MonoidPresentation{1, {}}).group;
  ok = ok && idem == AbelianGroupSNF{0, {}} && free == AbelianGroupSNF{1, {}};
  os << "g+g=g -> " << to_string(idem) << ", free -> " << to_string(free) << "; ";

  // hom family: L2 -> L2xL2 diagonal, both projections, identities, swap
  const SemiringPtr bb = make_semiring(product(boolean_semiring(), boolean_semiring()));
  const ProjClassMonoid pbb = enumerate_projective_classes(bb, 1);
  struct Hom {
    const ProjClassMonoid* src;
    const ProjClassMonoid* dst;
    std::vector<Elem> map;
  };
  const std::vector<Hom> homs{{&b1, &b1, {0, 1}},          {&b1, &pbb, {0, 3}},        {&pbb, &b1, {0, 0, 1, 1}},
                              {&pbb, &b1, {0, 1, 0, 1}},   {&pbb, &pbb, {0, 1, 2, 3}}, {&pbb, &pbb, {0, 2, 1, 3}}};
  std::size_t laws = 0, law_failures = 0;
  for (const Hom& f : homs) {
    if (f.src == f.dst && std::is_sorted(f.map.begin(), f.map.end())) {
      const GroupHomMatrix m = k0_of_hom(*f.src, *f.dst, f.map);
      ++laws;
      for (std::size_t i = 0; i < m.entries.size(); ++i)
        for (std::size_t j = 0; j < m.entries[i].size(); ++j)
          if (m.entries[i][j] != (i == j ? 1 : 0)) {
            ++law_failures;
            i = m.entries.size();
            break;
          }
    }
    for (const Hom& g : homs) {
      if (f.dst != g.src) continue;
      std::vector<Elem> gf(f.map.size());
      for (std::size_t a = 0; a < gf.size(); ++a) gf[a] = g.map[f.map[a]];
      ++laws;
      const auto lhs = k0_of_hom(*f.src, *g.dst, gf).entries;
      const auto rhs = int_matrix_product(k0_of_hom(*g.src, *g.dst, g.map).entries,
                                          k0_of_hom(*f.src, *f.dst, f.map).entries);
      if (lhs != rhs) ++law_failures;
    }
  }
  ok = ok && law_failures == 0;
  os << laws << " functor-law checks, " << law_failures << " failures; ";

  SeededRng rng(42);
  int mismatches = 0;
  for (int i = 0; i < kSnfMatrices; ++i) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, kSnfMaxDim));
    const auto c = static_cast<std::size_t>(rng.uniform(1, kSnfMaxDim));
    IntMat m(r, std::vector<BigInt>(c));
    for (auto& row : m)
      for (auto& v : row) v = rng.uniform(-12, 12);
    const SmithResult s = smith_normal_form(m);
    if (!s.verified || s.invariants != gcd_of_minors(m, c)) ++mismatches;
  }
  ok = ok && mismatches == 0;
  os << "SNF vs gcd-of-minors: " << mismatches << "/" << kSnfMatrices << " mismatches";
  return {ok, os.str()};
}

Verdict ac6() {
  const SemiringPtr b = boolean();
  const auto fam = enumerate_modules(b, kTensorFamilyMax);
  std::size_t pairs = 0, law_failures = 0, up_failures = 0, bimorphisms = 0;
  for (const auto& m : fam)
    for (const auto& n : fam) {
      if (m.size() * n.size() > kTensorPairBound) continue;
      ++pairs;
      const TensorProduct t = tensor_product(m, n);
      if (!check_tensor_laws(t).valid()) ++law_failures;
      const UniversalProperty up = universal_property(t);
      bimorphisms += up.bimorphisms;
      up_failures += up.existence_failures + up.uniqueness_failures;
    }
  std::size_t unit_isos = 0;
  const FiniteSemimodule reg = regular_module(b);
  for (const auto& m : fam) {
    const TensorProduct t = tensor_product(reg, m);
    ElemMap unit(m.size());
    for (Elem x = 0; x < m.size(); ++x) unit[x] = t.tensor(b->one(), x);
    if (is_isomorphism(m, t.module, unit)) ++unit_isos;
  }
  std::ostringstream os;
  os << pairs << " pairs from " << fam.size() << " modules, " << bimorphisms << " bimorphisms into "
     << small_monoid_family().size() << "+2 monoids; law failures " << law_failures << ", universal-property failures "
     << up_failures << "; S(x)M = M for " << unit_isos << "/" << fam.size();
  return {law_failures == 0 && up_failures == 0 && unit_isos == fam.size() && pairs > 0, os.str()};
}

Verdict ac7() {
  const SemiringPtr b = boolean();
  std::size_t triples = 0, zeta_failures = 0;
  const auto small = enumerate_modules(b, kZetaFamilyMax);
  for (const auto& m : small)
    for (const auto& n : small)
      for (const auto& p : small) {
        ++triples;
        const ZetaReport z = zeta_isomorphism(m, n, n, p);
        const ZetaReport zp = zeta_isomorphism_prime(m, m, n, p);
        if (!z.holds() || !zp.holds()) ++zeta_failures;
      }
  const auto fam = enumerate_modules(b, kEmbeddingFamilyMax);

  const SemiringPtr bb = make_semiring(product(boolean_semiring(), boolean_semiring()));
  const std::vector<Elem> proj{0, 0, 1, 1};
  const FullEmbeddingReport e1 = full_embedding_check(bb, b, proj, fam);
  const AdjunctionReport adj = adjunction_witness(bb, b, proj, enumerate_modules(bb, 2), fam);

  const MvAlgebra a22 = product(lukasiewicz_chain(2), lukasiewicz_chain(2));
  const MvQuotient q = quotient(a22, MvIdeal{0, 1});
  const SemiringPtr qa = make_semiring(reduct_vee_odot(a22));
  const SemiringPtr qb = make_semiring(reduct_vee_odot(q.algebra));
  const FullEmbeddingReport e2 = full_embedding_check(qa, qb, q.projection, enumerate_modules(qb, kEmbeddingFamilyMax));

  std::ostringstream os;
  os << "zeta: " << triples - zeta_failures << "/" << triples << " triples; B^2->B: " << e1.pairs
     << " pairs, fullness failures " << e1.fullness_failures << ", unit iso failures " << e1.counit_failures
     << ", adjunction " << (adj.holds() ? "ok" : "FAILED") << " (" << adj.naturality_checks
     << " naturality checks); L2xL2->L2: " << e2.pairs << " pairs, fullness failures " << e2.fullness_failures
     << ", unit iso failures " << e2.counit_failures;
  return {zeta_failures == 0 && e1.holds() && e2.holds() && adj.holds() && e1.pairs > 0 && e2.pairs > 0, os.str()};
}

Verdict ac8() {
  const GammaReport g = gamma_property_report(Rational(1), kGammaSamples, kGammaSeed, GammaDomain::Full);
  bool chains = true;
  for (std::size_t k : {1u, 2u, 4u}) chains = chains && gamma_chain(k).matches_chain;
  std::ostringstream os;
  os << kGammaSamples << " pairs (seed " << kGammaSeed << "): meet failures " << g.meet_failures
     << ", sum failures " << g.sum_failures;
  if (g.first_failure)
    os << " (first: " << g.first_failure->law << " at a=" << to_string(g.first_failure->a)
       << ", b=" << to_string(g.first_failure->b) << ")";
  os << "; chain tables k=1,2,4 " << (chains ? "match" : "DIFFER");
  return {g.passed() && chains, os.str()};
}

Verdict ac9() {
  std::vector<MvAlgebra> algebras;
  for (std::size_t n = 2; n <= 5; ++n) algebras.push_back(lukasiewicz_chain(n));
  algebras.push_back(product(lukasiewicz_chain(2), lukasiewicz_chain(2)));
  algebras.push_back(product(lukasiewicz_chain(2), lukasiewicz_chain(3)));
  std::size_t tested = 0, agree = 0, nonstrong = 0, xi_ok = 0, xi_tested = 0;
  bool l5_instance = false;
  for (const MvAlgebra& a : algebras) {
    const SemiringPtr s = make_semiring(reduct_vee_odot(a));
    std::vector<FiniteSemimodule> ms;
    const FiniteSemimodule reg = regular_module(s);
    for (const auto& members : all_submodules(reg)) ms.push_back(submodule_on(reg, members).module);
    for (const MvIdeal& i : ideals(a)) ms.push_back(quotient_module_from_ideal(a, i).module);
    for (const auto& m : ms) {
      ++tested;
      const bool strong = is_strong(a, m).strong;
      if (strong == endmv_check(a, m).holds()) ++agree;
      if (!strong) ++nonstrong;
      if (!strong && a.size() == 5 && m.size() == 3) l5_instance = true;
    }
    for (const FiniteSemiring& r : {reduct_vee_odot(a), reduct_wedge_oplus(a)}) {
      ++xi_tested;
      if (xi_embedding(r).injective) ++xi_ok;
    }
  }
  std::ostringstream os;
  os << agree << "/" << tested << " (A, M) pairs agree, " << nonstrong << " nonstrong, L5 instance "
     << (l5_instance ? "included" : "MISSING") << "; xi injective on " << xi_ok << "/" << xi_tested << " semirings";
  return {agree == tested && l5_instance && xi_ok == xi_tested, os.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict ac10() {
  const fs::path dir = fs::temp_directory_path() / ("mvsr_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto put = [&](const std::string& name, const Json& j) {
    std::ofstream(dir / name) << dump_json(j);
    return (dir / name).string();
  };
  const std::string l3 = put("l3.json", to_json(lukasiewicz_chain(3)));
  const std::string l2r = put("l2r.json", to_json(reduct_vee_odot(lukasiewicz_chain(2))));
  const std::string m = put("m.json", to_json(free_semimodule(boolean(), 2).module));
  const std::string n = put("n.json", to_json(regular_module(boolean())));
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--input", l3},
      {"chain", "--n", "4"},
      {"reduct", "--input", l3, "--which", "wedge_oplus"},
      {"idempotents", "--input", l2r, "--n", "2"},
      {"projective", "--input", m},
      {"k0", "--input", l2r, "--nmax", "2"},
      {"tensor", "--left", m, "--right", n},
      {"gamma", "--u", "1", "--samples", "2000", "--seed", "42"},
      {"homset", "--left", m, "--right", n},
  };
  ::unsetenv("MVSR_CONFIG");
  std::size_t identical = 0;
  std::string bad;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<std::string> outputs;
    for (int r = 0; r < kDeterminismRuns; ++r) {
      std::ostringstream out, err;
      run_cli(commands[c], out, err);
      outputs.push_back(out.str());
    }
    const fs::path file = dir / ("sub" + std::to_string(c) + ".json");
    std::string cmd = MVSR_CLI_PATH;
    for (const auto& a : commands[c]) cmd += " '" + a + "'";
    cmd += " --out '" + file.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (WIFEXITED(status)) {
      outputs.push_back(slurp(file));
      outputs.push_back(slurp(file));
    }
    const bool same = outputs.size() == static_cast<std::size_t>(kDeterminismRuns) + 2 && !outputs[0].empty() &&
                      std::all_of(outputs.begin(), outputs.end(), [&](const auto& o) { return o == outputs[0]; });
    if (same) ++identical;
    else bad += (bad.empty() ? "" : ", ") + commands[c][0];
  }
  fs::remove_all(dir);
  return {identical == commands.size(),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical over " +
              std::to_string(kDeterminismRuns) + " in-process runs and a subprocess run" +
              (bad.empty() ? "" : "; differing: " + bad)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}

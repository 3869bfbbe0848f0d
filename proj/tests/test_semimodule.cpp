#include <gtest/gtest.h>

#include <set>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/rng.hpp"
#include "mvsr/semimodule.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;

TEST(SemimoduleAxioms, Examples) {
  EXPECT_TRUE(check_semimodule(regular_module(vee_odot(3))).valid());
  // a.x = a ^ x on the 2-chain
  const FiniteSemimodule chain(boolean(), 2, Table::from_rows({{0, 1}, {1, 1}}), 0,
                               Table::from_rows({{0, 0}, {0, 1}}));
  EXPECT_TRUE(check_semimodule(chain).valid());
  // 0.x = x at the top breaks SM4
  const SemiringPtr s = vee_odot(3);
  const FiniteSemimodule reg = regular_module(s);
  Table action = reg.action_table();
  action(s->zero(), 2) = 2;
  const FiniteSemimodule broken(s, 3, reg.add_table(), reg.zero(), action);
  const AxiomReport r = check_semimodule(broken);
  EXPECT_FALSE(r.valid());
  bool witnessed = false;
  for (const auto& l : r.laws)
    if (!l.passed && !l.witness.empty()) witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(FreeSemimodule, SizesAndDecomposition) {
  EXPECT_EQ(free_semimodule(boolean(), 2).module.size(), 4u);
  const FreeSemimodule one = free_semimodule(vee_odot(3), 1);
  EXPECT_EQ(one.module.size(), 3u);
  EXPECT_EQ(one.basis, (std::vector<Elem>{vee_odot(3)->one()}));

  const FreeSemimodule f = free_semimodule(vee_odot(3), 2);
  ASSERT_EQ(f.module.size(), 9u);
  for (Elem v = 0; v < 9; ++v) {
    const std::vector<Elem> c = f.decode(v);
    EXPECT_EQ(f.encode(c), v);
    Elem sum = f.module.zero();
    for (std::size_t i = 0; i < c.size(); ++i) sum = f.module.add(sum, f.module.act(c[i], f.basis[i]));
    EXPECT_EQ(sum, v);
  }
  const ScopedLimits tight(Limits{8, 10'000'000});
  EXPECT_THROW(free_semimodule(vee_odot(3), 2), Error);
}

TEST(Generate, Examples) {
  const SemiringPtr s = vee_odot(3);
  const FiniteSemimodule reg = regular_module(s);
  const std::vector<Elem> one{s->one()};
  EXPECT_EQ(generate(reg, one).module.size(), 3u);
  EXPECT_EQ(generate(reg, std::vector<Elem>{}).inclusion, std::vector<Elem>{reg.zero()});

  const FreeSemimodule f = free_semimodule(s, 2);
  const MvAlgebra l3 = lukasiewicz_chain(3);
  const Elem e10 = f.encode(std::vector<Elem>{l3.one(), l3.zero()});
  const Elem half0 = f.encode(std::vector<Elem>{chain_elem(l3, 1, 2), l3.zero()});
  const Submodule g = generate(f.module, std::vector<Elem>{e10});
  std::vector<Elem> expected{f.module.zero(), half0, e10};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(g.inclusion, expected);
  EXPECT_THROW(submodule_on(f.module, std::vector<Elem>{f.module.zero(), e10}), Error);
}

TEST(Generate, SeededSubmodulesAreClosed) {
  const FreeSemimodule f = free_semimodule(vee_odot(3), 3);
  SeededRng rng(11);
  for (int i = 0; i < 60; ++i) {
    std::vector<Elem> gens;
    const auto k = rng.uniform(0, 3);
    for (int j = 0; j < k; ++j) gens.push_back(static_cast<Elem>(rng.uniform(0, 26)));
    const Submodule g = generate(f.module, gens);
    const std::set<Elem> members(g.inclusion.begin(), g.inclusion.end());
    for (Elem x : gens) EXPECT_TRUE(members.count(x));
    for (Elem x : members) {
      for (Elem y : members) EXPECT_TRUE(members.count(f.module.add(x, y)));
      for (Elem a = 0; a < 3; ++a) EXPECT_TRUE(members.count(f.module.act(a, x)));
    }
    EXPECT_TRUE(check_semimodule(g.module).valid());
  }
}

TEST(HomSet, CountsAgainstBruteForce) {
  const SemiringPtr b = boolean();
  const FiniteSemimodule reg = regular_module(b);
  EXPECT_EQ(hom_set(reg, reg).size(), 2u);
  const FiniteSemimodule free2 = free_semimodule(b, 2).module;
  EXPECT_EQ(hom_set(free2, reg).size(), 4u);
  EXPECT_EQ(hom_set(free2, trivial_module(b)).size(), 1u);

  const SemiringPtr s = vee_odot(3);
  const std::vector<FiniteSemimodule> ms{regular_module(s), free_semimodule(s, 2).module,
                                         regular_sub(s, {0, 1}), trivial_module(s)};
  for (const auto& m : ms)
    for (const auto& n : ms) {
      const HomSemilattice hs = hom_set(m, n);
      std::vector<ElemMap> got = hs.homs;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, brute_homs(m, n));
      for (Elem i = 0; i < hs.size(); ++i) EXPECT_EQ(hs.index_of(hs.homs[i]), std::optional<Elem>(i));
    }
}

TEST(HomSet, PointwiseStructure) {
  const SemiringPtr s = vee_odot(3);
  const HomSemilattice hs = hom_set(free_semimodule(s, 2).module, regular_module(s));
  EXPECT_EQ(hs.size(), 9u);
  const FiniteSemimodule as_mod = hs.as_semimodule();
  EXPECT_TRUE(check_semimodule(as_mod).valid());
  for (Elem i = 0; i < hs.size(); ++i)
    for (Elem j = 0; j < hs.size(); ++j) {
      const ElemMap& h = hs.homs[hs.add(i, j)];
      for (Elem x = 0; x < h.size(); ++x) EXPECT_EQ(h[x], s->add(hs.homs[i][x], hs.homs[j][x]));
    }
}

TEST(EndSemiring, Examples) {
  // two join-preserving, zero-preserving maps of the 2-chain
  const FiniteSemimodule chain = regular_module(boolean());
  const EndSemiring e = end_semiring(chain);
  EXPECT_EQ(e.semiring.size(), 2u);
  EXPECT_TRUE(check_semiring_axioms(e.semiring).valid());
  EXPECT_EQ(end_semiring(trivial_module(boolean())).semiring.size(), 1u);
  const EndSemiring e2 = end_semiring(free_semimodule(boolean(), 2).module);
  EXPECT_EQ(e2.semiring.size(), 16u);
  EXPECT_TRUE(check_semiring_axioms(e2.semiring).valid());
  EXPECT_TRUE(check_semiring_axioms(end_semiring(free_semimodule(boolean(), 2).module,
                                                 Composition::Forward)
                                        .semiring)
                  .valid());
}

TEST(XiEmbedding, Examples) {
  const XiEmbedding b = xi_embedding(boolean_semiring());
  EXPECT_EQ(std::set<ElemMap>(b.images.begin(), b.images.end()).size(), 2u);
  const XiEmbedding l3 = xi_embedding(reduct_vee_odot(lukasiewicz_chain(3)));
  EXPECT_EQ(std::set<ElemMap>(l3.images.begin(), l3.images.end()).size(), 3u);
  const XiEmbedding l4 = xi_embedding(reduct_vee_odot(lukasiewicz_chain(4)));
  EXPECT_TRUE(l4.endomorphisms && l4.homomorphism && l4.injective);
  const FiniteSemiring s = reduct_vee_odot(lukasiewicz_chain(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem c = 0; c < 4; ++c)
      for (Elem x = 0; x < 4; ++x) EXPECT_EQ(l4.images[s.mul(a, c)][x], l4.images[a][l4.images[c][x]]);
}

TEST(Strong, Examples) {
  const MvAlgebra l3 = lukasiewicz_chain(3);
  EXPECT_TRUE(is_strong(l3, regular_module(make_semiring(reduct_vee_odot(l3)))).strong);
  EXPECT_TRUE(is_strong(l3, trivial_module(make_semiring(reduct_vee_odot(l3)))).strong);

  const MvAlgebra l5 = lukasiewicz_chain(5);
  const SemiringPtr s5 = make_semiring(reduct_vee_odot(l5));
  const Elem q = chain_elem(l5, 1, 4), h = chain_elem(l5, 1, 2);
  const FiniteSemimodule sub = regular_sub(s5, {l5.zero(), q, h});
  const StrongVerdict v = is_strong(l5, sub);
  EXPECT_FALSE(v.strong);
  ASSERT_TRUE(v.counterexample.has_value());
  const auto [a, b, x] = *v.counterexample;
  EXPECT_TRUE(is_strong_counterexample(l5, sub, a, b, x));
  // the witness a = 1/2, b = 0, x = 1/2 (x is index 2 of the submodule)
  EXPECT_TRUE(is_strong_counterexample(l5, sub, h, l5.zero(), 2));

  const EndMvVerdict strong = endmv_check(l3, regular_module(make_semiring(reduct_vee_odot(l3))));
  EXPECT_TRUE(strong.holds());
  const EndMvVerdict weak = endmv_check(l5, sub);
  EXPECT_FALSE(weak.star_well_defined);
  ASSERT_TRUE(weak.conflict.has_value());
  EXPECT_TRUE(endmv_check(l5, trivial_module(s5)).holds());
  EXPECT_THROW(is_strong(l5, regular_module(vee_odot(3))), Error);
}

TEST(QuotientModule, Examples) {
  const MvAlgebra l4 = lukasiewicz_chain(4);
  const QuotientModule whole = quotient_module_from_ideal(l4, MvIdeal{l4.zero()});
  EXPECT_EQ(whole.module.size(), 4u);
  EXPECT_TRUE(whole.strong.strong);
  MvIdeal all(4);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(quotient_module_from_ideal(l4, all).module.size(), 1u);

  const MvAlgebra p = product(lukasiewicz_chain(2), lukasiewicz_chain(2));
  const QuotientModule q = quotient_module_from_ideal(p, MvIdeal{0, 1});
  EXPECT_EQ(q.module.size(), 2u);
  EXPECT_TRUE(q.strong.strong);
  EXPECT_TRUE(check_semimodule(q.module).valid());
}

TEST(RestrictScalars, Examples) {
  const SemiringPtr b = boolean();
  const SemiringPtr bb = make_semiring(product(boolean_semiring(), boolean_semiring()));
  const std::vector<Elem> diag{0, 3}, proj{0, 0, 1, 1}, id{0, 1};
  const FiniteSemimodule n = regular_module(bb);
  const FiniteSemimodule nh = restrict_scalars(b, diag, n);
  EXPECT_EQ(nh.size(), 4u);
  EXPECT_TRUE(check_semimodule(nh).valid());
  EXPECT_TRUE(restrict_scalars(b, id, regular_module(b)).same_structure(regular_module(b)));
  const FiniteSemimodule ph = restrict_scalars(bb, proj, regular_module(b));
  // (0,1) acts as zero: the second factor is ignored
  EXPECT_EQ(ph.act(1, 1), 0u);
  EXPECT_EQ(ph.act(2, 1), 1u);
  const std::vector<Elem> bad{0, 1, 1, 0};
  EXPECT_THROW(restrict_scalars(bb, bad, regular_module(b)), Error);
}

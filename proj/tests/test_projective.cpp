#include <gtest/gtest.h>

#include "mvsr/error.hpp"
#include "mvsr/projective.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;

TEST(RowSpace, Examples) {
  const SemiringPtr b = boolean();
  EXPECT_EQ(row_space(mat_identity(b, 2)).space.module.size(), 4u);
  EXPECT_EQ(row_space(mat_zero(b, 2, 2)).space.module.size(), 1u);
  const SemiringPtr s = vee_odot(3);
  const RowSpace r = row_space(make_matrix(s, {{2, 0}, {2, 0}}));
  std::vector<Elem> expected;
  for (Elem a = 0; a < 3; ++a) expected.push_back(r.ambient.encode(std::vector<Elem>{a, 0}));
  EXPECT_EQ(r.space.inclusion, expected);
}

TEST(Retract, Examples) {
  const SemiringPtr s = vee_odot(3);
  const auto free_cyclic = is_projective_retract_oracle(regular_module(s));
  ASSERT_TRUE(free_cyclic.has_value());
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(free_cyclic->pi[free_cyclic->mu[x]], x);

  const MvAlgebra l5 = lukasiewicz_chain(5);
  const FiniteSemimodule low = regular_sub(vee_odot(5), {0, chain_elem(l5, 1, 4), chain_elem(l5, 1, 2)});
  EXPECT_FALSE(is_projective_retract_oracle(low).has_value());
  EXPECT_FALSE(is_projective_matrix_criterion(low).has_value());

  const RowSpace r = row_space(make_matrix(s, {{2, 0}, {2, 0}}));
  EXPECT_TRUE(is_projective_retract_oracle(r.space.module).has_value());
}

TEST(MatrixCriterion, Examples) {
  const SemiringPtr s = vee_odot(3);
  const auto p = is_projective_matrix_criterion(regular_module(s));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->u, make_matrix(s, {{2}}));
  const auto t = is_projective_matrix_criterion(trivial_module(s));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->u, make_matrix(s, {{0}}));
}

TEST(MatrixCriterion, AgreesWithRetractOnEveryIdempotentRowSpace) {
  for (const SemiringPtr& s : {boolean(), vee_odot(3)}) {
    for (const SemiringMatrix& u : all_idempotents(s, 2)) {
      const FiniteSemimodule m = row_space(u).space.module;
      const auto retract = is_projective_retract_oracle(m, 2);
      const auto matrix = is_projective_matrix_criterion(m, 2);
      EXPECT_TRUE(retract.has_value());
      ASSERT_TRUE(matrix.has_value());
      EXPECT_TRUE(is_isomorphism(m, matrix->module, matrix->iso));
    }
  }
}

TEST(DirectSum, Examples) {
  const SemiringPtr b = boolean();
  const FiniteSemimodule reg = regular_module(b);
  const DirectSum with_trivial = direct_sum(reg, trivial_module(b));
  EXPECT_TRUE(are_isomorphic(with_trivial.module, reg).has_value());
  const DirectSum two = direct_sum(reg, reg);
  EXPECT_TRUE(are_isomorphic(two.module, free_semimodule(b, 2).module).has_value());
  EXPECT_TRUE(check_semimodule(two.module).valid());

  const SemiringPtr s = vee_odot(3);
  const SemiringMatrix u = make_matrix(s, {{2, 0}, {2, 0}});
  const SemiringMatrix block = block_diagonal(make_matrix(s, {{2}}), u);
  EXPECT_EQ(block.rows, 3u);
  EXPECT_TRUE(is_mult_idempotent(block));
  const DirectSum sum = direct_sum(regular_module(s), row_space(u).space.module);
  EXPECT_TRUE(are_isomorphic(row_space(block).space.module, sum.module).has_value());
  EXPECT_THROW(direct_sum(reg, regular_module(s)), Error);
}

TEST(Isomorphism, Examples) {
  const SemiringPtr s = vee_odot(3);
  const FiniteSemimodule m = row_space(make_matrix(s, {{2, 0}, {2, 0}})).space.module;
  const auto self = are_isomorphic(m, m);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_isomorphism(m, m, *self));
  EXPECT_FALSE(are_isomorphic(m, free_semimodule(s, 2).module).has_value());
  // the row space of [[1,1],[0,0]] is the diagonal {(a,a)}, also a copy of S
  const FiniteSemimodule diag = row_space(make_matrix(s, {{2, 2}, {0, 0}})).space.module;
  EXPECT_TRUE(are_isomorphic(m, diag).has_value());
  EXPECT_FALSE(are_isomorphic(m, regular_sub(s, {0, 1})).has_value());
}

TEST(Submodules, AllOfThreeChain) {
  const SemiringPtr s = vee_odot(3);
  // {0}, {0,1/2}, {0,1/2,1}: the submodules of L3 over itself
  EXPECT_EQ(all_submodules(regular_module(s)).size(), 3u);
}

TEST(Trichotomy, Examples) {
  const MvAlgebra p = product(lukasiewicz_chain(2), lukasiewicz_chain(2));
  const SemiringPtr ps = make_semiring(reduct_vee_odot(p));
  const FiniteSemimodule reg = regular_module(ps);
  // (1,0) has index 2
  const TrichotomyReport r = cyclic_mv_trichotomy(p, generate(reg, std::vector<Elem>{2}).module);
  EXPECT_TRUE(r.coincide());
  EXPECT_TRUE(r.a() && r.b() && r.c());
  ASSERT_TRUE(r.complement.has_value());
  EXPECT_EQ(r.complement->size(), 2u);

  const MvAlgebra l3 = lukasiewicz_chain(3);
  const TrichotomyReport whole = cyclic_mv_trichotomy(l3, regular_module(make_semiring(reduct_vee_odot(l3))));
  EXPECT_TRUE(whole.coincide() && whole.a());
  EXPECT_EQ(whole.idempotent, std::optional<Elem>(l3.one()));

  const MvAlgebra l5 = lukasiewicz_chain(5);
  const SemiringPtr s5 = make_semiring(reduct_vee_odot(l5));
  const TrichotomyReport low =
      cyclic_mv_trichotomy(l5, generate(regular_module(s5), std::vector<Elem>{chain_elem(l5, 1, 2)}).module);
  EXPECT_TRUE(low.coincide());
  EXPECT_FALSE(low.a() || low.b() || low.c());

  EXPECT_THROW(cyclic_mv_trichotomy(p, free_semimodule(ps, 2).module), Error);
  for (Elem u : boolean_center(p).members) EXPECT_TRUE(boolean_split_holds(p, u));
}

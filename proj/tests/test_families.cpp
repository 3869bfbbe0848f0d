#include <gtest/gtest.h>

#include "mvsr/error.hpp"
#include "mvsr/families.hpp"
#include "mvsr/projective.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;

// Reference counts: commutative monoids of order n up to isomorphism
// (1, 2, 5 for n = 1, 2, 3) and lattices of order n (1, 1, 1, 2, 5, 15, 53).
TEST(Families, CommutativeMonoids) {
  EXPECT_EQ(commutative_monoids(1).size(), 1u);
  EXPECT_EQ(commutative_monoids(2).size(), 3u);
  EXPECT_EQ(commutative_monoids(3).size(), 8u);
  EXPECT_EQ(small_monoid_family().size(), 8u);
  for (const auto& m : small_monoid_family()) EXPECT_TRUE(check_commutative_monoid(m).valid());
}

TEST(Families, Lattices) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto ls = semilattices(n);
    EXPECT_EQ(ls.size(), expected[n - 1]) << n;
    for (const auto& l : ls) {
      EXPECT_TRUE(check_commutative_monoid(l).valid());
      for (Elem x = 0; x < n; ++x) EXPECT_EQ(l.sum(x, x), x);
    }
  }
}

TEST(Families, ModulesArePairwiseNonIsomorphic) {
  const auto fam = enumerate_modules(boolean(), 5);
  for (const auto& m : fam) EXPECT_TRUE(check_semimodule(m).valid());
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (fam[i].size() == fam[j].size()) EXPECT_FALSE(are_isomorphic(fam[i], fam[j]).has_value());
  // a Boolean module is just a semilattice, so the counts are the lattice counts
  EXPECT_EQ(fam.size(), 1u + 1 + 1 + 2 + 5);
  EXPECT_EQ(enumerate_modules(boolean(), 6).size(), 25u);
}

TEST(Families, ChainScalars) {
  for (const auto& m : enumerate_modules(vee_odot(3), 4)) EXPECT_TRUE(check_semimodule(m).valid());
  EXPECT_EQ(enumerate_modules(vee_odot(3), 4).size(), 9u);
  EXPECT_THROW(enumerate_modules(make_semiring(integers_mod(3)), 2), Error);
}

#include <gtest/gtest.h>

#include "mvsr/error.hpp"
#include "mvsr/matrix.hpp"
#include "mvsr/rng.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;

namespace {

SemiringMatrix random_matrix(const SemiringPtr& s, std::size_t r, std::size_t c, SeededRng& rng) {
  std::vector<std::vector<Elem>> rows(r, std::vector<Elem>(c));
  for (auto& row : rows)
    for (auto& v : row) v = static_cast<Elem>(rng.uniform(0, static_cast<long>(s->size()) - 1));
  return make_matrix(s, rows);
}

}  // namespace

TEST(MatrixOps, IdentityAndZeroLaws) {
  const SemiringPtr s = vee_odot(3);
  SeededRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const SemiringMatrix a = random_matrix(s, 3, 3, rng);
    EXPECT_EQ(mat_star_mul(mat_identity(s, 3), a), a);
    EXPECT_EQ(mat_star_mul(a, mat_identity(s, 3)), a);
    EXPECT_EQ(mat_star_mul(mat_zero(s, 3, 3), a), mat_zero(s, 3, 3));
    EXPECT_EQ(mat_add(a, mat_zero(s, 3, 3)), a);
  }
}

TEST(MatrixOps, BooleanProduct) {
  const SemiringPtr b = boolean();
  EXPECT_EQ(mat_star_mul(make_matrix(b, {{1, 1}, {0, 1}}), make_matrix(b, {{1, 0}, {1, 1}})),
            make_matrix(b, {{1, 1}, {1, 1}}));
  EXPECT_THROW(mat_star_mul(mat_zero(b, 2, 3), mat_zero(b, 2, 3)), Error);
  EXPECT_THROW(make_matrix(b, {{1, 0}, {1}}), Error);
  EXPECT_THROW(make_matrix(b, {{2}}), Error);
}

TEST(MatrixOps, SeededAssociativityAndDistributivity) {
  const SemiringPtr s = vee_odot(4);
  SeededRng rng(17);
  for (int i = 0; i < 200; ++i) {
    const SemiringMatrix a = random_matrix(s, 2, 3, rng), b = random_matrix(s, 3, 2, rng),
                         c = random_matrix(s, 2, 2, rng), d = random_matrix(s, 3, 2, rng);
    EXPECT_EQ(mat_star_mul(mat_star_mul(a, b), c), mat_star_mul(a, mat_star_mul(b, c)));
    EXPECT_EQ(mat_star_mul(a, mat_add(b, d)), mat_add(mat_star_mul(a, b), mat_star_mul(a, d)));
  }
}

TEST(Idempotents, Examples) {
  const SemiringPtr s = vee_odot(3);
  EXPECT_TRUE(is_mult_idempotent(mat_identity(s, 2)));
  EXPECT_TRUE(is_mult_idempotent(mat_zero(s, 2, 2)));
  EXPECT_TRUE(is_mult_idempotent(make_matrix(s, {{2, 0}, {2, 0}})));
  EXPECT_FALSE(is_mult_idempotent(make_matrix(s, {{1}})));
  const std::vector<SemiringMatrix> all = all_idempotents(s, 2);
  EXPECT_NE(std::find(all.begin(), all.end(), mat_identity(s, 2)), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), mat_zero(s, 2, 2)), all.end());
  // brute-force count over all 81 matrices
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < matrix_count(*s, 2, 2); ++i) {
    const SemiringMatrix u = matrix_at(s, 2, 2, i);
    EXPECT_EQ(matrix_index(u), i);
    if (mat_star_mul(u, u) == u) ++count;
  }
  EXPECT_EQ(all.size(), count);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return matrix_index(a) < matrix_index(b);
  }));
}

TEST(MatrixSemiring, LawsExhaustiveAndSampled) {
  EXPECT_TRUE(check_matrix_semiring(boolean(), 2).valid());
  EXPECT_TRUE(check_matrix_semiring(vee_odot(3), 2).valid());
  EXPECT_TRUE(check_matrix_semiring(vee_odot(3), 3, 500, 9).valid());
  EXPECT_EQ(matrix_semiring(boolean(), 2).size(), 16u);
}

TEST(Eta, Counts) {
  for (const auto& [s, n, count] : {std::tuple{boolean(), 1u, 2u}, std::tuple{boolean(), 2u, 16u},
                                    std::tuple{vee_odot(3), 1u, 3u}, std::tuple{vee_odot(3), 2u, 81u}}) {
    const EtaCertificate c = eta(s, n);
    EXPECT_EQ(c.matrices, count);
    EXPECT_EQ(c.endomorphisms, count);
    EXPECT_TRUE(c.valid());
  }
}

TEST(HomFromMatrix, RoundTripAndCount) {
  const SemiringPtr b = boolean();
  const FreeSemimodule f = free_semimodule(b, 2);
  const ElemMap id = hom_from_matrix(f, f, mat_identity(b, 2));
  for (Elem v = 0; v < id.size(); ++v) EXPECT_EQ(id[v], v);
  const ElemMap zero = hom_from_matrix(f, f, mat_zero(b, 2, 2));
  for (Elem v : zero) EXPECT_EQ(v, f.module.zero());
  // 16 homs found by trying all 256 maps, each a matrix and back
  const auto homs = brute_homs(f.module, f.module);
  EXPECT_EQ(homs.size(), 16u);
  for (const auto& h : homs) EXPECT_EQ(hom_from_matrix(f, f, matrix_from_hom(f, f, h)), h);
}

TEST(LiftHom, Examples) {
  const SemiringPtr s = vee_odot(3);
  const FreeSemimodule f = free_semimodule(s, 2);
  const Elem e1 = f.encode(std::vector<Elem>{2, 0}), e2 = f.encode(std::vector<Elem>{0, 2});
  const std::vector<Elem> gens{e1, e2};
  const Submodule m = generate(f.module, gens);
  ASSERT_EQ(m.module.size(), 9u);
  ElemMap swap(9);
  for (Elem v = 0; v < 9; ++v) {
    const auto c = f.decode(m.inclusion[v]);
    const Elem w = f.encode(std::vector<Elem>{c[1], c[0]});
    swap[v] = static_cast<Elem>(std::find(m.inclusion.begin(), m.inclusion.end(), w) - m.inclusion.begin());
  }
  std::vector<Elem> local;
  for (Elem g : gens)
    local.push_back(static_cast<Elem>(std::find(m.inclusion.begin(), m.inclusion.end(), g) - m.inclusion.begin()));
  const HomLift lift = lift_hom(m.module, m.module, swap, local, local);
  EXPECT_TRUE(lift.square_commutes);
  EXPECT_EQ(lift.k, make_matrix(s, {{0, 2}, {2, 0}}));

  ElemMap id(9), zero(9, m.module.zero());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(lift_hom(m.module, m.module, id, local, local).k, mat_identity(s, 2));
  EXPECT_EQ(lift_hom(m.module, m.module, zero, local, local).k, mat_zero(s, 2, 2));
}

TEST(MatImage, AlongProjection) {
  const SemiringPtr bb = make_semiring(product(boolean_semiring(), boolean_semiring()));
  const std::vector<Elem> proj{0, 0, 1, 1};
  const SemiringMatrix u = make_matrix(bb, {{3, 1}, {2, 0}});
  EXPECT_EQ(mat_image(u, boolean(), proj), make_matrix(boolean(), {{1, 0}, {1, 0}}));
}

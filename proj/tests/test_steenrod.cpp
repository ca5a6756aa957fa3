#include "cupn/counting.hpp"
#include "cupn/cup.hpp"
#include "cupn/error.hpp"
#include "cupn/steenrod.hpp"
#include "cupn/verify.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cupn;
using namespace cupn::testing;

namespace {

Cochain edges(const std::vector<Simplex>& list) { return Cochain::indicator(1, Ring::z2(), list); }

std::vector<Simplex> support_of(const Cochain& c) {
    std::vector<Simplex> out;
    for (const auto& [x, v] : c.support()) out.push_back(x);
    return out;
}

}  // namespace

TEST(Sq, ZeroIsIdentity) {
    std::mt19937 rng(1);
    const auto K = solid_simplex(4);
    for (int j = 0; j <= 3; ++j) {
        // Not necessarily a cocycle: Sq^0 skips the check.
        const Cochain c = random_cochain(rng, K, j, Ring::z2());
        EXPECT_EQ(sq(0, c, K), c.as_formal_sum());
    }
}

TEST(Sq, AboveTheDegreeIsEmpty) {
    const auto K = solid_triangle();
    const Cochain c = edges({Simplex{0, 1}});
    EXPECT_TRUE(sq(2, c, K).empty());
    EXPECT_TRUE(sq(5, c, K).empty());
}

TEST(Sq, RejectsBadInput) {
    const auto K = solid_triangle();
    EXPECT_THROW(sq(1, edges({Simplex{0, 1}}), K), NotACocycle);
    EXPECT_THROW(sq(1, Cochain(1, Ring::integers()), K), RingMismatch);
    EXPECT_THROW(sq(-1, edges({}), K), ValidationError);
    EXPECT_THROW(sq(1, edges({Simplex{0, 9}}), K), SupportNotInComplex);
}

TEST(Sq, SolidTriangleAllEdges) {
    // All three edges: δc(012) = 1 + 1 + 1 = 1, not a cocycle.
    const auto K = solid_triangle();
    EXPECT_THROW(sq(1, edges({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}), K), NotACocycle);
    // δ of a vertex indicator is a cocycle whose square is a single triangle term or empty.
    const Cochain c = edges({Simplex{0, 1}, Simplex{0, 2}});
    EXPECT_EQ(sq(1, c, K), cup_product(c, c, 0, K));
}

TEST(Dz, Examples) {
    const std::vector<Simplex> C{Simplex{0, 1}, Simplex{1, 2}};
    const auto pairs = dz_pairs(Simplex{0, 1, 2}, C, 1, 1);
    ASSERT_EQ(pairs.size(), 1U);
    EXPECT_EQ(pairs[0].first, (Simplex{0, 1}));
    EXPECT_EQ(pairs[0].second, (Simplex{1, 2}));
    EXPECT_TRUE(dz_parity(Simplex{0, 1, 2}, C, 1, 1));
    EXPECT_FALSE(dz_parity(Simplex{0, 1, 2}, std::vector<Simplex>{Simplex{0, 1}}, 1, 1));
}

TEST(Sq, MatchesCupProductAndDzParity) {
    std::mt19937 rng(31);
    int cases = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int vertices = std::uniform_int_distribution<int>(3, 6)(rng);
        const auto K = random_complex(rng, vertices, 4, 5);
        const int j = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, K.dim())))(rng);
        const Cochain c = random_cocycle_mod2(rng, K, j);
        const auto C = support_of(c);
        for (int i = 1; i <= j; ++i) {
            const FormalSum s = sq(i, c, K);
            EXPECT_EQ(s, cup_product(c, c, j - i, K)) << "i=" << i << " j=" << j;
            for (const auto& z : K.simplices_of_dim(i + j)) {
                EXPECT_EQ(!s.coefficient(z).is_zero(), dz_parity(z, C, i, j));
            }
            ++cases;
        }
    }
    EXPECT_GT(cases, 100);
}

TEST(Sq, PreservesCocycles) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const int vertices = std::uniform_int_distribution<int>(3, 7)(rng);
        const auto K = random_complex(rng, vertices, 5, 6);
        const int j = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, K.dim())))(rng);
        const Cochain c = random_cocycle_mod2(rng, K, j);
        for (int i = 1; i <= j; ++i) {
            const Cochain out = Cochain::from_formal_sum(i + j, sq(i, c, K));
            EXPECT_TRUE(is_cocycle(out, K)) << "i=" << i << " j=" << j;
        }
    }
}

TEST(Sq, ProjectivePlaneGeneratorSquaresNontrivially) {
    const auto K = rp2_6();
    const auto basis = cohomology_basis_mod2(K, 1);
    ASSERT_EQ(basis.size(), 1U);
    const FormalSum s = sq(1, basis[0], K);
    ASSERT_FALSE(s.empty());
    const Cochain out = Cochain::from_formal_sum(2, s);
    EXPECT_TRUE(is_cocycle(out, K));
    EXPECT_FALSE(is_coboundary_mod2(out, K));
}

TEST(Sq, HollowTetrahedronSquaresAreCoboundaries) {
    std::mt19937 rng(2);
    const auto K = hollow_tetrahedron();
    for (int trial = 0; trial < 20; ++trial) {
        const Cochain c = random_cocycle_mod2(rng, K, 1);
        const Cochain out = Cochain::from_formal_sum(2, sq(1, c, K));
        EXPECT_TRUE(is_coboundary_mod2(out, K));
    }
}

TEST(Sq, ThreadCountDoesNotChangeTheResult) {
    std::mt19937 rng(6);
    const auto K = solid_simplex(6);
    for (int j = 1; j <= 3; ++j) {
        const Cochain c = random_cocycle_mod2(rng, K, j);
        for (int i = 1; i <= j; ++i) {
            const FormalSum base = sq(i, c, K);
            for (unsigned threads : {2U, 8U}) {
                EXPECT_EQ(sq(i, c, K, SqOptions{CocycleCheck::Direct, threads}), base);
            }
        }
    }
}

TEST(Sq, SummandCountMatchesSquareFormula) {
    for (int j = 0; j <= 20; ++j) {
        for (int i = 0; i <= j; ++i) {
            EvalStats stats;
            for_each_bounded_tuple(LoopBounds{j, j, j - i}, [](std::span<const int>) {}, &stats);
            EXPECT_EQ(Integer(stats.tuples), count_sq(i, j)) << i << " " << j;
        }
    }
}

TEST(PairAccumulation, AgreesOnCocyclesWithPairs) {
    const auto K = solid_triangle();
    EXPECT_TRUE(pair_accumulation_cocycle_check(edges({Simplex{0, 1}, Simplex{0, 2}}), K));
    EXPECT_FALSE(pair_accumulation_cocycle_check(
        edges({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}), K));
}

TEST(PairAccumulation, MissesASimplexWithOneSupportFace) {
    // Triangle 345 sees two support faces, triangle 012 only one.
    const SimplicialComplex K(std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}});
    const Cochain c = edges({Simplex{0, 1}, Simplex{3, 4}, Simplex{4, 5}});
    EXPECT_FALSE(is_cocycle(c, K));
    EXPECT_TRUE(pair_accumulation_cocycle_check(c, K));
    EXPECT_THROW(sq(1, c, K), NotACocycle);
    EXPECT_NO_THROW(sq(1, c, K, SqOptions{CocycleCheck::PairAccumulation, 1}));
}

TEST(PairAccumulation, RejectsTheZeroCochain) {
    const auto K = solid_triangle();
    EXPECT_TRUE(is_cocycle(edges({}), K));
    EXPECT_FALSE(pair_accumulation_cocycle_check(edges({}), K));
}

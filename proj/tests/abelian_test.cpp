#include "gradal/abelian.hpp"
#include "gradal/error.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace gradal;
using namespace gradal::testing;

namespace {

FgGroup Zr(std::size_t r) { return FgGroup::free(r); }
FgGroup ZxZn(int n) { return FgGroup::invariant_factors(1, {Int(n)}); }

// Closure of a set of generators inside a finite group by breadth-first
// search; used as an independent oracle for subgroup orders.
std::set<GroupElem> span_finite(const FgGroup &G, const std::vector<GroupElem> &gens)
{
    std::set<GroupElem> seen{G.zero()};
    std::vector<GroupElem> frontier{G.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto &x : frontier)
            for (const auto &g : gens) {
                const GroupElem y = G.add(x, g);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

// Enumerates retractions G -> T (identity on T, zero on F) for G with small
// free rank; a different route from the library's search through G/F.
bool retraction_oracle(const FgGroup &G, const std::vector<GroupElem> &F)
{
    const FgGroup T = FgGroup::invariant_factors(0, G.torsion());
    const auto all = T.enumerate();
    std::vector<std::size_t> pick(G.rank(), 0);
    while (true) {
        IntMatrix M(T.dim(), G.dim());
        for (std::size_t i = 0; i < G.rank(); ++i)
            for (std::size_t k = 0; k < T.dim(); ++k)
                M(k, i) = all[pick[i]][k];
        for (std::size_t k = 0; k < T.dim(); ++k)
            M(k, G.rank() + k) = 1;
        const GroupHom rho(G, T, M);
        bool ok = true;
        for (const auto &f : F)
            ok = ok && rho(f).is_zero();
        if (ok)
            return true;
        std::size_t i = G.rank();
        while (i > 0) {
            --i;
            if (++pick[i] < all.size())
                break;
            pick[i] = 0;
            if (i == 0)
                return false;
        }
        if (G.rank() == 0)
            return false;
    }
}

} // namespace

TEST(FgGroup, InvariantFactorValidation)
{
    EXPECT_THROW(FgGroup::invariant_factors(0, {Int(4), Int(2)}), Error);
    EXPECT_THROW(FgGroup::invariant_factors(0, {Int(1)}), Error);
    EXPECT_EQ(ZxZn(4).element({Int(3), Int(-1)}).coords(), (IntVec{3, 3}));
    EXPECT_EQ(FgGroup::invariant_factors(2, {Int(2), Int(4)}).to_string(),
              "Z^2 x Z/2 x Z/4");
    EXPECT_EQ(FgGroup().to_string(), "0");
}

TEST(FgGroup, TorsionDecomposition)
{
    const auto a = torsion_decomposition(ZxZn(4));
    EXPECT_EQ(a.rank, 1u);
    EXPECT_EQ(a.torsion, (std::vector<Int>{4}));
    EXPECT_FALSE(a.is_torsionfree);
    const auto b = torsion_decomposition(present_cyclic({Int(2), Int(3)}).group);
    EXPECT_EQ(b.rank, 0u);
    EXPECT_EQ(b.torsion, (std::vector<Int>{6}));
    EXPECT_TRUE(torsion_decomposition(Zr(3)).is_torsionfree);
}

TEST(GroupHom, RejectsIllDefinedMatrix)
{
    // Z/2 -> Z sending the generator to 1 is not a homomorphism.
    const FgGroup Z2 = FgGroup::invariant_factors(0, {Int(2)});
    EXPECT_THROW(GroupHom(Z2, Zr(1), IntMatrix{{1}}), Error);
    const FgGroup Z4 = FgGroup::invariant_factors(0, {Int(4)});
    EXPECT_NO_THROW(GroupHom(Z2, Z4, IntMatrix{{2}}));
    EXPECT_THROW(GroupHom(Z2, Z4, IntMatrix{{1}}), Error);
}

TEST(HomKernel, Examples)
{
    const FgGroup Z2 = FgGroup::invariant_factors(0, {Int(2)});
    const auto k1 = hom_kernel(GroupHom(Zr(1), Z2, IntMatrix{{1}}));
    EXPECT_EQ(k1.group, Zr(1));
    EXPECT_EQ(k1.generators()[0].coords(), (IntVec{2}));

    const auto k2 = hom_kernel(GroupHom(Zr(2), Zr(1), IntMatrix{{1, 1}}));
    EXPECT_EQ(k2.group, Zr(1));
    const auto g = k2.generators()[0];
    EXPECT_EQ(abs(g[0]), 1);
    EXPECT_EQ(g[0] + g[1], 0);

    const auto k3 = hom_kernel(GroupHom(ZxZn(2), Z2, IntMatrix{{1, 1}}));
    EXPECT_EQ(k3.group, Zr(1));
    const auto h = k3.generators()[0];
    EXPECT_EQ(abs(h[0]), 1);
    EXPECT_EQ(h[1], 1);
}

TEST(HomKernel, RandomProperties)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const FgGroup G = random_group(rng), H = random_group(rng);
        // Random well-defined hom: build on free generators and send torsion
        // generators to elements killed by their order.
        IntMatrix M(H.dim(), G.dim());
        for (std::size_t j = 0; j < G.dim(); ++j) {
            GroupElem img = random_elem(rng, H);
            const Int d = G.modulus(j);
            if (d != 0) {
                // scale into the d-torsion of H
                IntVec c = img.coords();
                for (std::size_t i = 0; i < H.dim(); ++i) {
                    const Int m = H.modulus(i);
                    c[i] = (m == 0) ? Int(0) : Int(c[i] * (m / gcd(m, d)));
                }
                img = H.element(c);
            }
            for (std::size_t i = 0; i < H.dim(); ++i)
                M(i, j) = img[i];
        }
        const GroupHom psi(G, H, M);
        const Subgroup K = hom_kernel(psi);
        ASSERT_TRUE(is_injective(K.inclusion));
        ASSERT_TRUE(compose(psi, K.inclusion).matrix().is_zero());
        for (int s = 0; s < 10; ++s) {
            const GroupElem x = random_elem(rng, G);
            ASSERT_EQ(psi(x).is_zero(), contains(K, x));
        }
        if (G.is_finite()) {
            std::set<GroupElem> kernel;
            for (const auto &x : G.enumerate())
                if (psi(x).is_zero())
                    kernel.insert(x);
            ASSERT_EQ(Int(kernel.size()), K.group.order());
        }
        const Quotient Q = quotient_by(G, K.generators());
        ASSERT_TRUE(is_surjective(Q.projection));
        ASSERT_TRUE(compose(Q.projection, K.inclusion).matrix().is_zero());
    }
}

TEST(SubgroupGeneratedBy, Examples)
{
    const auto a = subgroup_generated_by(Zr(2), {Zr(2).element({2, 0}), Zr(2).element({0, 3})});
    EXPECT_EQ(a.group, Zr(2));
    for (int n : {2, 3, 4, 6}) {
        const FgGroup G = ZxZn(n);
        const auto s = subgroup_generated_by(G, {G.element({n, 1})});
        EXPECT_EQ(s.group, Zr(1)) << n;
    }
    EXPECT_TRUE(subgroup_generated_by(Zr(2), {}).group.is_trivial());
}

TEST(QuotientBy, Examples)
{
    EXPECT_EQ(quotient_by(Zr(1), {Zr(1).element({2})}).group,
              FgGroup::invariant_factors(0, {Int(2)}));
    EXPECT_EQ(quotient_by(Zr(2), {Zr(2).element({1, -1})}).group, Zr(1));
    const FgGroup G = ZxZn(4);
    EXPECT_TRUE(quotient_by(G, {G.generator(0), G.generator(1)}).group.is_trivial());
}

TEST(QuotientBy, FiniteOrderMatchesEnumeration)
{
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 100) {
        const FgGroup G = random_group(rng);
        if (!G.is_finite() || G.is_trivial())
            continue;
        std::vector<GroupElem> gens{random_elem(rng, G), random_elem(rng, G)};
        const Quotient Q = quotient_by(G, gens);
        const auto span = span_finite(G, gens);
        ASSERT_EQ(Q.group.order() * Int(span.size()), G.order());
        ASSERT_EQ(subgroup_generated_by(G, gens).group.order(), Int(span.size()));
        ++checked;
    }
}

TEST(FindSection, Examples)
{
    const auto p1 = find_section(GroupHom(Zr(2), Zr(1), IntMatrix{{1, 0}}));
    ASSERT_TRUE(p1);
    EXPECT_EQ((*p1)(Zr(1).generator(0)).coords(), (IntVec{1, 0}));

    const FgGroup Z2 = FgGroup::invariant_factors(0, {Int(2)});
    EXPECT_FALSE(find_section(GroupHom(Zr(1), Z2, IntMatrix{{1}})));

    const auto p3 = find_section(GroupHom(ZxZn(2), Z2, IntMatrix{{0, 1}}));
    ASSERT_TRUE(p3);
    EXPECT_EQ((*p3)(Z2.generator(0)).coords(), (IntVec{0, 1}));

    EXPECT_THROW(find_section(GroupHom(Zr(1), Zr(1), IntMatrix{{2}})), Error);
}

TEST(FindSection, SplitsWhenReturned)
{
    std::mt19937_64 rng(29);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const FgGroup G = random_group(rng);
        std::vector<GroupElem> gens{random_elem(rng, G)};
        const Quotient Q = quotient_by(G, gens);
        const auto pi = find_section(Q.projection);
        if (!pi)
            continue;
        ++found;
        ASSERT_EQ(compose(Q.projection, *pi), GroupHom::identity(Q.group));
    }
    EXPECT_GT(found, 50);
}

TEST(TorsionfreeSummand, Examples)
{
    const FgGroup G = ZxZn(2);
    EXPECT_FALSE(is_in_torsionfree_summand(G, {G.element({2, 1})}));
    EXPECT_TRUE(is_in_torsionfree_summand(G, {G.element({1, 0})}));
    EXPECT_TRUE(is_in_torsionfree_summand(Zr(2), {Zr(2).element({3, 5})}));
    for (int n : {2, 3, 4}) {
        const FgGroup H = ZxZn(n);
        EXPECT_FALSE(is_in_torsionfree_summand(H, {H.element({n, 1})})) << n;
    }
}

TEST(TorsionfreeSummand, AgreesWithRetractionOracle)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> ord(2, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const FgGroup G = FgGroup::invariant_factors(1 + trial % 2, {Int(ord(rng))});
        std::vector<GroupElem> F{random_elem(rng, G, 4)};
        if (trial % 3 == 0)
            F.push_back(random_elem(rng, G, 4));
        ASSERT_EQ(is_in_torsionfree_summand(G, F), retraction_oracle(G, F))
            << G.to_string() << " " << F[0].to_string();
    }
}

TEST(Orderings, TotalCompare)
{
    const FgGroup F = Zr(2);
    EXPECT_EQ(total_compare(F, F.element({1, -5}), F.element({1, 3})),
              std::strong_ordering::less);
    EXPECT_EQ(total_compare(F, F.zero(), F.zero()), std::strong_ordering::equal);
    EXPECT_EQ(total_compare(F, F.element({2, 0}), F.element({1, 100})),
              std::strong_ordering::greater);
    EXPECT_THROW(total_compare(ZxZn(2), ZxZn(2).zero(), ZxZn(2).zero()), Error);

    std::mt19937_64 rng(37);
    const FgGroup G = Zr(3);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_elem(rng, G), b = random_elem(rng, G), c = random_elem(rng, G);
        if (total_compare(G, a, b) != std::strong_ordering::greater)
            ASSERT_NE(total_compare(G, G.add(a, c), G.add(b, c)), std::strong_ordering::greater);
    }
}

TEST(Orderings, ExtendedCompare)
{
    const FgGroup Z = Zr(1);
    const Subgroup F = subgroup_generated_by(Z, {Z.element({2})});
    EXPECT_EQ(extended_compare(F, Z.element({5}), Z.element({1})),
              std::strong_ordering::greater);
    EXPECT_FALSE(extended_compare(F, Z.element({1}), Z.element({2})));

    const FgGroup G = Zr(2);
    const Subgroup all = subgroup_generated_by(G, {G.generator(0), G.generator(1)});
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_elem(rng, G), b = random_elem(rng, G);
        ASSERT_EQ(extended_compare(all, a, b), total_compare(G, a, b));
    }
}

TEST(Orderings, ExtendedCompareIsPartialOrder)
{
    std::mt19937_64 rng(43);
    const FgGroup G = ZxZn(2);
    const Subgroup F = subgroup_generated_by(G, {G.element({2, 1})});
    using O = std::strong_ordering;
    for (int t = 0; t < 500; ++t) {
        const auto a = random_elem(rng, G), b = random_elem(rng, G), c = random_elem(rng, G);
        const auto ab = extended_compare(F, a, b), ba = extended_compare(F, b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
            ASSERT_EQ(*ab == O::less, *ba == O::greater);
            ASSERT_EQ(*ab == O::equal, a == b);
        }
        const auto bc = extended_compare(F, b, c);
        if (ab && bc && *ab != O::greater && *bc != O::greater) {
            const auto ac = extended_compare(F, a, c);
            ASSERT_TRUE(ac);
            ASSERT_NE(*ac, O::greater);
        }
        // Total on the coset of a.
        const GroupElem same_coset = G.add(a, G.scale(Int(t % 7 - 3), G.element({2, 1})));
        ASSERT_TRUE(extended_compare(F, a, same_coset));
    }
}

TEST(Subgroups, IntersectionAndDirectSum)
{
    const FgGroup Z = Zr(1);
    const Subgroup A = subgroup_generated_by(Z, {Z.element({4})});
    const Subgroup B = subgroup_generated_by(Z, {Z.element({6})});
    const Subgroup C = intersect(A, B);
    EXPECT_TRUE(same_subgroup(C, subgroup_generated_by(Z, {Z.element({12})})));

    const FgGroup Z2 = FgGroup::invariant_factors(0, {Int(2)});
    const FgGroup Z3 = FgGroup::invariant_factors(0, {Int(3)});
    const DirectSum S = direct_sum(Z2, Z3);
    EXPECT_EQ(S.group, FgGroup::invariant_factors(0, {Int(6)}));
    EXPECT_EQ(compose(S.pr1, S.in1), GroupHom::identity(Z2));
    EXPECT_EQ(compose(S.pr2, S.in2), GroupHom::identity(Z3));
    EXPECT_TRUE(compose(S.pr1, S.in2).matrix().is_zero());
    EXPECT_EQ(compose(S.in1, S.pr1) + compose(S.in2, S.pr2), GroupHom::identity(S.group));
}

TEST(LiftThrough, FactorsMaps)
{
    const FgGroup Z = Zr(1);
    const Subgroup twoZ = subgroup_generated_by(Z, {Z.element({2})});
    const GroupHom f(Z, Z, IntMatrix{{6}});
    const GroupHom h = lift_through(twoZ.inclusion, f);
    EXPECT_EQ(compose(twoZ.inclusion, h), f);
    EXPECT_THROW(lift_through(twoZ.inclusion, GroupHom::identity(Z)), Error);
}

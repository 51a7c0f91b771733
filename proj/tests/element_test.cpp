#include "gradal/element.hpp"
#include "gradal/error.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gradal;
using namespace gradal::testing;

namespace {

FgGroup Z(std::size_t r = 1) { return FgGroup::free(r); }
FgGroup Zn(int n) { return FgGroup::invariant_factors(0, {Int(n)}); }

RingPtr fine(Base b, const FgGroup &F)
{
    return make_ring(group_algebra(NormalForm::base_ring(b), F, GroupAlgebraMode::Fine));
}
RingPtr coarse(Base b, const FgGroup &F)
{
    return make_ring(group_algebra(NormalForm::base_ring(b), F, GroupAlgebraMode::Coarse));
}

Element e(const RingPtr &R, IntVec f, Rat c = Rat(1))
{
    return Element::monomial(R, R->E().element(std::move(f)), c);
}

Element random_element(std::mt19937_64 &rng, const RingPtr &R, int terms = 4, int box = 2)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    Element x(R);
    for (int i = 0; i < terms; ++i)
        x = x + Element::monomial(R, random_elem(rng, R->E(), box), Rat(coef(rng)));
    return x;
}

// Characters of E = Z^r + (Z/2)^k with values +-1 on the torsion part send
// Q[E] onto Q[Z^r]; they separate the factors of Q[(Z/2)^k].
std::vector<std::map<IntVec, Rat>> character_images(const Element &x)
{
    const FgGroup &E = x.ring().E();
    const std::size_t r = E.rank(), k = E.torsion().size();
    std::vector<std::map<IntVec, Rat>> out;
    for (unsigned chi = 0; chi < (1u << k); ++chi) {
        std::map<IntVec, Rat> img;
        for (const auto &[f, c] : x.terms()) {
            int sign = 1;
            for (std::size_t j = 0; j < k; ++j)
                if ((chi >> j & 1) && f[r + j] == 1)
                    sign = -sign;
            const IntVec free(f.coords().begin(), f.coords().begin() + r);
            img[free] += c * sign;
        }
        std::erase_if(img, [](const auto &kv) { return kv.second == 0; });
        out.push_back(std::move(img));
    }
    return out;
}

} // namespace

TEST(ElementArith, Examples)
{
    const RingPtr R2 = coarse(Base::Q, Zn(2));
    const Element one = Element::constant(R2, Rat(1));
    EXPECT_TRUE(((one + e(R2, {1})) * (one - e(R2, {1}))).is_zero());

    const RingPtr R3 = coarse(Base::Q, Zn(3));
    const Element one3 = Element::constant(R3, Rat(1));
    EXPECT_TRUE(((one3 + e(R3, {1}) + e(R3, {2})) * (one3 - e(R3, {1}))).is_zero());

    const RingPtr F = fine(Base::Z, Z(2));
    EXPECT_EQ(e(F, {1, 2}) * e(F, {3, -1}), e(F, {4, 1}));
}

TEST(ElementArith, Printing)
{
    const RingPtr R = coarse(Base::Q, Z());
    EXPECT_EQ((e(R, {1}) + e(R, {0})).to_string(), "e(1)+e(0)");
    EXPECT_EQ(e(R, {0}, Rat(2)).to_string(), "2*e(0)");
    EXPECT_EQ((e(R, {0}) - e(R, {1})).to_string(), "-e(1)+e(0)");
    EXPECT_EQ(e(R, {2}, make_rat(1, 3)).to_string(), "1/3*e(2)");
    EXPECT_EQ(Element(R).to_string(), "0");
}

TEST(ElementArith, RejectsBadCoefficients)
{
    const RingPtr R = coarse(Base::Z, Z());
    EXPECT_THROW(e(R, {0}, make_rat(1, 2)), Error);
    EXPECT_THROW(e(coarse(Base::Q, Z()), {0}) + e(R, {0}), Error);
}

TEST(ElementArith, RingAxioms)
{
    std::mt19937_64 rng(201);
    for (int t = 0; t < 100; ++t) {
        const FgGroup E = random_group(rng);
        const RingPtr R = make_ring(NormalForm(Base::Q, random_hom(rng, E, random_group(rng))));
        const Element a = random_element(rng, R), b = random_element(rng, R),
                      c = random_element(rng, R);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a + b, b + a);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ(a * Element::constant(R, Rat(1)), a);
    }
}

TEST(HomogeneousComponents, Examples)
{
    const RingPtr F = fine(Base::Q, Z());
    const Element x = Element::constant(F, Rat(1)) + e(F, {1});
    const auto parts = homogeneous_components(x);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts.at(Z().element({0})), Element::constant(F, Rat(1)));
    EXPECT_EQ(parts.at(Z().element({1})), e(F, {1}));

    const RingPtr C = coarse(Base::Q, Z());
    const Element y = Element::constant(C, Rat(1)) + e(C, {1});
    EXPECT_EQ(homogeneous_components(y).size(), 1u);

    const RingPtr P = make_ring(coarsen(*fine(Base::Q, Z(2)), GroupHom(Z(2), Z(), IntMatrix{{0, 1}})));
    const Element z = e(P, {1, 0}, Rat(2)) + e(P, {1, 1}, Rat(3));
    const auto zp = homogeneous_components(z);
    EXPECT_EQ(zp.at(Z().element({0})), e(P, {1, 0}, Rat(2)));
    EXPECT_EQ(zp.at(Z().element({1})), e(P, {1, 1}, Rat(3)));
    EXPECT_TRUE(homogeneous_components(Element(P)).empty());
}

TEST(HomogeneousComponents, RandomProperties)
{
    std::mt19937_64 rng(203);
    for (int t = 0; t < 100; ++t) {
        const FgGroup E = random_group(rng);
        const RingPtr R = make_ring(NormalForm(Base::Q, random_hom(rng, E, random_group(rng))));
        const Element x = random_element(rng, R);
        Element sum(R);
        for (const auto &[g, part] : homogeneous_components(x)) {
            ASSERT_EQ(degree_of(part), g);
            sum = sum + part;
        }
        ASSERT_EQ(sum, x);
        // Degrees add under multiplication.
        const auto parts = homogeneous_components(random_element(rng, R));
        if (x.is_zero() || parts.empty())
            continue;
        const Element a = homogeneous_components(x).begin()->second;
        const Element b = parts.begin()->second;
        const Element ab = a * b;
        if (!ab.is_zero())
            ASSERT_EQ(degree_of(ab), R->G().add(*degree_of(a), *degree_of(b)));
    }
}

TEST(DegreeOf, Examples)
{
    const RingPtr F = fine(Base::Q, Z());
    EXPECT_EQ(degree_of(e(F, {3})), Z().element({3}));
    EXPECT_FALSE(degree_of(Element::constant(F, Rat(1)) + e(F, {1})));
    const RingPtr C = coarse(Base::Q, Z());
    EXPECT_EQ(degree_of(Element::constant(C, Rat(1)) + e(C, {1})), FgGroup().zero());
    try {
        degree_of(Element(C));
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.kind(), ErrorKind::ZeroElement);
    }
}

TEST(UnitTest, Examples)
{
    const FgGroup ZxZ2 = FgGroup::invariant_factors(1, {Int(2)});
    for (const auto &F : {fine(Base::Z, Z(2)), fine(Base::Q, ZxZ2), fine(Base::Z, Zn(3))}) {
        const GroupElem g = F->E().generator(0);
        const auto r = homogeneous_unit_test(Element::monomial(F, g));
        ASSERT_EQ(r.verdict, UnitVerdict::Unit);
        EXPECT_EQ(*r.inverse, Element::monomial(F, F->E().neg(g)));
    }
    const RingPtr C = coarse(Base::Q, Z());
    EXPECT_EQ(homogeneous_unit_test(Element::constant(C, Rat(1)) + e(C, {1})).verdict,
              UnitVerdict::NotUnit);
    const RingPtr C2 = coarse(Base::Q, Zn(2));
    const Element f = (Element::constant(C2, Rat(1)) + e(C2, {1})).scaled(make_rat(1, 2));
    EXPECT_EQ(homogeneous_unit_test(f).verdict, UnitVerdict::NotUnit);
    EXPECT_EQ(homogeneous_unit_test(Element::constant(coarse(Base::Z, Z()), Rat(2))).verdict,
              UnitVerdict::NotUnit);
    EXPECT_EQ(homogeneous_unit_test(Element::constant(coarse(Base::Q, Z()), Rat(2))).verdict,
              UnitVerdict::Unit);
    EXPECT_THROW(homogeneous_unit_test(Element::constant(fine(Base::Q, Z()), Rat(1)) +
                                       e(fine(Base::Q, Z()), {1})),
                 Error);
}

TEST(UnitTest, NonTrivialUnitsInTorsionAlgebras)
{
    // 1 + e_g is a unit of Q[Z/3] but not of Z[Z/3].
    const RingPtr Q3 = coarse(Base::Q, Zn(3));
    const Element x = Element::constant(Q3, Rat(1)) + e(Q3, {1});
    const auto r = homogeneous_unit_test(x);
    ASSERT_EQ(r.verdict, UnitVerdict::Unit);
    EXPECT_EQ(x * *r.inverse, Element::constant(Q3, Rat(1)));
    const RingPtr Z3 = coarse(Base::Z, Zn(3));
    EXPECT_EQ(homogeneous_unit_test(Element::constant(Z3, Rat(1)) + e(Z3, {1})).verdict,
              UnitVerdict::NotUnit);
    // 1 - e_g - e_g^4 is a non-trivial unit of Z[Z/5].
    const RingPtr Z5 = coarse(Base::Z, Zn(5));
    const Element u = Element::constant(Z5, Rat(1)) - e(Z5, {1}) - e(Z5, {4});
    const auto ru = homogeneous_unit_test(u);
    ASSERT_EQ(ru.verdict, UnitVerdict::Unit);
    EXPECT_EQ(u * *ru.inverse, Element::constant(Z5, Rat(1)));
}

TEST(UnitTest, AgreesWithCharacterOracle)
{
    std::mt19937_64 rng(207);
    int units = 0;
    for (int t = 0; t < 400; ++t) {
        const FgGroup E = FgGroup::invariant_factors(t % 3, std::vector<Int>(1 + t % 2, Int(2)));
        const RingPtr R = coarse(t % 4 == 0 ? Base::Z : Base::Q, E);
        std::uniform_int_distribution<int> nterms(1, 3);
        const Element x = random_element(rng, R, nterms(rng), 1);
        if (x.is_zero())
            continue;
        const auto r = homogeneous_unit_test(x);
        bool oracle = true;
        for (const auto &img : character_images(x))
            oracle = oracle && img.size() == 1;
        if (r.verdict == UnitVerdict::Unit) {
            ++units;
            ASSERT_TRUE(oracle) << x.to_string();
            ASSERT_EQ(x * *r.inverse, Element::constant(R, Rat(1))) << x.to_string();
        } else if (R->base() == Base::Q) {
            ASSERT_FALSE(oracle) << x.to_string();
        }
    }
    EXPECT_GT(units, 20);
}

TEST(UnitTest, InverseHasOppositeDegree)
{
    std::mt19937_64 rng(209);
    for (int t = 0; t < 100; ++t) {
        const FgGroup E = random_group(rng);
        const RingPtr R = make_ring(NormalForm(Base::Q, random_hom(rng, E, random_group(rng))));
        const Element x = random_element(rng, R, 3, 1);
        if (x.is_zero())
            continue;
        const Element h = homogeneous_components(x).begin()->second;
        const auto r = homogeneous_unit_test(h);
        if (r.verdict != UnitVerdict::Unit)
            continue;
        ASSERT_EQ(h * *r.inverse, Element::constant(R, Rat(1)));
        ASSERT_EQ(degree_of(*r.inverse), R->G().neg(*degree_of(h)));
    }
}

TEST(UnitTest, CoarseUnitsAreFineHomogeneous)
{
    std::mt19937_64 rng(211);
    for (int t = 0; t < 200; ++t) {
        const RingPtr F = fine(Base::Q, Z(2));
        const GroupHom psi = random_surjection(rng, Z(2));
        if (!hom_kernel(psi).group.is_torsionfree())
            continue;
        const RingPtr C = make_ring(coarsen(*F, psi));
        const Element x = random_element(rng, C, 3, 2);
        if (x.is_zero())
            continue;
        const Element h = homogeneous_components(x).begin()->second;
        if (homogeneous_unit_test(h).verdict == UnitVerdict::Unit)
            ASSERT_TRUE(is_homogeneous(h.in(F), F->delta())) << h.to_string();
    }
}

TEST(UnitTest, FractionField)
{
    const RingPtr Q = make_ring(fraction_field(*fine(Base::Z, Z())));
    const Element x = e(Q, {2}, Rat(3));
    const auto r = homogeneous_unit_test(x);
    ASSERT_EQ(r.verdict, UnitVerdict::Unit);
    EXPECT_EQ(Fraction(x) * *r.fraction_inverse, Fraction(Element::constant(Q, Rat(1))));
    const RingPtr Q0 = make_ring(coarsen(*Q, GroupHom::zero(Z(), FgGroup())));
    EXPECT_EQ(homogeneous_unit_test(Element::constant(Q0, Rat(1)) + e(Q0, {1})).verdict,
              UnitVerdict::NotUnit);
}

TEST(NzdTest, Examples)
{
    const RingPtr R2 = coarse(Base::Q, Zn(2));
    const auto r = nzd_test(Element::constant(R2, Rat(1)) - e(R2, {1}));
    ASSERT_EQ(r.verdict, NzdVerdict::ZeroDivisor);
    EXPECT_EQ(*r.witness, Element::constant(R2, Rat(1)) + e(R2, {1}));

    const RingPtr R4 = coarse(Base::Z, Zn(4));
    const auto r4 = nzd_test(Element::constant(R4, Rat(1)) - e(R4, {1}));
    ASSERT_EQ(r4.verdict, NzdVerdict::ZeroDivisor);
    EXPECT_EQ(*r4.witness, Element::constant(R4, Rat(1)) + e(R4, {1}) + e(R4, {2}) + e(R4, {3}));

    std::mt19937_64 rng(213);
    const RingPtr Z2 = coarse(Base::Q, Z(2));
    for (int t = 0; t < 50; ++t) {
        const Element x = random_element(rng, Z2);
        if (!x.is_zero())
            ASSERT_EQ(nzd_test(x).verdict, NzdVerdict::NonZeroDivisor);
    }
    EXPECT_EQ(nzd_test(Element::constant(coarse(Base::Z, Zn(2)), Rat(3))).verdict,
              NzdVerdict::NonZeroDivisor);
}

TEST(NzdTest, AgreesWithCharacterOracle)
{
    std::mt19937_64 rng(215);
    int zds = 0;
    for (int t = 0; t < 400; ++t) {
        const FgGroup E = FgGroup::invariant_factors(t % 3, std::vector<Int>(1 + t % 2, Int(2)));
        const RingPtr R = coarse(t % 2 ? Base::Z : Base::Q, E);
        const Element x = random_element(rng, R, 3, 1);
        if (x.is_zero())
            continue;
        bool oracle = false;
        for (const auto &img : character_images(x))
            oracle = oracle || img.empty();
        const auto r = nzd_test(x);
        ASSERT_EQ(r.verdict == NzdVerdict::ZeroDivisor, oracle) << x.to_string();
        if (r.witness) {
            ++zds;
            ASSERT_FALSE(r.witness->is_zero());
            ASSERT_TRUE((x * *r.witness).is_zero());
        }
    }
    EXPECT_GT(zds, 10);
}

TEST(FractionArith, Examples)
{
    const RingPtr F = fine(Base::Z, Z());
    const Element g = e(F, {1});
    const Element one = Element::constant(F, Rat(1));
    EXPECT_EQ(Fraction(g) * Fraction(one, g), Fraction(one));
    const Fraction half(one, Element::constant(F, Rat(2)));
    const Fraction sum = half + half;
    EXPECT_EQ(sum.num(), one);
    EXPECT_EQ(sum.den(), one);
    const RingPtr C = coarse(Base::Q, Z());
    const Element x = Element::constant(C, Rat(1)) + e(C, {1}), y = e(C, {2});
    const Element d = Element::constant(C, Rat(1)) + e(C, {3});
    EXPECT_EQ(Fraction(x, d) + Fraction(y, d), Fraction(x + y, d));
    EXPECT_THROW(Fraction(one, Element(F)), Error);
    EXPECT_THROW(Fraction(one, one + g), Error);
    EXPECT_THROW(Fraction(Element::constant(coarse(Base::Q, Zn(2)), Rat(1))), Error);
}

TEST(FractionArith, FieldAxioms)
{
    std::mt19937_64 rng(217);
    const RingPtr R = coarse(Base::Z, Z(2));
    auto random_fraction = [&] {
        Element den = e(R, {0, 0});
        while (true) {
            den = random_element(rng, R, 2, 1);
            if (!den.is_zero())
                break;
        }
        return Fraction(random_element(rng, R, 3, 1), den);
    };
    for (int t = 0; t < 100; ++t) {
        const Fraction a = random_fraction(), b = random_fraction(), c = random_fraction();
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(P70Check, Examples)
{
    const RingPtr F = fine(Base::Q, Z(2));
    const GroupHom sum(Z(2), Z(), IntMatrix{{1, 1}});
    const auto v = lemma_p70_check(*F, sum, e(F, {1, 0}), e(F, {0, 1}));
    EXPECT_TRUE(v.pass());
    try {
        lemma_p70_check(*F, sum, e(F, {1, 0}) + e(F, {0, 1}), e(F, {0, 0}));
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.kind(), ErrorKind::PreconditionViolated);
    }
}

TEST(P70Check, RandomEntireInstances)
{
    std::mt19937_64 rng(219);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const RingPtr F = fine(Base::Q, Z(2));
        const GroupHom psi = random_surjection(rng, Z(2));
        if (!hom_kernel(psi).group.is_torsionfree())
            continue;
        const GroupHom coarse_grading = compose(psi, F->delta());
        const auto parts = homogeneous_components(random_element(rng, F, 3, 2), coarse_grading);
        if (parts.empty())
            continue;
        const Element x = parts.begin()->second;
        const Element y = e(F, random_elem(rng, Z(2), 2).coords(), Rat(2));
        if (x.is_zero() || !is_homogeneous(x * y, F->delta()))
            continue;
        ASSERT_TRUE(lemma_p70_check(*F, psi, x, y).pass());
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

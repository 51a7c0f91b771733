#pragma once

#include "gradal/element.hpp"

#include "test_support.hpp"

namespace gradal::testing {

inline FgGroup Z(std::size_t r = 1) { return FgGroup::free(r); }
inline FgGroup Zn(int n) { return FgGroup::invariant_factors(0, {Int(n)}); }

inline RingPtr fine(Base b, const FgGroup &F)
{
    return make_ring(group_algebra(NormalForm::base_ring(b), F, GroupAlgebraMode::Fine));
}
inline RingPtr coarse(Base b, const FgGroup &F)
{
    return make_ring(group_algebra(NormalForm::base_ring(b), F, GroupAlgebraMode::Coarse));
}

inline Element e(const RingPtr &R, IntVec f, Rat c = Rat(1))
{
    return Element::monomial(R, R->E().element(std::move(f)), c);
}

inline Element random_element(std::mt19937_64 &rng, const RingPtr &R, int terms = 4, int box = 2)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    Element x(R);
    for (int i = 0; i < terms; ++i)
        x = x + Element::monomial(R, random_elem(rng, R->E(), box), Rat(coef(rng)));
    return x;
}

} // namespace gradal::testing

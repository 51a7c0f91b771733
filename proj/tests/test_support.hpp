#pragma once

#include "gradal/abelian.hpp"

#include <random>

namespace gradal::testing {

inline FgGroup random_group(std::mt19937_64 &rng, int max_rank = 2, int max_order = 6)
{
    std::uniform_int_distribution<int> rank(0, max_rank), count(0, 2), ord(0, max_order);
    std::vector<Int> orders;
    for (int i = rank(rng); i > 0; --i)
        orders.push_back(0);
    for (int i = count(rng); i > 0; --i)
        orders.push_back(ord(rng));
    return present_cyclic(orders).group;
}

inline GroupElem random_elem(std::mt19937_64 &rng, const FgGroup &G, int bound = 5)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntVec c(G.dim());
    for (auto &x : c)
        x = dist(rng);
    return G.element(c);
}

/// Random well-defined hom: torsion generators are sent into the part of H
/// killed by their order.
inline GroupHom random_hom(std::mt19937_64 &rng, const FgGroup &G, const FgGroup &H,
                           int bound = 3)
{
    IntMatrix M(H.dim(), G.dim());
    for (std::size_t j = 0; j < G.dim(); ++j) {
        IntVec c = random_elem(rng, H, bound).coords();
        const Int d = G.modulus(j);
        if (d != 0)
            for (std::size_t i = 0; i < H.dim(); ++i) {
                const Int m = H.modulus(i);
                c[i] = (m == 0) ? Int(0) : Int(c[i] * (m / gcd(m, d)));
            }
        for (std::size_t i = 0; i < H.dim(); ++i)
            M(i, j) = c[i];
    }
    return GroupHom(G, H, M);
}

/// Random epimorphism out of G, obtained as a quotient map.
inline GroupHom random_surjection(std::mt19937_64 &rng, const FgGroup &G)
{
    std::uniform_int_distribution<int> count(0, 2);
    std::vector<GroupElem> gens;
    for (int i = count(rng); i > 0; --i)
        gens.push_back(random_elem(rng, G, 2));
    return quotient_by(G, gens).projection;
}

} // namespace gradal::testing

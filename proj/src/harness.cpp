#include "gradal/harness.hpp"

#include "gradal/error.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace gradal {

using nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

long Rng::uniform(long lo, long hi)
{
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do
        x = next();
    while (x >= limit);
    return lo + static_cast<long>(x % range);
}

std::string to_string(Profile p)
{
    switch (p) {
    case Profile::EntireTorsionfreeKernel: return "entire-torsionfree-kernel";
    case Profile::TorsionKernel: return "torsion-kernel";
    case Profile::SimpleFullSupport: return "simple-full-support";
    case Profile::FreeSummand: return "free-summand";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Random groups, homs and elements

FgGroup random_group(Rng &rng, int max_rank, int max_torsion_factors)
{
    std::vector<Int> orders;
    for (long i = rng.uniform(0, max_rank); i > 0; --i)
        orders.push_back(0);
    for (long i = rng.uniform(0, max_torsion_factors); i > 0; --i)
        orders.push_back(rng.uniform(2, 6));
    return present_cyclic(orders).group;
}

GroupElem random_elem(Rng &rng, const FgGroup &G, long bound)
{
    IntVec c(G.dim());
    for (auto &x : c)
        x = rng.uniform(-bound, bound);
    return G.element(c);
}

namespace {

GroupHom random_hom(Rng &rng, const FgGroup &G, const FgGroup &H)
{
    IntMatrix M(H.dim(), G.dim());
    for (std::size_t j = 0; j < G.dim(); ++j) {
        IntVec c = random_elem(rng, H, 2).coords();
        const Int d = G.modulus(j);
        for (std::size_t i = 0; i < H.dim(); ++i) {
            const Int m = H.modulus(i);
            if (d != 0)
                c[i] = (m == 0) ? Int(0) : Int(c[i] * (m / gcd(m, d)));
            M(i, j) = c[i];
        }
    }
    return GroupHom(G, H, M);
}

GroupHom random_surjection(Rng &rng, const FgGroup &G)
{
    std::vector<GroupElem> gens;
    for (long i = rng.uniform(0, 2); i > 0; --i)
        gens.push_back(random_elem(rng, G, 2));
    return quotient_by(G, gens).projection;
}

/// Epimorphism out of G whose kernel is torsionfree (possibly trivial).
GroupHom torsionfree_kernel_surjection(Rng &rng, const FgGroup &G)
{
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<GroupElem> gens;
        for (long i = rng.uniform(1, 2); i > 0; --i)
            gens.push_back(random_elem(rng, G, 2));
        if (subgroup_generated_by(G, gens).group.is_torsionfree())
            return quotient_by(G, gens).projection;
    }
    return GroupHom::identity(G);
}

Base random_base(Rng &rng) { return rng.coin() ? Base::Q : Base::Z; }

RingPtr group_ring(Base b, const FgGroup &F, GroupAlgebraMode mode)
{
    return make_ring(group_algebra(NormalForm::base_ring(b), F, mode));
}

/// K[A] fine, coarsened along a map with torsionfree kernel half of the time.
RingPtr random_entire_ring(Rng &rng, Base b)
{
    FgGroup A;
    do
        A = random_group(rng, 3, 1);
    while (A.is_trivial());
    NormalForm R = group_algebra(NormalForm::base_ring(b), A, GroupAlgebraMode::Fine);
    if (rng.coin())
        R = coarsen(R, torsionfree_kernel_surjection(rng, A));
    return make_ring(std::move(R));
}

std::vector<Element> coarse_samples(Rng &rng, const RingPtr &R, const GroupHom &psi)
{
    std::vector<Element> out;
    const GroupHom grading = compose(psi, R->delta());
    for (int i = 0; i < 4; ++i)
        out.push_back(random_homogeneous(rng, R, grading, 4));
    return out;
}

Element one(const RingPtr &R) { return Element::constant(R, Rat(1)); }

} // namespace

Element random_homogeneous(Rng &rng, const RingPtr &R, const GroupHom &grading, int max_terms,
                           int max_den)
{
    const FgGroup &E = R->E();
    const std::vector<GroupElem> kernel =
        grading.matrix().is_zero() ? [&] {
            std::vector<GroupElem> g;
            for (std::size_t i = 0; i < E.dim(); ++i)
                g.push_back(E.generator(i));
            return g;
        }()
                                   : hom_kernel(grading).generators();
    const int den_bound = R->base() == Base::Z ? 1 : max_den;
    for (int attempt = 0; attempt < 10; ++attempt) {
        const GroupElem f0 = random_elem(rng, E, 2);
        Element::Terms terms;
        for (long t = rng.uniform(1, max_terms); t > 0; --t) {
            GroupElem f = f0;
            for (const auto &k : kernel)
                f = E.add(f, E.scale(Int(rng.uniform(-1, 1)), k));
            long c = rng.uniform(-3, 2);
            if (c >= 0)
                ++c;
            terms[f] += Rat(c, rng.uniform(1, den_bound));
        }
        std::erase_if(terms, [](const auto &kv) { return kv.second == 0; });
        for (auto &[f, c] : terms)
            c.canonicalize();
        if (!terms.empty())
            return Element(R, std::move(terms));
    }
    return one(R);
}

namespace {

Instance make_instance(Rng &rng, Profile profile)
{
    Instance inst;
    switch (profile) {
    case Profile::EntireTorsionfreeKernel: {
        inst.ring = random_entire_ring(rng, random_base(rng));
        inst.psi = torsionfree_kernel_surjection(rng, inst.ring->G());
        break;
    }
    case Profile::TorsionKernel: {
        const Int n = rng.pick(std::vector<long>{2, 3, 4, 6});
        const bool with_free = rng.coin();
        const FgGroup G = FgGroup::invariant_factors(with_free ? 1 : 0, {n});
        inst.ring = group_ring(random_base(rng), G, GroupAlgebraMode::Fine);
        if (with_free && rng.coin())
            inst.psi = GroupHom(G, FgGroup::free(1), IntMatrix{{1, 0}});
        else
            inst.psi = GroupHom::zero(G, FgGroup());
        break;
    }
    case Profile::SimpleFullSupport: {
        const FgGroup G = random_group(rng, 3, 1);
        inst.ring = group_ring(Base::Q, G, GroupAlgebraMode::Fine);
        inst.psi = random_surjection(rng, G);
        break;
    }
    case Profile::FreeSummand: {
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
        const std::size_t r = static_cast<std::size_t>(rng.uniform(0, 1));
        std::vector<Int> torsion;
        if (rng.coin())
            torsion.push_back(rng.uniform(2, 6));
        const FgGroup G = FgGroup::invariant_factors(k + r, torsion);
        for (std::size_t i = 0; i < k; ++i)
            inst.F.push_back(G.generator(i));
        for (std::size_t j = k; j < G.dim(); ++j) {
            GroupElem h = G.generator(j);
            if (G.modulus(j) == 0)
                for (const auto &f : inst.F)
                    h = G.add(h, G.scale(Int(rng.uniform(-1, 1)), f));
            inst.H.push_back(h);
        }
        std::vector<GroupElem> support;
        for (const auto &f : inst.F)
            support.push_back(G.scale(Int(rng.uniform(1, 2)), f));
        for (const auto &h : inst.H)
            support.push_back(G.scale(Int(rng.uniform(1, 2)), h));
        const Subgroup D = subgroup_generated_by(G, support);
        inst.ring = make_ring(NormalForm(Base::Q, D.inclusion));
        inst.psi = std::nullopt;
        break;
    }
    }
    if (inst.psi)
        inst.samples = coarse_samples(rng, inst.ring, *inst.psi);
    else
        for (int i = 0; i < 4; ++i)
            inst.samples.push_back(random_homogeneous(rng, inst.ring, inst.ring->delta(), 4));
    return inst;
}

} // namespace

Instance generate_instance(std::uint64_t seed, Profile profile)
{
    Rng rng(seed);
    return make_instance(rng, profile);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct Trial {
    Rng &rng;
    const CheckConfig &cfg;
    std::string &detail;

    TrialOutcome fail(const std::string &why) const
    {
        detail = why;
        return TrialOutcome::Fail;
    }
};

TrialOutcome check_p70(Trial &t)
{
    const Instance inst = make_instance(t.rng, Profile::EntireTorsionfreeKernel);
    const RingPtr &R = inst.ring;
    const GroupHom coarse = compose(*inst.psi, R->delta());
    auto sample = [&] {
        return t.rng.coin() ? random_homogeneous(t.rng, R, R->delta(), 3)
                            : random_homogeneous(t.rng, R, coarse, 3);
    };
    const Element x = sample(), y = sample();
    if (!is_homogeneous(x * y, R->delta()))
        return TrialOutcome::Pass;
    const P70Verdict v = lemma_p70_check(*R, *inst.psi, x, y);
    if (v.pass())
        return TrialOutcome::Pass;
    return t.fail("x = " + x.to_string() + ", y = " + y.to_string() + " in " + R->to_string());
}

TrialOutcome check_p80(Trial &t)
{
    const Instance inst = make_instance(t.rng, Profile::EntireTorsionfreeKernel);
    const RingPtr &R = inst.ring;
    const RingPtr Rc = make_ring(coarsen(*R, *inst.psi));
    Element x = inst.samples[0];
    if (t.rng.coin())
        x = Element::monomial(R, random_elem(t.rng, R->E(), 2),
                              Rat(t.rng.pick(std::vector<long>{1, -1, 2})));
    const UnitResult coarse = homogeneous_unit_test(x.in(Rc));
    const bool fine_homogeneous = is_homogeneous(x, R->delta());
    const bool fine_unit =
        fine_homogeneous && homogeneous_unit_test(x).verdict == UnitVerdict::Unit;
    const bool coarse_unit = coarse.verdict == UnitVerdict::Unit;
    if (coarse_unit != fine_unit)
        return t.fail("unit status differs for " + x.to_string() + " in " + R->to_string());
    if (coarse_unit && !is_homogeneous(coarse.inverse->in(R), R->delta()))
        return t.fail("inverse of " + x.to_string() + " is not fine-homogeneous");
    return TrialOutcome::Pass;
}

TrialOutcome check_p90(Trial &t)
{
    const FgGroup G = random_group(t.rng, 3, 1);
    const GroupHom psi = random_surjection(t.rng, G);
    const Subgroup K = hom_kernel(psi);
    const bool torsionfree = K.group.is_torsionfree();
    const bool iso = is_injective(psi);
    const Classification simple = classify(coarsen(*group_ring(Base::Q, G, GroupAlgebraMode::Fine), psi));
    const RingPtr Z = make_ring(coarsen(*group_ring(Base::Z, G, GroupAlgebraMode::Fine), psi));
    const std::string where = " for psi = " + psi.to_string();
    if (simple.entire != torsionfree)
        return t.fail("simple ring: entirety after coarsening disagrees" + where);
    if (simple.simple != iso)
        return t.fail("simple ring: simplicity after coarsening disagrees" + where);
    if (classify(*Z).entire != torsionfree)
        return t.fail("entire ring: entirety after coarsening disagrees" + where);
    if (!torsionfree) {
        const Subgroup T = torsion_subgroup(K.group);
        const GroupElem tk = K.inclusion(T.inclusion(T.group.generator(0)));
        const Element x = one(Z) - Element::monomial(Z, tk);
        const NzdResult r = nzd_test(x);
        if (r.verdict != NzdVerdict::ZeroDivisor || !(x * *r.witness).is_zero())
            return t.fail("no annihilator for " + x.to_string() + where);
    }
    return TrialOutcome::Pass;
}

TrialOutcome check_p100(Trial &t)
{
    const FgGroup E = random_group(t.rng, 2, 1), G = random_group(t.rng, 2, 1);
    const NormalForm R(random_base(t.rng), random_hom(t.rng, E, G));
    const FgGroup F = random_group(t.rng, 2, 1);
    const Classification c = classify(R);
    const Classification fine = classify(group_algebra(R, F, GroupAlgebraMode::Fine));
    const Classification coarse = classify(group_algebra(R, F, GroupAlgebraMode::Coarse));
    const std::string where = " for " + R.to_string() + " and F = " + F.to_string();
    if (fine.entire != c.entire || fine.simple != c.simple)
        return t.fail("fine group algebra changes entirety or simplicity" + where);
    if (coarse.entire != (c.entire && F.is_torsionfree()))
        return t.fail("coarse group algebra entirety" + where);
    if (coarse.simple != (c.simple && F.is_trivial()))
        return t.fail("coarse group algebra simplicity" + where);
    return TrialOutcome::Pass;
}

TrialOutcome check_a80(Trial &t)
{
    const FgGroup T = random_group(t.rng, 1, 1);
    const GroupAlgebraMode mode = t.rng.coin() ? GroupAlgebraMode::Fine : GroupAlgebraMode::Coarse;
    const RingPtr R = group_ring(Base::Z, T, mode), S = group_ring(Base::Q, T, mode);
    const Element s = random_homogeneous(t.rng, S, S->delta(), 3, 2);
    const FgGroup F = random_group(t.rng, 1, 1);
    const RingPtr RF = make_ring(group_algebra(*R, F, GroupAlgebraMode::Fine));
    const RingPtr SF = make_ring(group_algebra(*S, F, GroupAlgebraMode::Fine));
    const DirectSum D = direct_sum(T, F);
    const GroupElem f = random_elem(t.rng, F, 2);
    Element::Terms lifted;
    for (const auto &[m, c] : s.terms())
        lifted.emplace(D.group.add(D.in1(m), D.in2(f)), c);
    const Element sf(SF, std::move(lifted));
    const bool base = find_integral_equation(R, Candidate(s), t.cfg.bounds).found();
    const bool ext = find_integral_equation(RF, Candidate(sf), t.cfg.bounds).found();
    if (base != ext)
        return t.fail(s.to_string() + " over " + R->to_string() + " versus " + sf.to_string());
    return TrialOutcome::Pass;
}

TrialOutcome check_a90(Trial &t)
{
    const unsigned n = static_cast<unsigned>(t.rng.pick(std::vector<long>{2, 3, 4, 6}));
    const TorsionIdempotent ti = torsion_idempotent(n);
    const std::string where = " for n = " + std::to_string(n);
    if (!(ti.f * ti.f == ti.f))
        return t.fail("f is not idempotent" + where);
    const bool integral_coeffs = std::all_of(ti.f.terms().begin(), ti.f.terms().end(),
                                             [](const auto &kv) { return is_integer(kv.second); });
    if (integral_coeffs)
        return t.fail("f has integer coefficients" + where);
    if (!verify_integral_witness(ti.R, Candidate(ti.f), ti.witness))
        return t.fail("witness does not verify" + where);
    if (!find_integral_equation(ti.R, Candidate(ti.f), {2, t.cfg.bounds.box}).found())
        return t.fail("no witness found" + where);
    return TrialOutcome::Pass;
}

/// Components check where statement (2) must hold: never only-coarse.
TrialOutcome components_outcome(Trial &t, const ComponentsReport &r, const std::string &what)
{
    switch (r.outcome) {
    case ComponentsOutcome::Both:
    case ComponentsOutcome::Neither: return TrialOutcome::Pass;
    case ComponentsOutcome::OnlyFine: return TrialOutcome::Inconclusive;
    case ComponentsOutcome::OnlyCoarse: break;
    }
    return t.fail(what + " is integral after coarsening but a component is not");
}

bool kernel_in_torsionfree_summand(const GroupHom &psi)
{
    const Subgroup K = hom_kernel(psi);
    return K.group.is_torsionfree() && is_in_torsionfree_summand(psi.domain(), K.generators());
}

TrialOutcome check_a101(Trial &t)
{
    const Instance inst = make_instance(t.rng, Profile::EntireTorsionfreeKernel);
    if (!kernel_in_torsionfree_summand(*inst.psi))
        return TrialOutcome::Inconclusive;
    const RingPtr R = make_ring(NormalForm(Base::Z, inst.ring->delta()));
    const RingPtr S = make_ring(NormalForm(Base::Q, inst.ring->delta()));
    const Element x =
        random_homogeneous(t.rng, S, compose(*inst.psi, S->delta()), 3, 2);
    return components_outcome(t, components_integral_check(R, *inst.psi, Candidate(x), t.cfg.bounds),
                              x.to_string() + " in " + S->to_string());
}

TrialOutcome check_a120(Trial &t)
{
    const FgGroup G = random_group(t.rng, 2, 1);
    const GroupHom psi = random_surjection(t.rng, G);
    const Subgroup K = hom_kernel(psi);
    const RingPtr R = group_ring(Base::Z, G, GroupAlgebraMode::Fine);
    const RingPtr S = group_ring(Base::Q, G, GroupAlgebraMode::Fine);
    if (!K.group.is_torsionfree()) {
        // The idempotent of a torsion element of the kernel.
        const Subgroup T = torsion_subgroup(K.group);
        const GroupElem g = K.inclusion(T.inclusion(T.group.generator(0)));
        const Int n = G.element_order(g);
        Element::Terms terms;
        GroupElem p = G.zero();
        for (Int i = 0; i < n; ++i, p = G.add(p, g))
            terms.emplace(p, Rat(Int(1), n));
        const Element f(S, std::move(terms));
        const ComponentsReport r = components_integral_check(R, psi, Candidate(f), t.cfg.bounds);
        if (r.outcome != ComponentsOutcome::OnlyCoarse)
            return t.fail(f.to_string() + " is reported " + to_string(r.outcome) +
                          " for psi = " + psi.to_string());
        return TrialOutcome::Pass;
    }
    if (!is_in_torsionfree_summand(G, K.generators()))
        return TrialOutcome::Inconclusive;
    const Element x = random_homogeneous(t.rng, S, compose(psi, S->delta()), 3, 2);
    return components_outcome(t, components_integral_check(R, psi, Candidate(x), t.cfg.bounds),
                              x.to_string() + " for psi = " + psi.to_string());
}

TrialOutcome check_a140(Trial &t)
{
    if (t.rng.coin()) {
        const Int n = t.rng.pick(std::vector<long>{2, 3, 4});
        const FgGroup G = FgGroup::invariant_factors(1, {n});
        const std::vector<GroupElem> F{G.element({n, 1})};
        if (!subgroup_generated_by(G, F).group.is_torsionfree())
            return t.fail("<(n,1)> is not torsionfree for n = " + to_string(n));
        if (is_in_torsionfree_summand(G, F))
            return t.fail("<(n,1)> reported inside a torsionfree summand for n = " + to_string(n));
        return TrialOutcome::Pass;
    }
    const FgGroup G = FgGroup::free(static_cast<std::size_t>(t.rng.uniform(1, 3)));
    std::vector<GroupElem> F;
    for (long i = t.rng.uniform(0, 2); i > 0; --i)
        F.push_back(random_elem(t.rng, G, 3));
    if (!is_in_torsionfree_summand(G, F))
        return t.fail("subgroup of a torsionfree group reported outside a torsionfree summand");
    return TrialOutcome::Pass;
}

TrialOutcome check_f20(Trial &t)
{
    RingPtr S;
    if (t.rng.coin()) {
        S = group_ring(Base::Q, FgGroup::free(1), GroupAlgebraMode::Coarse);
    } else {
        const FgGroup A = random_group(t.rng, 1, 1);
        const NormalForm R = group_algebra(NormalForm::base_ring(Base::Q), A, GroupAlgebraMode::Fine);
        S = make_ring(group_algebra(R, FgGroup::free(1), GroupAlgebraMode::Coarse));
    }
    const Element f = random_homogeneous(t.rng, S, S->delta(), 3);
    const Element g = random_homogeneous(t.rng, S, S->delta(), 5);
    const DivisionResult d = graded_euclidean_division(f, g);
    const std::string where = " dividing " + g.to_string() + " by " + f.to_string();
    const std::size_t z = S->E().rank() - 1;
    if (!(d.u * f + d.v == g))
        return t.fail("g != u f + v" + where);
    if (!d.v.is_zero() && z_degree(d.v) >= z_degree(f))
        return t.fail("remainder degree too large" + where);
    for (const auto &[m, c] : d.u.terms())
        if (m[z] < 0)
            return t.fail("quotient has a negative exponent" + where);
    if ((!d.u.is_zero() && !degree_of(d.u)) || (!d.v.is_zero() && !degree_of(d.v)))
        return t.fail("quotient or remainder is not homogeneous" + where);
    // Re-divide term by term in a shuffled order.
    std::vector<std::pair<GroupElem, Rat>> terms(g.terms().begin(), g.terms().end());
    for (std::size_t i = terms.size(); i > 1; --i)
        std::swap(terms[i - 1], terms[static_cast<std::size_t>(t.rng.uniform(0, long(i) - 1))]);
    Element u(S), v(S);
    for (const auto &[m, c] : terms) {
        const DivisionResult p = graded_euclidean_division(f, Element::monomial(S, m, c));
        u = u + p.u;
        v = v + p.v;
    }
    if (!(u == d.u) || !(v == d.v))
        return t.fail("division is not unique" + where);
    return TrialOutcome::Pass;
}

Element random_element(Rng &rng, const RingPtr &R)
{
    Element x(R);
    for (long i = rng.uniform(1, 4); i > 0; --i)
        x = x + Element::monomial(R, random_elem(rng, R->E(), 2), Rat(rng.uniform(-3, 3)));
    return x;
}

TrialOutcome check_lem50(Trial &t)
{
    const Instance inst = make_instance(t.rng, Profile::FreeSummand);
    const Lem50Iso iso = lem50_iso(inst.ring, inst.F, inst.H);
    const std::string where = " for " + inst.ring->to_string();
    for (int i = 0; i < 4; ++i) {
        const Element a = random_element(t.rng, iso.source);
        const Element c = random_element(t.rng, iso.target), c2 = random_element(t.rng, iso.target);
        if (!(iso.p(iso.q(a)) == a))
            return t.fail("p(q(a)) != a for a = " + a.to_string() + where);
        if (!(iso.q(iso.p(c)) == c))
            return t.fail("q(p(c)) != c for c = " + c.to_string() + where);
        if (!(iso.p(c * c2) == iso.p(c) * iso.p(c2)))
            return t.fail("p is not multiplicative" + where);
        for (const auto &[h, part] : homogeneous_components(c))
            if (degree_of(iso.p(part)) != h)
                return t.fail("p does not preserve degrees" + where);
    }
    if (!(iso.p(one(iso.target)) == one(iso.source)))
        return t.fail("p(1) != 1" + where);
    return TrialOutcome::Pass;
}

TrialOutcome check_t4800(Trial &t)
{
    const RingPtr R = random_entire_ring(t.rng, Base::Z);
    const FgGroup &G = R->G();
    GroupHom psi;
    bool hypotheses = false;
    for (int attempt = 0; attempt < 10 && !hypotheses; ++attempt) {
        psi = random_surjection(t.rng, G);
        hypotheses = G.is_torsionfree() ||
                     (kernel_in_torsionfree_summand(psi) && classify(*R).full_support);
    }
    if (!hypotheses)
        return TrialOutcome::Inconclusive;
    const RingPtr Q = make_ring(fraction_field(*R));
    const Element num = random_homogeneous(t.rng, Q, compose(psi, Q->delta()), 3);
    Element den = random_homogeneous(t.rng, Q, Q->delta(), 2);
    if (t.rng.coin())
        den = den.scaled(Rat(2));
    const Candidate x(num, den);
    return components_outcome(t, components_integral_check(R, psi, x, t.cfg.bounds),
                              x.to_string() + " for psi = " + psi.to_string());
}

using CheckFn = TrialOutcome (*)(Trial &);

const std::map<std::string, CheckFn> &registry()
{
    static const std::map<std::string, CheckFn> r{
        {"P70", check_p70},   {"P80", check_p80},     {"P90", check_p90},
        {"P100", check_p100}, {"A80", check_a80},     {"A90", check_a90},
        {"A101", check_a101}, {"A120", check_a120},   {"A140", check_a140},
        {"F20", check_f20},   {"LEM50", check_lem50}, {"T4800", check_t4800},
    };
    return r;
}

} // namespace

const std::vector<std::string> &check_ids()
{
    static const std::vector<std::string> ids{"P70", "P80",  "P90", "P100",  "A80",  "A90",
                                              "A101", "A120", "A140", "F20", "LEM50", "T4800"};
    return ids;
}

TrialOutcome run_trial(const CheckConfig &cfg, std::uint64_t trial_seed, std::string &detail)
{
    const auto it = registry().find(cfg.check_id);
    require(it != registry().end(), ErrorKind::UnknownCheckId,
            "unknown check id '" + cfg.check_id + "'");
    Rng rng(trial_seed);
    Trial t{rng, cfg, detail};
    try {
        return it->second(t);
    } catch (const Error &e) {
        return t.fail(std::string("error: ") + e.what());
    }
}

CheckReport run_check(const CheckConfig &cfg)
{
    require(registry().count(cfg.check_id) != 0, ErrorKind::UnknownCheckId,
            "unknown check id '" + cfg.check_id + "'");
    require(cfg.trials >= 1, ErrorKind::InvalidArgument, "at least one trial is needed");
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.check_id = cfg.check_id;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    report.bounds = cfg.bounds;
    std::uint64_t state = cfg.seed;
    for (unsigned i = 0; i < cfg.trials; ++i) {
        const std::uint64_t trial_seed = splitmix64(state);
        std::string detail;
        switch (run_trial(cfg, trial_seed, detail)) {
        case TrialOutcome::Pass: ++report.passes; break;
        case TrialOutcome::Inconclusive: ++report.inconclusive; break;
        case TrialOutcome::Fail:
            ++report.fails;
            if (!report.counterexample)
                report.counterexample =
                    ordered_json{{"trial", i}, {"trial_seed", trial_seed}, {"detail", detail}};
            break;
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ordered_json CheckReport::to_json() const
{
    ordered_json j{{"check_id", check_id}, {"seed", seed},   {"trials", trials},
                   {"passes", passes},     {"fails", fails}, {"inconclusive", inconclusive}};
    j["bounds"] = {{"max_degree", bounds.max_degree}, {"box", bounds.box}};
    if (counterexample)
        j["counterexample"] = *counterexample;
    return j;
}

} // namespace gradal

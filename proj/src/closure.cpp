#include "gradal/closure.hpp"

#include "gradal/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradal {

// ---------------------------------------------------------------------------
// Candidates and witnesses

Candidate::Candidate(const Element &x) : Candidate(x, Element::constant(x.parent(), Rat(1))) {}

Candidate::Candidate(const Fraction &x) : Candidate(x.num(), x.den()) {}

Candidate::Candidate(Element n, Element d) : num(std::move(n)), den(std::move(d))
{
    require_same_parent(num, den);
    require(!den.is_zero(), ErrorKind::ZeroElement, "zero denominator");
    require(is_homogeneous(den, num.ring().denominator_grading()), ErrorKind::NotHomogeneous,
            "denominator is not homogeneous");
    require(num.ring().entire() || den == Element::constant(den.parent(), Rat(1)),
            ErrorKind::NotEntire, "denominators need an entire ring");
}

std::optional<GroupElem> Candidate::degree() const
{
    if (num.is_zero())
        return std::nullopt;
    const auto dn = degree_of(num), dd = degree_of(den);
    if (!dn || !dd)
        return std::nullopt;
    return num.ring().G().sub(*dn, *dd);
}

std::string Candidate::to_string() const
{
    if (den == Element::constant(den.parent(), Rat(1)))
        return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

std::string IntegralityWitness::to_string() const
{
    std::string s = "monic " + std::to_string(degree);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        s += "; a" + std::to_string(i + 1) + " = " + coefficients[i].to_string();
    return s;
}

void require_compatible(const NormalForm &R, const NormalForm &S)
{
    require(R.delta() == S.delta(), ErrorKind::IncompatibleRings,
            "rings differ in element group or grading");
    require(!R.is_fraction(), ErrorKind::IncompatibleRings, "subring is a fraction field");
    require(R.base() == Base::Z || S.base() == Base::Q, ErrorKind::IncompatibleRings,
            "base of the subring is not contained in the base of the ring");
}

namespace {

Element one(const RingPtr &R) { return Element::constant(R, Rat(1)); }

/// Coefficient a in R, as an element of S.
std::optional<Element> lift_coefficient(const Element &a, const RingPtr &R, const RingPtr &S)
{
    Element::Terms t;
    for (const auto &[f, c] : a.terms()) {
        if (R->base() == Base::Z && !is_integer(c))
            return std::nullopt;
        t.emplace(f, c);
    }
    return Element(S, std::move(t));
}

/// Powers num^i den^(n-i) for i = 0..n.
std::vector<Element> mixed_powers(const Candidate &x, unsigned n)
{
    std::vector<Element> num_pow{one(x.parent())}, den_pow{one(x.parent())};
    for (unsigned i = 0; i < n; ++i) {
        num_pow.push_back(num_pow.back() * x.num);
        den_pow.push_back(den_pow.back() * x.den);
    }
    std::vector<Element> out;
    for (unsigned i = 0; i <= n; ++i)
        out.push_back(num_pow[i] * den_pow[n - i]);
    return out;
}

/// Per free coordinate: [min over num - max over den, max over num - min over den].
std::vector<std::pair<Int, Int>> support_window(const Candidate &x)
{
    const std::size_t r = x.num.ring().E().rank();
    std::vector<std::pair<Int, Int>> w(r);
    auto extent = [r](const Element &e) {
        std::vector<std::pair<Int, Int>> m(r);
        bool first = true;
        for (const auto &[f, c] : e.terms()) {
            for (std::size_t j = 0; j < r; ++j) {
                if (first || f[j] < m[j].first)
                    m[j].first = f[j];
                if (first || f[j] > m[j].second)
                    m[j].second = f[j];
            }
            first = false;
        }
        return m;
    };
    const auto n = extent(x.num), d = extent(x.den);
    for (std::size_t j = 0; j < r; ++j)
        w[j] = {n[j].first - d[j].second, n[j].second - d[j].first};
    return w;
}

/// Monomials e_m with delta(m) = degree and free coordinates in
/// scale * window widened by box, in lexicographic order.
std::vector<GroupElem> window_monomials(const NormalForm &R, const GroupElem &degree,
                                        const std::vector<std::pair<Int, Int>> &window,
                                        unsigned scale, int box)
{
    const FgGroup &E = R.E();
    const std::size_t r = E.rank(), dim = E.dim();
    IntVec lo(dim), hi(dim);
    for (std::size_t j = 0; j < r; ++j) {
        lo[j] = window[j].first * scale - box;
        hi[j] = window[j].second * scale + box;
    }
    for (std::size_t j = r; j < dim; ++j) {
        lo[j] = 0;
        hi[j] = E.modulus(j) - 1;
    }
    std::vector<GroupElem> out;
    IntVec c = lo;
    while (true) {
        GroupElem m(c);
        if (R.delta()(m) == degree)
            out.push_back(std::move(m));
        std::size_t j = dim;
        while (j > 0) {
            --j;
            if (++c[j] <= hi[j])
                break;
            c[j] = lo[j];
            if (j == 0)
                return out;
        }
        if (dim == 0)
            return out;
    }
}

struct Column {
    unsigned slot; // which coefficient a_i / b_j
    GroupElem monomial;
};

/// Sets up sum_slot sum_m c e_m * multiplier[slot] = target and solves it in
/// the base of R. Returns the coefficient element of every slot.
std::optional<std::vector<Element>>
solve_slots(const RingPtr &R, const std::vector<Element> &multiplier,
            const std::vector<std::vector<GroupElem>> &monomials, const Element &target,
            SolveRoute route)
{
    std::vector<Element> columns;
    std::vector<Column> index;
    for (unsigned slot = 0; slot < multiplier.size(); ++slot)
        for (const auto &m : monomials[slot]) {
            columns.push_back(multiplier[slot].shifted(m));
            index.push_back({slot, m});
        }
    if (columns.empty() && !target.is_zero())
        return std::nullopt;
    const auto sol = solve_in_base(R->base(), columns, target, route);
    if (!sol)
        return std::nullopt;
    std::vector<Element::Terms> terms(multiplier.size());
    for (std::size_t k = 0; k < index.size(); ++k)
        if ((*sol)[k] != 0)
            terms[index[k].slot].emplace(index[k].monomial, (*sol)[k]);
    std::vector<Element> out;
    for (auto &t : terms)
        out.emplace_back(R, std::move(t));
    return out;
}

GroupElem require_degree(const Candidate &x)
{
    const auto d = x.degree();
    require(d.has_value(), ErrorKind::NotHomogeneous, x.to_string() + " is not homogeneous");
    return *d;
}

} // namespace

bool verify_integral_witness(const RingPtr &R, const Candidate &x, const IntegralityWitness &w)
{
    const RingPtr &S = x.parent();
    require_compatible(*R, *S);
    if (w.degree == 0 || w.coefficients.size() != w.degree)
        return false;
    const auto deg = x.degree();
    const FgGroup &G = S->G();
    const std::vector<Element> pw = mixed_powers(x, w.degree);
    // sum_i a_i num^(n-i) den^i with a_0 = 1
    Element total = pw[w.degree];
    for (unsigned i = 1; i <= w.degree; ++i) {
        const Element &a = w.coefficients[i - 1];
        if (!a.is_zero() && deg) {
            const auto da = degree_of(a);
            if (!da || !(*da == G.scale(Int(i), *deg)))
                return false;
        }
        const auto lifted = lift_coefficient(a, R, S);
        if (!lifted || !(a.ring().delta() == R->delta()))
            return false;
        total = total + *lifted * pw[w.degree - i];
    }
    return total.is_zero();
}

IntegralSearch find_integral_equation(const RingPtr &R, const Candidate &x,
                                      const SearchBounds &bounds)
{
    const RingPtr &S = x.parent();
    require_compatible(*R, *S);
    IntegralSearch result;
    result.bounds = bounds;
    if (x.num.is_zero()) {
        result.witness = IntegralityWitness{1, {Element(R)}};
        return result;
    }
    const GroupElem deg = require_degree(x);
    const auto window = support_window(x);
    const FgGroup &G = S->G();
    for (unsigned n = 1; n <= bounds.max_degree; ++n) {
        const std::vector<Element> pw = mixed_powers(x, n);
        // a_i multiplies num^(n-i) den^i, which is pw[n - i].
        std::vector<Element> multiplier;
        std::vector<std::vector<GroupElem>> monomials;
        for (unsigned i = 1; i <= n; ++i) {
            multiplier.push_back(pw[n - i]);
            monomials.push_back(
                window_monomials(*R, G.scale(Int(i), deg), window, i, bounds.box));
        }
        auto coeffs = solve_slots(R, multiplier, monomials, -pw[n], SolveRoute::Echelon);
        if (coeffs) {
            result.witness = IntegralityWitness{n, std::move(*coeffs)};
            return result;
        }
    }
    return result;
}

AlmostIntegralSearch find_almost_integral_witness(const RingPtr &R, const Candidate &x,
                                                  const SearchBounds &bounds)
{
    const RingPtr &S = x.parent();
    require_compatible(*R, *S);
    AlmostIntegralSearch result;
    result.bounds = bounds;
    if (x.num.is_zero()) {
        result.witness = AlmostIntegralWitness{0, {x}, {Element(R)}};
        return result;
    }
    const GroupElem deg = require_degree(x);
    const auto window = support_window(x);
    const FgGroup &G = S->G();
    for (unsigned k = 0; k + 1 <= bounds.max_degree; ++k) {
        // num^(k+1) = sum_j b_j num^j den^(k+1-j), b_j of degree (k+1-j) deg.
        const std::vector<Element> pw = mixed_powers(x, k + 1);
        std::vector<Element> multiplier;
        std::vector<std::vector<GroupElem>> monomials;
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned s = k + 1 - j;
            multiplier.push_back(pw[j]);
            monomials.push_back(window_monomials(*R, G.scale(Int(s), deg), window, s, bounds.box));
        }
        auto coeffs = solve_slots(R, multiplier, monomials, pw[k + 1], SolveRoute::Smith);
        if (coeffs) {
            AlmostIntegralWitness w;
            w.k = k;
            for (unsigned j = 0; j <= k; ++j)
                w.generators.emplace_back(power(x.num, j), power(x.den, j));
            w.coefficients = std::move(*coeffs);
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

bool verify_almost_integral_witness(const RingPtr &R, const Candidate &x,
                                    const AlmostIntegralWitness &w)
{
    const RingPtr &S = x.parent();
    require_compatible(*R, *S);
    if (w.coefficients.size() != w.k + 1 || w.generators.size() != w.k + 1)
        return false;
    for (unsigned j = 0; j <= w.k; ++j)
        if (!(w.generators[j].num * power(x.den, j) == power(x.num, j) * w.generators[j].den))
            return false;
    const std::vector<Element> pw = mixed_powers(x, w.k + 1);
    Element rhs(S);
    for (unsigned j = 0; j <= w.k; ++j) {
        const auto b = lift_coefficient(w.coefficients[j], R, S);
        if (!b)
            return false;
        rhs = rhs + *b * pw[j];
    }
    return rhs == pw[w.k + 1];
}

std::string to_string(ComponentsOutcome o)
{
    switch (o) {
    case ComponentsOutcome::Both: return "both";
    case ComponentsOutcome::OnlyCoarse: return "only-coarse";
    case ComponentsOutcome::OnlyFine: return "only-fine";
    case ComponentsOutcome::Neither: return "neither";
    }
    return "neither";
}

ComponentsReport components_integral_check(const RingPtr &R, const GroupHom &psi,
                                           const Candidate &x, const SearchBounds &bounds)
{
    const RingPtr &S = x.parent();
    require_compatible(*R, *S);
    const GroupHom coarse_grading = compose(psi, S->delta());
    require(is_homogeneous(x.num, coarse_grading), ErrorKind::NotHomogeneous,
            x.to_string() + " is not homogeneous for the coarse grading");
    const RingPtr Rc = make_ring(coarsen(*R, psi));
    const RingPtr Sc = make_ring(coarsen(*S, psi));

    ComponentsReport report;
    report.coarse = find_integral_equation(Rc, Candidate(x.num.in(Sc), x.den.in(Sc)), bounds);
    bool all = true;
    for (const auto &[g, part] : homogeneous_components(x.num)) {
        IntegralSearch s = find_integral_equation(R, Candidate(part, x.den), bounds);
        all = all && s.found();
        report.components.emplace_back(g, std::move(s));
    }
    const bool coarse = report.coarse.found();
    report.outcome = coarse ? (all ? ComponentsOutcome::Both : ComponentsOutcome::OnlyCoarse)
                            : (all ? ComponentsOutcome::OnlyFine : ComponentsOutcome::Neither);
    return report;
}

// ---------------------------------------------------------------------------
// Torsion idempotent

TorsionIdempotent torsion_idempotent(unsigned n)
{
    require(n >= 2, ErrorKind::BadOrder, "the idempotent needs an order of at least 2");
    const FgGroup F = FgGroup::invariant_factors(0, {Int(n)});
    const RingPtr R =
        make_ring(group_algebra(NormalForm::base_ring(Base::Z), F, GroupAlgebraMode::Coarse));
    const RingPtr S =
        make_ring(group_algebra(NormalForm::base_ring(Base::Q), F, GroupAlgebraMode::Coarse));
    auto e = [&](unsigned i) { return F.element({Int(i)}); };

    Element::Terms ft, ct, dt;
    for (unsigned i = 0; i < n; ++i) {
        ft.emplace(e(i), Rat(1, n));
        dt.emplace(e(i), Rat(1));
    }
    ct.emplace(e(0), Rat(1));
    ct.emplace(e(n - 1), Rat(n - 1));
    TorsionIdempotent t{R, S, Element(S, ft), Element(R, ct), Element(R, dt), {}};
    t.witness = IntegralityWitness{2, {t.c - Element::constant(R, Rat(1)), -t.d}};

    const Element c = t.c.in(S), d = t.d.in(S);
    if (!(t.f * t.f == t.f) || !(t.f * c == d) ||
        !verify_integral_witness(R, Candidate(t.f), t.witness))
        throw std::logic_error("torsion idempotent identities failed for n = " +
                               std::to_string(n));
    return t;
}

// ---------------------------------------------------------------------------
// Graded euclidean division

namespace {

/// Index of the Z coordinate, after checking that S is R[Z] coarse with R simple.
std::size_t z_coordinate(const NormalForm &S)
{
    const FgGroup &E = S.E();
    require(!S.is_fraction() && S.base() == Base::Q && E.rank() >= 1, ErrorKind::NotSimpleBase,
            S.to_string() + " is not a coarse Laurent ring over a simple ring");
    const std::size_t z = E.rank() - 1;
    const IntMatrix &M = S.delta().matrix();
    for (std::size_t i = 0; i < M.rows(); ++i)
        require(M(i, z) == 0, ErrorKind::NotSimpleBase,
                "the Z coordinate of " + S.to_string() + " is not of degree 0");
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < E.dim(); ++j)
        if (j != z)
            rest.push_back(j);
    IntMatrix sub(M.rows(), rest.size());
    std::vector<Int> torsion(E.torsion());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < rest.size(); ++j)
            sub(i, j) = M(i, rest[j]);
    const GroupHom base_delta(FgGroup::invariant_factors(E.rank() - 1, torsion), S.G(), sub);
    require(is_injective(base_delta), ErrorKind::NotSimpleBase,
            "the coefficient ring of " + S.to_string() + " is not simple");
    return z;
}

const std::pair<const GroupElem, Rat> &leading_term(const Element &x, std::size_t z)
{
    auto best = x.terms().begin();
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it)
        if (it->first[z] > best->first[z])
            best = it;
    return *best;
}

} // namespace

Int z_degree(const Element &x)
{
    require(!x.is_zero(), ErrorKind::ZeroElement, "the zero element has no degree");
    const std::size_t z = z_coordinate(x.ring());
    return leading_term(x, z).first[z];
}

DivisionResult graded_euclidean_division(const Element &f, const Element &g)
{
    require_same_parent(f, g);
    const std::size_t z = z_coordinate(f.ring());
    require(!f.is_zero(), ErrorKind::ZeroDivisor, "division by zero");
    require(degree_of(f).has_value(), ErrorKind::NotHomogeneous,
            f.to_string() + " is not homogeneous");
    require(g.is_zero() || degree_of(g).has_value(), ErrorKind::NotHomogeneous,
            g.to_string() + " is not homogeneous");
    const FgGroup &E = f.ring().E();
    const auto [fm, fc] = leading_term(f, z);
    DivisionResult r{Element(f.parent()), g};
    while (!r.v.is_zero()) {
        const auto [vm, vc] = leading_term(r.v, z);
        if (vm[z] < fm[z])
            break;
        const Element q = Element::monomial(f.parent(), E.sub(vm, fm), vc / fc);
        r.u = r.u + q;
        r.v = r.v - q * f;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ring maps

Element RingMap::operator()(const Element &x) const
{
    require(same_ring(x.ring(), *domain), ErrorKind::ParentMismatch,
            "element does not belong to the domain of the map");
    Element::Terms t;
    for (const auto &[f, c] : x.terms())
        t[on_elements(f)] += c;
    return Element(codomain, std::move(t));
}

namespace {

bool agrees_on_generators(const GroupHom &a, const GroupHom &b)
{
    for (std::size_t i = 0; i < a.domain().dim(); ++i)
        if (!(a(a.domain().generator(i)) == b(a.domain().generator(i))))
            return false;
    return true;
}

template <typename Fn> auto hypothesis(Fn &&fn)
{
    try {
        return fn();
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotASubgroup || e.kind() == ErrorKind::NotSurjective)
            throw Error(ErrorKind::HypothesisViolated, e.what());
        throw;
    }
}

} // namespace

Lem50Iso lem50_iso(const RingPtr &R, const std::vector<GroupElem> &Fgens,
                   const std::optional<std::vector<GroupElem>> &Hgens)
{
    const NormalForm &nf = *R;
    const FgGroup &G = nf.G();
    require(!nf.is_fraction() && nf.base() == Base::Q && is_injective(nf.delta()),
            ErrorKind::HypothesisViolated, nf.to_string() + " is not a simple group algebra");
    const Subgroup F = subgroup_generated_by(G, Fgens);
    require(F.group.is_torsionfree(), ErrorKind::HypothesisViolated, "F is not free");

    std::vector<GroupElem> hg;
    if (Hgens) {
        hg = *Hgens;
    } else {
        const Quotient Q = quotient_by(G, Fgens);
        const auto pi = find_section(Q.projection);
        require(pi.has_value(), ErrorKind::HypothesisViolated, "F is not a direct summand");
        for (std::size_t i = 0; i < Q.group.dim(); ++i)
            hg.push_back((*pi)(Q.group.generator(i)));
    }
    const Subgroup H = subgroup_generated_by(G, hg);

    // G = F + H, split by Phi.
    const DirectSum FH = direct_sum(F.group, H.group);
    const GroupHom Phi = compose(F.inclusion, FH.pr1) + compose(H.inclusion, FH.pr2);
    require(is_injective(Phi) && is_surjective(Phi), ErrorKind::HypothesisViolated,
            "H is not a complement of F");
    const GroupHom split = lift_through(Phi, GroupHom::identity(G));
    const GroupHom psi = compose(FH.pr2, split);
    const GroupHom chi = compose(FH.pr1, split);

    const GroupHom &delta = nf.delta();
    const Subgroup D = hom_image(delta);
    for (const auto &d : D.generators())
        require(contains(D, H.inclusion(psi(d))), ErrorKind::HypothesisViolated,
                "the projection does not map the degree support into itself");
    const Subgroup DF = intersect(D, F);

    // R_(H): element group ker(chi o delta), graded by H.
    const GroupHom chi_delta = compose(chi, delta);
    const Subgroup EH = chi_delta.matrix().is_zero()
                            ? Subgroup{nf.E(), GroupHom::identity(nf.E())}
                            : hom_kernel(chi_delta);
    const GroupHom delta_H = lift_through(H.inclusion, compose(delta, EH.inclusion));
    const DirectSum ET = direct_sum(EH.group, DF.group);

    const GroupHom delta_inv_DF = lift_through(delta, DF.inclusion);
    const GroupHom kappa = hypothesis(
        [&] { return lift_through(DF.inclusion, compose(F.inclusion, chi_delta)); });
    const GroupHom lambda = lift_through(
        EH.inclusion, GroupHom::identity(nf.E()) - compose(delta_inv_DF, kappa));

    const GroupHom P = compose(EH.inclusion, ET.pr1) + compose(delta_inv_DF, ET.pr2);
    const GroupHom Qm = compose(ET.in1, lambda) + compose(ET.in2, kappa);
    if (!agrees_on_generators(compose(P, Qm), GroupHom::identity(nf.E())) ||
        !agrees_on_generators(compose(Qm, P), GroupHom::identity(ET.group)))
        throw std::logic_error("lem50 maps are not mutually inverse");

    Lem50Iso iso;
    iso.source = make_ring(coarsen(nf, psi));
    iso.target = make_ring(NormalForm(Base::Q, compose(delta_H, ET.pr1)));
    iso.p = RingMap{iso.target, iso.source, P};
    iso.q = RingMap{iso.source, iso.target, Qm};
    if (!agrees_on_generators(compose(iso.source->delta(), P), iso.target->delta()))
        throw std::logic_error("lem50 map does not preserve degrees");
    return iso;
}

RingMap j_pi_embedding(const RingPtr &R, const GroupHom &psi, const GroupHom &pi)
{
    require(psi.domain() == R->G() && pi.domain() == psi.codomain() &&
                pi.codomain() == psi.domain(),
            ErrorKind::TypeError, "section and coarsening do not fit together");
    require(agrees_on_generators(compose(psi, pi), GroupHom::identity(psi.codomain())),
            ErrorKind::NotASection, "the map is not a section of " + psi.to_string());
    const NormalForm coarse = coarsen(*R, psi);
    const Subgroup K = hom_kernel(psi);
    const NormalForm target = group_algebra(coarse, K.group, GroupAlgebraMode::Coarse);
    const DirectSum DE = direct_sum(R->E(), K.group);
    const GroupHom lambda =
        lift_through(K.inclusion, GroupHom::identity(R->G()) - compose(pi, psi));
    const GroupHom J = DE.in1 + compose(DE.in2, compose(lambda, R->delta()));
    return RingMap{make_ring(coarse), make_ring(target), J};
}

} // namespace gradal

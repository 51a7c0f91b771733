#include "gradal/element.hpp"

#include "gradal/error.hpp"

#include <algorithm>

namespace gradal {

Element::Element(RingPtr parent) : parent_(std::move(parent))
{
    require(parent_ != nullptr, ErrorKind::InvalidArgument, "element without a ring");
}

Element::Element(RingPtr parent, Terms terms) : Element(std::move(parent))
{
    const FgGroup &E = parent_->E();
    for (auto &[f, c] : terms) {
        require(E.is_reduced(f), ErrorKind::InvalidArgument,
                "e" + f.to_string() + " is not an element of " + E.to_string());
        if (c == 0)
            continue;
        require(parent_->base() == Base::Q || is_integer(c), ErrorKind::InvalidArgument,
                "coefficient " + gradal::to_string(c) + " is not in Z");
        terms_.emplace(f, c);
    }
}

Element Element::monomial(RingPtr parent, const GroupElem &f, const Rat &c)
{
    return Element(std::move(parent), Terms{{f, c}});
}

Element Element::constant(RingPtr parent, const Rat &c)
{
    const GroupElem zero = parent->E().zero();
    return monomial(std::move(parent), zero, c);
}

Rat Element::coefficient(const GroupElem &f) const
{
    const auto it = terms_.find(f);
    return it == terms_.end() ? Rat(0) : it->second;
}

Element Element::shifted(const GroupElem &f) const
{
    const FgGroup &E = parent_->E();
    Element out(parent_);
    for (const auto &[g, c] : terms_)
        out.terms_.emplace(E.add(g, f), c);
    return out;
}

Element Element::scaled(const Rat &c) const
{
    Terms t;
    for (const auto &[f, a] : terms_)
        t.emplace(f, a * c);
    return Element(parent_, std::move(t));
}

Element Element::in(RingPtr parent) const
{
    require(parent->E() == parent_->E(), ErrorKind::IncompatibleRings,
            "rings have different element groups");
    return Element(std::move(parent), terms_);
}

bool same_ring(const NormalForm &a, const NormalForm &b) { return &a == &b || a == b; }

void require_same_parent(const Element &a, const Element &b)
{
    require(same_ring(a.ring(), b.ring()), ErrorKind::ParentMismatch,
            "elements belong to different rings");
}

Element operator+(const Element &a, const Element &b)
{
    require_same_parent(a, b);
    Element out = a;
    for (const auto &[f, c] : b.terms_) {
        auto [it, inserted] = out.terms_.emplace(f, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.terms_.erase(it);
        }
    }
    return out;
}

Element operator-(const Element &a)
{
    Element out = a;
    for (auto &[f, c] : out.terms_)
        c = -c;
    return out;
}

Element operator-(const Element &a, const Element &b) { return a + (-b); }

Element operator*(const Element &a, const Element &b)
{
    require_same_parent(a, b);
    const FgGroup &E = a.ring().E();
    Element out(a.parent_);
    for (const auto &[f, c] : a.terms_)
        for (const auto &[g, d] : b.terms_) {
            auto [it, inserted] = out.terms_.emplace(E.add(f, g), c * d);
            if (!inserted)
                it->second += c * d;
        }
    std::erase_if(out.terms_, [](const auto &kv) { return kv.second == 0; });
    return out;
}

bool operator==(const Element &a, const Element &b)
{
    return a.terms_ == b.terms_ && same_ring(a.ring(), b.ring());
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[f, c] = *it;
        std::string mono = "e(";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                mono += ",";
            mono += f[i].get_str();
        }
        mono += ")";
        std::string term;
        if (c == 1)
            term = mono;
        else if (c == -1)
            term = "-" + mono;
        else
            term = gradal::to_string(c) + "*" + mono;
        if (!s.empty() && term[0] != '-')
            s += "+";
        s += term;
    }
    return s;
}

Element power(const Element &x, unsigned n)
{
    Element result = Element::constant(x.parent(), Rat(1));
    Element base = x;
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

std::map<GroupElem, Element> homogeneous_components(const Element &x, const GroupHom &grading)
{
    std::map<GroupElem, Element::Terms> parts;
    for (const auto &[f, c] : x.terms())
        parts[grading(f)].emplace(f, c);
    std::map<GroupElem, Element> out;
    for (auto &[g, t] : parts)
        out.emplace(g, Element(x.parent(), std::move(t)));
    return out;
}

std::map<GroupElem, Element> homogeneous_components(const Element &x)
{
    return homogeneous_components(x, x.ring().delta());
}

std::optional<GroupElem> degree_of(const Element &x, const GroupHom &grading)
{
    require(!x.is_zero(), ErrorKind::ZeroElement, "the zero element has no degree");
    std::optional<GroupElem> deg;
    for (const auto &[f, c] : x.terms()) {
        GroupElem g = grading(f);
        if (deg && !(*deg == g))
            return std::nullopt;
        deg = std::move(g);
    }
    return deg;
}

std::optional<GroupElem> degree_of(const Element &x) { return degree_of(x, x.ring().delta()); }

bool is_homogeneous(const Element &x, const GroupHom &grading)
{
    return x.is_zero() || degree_of(x, grading).has_value();
}

std::optional<std::vector<Rat>> solve_in_base(Base base, const std::vector<Element> &columns,
                                              const Element &target, SolveRoute route)
{
    std::map<GroupElem, std::size_t> row_of;
    auto index = [&](const Element &e) {
        for (const auto &[f, c] : e.terms())
            row_of.emplace(f, 0);
    };
    for (const auto &c : columns)
        index(c);
    index(target);
    std::size_t r = 0;
    for (auto &[f, i] : row_of)
        i = r++;

    const std::size_t n = columns.size();
    RatMatrix A(r, n);
    RatVec b(r, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto &[f, c] : columns[j].terms())
            A(row_of[f], j) = c;
    for (const auto &[f, c] : target.terms())
        b[row_of[f]] = c;

    if (base == Base::Q && route == SolveRoute::Echelon) {
        auto x = solve_rational(A, b);
        if (!x)
            return std::nullopt;
        return *x;
    }
    IntMatrix M(r, n);
    IntVec v(r);
    for (std::size_t i = 0; i < r; ++i) {
        Int scale = b[i].get_den();
        for (std::size_t j = 0; j < n; ++j)
            scale = lcm(scale, A(i, j).get_den());
        for (std::size_t j = 0; j < n; ++j)
            M(i, j) = Int(A(i, j) * scale);
        v[i] = Int(b[i] * scale);
    }
    if (route == SolveRoute::Smith)
        return solve_via_smith(M, v, base == Base::Z);
    const auto x = solve_integer(M, v);
    if (!x)
        return std::nullopt;
    return std::vector<Rat>(x->begin(), x->end());
}

// ---------------------------------------------------------------------------
// Fractions

Fraction::Fraction(Element num, Element den) : num_(std::move(num)), den_(std::move(den))
{
    require_same_parent(num_, den_);
    require(num_.ring().entire(), ErrorKind::NotEntire, "fractions need an entire ring");
    require(!den_.is_zero(), ErrorKind::ZeroElement, "zero denominator");
    require(is_homogeneous(den_, num_.ring().denominator_grading()), ErrorKind::NotHomogeneous,
            "denominator " + den_.to_string() + " is not homogeneous");
    cancel();
}

Fraction::Fraction(const Element &x)
    : Fraction(x, Element::constant(x.parent(), Rat(1)))
{
}

void Fraction::cancel()
{
    if (num_.is_zero()) {
        den_ = Element::constant(num_.parent(), Rat(1));
        return;
    }
    if (den_.size() != 1)
        return;
    const auto &[f, c] = *den_.terms().begin();
    const GroupElem shift = num_.ring().E().neg(f);
    if (num_.ring().base() == Base::Q) {
        num_ = num_.shifted(shift).scaled(Rat(1) / c);
        den_ = Element::constant(num_.parent(), Rat(1));
        return;
    }
    Int g = c.get_num();
    for (const auto &[k, a] : num_.terms())
        g = gcd(g, a.get_num());
    if (c < 0)
        g = -g;
    num_ = num_.shifted(shift).scaled(Rat(1) / Rat(g));
    den_ = Element::constant(num_.parent(), c / Rat(g));
}

std::optional<GroupElem> Fraction::degree() const
{
    if (num_.is_zero())
        return std::nullopt;
    const auto dn = degree_of(num_);
    if (!dn)
        return std::nullopt;
    return num_.ring().G().sub(*dn, *degree_of(den_));
}

Fraction operator+(const Fraction &a, const Fraction &b)
{
    if (a.den_ == b.den_)
        return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction &a) { return Fraction(-a.num_, a.den_); }

Fraction operator-(const Fraction &a, const Fraction &b) { return a + (-b); }

Fraction operator*(const Fraction &a, const Fraction &b)
{
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const Fraction &a, const Fraction &b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Fraction::to_string() const
{
    if (den_ == Element::constant(den_.parent(), Rat(1)))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Units and zero divisors

namespace {

/// The finite-dimensional algebra Q[T] for a finite group T.
struct FiniteAlgebra {
    FgGroup T;
    std::vector<GroupElem> elems;
    std::map<GroupElem, std::size_t> index;

    explicit FiniteAlgebra(FgGroup t) : T(std::move(t)), elems(T.enumerate())
    {
        for (std::size_t i = 0; i < elems.size(); ++i)
            index.emplace(elems[i], i);
    }
    std::size_t dim() const { return elems.size(); }

    using Vec = RatVec;

    Vec mul(const Vec &a, const Vec &b) const
    {
        Vec c(dim(), Rat(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                if (b[j] != 0)
                    c[index.at(T.add(elems[i], elems[j]))] += a[i] * b[j];
        }
        return c;
    }
    /// Column j is a * e_{elems[j]}.
    RatMatrix mult_matrix(const Vec &a) const
    {
        RatMatrix M(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                M(index.at(T.add(elems[i], elems[j])), j) += a[i];
        }
        return M;
    }
    std::optional<Vec> inverse(const Vec &a) const
    {
        Vec one(dim(), Rat(0));
        one[0] = 1;
        return solve_rational(mult_matrix(a), one);
    }
    static bool is_zero(const Vec &a)
    {
        return std::all_of(a.begin(), a.end(), [](const Rat &x) { return x == 0; });
    }
};

/// x e_{-f0} written in base[S] for S = Z^r + T (the subgroup `sub`), as a
/// map from the free coordinates to coefficients in Q[T].
struct SplitElement {
    FiniteAlgebra algebra;
    std::map<IntVec, RatVec> coeffs;
};

SplitElement split(const Element &x, const GroupElem &f0, const Subgroup &sub)
{
    const FgGroup &S = sub.group;
    SplitElement out{FiniteAlgebra(FgGroup::invariant_factors(0, S.torsion())), {}};
    const FgGroup &E = x.ring().E();
    for (const auto &[f, c] : x.terms()) {
        const auto s = preimage(sub.inclusion, E.sub(f, f0));
        require(s.has_value(), ErrorKind::InvalidArgument, "support is not in the subgroup");
        const IntVec free(s->coords().begin(), s->coords().begin() + S.rank());
        const GroupElem t(IntVec(s->coords().begin() + S.rank(), s->coords().end()));
        auto [it, inserted] = out.coeffs.try_emplace(free, RatVec(out.algebra.dim(), Rat(0)));
        it->second[out.algebra.index.at(t)] += c;
    }
    return out;
}

/// Image in E of the subgroup element with the given free and torsion parts.
GroupElem join(const Subgroup &sub, const IntVec &free, const GroupElem &t)
{
    IntVec c = free;
    c.insert(c.end(), t.coords().begin(), t.coords().end());
    return sub.inclusion(sub.group.element(c));
}

} // namespace

UnitResult homogeneous_unit_test(const Element &x)
{
    require(!x.is_zero(), ErrorKind::ZeroElement, "zero is not a unit");
    const NormalForm &nf = x.ring();
    require(is_homogeneous(x, nf.delta()), ErrorKind::NotHomogeneous,
            x.to_string() + " is not homogeneous");
    UnitResult result;
    if (nf.is_fraction()) {
        if (is_homogeneous(x, *nf.localized())) {
            result.verdict = UnitVerdict::Unit;
            result.fraction_inverse = Fraction(Element::constant(x.parent(), Rat(1)), x);
        }
        return result;
    }

    const GroupElem f0 = x.terms().begin()->first;
    const Subgroup N = hom_kernel(nf.delta());
    const SplitElement y = split(x, f0, N);
    const FiniteAlgebra &A = y.algebra;

    // A unit of Q[T][Z^r] has pairwise orthogonal coefficients whose sum is
    // a unit; its inverse is sum_n s^-2 a_n t^-n with s that sum.
    RatVec s(A.dim(), Rat(0));
    for (auto it = y.coeffs.begin(); it != y.coeffs.end(); ++it) {
        for (auto jt = std::next(it); jt != y.coeffs.end(); ++jt)
            if (!FiniteAlgebra::is_zero(A.mul(it->second, jt->second)))
                return result;
        for (std::size_t i = 0; i < A.dim(); ++i)
            s[i] += it->second[i];
    }
    const auto s_inv = A.inverse(s);
    if (!s_inv)
        return result;
    const RatVec s_inv2 = A.mul(*s_inv, *s_inv);

    Element::Terms inv;
    const FgGroup &E = nf.E();
    const GroupElem minus_f0 = E.neg(f0);
    for (const auto &[n, a] : y.coeffs) {
        const RatVec b = A.mul(s_inv2, a);
        IntVec neg_n(n.size());
        for (std::size_t i = 0; i < n.size(); ++i)
            neg_n[i] = -n[i];
        for (std::size_t i = 0; i < A.dim(); ++i) {
            if (b[i] == 0)
                continue;
            if (nf.base() == Base::Z && !is_integer(b[i]))
                return result;
            inv[E.add(join(N, neg_n, A.elems[i]), minus_f0)] += b[i];
        }
    }
    result.verdict = UnitVerdict::Unit;
    result.inverse = Element(x.parent(), std::move(inv));
    return result;
}

NzdResult nzd_test(const Element &x)
{
    require(!x.is_zero(), ErrorKind::ZeroElement, "zero divides zero");
    const FgGroup &E = x.ring().E();
    const GroupElem f0 = x.terms().begin()->first;
    std::vector<GroupElem> diffs;
    for (const auto &[f, c] : x.terms())
        diffs.push_back(E.sub(f, f0));
    const Subgroup U = subgroup_generated_by(E, diffs);
    const SplitElement y = split(x, f0, U);
    const FiniteAlgebra &A = y.algebra;

    // A zero divisor of the reduced ring Q[T][Z^r] is killed by a nonzero
    // element of Q[T]: a common annihilator of all coefficients.
    RatMatrix stacked(A.dim() * y.coeffs.size(), A.dim());
    std::size_t row = 0;
    for (const auto &[n, a] : y.coeffs) {
        const RatMatrix M = A.mult_matrix(a);
        for (std::size_t i = 0; i < A.dim(); ++i, ++row)
            for (std::size_t j = 0; j < A.dim(); ++j)
                stacked(row, j) = M(i, j);
    }
    const RatMatrix K = rational_kernel(stacked);
    NzdResult result;
    if (K.cols() == 0)
        return result;

    RatVec z = K.col(0);
    Int den = 1;
    for (const auto &v : z)
        den = lcm(den, v.get_den());
    Int g = 0;
    for (auto &v : z) {
        v *= den;
        g = gcd(g, v.get_num());
    }
    const auto lead = std::find_if(z.begin(), z.end(), [](const Rat &v) { return v != 0; });
    if (*lead < 0)
        g = -g;
    Element::Terms w;
    const IntVec zero_free(U.group.rank(), Int(0));
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (z[i] != 0)
            w.emplace(join(U, zero_free, A.elems[i]), z[i] / Rat(g));
    result.verdict = NzdVerdict::ZeroDivisor;
    result.witness = Element(x.parent(), std::move(w));
    return result;
}

P70Verdict lemma_p70_check(const NormalForm &nf, const GroupHom &psi, const Element &x,
                                const Element &y)
{
    auto pre = [](bool ok, const std::string &what) {
        require(ok, ErrorKind::PreconditionViolated, what);
    };
    pre(same_ring(x.ring(), nf) && same_ring(y.ring(), nf), "elements are not in the ring");
    pre(nf.entire(), "ring is not entire");
    pre(psi.domain() == nf.G(), "coarsening map does not start at the grading group");
    pre(is_surjective(psi), "coarsening map is not surjective");
    pre(hom_kernel(psi).group.is_torsionfree(), "coarsening kernel is not torsionfree");
    pre(!x.is_zero() && !y.is_zero(), "elements must be nonzero");
    const GroupHom coarse = compose(psi, nf.delta());
    pre(is_homogeneous(x, coarse) && is_homogeneous(y, coarse),
        "elements are not homogeneous for the coarse grading");
    const Element xy = x * y;
    pre(is_homogeneous(xy, nf.delta()), "product is not homogeneous for the fine grading");
    P70Verdict v;
    v.x_fine_homogeneous = is_homogeneous(x, nf.delta());
    v.y_fine_homogeneous = is_homogeneous(y, nf.delta());
    v.product_nonzero = !xy.is_zero();
    return v;
}

} // namespace gradal

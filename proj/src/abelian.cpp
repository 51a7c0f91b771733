#include "gradal/abelian.hpp"

#include "gradal/error.hpp"

#include <algorithm>

namespace gradal {

bool GroupElem::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Int &x) { return x == 0; });
}

FgGroup FgGroup::free(std::size_t rank)
{
    FgGroup g;
    g.rank_ = rank;
    return g;
}

FgGroup FgGroup::invariant_factors(std::size_t rank, std::vector<Int> torsion)
{
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        require(torsion[i] >= 2, ErrorKind::InvalidArgument,
                "invariant factors must be at least 2");
        if (i > 0)
            require(torsion[i] % torsion[i - 1] == 0, ErrorKind::InvalidArgument,
                    "invariant factors must form a divisibility chain");
    }
    FgGroup g;
    g.rank_ = rank;
    g.torsion_ = std::move(torsion);
    return g;
}

Int FgGroup::modulus(std::size_t coord) const
{
    return coord < rank_ ? Int(0) : torsion_.at(coord - rank_);
}

Int FgGroup::order() const
{
    require(is_finite(), ErrorKind::InvalidArgument, "group is infinite");
    Int n = 1;
    for (const auto &d : torsion_)
        n *= d;
    return n;
}

GroupElem FgGroup::generator(std::size_t i) const
{
    require(i < dim(), ErrorKind::InvalidArgument, "generator index out of range");
    IntVec c(dim(), Int(0));
    c[i] = 1;
    return element(std::move(c));
}

GroupElem FgGroup::element(IntVec coords) const
{
    require(coords.size() == dim(), ErrorKind::InvalidArgument,
            "element has " + std::to_string(coords.size()) + " coordinates, group " +
                to_string() + " needs " + std::to_string(dim()));
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        coords[rank_ + j] = mod_floor(coords[rank_ + j], torsion_[j]);
    return GroupElem(std::move(coords));
}

bool FgGroup::is_reduced(const GroupElem &x) const
{
    if (x.size() != dim())
        return false;
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        if (x[rank_ + j] < 0 || x[rank_ + j] >= torsion_[j])
            return false;
    return true;
}

GroupElem FgGroup::add(const GroupElem &a, const GroupElem &b) const
{
    IntVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = a[i] + b[i];
    return element(std::move(c));
}

GroupElem FgGroup::sub(const GroupElem &a, const GroupElem &b) const
{
    IntVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = a[i] - b[i];
    return element(std::move(c));
}

GroupElem FgGroup::neg(const GroupElem &a) const
{
    IntVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = -a[i];
    return element(std::move(c));
}

GroupElem FgGroup::scale(const Int &k, const GroupElem &a) const
{
    IntVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = k * a[i];
    return element(std::move(c));
}

Int FgGroup::element_order(const GroupElem &a) const
{
    for (std::size_t i = 0; i < rank_; ++i)
        if (a[i] != 0)
            return 0;
    Int n = 1;
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        const Int &d = torsion_[j];
        n = lcm(n, d / gcd(d, a[rank_ + j]));
    }
    return n;
}

std::vector<GroupElem> FgGroup::enumerate() const
{
    require(is_finite(), ErrorKind::InvalidArgument, "cannot enumerate an infinite group");
    std::vector<GroupElem> out;
    IntVec c(dim(), Int(0));
    while (true) {
        out.emplace_back(c);
        std::size_t i = dim();
        while (i > 0) {
            --i;
            if (++c[i] < torsion_[i])
                break;
            c[i] = 0;
            if (i == 0)
                return out;
        }
        if (dim() == 0)
            return out;
    }
}

IntMatrix FgGroup::relation_matrix() const
{
    IntMatrix R(dim(), torsion_.size());
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        R(rank_ + j, j) = torsion_[j];
    return R;
}

std::string FgGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    if (rank_ == 1)
        s = "Z";
    else if (rank_ > 1)
        s = "Z^" + std::to_string(rank_);
    for (const auto &d : torsion_) {
        if (!s.empty())
            s += " x ";
        s += "Z/" + d.get_str();
    }
    return s;
}

Presentation present(std::size_t generators, const IntMatrix &relations)
{
    require(relations.rows() == generators, ErrorKind::InvalidArgument,
            "relation matrix must have one row per generator");
    const SmithForm snf = smith_normal_form(relations);
    const auto diag = snf.diagonal();
    std::vector<std::size_t> keep;
    for (std::size_t i = snf.rank; i < generators; ++i)
        keep.push_back(i);
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (diag[i] > 1) {
            keep.push_back(i);
            torsion.push_back(diag[i]);
        }
    Presentation p;
    p.group = FgGroup::invariant_factors(generators - snf.rank, std::move(torsion));
    p.to_normal = snf.U.select_rows(keep);
    p.from_normal = snf.U_inv.select_cols(keep);
    return p;
}

Presentation present_cyclic(const std::vector<Int> &orders)
{
    IntMatrix R(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        require(orders[i] >= 0, ErrorKind::InvalidArgument, "cyclic order must be non-negative");
        R(i, i) = orders[i];
    }
    return present(orders.size(), R);
}

GroupHom::GroupHom(FgGroup domain, FgGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    require(matrix_.rows() == codomain_.dim() && matrix_.cols() == domain_.dim(),
            ErrorKind::InvalidArgument,
            "hom matrix must be " + std::to_string(codomain_.dim()) + "x" +
                std::to_string(domain_.dim()));
    for (std::size_t i = codomain_.rank(); i < codomain_.dim(); ++i) {
        const Int d = codomain_.modulus(i);
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            matrix_(i, j) = mod_floor(matrix_(i, j), d);
    }
    for (std::size_t j = domain_.rank(); j < domain_.dim(); ++j) {
        const Int d = domain_.modulus(j);
        for (std::size_t i = 0; i < codomain_.dim(); ++i) {
            const Int m = codomain_.modulus(i);
            const Int v = d * matrix_(i, j);
            const bool ok = (m == 0) ? v == 0 : v % m == 0;
            require(ok, ErrorKind::InvalidArgument,
                    "hom is not well defined on torsion generator " + std::to_string(j));
        }
    }
}

GroupHom GroupHom::identity(const FgGroup &G)
{
    return GroupHom(G, G, IntMatrix::identity(G.dim()));
}

GroupHom GroupHom::zero(const FgGroup &domain, const FgGroup &codomain)
{
    return GroupHom(domain, codomain, IntMatrix(codomain.dim(), domain.dim()));
}

GroupElem GroupHom::operator()(const GroupElem &x) const
{
    require(x.size() == domain_.dim(), ErrorKind::InvalidArgument,
            "element is not in the domain of the hom");
    return codomain_.element(matrix_ * x.coords());
}

std::string GroupHom::to_string() const
{
    return gradal::to_string(matrix_) + " : " + domain_.to_string() + " -> " +
           codomain_.to_string();
}

GroupHom compose(const GroupHom &outer, const GroupHom &inner)
{
    require(inner.codomain() == outer.domain(), ErrorKind::InvalidArgument,
            "composition of incompatible homs");
    return GroupHom(inner.domain(), outer.codomain(), outer.matrix() * inner.matrix());
}

GroupHom operator+(const GroupHom &f, const GroupHom &g)
{
    require(f.domain() == g.domain() && f.codomain() == g.codomain(),
            ErrorKind::InvalidArgument, "sum of homs with different signatures");
    return GroupHom(f.domain(), f.codomain(), f.matrix() + g.matrix());
}

GroupHom operator-(const GroupHom &f)
{
    IntMatrix m = f.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.negate_row(i);
    return GroupHom(f.domain(), f.codomain(), std::move(m));
}

GroupHom operator-(const GroupHom &f, const GroupHom &g) { return f + (-g); }

std::vector<GroupElem> Subgroup::generators() const
{
    std::vector<GroupElem> out;
    for (std::size_t j = 0; j < group.dim(); ++j)
        out.push_back(inclusion(group.generator(j)));
    return out;
}

namespace {

IntMatrix columns_of(const FgGroup &G, const std::vector<GroupElem> &gens)
{
    IntMatrix A(G.dim(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        require(gens[j].size() == G.dim(), ErrorKind::InvalidArgument,
                "generator is not an element of " + G.to_string());
        for (std::size_t i = 0; i < G.dim(); ++i)
            A(i, j) = gens[j][i];
    }
    return A;
}

IntMatrix top_rows(const IntMatrix &M, std::size_t n)
{
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    return M.select_rows(idx);
}

} // namespace

Subgroup subgroup_generated_by(const FgGroup &G, const std::vector<GroupElem> &gens)
{
    const IntMatrix A = columns_of(G, gens);
    const IntMatrix K = integer_kernel(IntMatrix::hconcat(A, G.relation_matrix()));
    const IntMatrix N = top_rows(K, gens.size());
    const Presentation p = present(gens.size(), N);
    IntMatrix inc = A * p.from_normal;
    // Orient free generators so the first nonzero coordinate is positive.
    for (std::size_t j = 0; j < p.group.rank(); ++j)
        for (std::size_t i = 0; i < inc.rows(); ++i) {
            if (inc(i, j) == 0)
                continue;
            if (inc(i, j) < 0)
                inc.negate_col(j);
            break;
        }
    return Subgroup{p.group, GroupHom(p.group, G, std::move(inc))};
}

Subgroup hom_kernel(const GroupHom &psi)
{
    const FgGroup &G = psi.domain();
    const IntMatrix K =
        integer_kernel(IntMatrix::hconcat(psi.matrix(), psi.codomain().relation_matrix()));
    const IntMatrix L = top_rows(K, G.dim());
    std::vector<GroupElem> gens;
    for (std::size_t j = 0; j < L.cols(); ++j)
        gens.push_back(G.element(L.col(j)));
    return subgroup_generated_by(G, gens);
}

Subgroup hom_image(const GroupHom &psi)
{
    std::vector<GroupElem> gens;
    for (std::size_t j = 0; j < psi.domain().dim(); ++j)
        gens.push_back(psi(psi.domain().generator(j)));
    return subgroup_generated_by(psi.codomain(), gens);
}

Quotient quotient_by(const FgGroup &G, const std::vector<GroupElem> &gens)
{
    const IntMatrix N = IntMatrix::hconcat(G.relation_matrix(), columns_of(G, gens));
    const Presentation p = present(G.dim(), N);
    return Quotient{p.group, GroupHom(G, p.group, p.to_normal)};
}

TorsionInfo torsion_decomposition(const FgGroup &G)
{
    return TorsionInfo{G.rank(), G.torsion(), G.is_torsionfree()};
}

Subgroup torsion_subgroup(const FgGroup &G)
{
    std::vector<GroupElem> gens;
    for (std::size_t j = G.rank(); j < G.dim(); ++j)
        gens.push_back(G.generator(j));
    return subgroup_generated_by(G, gens);
}

namespace {

// When the concatenated invariant factors of A and B still form a chain the
// sum needs no Smith form: coordinates are just interleaved as free parts
// then torsion parts.
std::optional<DirectSum> interleaved_sum(const FgGroup &A, const FgGroup &B)
{
    std::vector<Int> torsion = A.torsion();
    torsion.insert(torsion.end(), B.torsion().begin(), B.torsion().end());
    for (std::size_t i = 1; i < torsion.size(); ++i)
        if (torsion[i] % torsion[i - 1] != 0)
            return std::nullopt;
    const FgGroup S = FgGroup::invariant_factors(A.rank() + B.rank(), std::move(torsion));
    // Position of A's and B's coordinates inside S.
    std::vector<std::size_t> posA, posB;
    for (std::size_t i = 0; i < A.rank(); ++i)
        posA.push_back(i);
    for (std::size_t i = 0; i < B.rank(); ++i)
        posB.push_back(A.rank() + i);
    for (std::size_t i = 0; i < A.torsion().size(); ++i)
        posA.push_back(S.rank() + i);
    for (std::size_t i = 0; i < B.torsion().size(); ++i)
        posB.push_back(S.rank() + A.torsion().size() + i);
    IntMatrix in1(S.dim(), A.dim()), in2(S.dim(), B.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        in1(posA[i], i) = 1;
    for (std::size_t i = 0; i < B.dim(); ++i)
        in2(posB[i], i) = 1;
    DirectSum s;
    s.group = S;
    s.pr1 = GroupHom(S, A, in1.transpose());
    s.pr2 = GroupHom(S, B, in2.transpose());
    s.in1 = GroupHom(A, S, std::move(in1));
    s.in2 = GroupHom(B, S, std::move(in2));
    return s;
}

} // namespace

DirectSum direct_sum(const FgGroup &A, const FgGroup &B)
{
    if (auto s = interleaved_sum(A, B))
        return *s;
    const std::size_t a = A.dim(), b = B.dim();
    const IntMatrix RA = A.relation_matrix(), RB = B.relation_matrix();
    IntMatrix N(a + b, RA.cols() + RB.cols());
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < RA.cols(); ++j)
            N(i, j) = RA(i, j);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < RB.cols(); ++j)
            N(a + i, RA.cols() + j) = RB(i, j);
    const Presentation p = present(a + b, N);
    std::vector<std::size_t> first(a), second(b);
    for (std::size_t i = 0; i < a; ++i)
        first[i] = i;
    for (std::size_t i = 0; i < b; ++i)
        second[i] = a + i;
    DirectSum s;
    s.group = p.group;
    s.in1 = GroupHom(A, p.group, p.to_normal.select_cols(first));
    s.in2 = GroupHom(B, p.group, p.to_normal.select_cols(second));
    s.pr1 = GroupHom(p.group, A, p.from_normal.select_rows(first));
    s.pr2 = GroupHom(p.group, B, p.from_normal.select_rows(second));
    return s;
}

GroupHom direct_sum_hom(const GroupHom &f, const GroupHom &g, const DirectSum &domain,
                        const DirectSum &codomain)
{
    return compose(codomain.in1, compose(f, domain.pr1)) +
           compose(codomain.in2, compose(g, domain.pr2));
}

std::optional<GroupElem> preimage(const GroupHom &psi, const GroupElem &y)
{
    require(y.size() == psi.codomain().dim(), ErrorKind::InvalidArgument,
            "element is not in the codomain of the hom");
    const auto x = solve_integer(
        IntMatrix::hconcat(psi.matrix(), psi.codomain().relation_matrix()), y.coords());
    if (!x)
        return std::nullopt;
    return psi.domain().element(IntVec(x->begin(), x->begin() + psi.domain().dim()));
}

bool contains(const Subgroup &S, const GroupElem &x)
{
    return preimage(S.inclusion, x).has_value();
}

bool is_subgroup_of(const Subgroup &A, const Subgroup &B)
{
    require(A.ambient() == B.ambient(), ErrorKind::InvalidArgument,
            "subgroups of different groups");
    for (const auto &g : A.generators())
        if (!contains(B, g))
            return false;
    return true;
}

bool same_subgroup(const Subgroup &A, const Subgroup &B)
{
    return is_subgroup_of(A, B) && is_subgroup_of(B, A);
}

Subgroup intersect(const Subgroup &A, const Subgroup &B)
{
    require(A.ambient() == B.ambient(), ErrorKind::InvalidArgument,
            "subgroups of different groups");
    const DirectSum D = direct_sum(A.group, B.group);
    const GroupHom h = compose(A.inclusion, D.pr1) - compose(B.inclusion, D.pr2);
    const Subgroup K = hom_kernel(h);
    std::vector<GroupElem> gens;
    for (const auto &k : K.generators())
        gens.push_back(A.inclusion(D.pr1(k)));
    return subgroup_generated_by(A.ambient(), gens);
}

bool is_injective(const GroupHom &psi) { return hom_kernel(psi).group.is_trivial(); }

bool is_surjective(const GroupHom &psi)
{
    std::vector<GroupElem> gens;
    for (std::size_t j = 0; j < psi.domain().dim(); ++j)
        gens.push_back(psi(psi.domain().generator(j)));
    return quotient_by(psi.codomain(), gens).group.is_trivial();
}

GroupHom lift_through(const GroupHom &inclusion, const GroupHom &map)
{
    require(inclusion.codomain() == map.codomain(), ErrorKind::InvalidArgument,
            "lift through a hom with a different codomain");
    const FgGroup &A = map.domain();
    IntMatrix M(inclusion.domain().dim(), A.dim());
    for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto x = preimage(inclusion, map(A.generator(j)));
        if (!x)
            fail(ErrorKind::NotASubgroup, "image is not contained in the subgroup");
        for (std::size_t i = 0; i < M.rows(); ++i)
            M(i, j) = (*x)[i];
    }
    return GroupHom(A, inclusion.domain(), std::move(M));
}

std::optional<GroupHom> find_section(const GroupHom &psi)
{
    if (!is_surjective(psi))
        fail(ErrorKind::NotSurjective, "hom is not surjective");
    const FgGroup &G = psi.domain();
    const FgGroup &H = psi.codomain();
    const IntMatrix RH = H.relation_matrix();
    IntMatrix X(G.dim(), H.dim());
    for (std::size_t j = 0; j < H.dim(); ++j) {
        const Int o = H.modulus(j);
        // Basis of the lattice of coordinate vectors x with o * x = 0 in G.
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < G.dim(); ++i) {
            const Int t = G.modulus(i);
            IntVec b(G.dim(), Int(0));
            if (o == 0)
                b[i] = 1;
            else if (t == 0)
                continue;
            else
                b[i] = t / gcd(t, o);
            basis.push_back(std::move(b));
        }
        const IntMatrix B = IntMatrix::from_columns(G.dim(), basis);
        const auto y = solve_integer(IntMatrix::hconcat(psi.matrix() * B, RH),
                                     H.generator(j).coords());
        if (!y)
            return std::nullopt;
        const IntVec x = B * IntVec(y->begin(), y->begin() + basis.size());
        for (std::size_t i = 0; i < G.dim(); ++i)
            X(i, j) = x[i];
    }
    return GroupHom(H, G, std::move(X));
}

bool is_in_torsionfree_summand(const FgGroup &G, const std::vector<GroupElem> &F)
{
    if (G.is_torsionfree())
        return true;
    const Quotient Q = quotient_by(G, F);
    const FgGroup T = FgGroup::invariant_factors(0, G.torsion());
    const std::size_t k = T.dim();
    std::vector<GroupElem> c;
    for (std::size_t i = 0; i < k; ++i)
        c.push_back(Q.projection(G.generator(G.rank() + i)));

    // Only generators of G/F that occur in some chi(t_i) constrain a retraction.
    std::vector<std::size_t> active;
    for (std::size_t l = 0; l < Q.group.dim(); ++l)
        for (std::size_t i = 0; i < k; ++i)
            if (c[i][l] != 0) {
                active.push_back(l);
                break;
            }
    const std::vector<GroupElem> all = T.enumerate();
    std::vector<std::vector<GroupElem>> choices;
    double work = 1;
    for (std::size_t l : active) {
        const Int o = Q.group.modulus(l);
        std::vector<GroupElem> opts;
        for (const auto &x : all)
            if (o == 0 || T.scale(o, x).is_zero())
                opts.push_back(x);
        work *= static_cast<double>(opts.size());
        choices.push_back(std::move(opts));
    }
    require(work <= 2e7, ErrorKind::InvalidArgument, "torsion summand search is too large");

    std::vector<std::size_t> pick(active.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            IntVec v(k, Int(0));
            for (std::size_t a = 0; a < active.size(); ++a) {
                const Int &coef = c[i][active[a]];
                if (coef == 0)
                    continue;
                const GroupElem &img = choices[a][pick[a]];
                for (std::size_t m = 0; m < k; ++m)
                    v[m] += coef * img[m];
            }
            ok = T.element(std::move(v)) == T.generator(i);
        }
        if (ok)
            return true;
        std::size_t a = active.size();
        while (a > 0) {
            --a;
            if (++pick[a] < choices[a].size())
                break;
            pick[a] = 0;
            if (a == 0)
                return false;
        }
        if (active.empty())
            return false;
    }
}

std::strong_ordering total_compare(const FgGroup &F, const GroupElem &a, const GroupElem &b)
{
    require(F.is_torsionfree(), ErrorKind::NotTorsionfree,
            "lexicographic order needs a torsionfree group");
    require(a.size() == F.dim() && b.size() == F.dim(), ErrorKind::InvalidArgument,
            "elements are not in the ordered group");
    for (std::size_t i = 0; i < F.dim(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::optional<std::strong_ordering> extended_compare(const Subgroup &F, const GroupElem &g,
                                                     const GroupElem &h)
{
    require(F.group.is_torsionfree(), ErrorKind::NotTorsionfree,
            "ordered subgroup must be torsionfree");
    const FgGroup &G = F.ambient();
    const auto d = preimage(F.inclusion, G.sub(g, h));
    if (!d)
        return std::nullopt;
    return total_compare(F.group, *d, F.group.zero());
}

} // namespace gradal

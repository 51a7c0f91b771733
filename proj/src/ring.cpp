#include "gradal/ring.hpp"

#include "gradal/error.hpp"

namespace gradal {

std::string to_string(Base b) { return b == Base::Z ? "Z" : "Q"; }

NormalForm::NormalForm(Base base, GroupHom delta, std::optional<GroupHom> localized)
    : base_(base), delta_(std::move(delta)), localized_(std::move(localized))
{
    if (localized_)
        require(localized_->domain() == delta_.domain(), ErrorKind::InvalidArgument,
                "localized grading must share the element group");
    entire_ = hom_kernel(delta_).group.is_torsionfree();
}

NormalForm NormalForm::base_ring(Base base)
{
    return NormalForm(base, GroupHom::zero(FgGroup(), FgGroup()));
}

std::string NormalForm::to_string() const
{
    std::string s = "base=" + gradal::to_string(base_) + " E=" + E().to_string() +
                    " G=" + G().to_string() + " delta=" + gradal::to_string(delta_.matrix());
    if (localized_)
        s += " fraction";
    return s;
}

bool operator==(const NormalForm &a, const NormalForm &b)
{
    if (a.base_ != b.base_ || !(a.delta_ == b.delta_) ||
        a.localized_.has_value() != b.localized_.has_value())
        return false;
    if (!a.localized_)
        return true;
    return same_subgroup(hom_kernel(*a.localized_), hom_kernel(*b.localized_));
}

NormalForm coarsen(const NormalForm &nf, const GroupHom &psi)
{
    require(psi.domain() == nf.G(), ErrorKind::TypeError,
            "coarsening map has domain " + psi.domain().to_string() + ", ring is graded by " +
                nf.G().to_string());
    require(is_surjective(psi), ErrorKind::NotSurjective, "coarsening map is not surjective");
    if (nf.is_fraction())
        require(hom_kernel(psi).group.is_torsionfree(), ErrorKind::TorsionKernelOnFractionField,
                "coarsening a fraction field needs a torsionfree kernel");
    return NormalForm(nf.base(), compose(psi, nf.delta()), nf.localized());
}

NormalForm group_algebra(const NormalForm &nf, const FgGroup &F, GroupAlgebraMode mode)
{
    require(!nf.is_fraction(), ErrorKind::InvalidArgument,
            "group algebras are formed before passing to fractions");
    const DirectSum DE = direct_sum(nf.E(), F);
    if (mode == GroupAlgebraMode::Coarse)
        return NormalForm(nf.base(), compose(nf.delta(), DE.pr1));
    const DirectSum DG = direct_sum(nf.G(), F);
    return NormalForm(nf.base(), direct_sum_hom(nf.delta(), GroupHom::identity(F), DE, DG));
}

Restriction restrict_with_inclusion(const NormalForm &nf, const Subgroup &F)
{
    require(F.ambient() == nf.G(), ErrorKind::TypeError,
            "subgroup is not a subgroup of the grading group " + nf.G().to_string());
    const Quotient Q = quotient_by(nf.G(), F.generators());
    if (Q.group.is_trivial())
        return Restriction{nf, GroupHom::identity(nf.E())};
    const GroupHom chi_delta = compose(Q.projection, nf.delta());
    const Subgroup K = chi_delta.matrix().is_zero()
                           ? Subgroup{nf.E(), GroupHom::identity(nf.E())}
                           : hom_kernel(chi_delta);
    const GroupHom delta = lift_through(F.inclusion, compose(nf.delta(), K.inclusion));
    std::optional<GroupHom> loc;
    if (nf.localized())
        loc = compose(*nf.localized(), K.inclusion);
    return Restriction{NormalForm(nf.base(), delta, loc), K.inclusion};
}

NormalForm restrict(const NormalForm &nf, const Subgroup &F)
{
    return restrict_with_inclusion(nf, F).ring;
}

NormalForm extend(const NormalForm &nf, const GroupHom &inclusion)
{
    require(inclusion.domain() == nf.G(), ErrorKind::TypeError,
            "extension map has domain " + inclusion.domain().to_string() +
                ", ring is graded by " + nf.G().to_string());
    require(is_injective(inclusion), ErrorKind::NotASubgroup, "extension map is not injective");
    return NormalForm(nf.base(), compose(inclusion, nf.delta()), nf.localized());
}

NormalForm fraction_field(const NormalForm &nf)
{
    require(nf.entire(), ErrorKind::NotEntire,
            "fraction field of a ring that is not entire");
    return NormalForm(nf.base(), nf.delta(), nf.delta());
}

Classification classify(const NormalForm &nf)
{
    Classification c;
    const Subgroup K = hom_kernel(nf.delta());
    c.entire = nf.entire();
    if (nf.is_fraction())
        c.simple = is_subgroup_of(K, hom_kernel(*nf.localized()));
    else
        c.simple = nf.base() == Base::Q && K.group.is_trivial();
    c.noetherian = true;
    c.support = hom_image(nf.delta());
    c.full_support = is_surjective(nf.delta());
    return c;
}

namespace {

struct Normalizer {
    NormalForm operator()(const expr::BaseRing &n) const { return NormalForm::base_ring(n.base); }
    NormalForm operator()(const expr::FineGroupAlgebra &n) const
    {
        return group_algebra(normalize(*n.inner), n.F, GroupAlgebraMode::Fine);
    }
    NormalForm operator()(const expr::CoarseGroupAlgebra &n) const
    {
        return group_algebra(normalize(*n.inner), n.F, GroupAlgebraMode::Coarse);
    }
    NormalForm operator()(const expr::Coarsen &n) const
    {
        return coarsen(normalize(*n.inner), n.psi);
    }
    NormalForm operator()(const expr::Restrict &n) const
    {
        const NormalForm inner = normalize(*n.inner);
        for (const auto &g : n.generators)
            require(g.size() == inner.G().dim(), ErrorKind::TypeError,
                    "subgroup generator " + g.to_string() + " is not in " +
                        inner.G().to_string());
        return restrict(inner, subgroup_generated_by(inner.G(), n.generators));
    }
    NormalForm operator()(const expr::Extend &n) const
    {
        return extend(normalize(*n.inner), n.inclusion);
    }
    NormalForm operator()(const expr::FractionField &n) const
    {
        return fraction_field(normalize(*n.inner));
    }
};

} // namespace

NormalForm normalize(const RingExpr &e) { return std::visit(Normalizer{}, e.node); }

} // namespace gradal

#pragma once

#include "gradal/abelian.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace gradal {

enum class Base { Z, Q };

std::string to_string(Base b);

/// Canonical realization of a graded ring: base[E] with e_f in degree
/// delta(f). For fraction fields, `localized` is the grading whose nonzero
/// homogeneous elements have been inverted; it stays fixed under later
/// coarsenings, which only change `delta`.
class NormalForm {
  public:
    NormalForm() = default;
    NormalForm(Base base, GroupHom delta, std::optional<GroupHom> localized = std::nullopt);

    static NormalForm base_ring(Base base);

    Base base() const noexcept { return base_; }
    const GroupHom &delta() const noexcept { return delta_; }
    const FgGroup &E() const noexcept { return delta_.domain(); }
    const FgGroup &G() const noexcept { return delta_.codomain(); }
    bool is_fraction() const noexcept { return localized_.has_value(); }
    const std::optional<GroupHom> &localized() const noexcept { return localized_; }
    /// Grading whose homogeneous nonzero elements may serve as denominators.
    const GroupHom &denominator_grading() const { return localized_ ? *localized_ : delta_; }

    GroupElem degree(const GroupElem &f) const { return delta_(f); }
    /// ker(delta) is torsionfree.
    bool entire() const noexcept { return entire_; }

    std::string to_string() const;

    /// Fraction fields compare by the set of inverted elements, that is by the
    /// kernel of the localized grading.
    friend bool operator==(const NormalForm &a, const NormalForm &b);

  private:
    Base base_ = Base::Z;
    GroupHom delta_;
    std::optional<GroupHom> localized_;
    bool entire_ = true;
};

enum class GroupAlgebraMode { Fine, Coarse };

NormalForm coarsen(const NormalForm &nf, const GroupHom &psi);
NormalForm group_algebra(const NormalForm &nf, const FgGroup &F, GroupAlgebraMode mode);
/// Restriction to the homogeneous components with degree in F.
NormalForm restrict(const NormalForm &nf, const Subgroup &F);

struct Restriction {
    NormalForm ring;
    /// Element group of the restriction inside the original one.
    GroupHom inclusion;
};

Restriction restrict_with_inclusion(const NormalForm &nf, const Subgroup &F);
/// Same ring regraded along an injective G -> G'.
NormalForm extend(const NormalForm &nf, const GroupHom &inclusion);
NormalForm fraction_field(const NormalForm &nf);

struct Classification {
    bool entire = false;
    bool simple = false;
    bool noetherian = true;
    Subgroup support;
    bool full_support = false;
};

Classification classify(const NormalForm &nf);

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

namespace expr {
struct BaseRing {
    Base base;
};
struct FineGroupAlgebra {
    RingExprPtr inner;
    FgGroup F;
};
struct CoarseGroupAlgebra {
    RingExprPtr inner;
    FgGroup F;
};
struct Coarsen {
    RingExprPtr inner;
    GroupHom psi;
};
struct Restrict {
    RingExprPtr inner;
    std::vector<GroupElem> generators;
};
struct Extend {
    RingExprPtr inner;
    GroupHom inclusion;
};
struct FractionField {
    RingExprPtr inner;
};
} // namespace expr

struct RingExpr {
    std::variant<expr::BaseRing, expr::FineGroupAlgebra, expr::CoarseGroupAlgebra,
                 expr::Coarsen, expr::Restrict, expr::Extend, expr::FractionField>
        node;
};

template <typename Node> RingExprPtr make_expr(Node n)
{
    return std::make_shared<const RingExpr>(RingExpr{std::move(n)});
}

NormalForm normalize(const RingExpr &e);

} // namespace gradal

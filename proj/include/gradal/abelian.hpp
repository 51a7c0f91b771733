#pragma once

#include "gradal/lattice.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gradal {

/// Coordinates of an element of a finitely generated abelian group in the
/// group's normal-form basis. Free coordinates come first; torsion
/// coordinates are kept reduced into [0, d_j) by the owning FgGroup.
class GroupElem {
  public:
    GroupElem() = default;
    explicit GroupElem(IntVec coords) : coords_(std::move(coords)) {}

    const IntVec &coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Int &operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    friend bool operator==(const GroupElem &, const GroupElem &) = default;
    friend bool operator<(const GroupElem &a, const GroupElem &b)
    {
        return a.coords_ < b.coords_;
    }

    std::string to_string() const { return gradal::to_string(coords_); }

  private:
    IntVec coords_;
};

/// Z^r + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k and every d_i >= 2.
class FgGroup {
  public:
    FgGroup() = default;

    static FgGroup free(std::size_t rank);
    /// Validates the divisibility chain; throws InvalidArgument otherwise.
    static FgGroup invariant_factors(std::size_t rank, std::vector<Int> torsion);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<Int> &torsion() const noexcept { return torsion_; }
    std::size_t dim() const noexcept { return rank_ + torsion_.size(); }

    /// 0 for a free coordinate, d_j for the j-th torsion coordinate.
    Int modulus(std::size_t coord) const;

    bool is_trivial() const noexcept { return dim() == 0; }
    bool is_torsionfree() const noexcept { return torsion_.empty(); }
    bool is_finite() const noexcept { return rank_ == 0; }
    /// Order of a finite group.
    Int order() const;

    GroupElem zero() const { return GroupElem(IntVec(dim(), Int(0))); }
    GroupElem generator(std::size_t i) const;
    /// Reduces torsion coordinates; throws InvalidArgument on length mismatch.
    GroupElem element(IntVec coords) const;
    bool is_reduced(const GroupElem &x) const;

    GroupElem add(const GroupElem &a, const GroupElem &b) const;
    GroupElem sub(const GroupElem &a, const GroupElem &b) const;
    GroupElem neg(const GroupElem &a) const;
    GroupElem scale(const Int &k, const GroupElem &a) const;
    /// Order of an element (0 when it has infinite order).
    Int element_order(const GroupElem &a) const;

    /// All elements of a finite group, in lexicographic coordinate order.
    std::vector<GroupElem> enumerate() const;

    /// dim x k matrix whose columns are d_j e_{r+j}.
    IntMatrix relation_matrix() const;

    std::string to_string() const;

    friend bool operator==(const FgGroup &, const FgGroup &) = default;

  private:
    std::size_t rank_ = 0;
    std::vector<Int> torsion_;
};

/// Normal form of Z^m / (column lattice of `relations`), together with the
/// coordinate change in both directions.
struct Presentation {
    FgGroup group;
    IntMatrix to_normal;   // dim(group) x m
    IntMatrix from_normal; // m x dim(group)
};

Presentation present(std::size_t generators, const IntMatrix &relations);

/// Normalizes Z/o_1 + ... + Z/o_m (o_i = 0 meaning Z).
Presentation present_cyclic(const std::vector<Int> &orders);

/// Homomorphism given by its matrix on the domain's normal-form generators
/// (column j is the image of generator j).
class GroupHom {
  public:
    GroupHom() = default;
    /// Reduces the matrix and checks well-definedness on torsion generators.
    GroupHom(FgGroup domain, FgGroup codomain, IntMatrix matrix);

    static GroupHom identity(const FgGroup &G);
    static GroupHom zero(const FgGroup &domain, const FgGroup &codomain);

    const FgGroup &domain() const noexcept { return domain_; }
    const FgGroup &codomain() const noexcept { return codomain_; }
    const IntMatrix &matrix() const noexcept { return matrix_; }

    GroupElem operator()(const GroupElem &x) const;

    friend bool operator==(const GroupHom &, const GroupHom &) = default;

    std::string to_string() const;

  private:
    FgGroup domain_, codomain_;
    IntMatrix matrix_;
};

/// outer o inner
GroupHom compose(const GroupHom &outer, const GroupHom &inner);
GroupHom operator+(const GroupHom &f, const GroupHom &g);
GroupHom operator-(const GroupHom &f);
GroupHom operator-(const GroupHom &f, const GroupHom &g);

/// A subgroup in its own normal form together with its injective inclusion.
struct Subgroup {
    FgGroup group;
    GroupHom inclusion;

    const FgGroup &ambient() const { return inclusion.codomain(); }
    /// Images in the ambient group of the subgroup's normal-form generators.
    std::vector<GroupElem> generators() const;
};

struct Quotient {
    FgGroup group;
    GroupHom projection;
};

struct TorsionInfo {
    std::size_t rank = 0;
    std::vector<Int> torsion;
    bool is_torsionfree = true;
};

struct DirectSum {
    FgGroup group;
    GroupHom in1, in2, pr1, pr2;
};

Subgroup subgroup_generated_by(const FgGroup &G, const std::vector<GroupElem> &gens);
Subgroup hom_kernel(const GroupHom &psi);
Subgroup hom_image(const GroupHom &psi);
Quotient quotient_by(const FgGroup &G, const std::vector<GroupElem> &gens);
TorsionInfo torsion_decomposition(const FgGroup &G);
Subgroup torsion_subgroup(const FgGroup &G);

DirectSum direct_sum(const FgGroup &A, const FgGroup &B);
/// f + g : A + B -> C + D for the given normalized sums.
GroupHom direct_sum_hom(const GroupHom &f, const GroupHom &g, const DirectSum &domain,
                        const DirectSum &codomain);

/// Some x with psi(x) = y, if one exists.
std::optional<GroupElem> preimage(const GroupHom &psi, const GroupElem &y);
bool contains(const Subgroup &S, const GroupElem &x);
bool is_subgroup_of(const Subgroup &A, const Subgroup &B);
bool same_subgroup(const Subgroup &A, const Subgroup &B);
Subgroup intersect(const Subgroup &A, const Subgroup &B);

bool is_injective(const GroupHom &psi);
bool is_surjective(const GroupHom &psi);

/// The unique h with inclusion o h = map. Throws NotASubgroup when the image
/// of `map` is not contained in the image of `inclusion`.
GroupHom lift_through(const GroupHom &inclusion, const GroupHom &map);

/// A homomorphism pi with psi o pi = id, or nullopt when psi does not split.
/// Throws NotSurjective.
std::optional<GroupHom> find_section(const GroupHom &psi);

/// Whether the subgroup generated by `F` lies in a torsionfree direct summand
/// of G: decided by searching for a retraction of T -> G -> G/F.
bool is_in_torsionfree_summand(const FgGroup &G, const std::vector<GroupElem> &F);

/// Lexicographic order on a torsionfree group. Throws NotTorsionfree.
std::strong_ordering total_compare(const FgGroup &F, const GroupElem &a,
                                   const GroupElem &b);

/// Canonical extension to the ambient group of the lexicographic order on a
/// torsionfree subgroup F: g and h are comparable iff g - h lies in F.
std::optional<std::strong_ordering> extended_compare(const Subgroup &F, const GroupElem &g,
                                                     const GroupElem &h);

} // namespace gradal

#pragma once

#include "gradal/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace gradal {

using RingPtr = std::shared_ptr<const NormalForm>;

inline RingPtr make_ring(NormalForm nf) { return std::make_shared<const NormalForm>(std::move(nf)); }

/// Finite sum of c_f e_f with f in the element group E of the parent.
class Element {
  public:
    using Terms = std::map<GroupElem, Rat>;

    explicit Element(RingPtr parent);
    /// Validates keys and coefficients and prunes zeros.
    Element(RingPtr parent, Terms terms);

    static Element monomial(RingPtr parent, const GroupElem &f, const Rat &c = Rat(1));
    static Element constant(RingPtr parent, const Rat &c);

    const RingPtr &parent() const noexcept { return parent_; }
    const NormalForm &ring() const noexcept { return *parent_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rat coefficient(const GroupElem &f) const;

    /// Multiplication by e_f.
    Element shifted(const GroupElem &f) const;
    Element scaled(const Rat &c) const;
    /// The same terms viewed in another ring with the same element group.
    Element in(RingPtr parent) const;

    friend Element operator+(const Element &a, const Element &b);
    friend Element operator-(const Element &a, const Element &b);
    friend Element operator-(const Element &a);
    friend Element operator*(const Element &a, const Element &b);
    friend bool operator==(const Element &a, const Element &b);

    /// Terms in descending key order, e.g. "e(1)-2*e(0)"; zero prints as "0".
    std::string to_string() const;

  private:
    RingPtr parent_;
    Terms terms_;
};

bool same_ring(const NormalForm &a, const NormalForm &b);
void require_same_parent(const Element &a, const Element &b);
Element power(const Element &x, unsigned n);

/// Parts of x keyed by degree under `grading` (delta by default).
std::map<GroupElem, Element> homogeneous_components(const Element &x);
std::map<GroupElem, Element> homogeneous_components(const Element &x, const GroupHom &grading);

/// Degree of a homogeneous x, nullopt if x is not homogeneous.
/// Throws ZeroElement.
std::optional<GroupElem> degree_of(const Element &x);
std::optional<GroupElem> degree_of(const Element &x, const GroupHom &grading);
bool is_homogeneous(const Element &x, const GroupHom &grading);

enum class SolveRoute { Echelon, Smith };

/// Coefficients c in the base ring with sum c_i col_i = target. The echelon
/// route uses Hermite form over Z and Gauss-Jordan over Q; the Smith route
/// uses Smith form for both.
std::optional<std::vector<Rat>> solve_in_base(Base base, const std::vector<Element> &columns,
                                              const Element &target,
                                              SolveRoute route = SolveRoute::Echelon);

/// num / den with den homogeneous for the parent's denominator grading.
class Fraction {
  public:
    /// Requires an entire parent and a nonzero homogeneous denominator.
    Fraction(Element num, Element den);
    explicit Fraction(const Element &x);

    const Element &num() const noexcept { return num_; }
    const Element &den() const noexcept { return den_; }
    const RingPtr &parent() const noexcept { return num_.parent(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Degree num - den when num is homogeneous.
    std::optional<GroupElem> degree() const;

    friend Fraction operator+(const Fraction &a, const Fraction &b);
    friend Fraction operator-(const Fraction &a, const Fraction &b);
    friend Fraction operator-(const Fraction &a);
    friend Fraction operator*(const Fraction &a, const Fraction &b);
    /// Cross-multiplication.
    friend bool operator==(const Fraction &a, const Fraction &b);

    /// "num" when the denominator is 1, "(num)/(den)" otherwise.
    std::string to_string() const;

  private:
    void cancel();

    Element num_, den_;
};

enum class UnitVerdict { Unit, NotUnit };

struct UnitResult {
    UnitVerdict verdict = UnitVerdict::NotUnit;
    /// Inverse in the ring itself; for fraction fields only `fraction_inverse`.
    std::optional<Element> inverse;
    std::optional<Fraction> fraction_inverse;
};

/// Decides whether a homogeneous nonzero x is invertible. The search is
/// exact: x is moved into base[N] for N = ker(delta) = Z^r + T, where it is
/// a unit iff its Z^r-coefficients in base[T] are pairwise orthogonal and
/// sum to a unit. Throws NotHomogeneous, ZeroElement.
UnitResult homogeneous_unit_test(const Element &x);

enum class NzdVerdict { NonZeroDivisor, ZeroDivisor };

struct NzdResult {
    NzdVerdict verdict = NzdVerdict::NonZeroDivisor;
    std::optional<Element> witness;
};

/// Decides whether x is a zero divisor in base[E], through a common
/// annihilator in base[T] of its coefficients, T the torsion of the group
/// spanned by support differences. Throws ZeroElement.
NzdResult nzd_test(const Element &x);

struct P70Verdict {
    bool x_fine_homogeneous = false;
    bool y_fine_homogeneous = false;
    bool product_nonzero = false;
    bool pass() const { return x_fine_homogeneous && y_fine_homogeneous && product_nonzero; }
};

/// For entire nf, psi with torsionfree kernel, x and y nonzero and
/// psi-homogeneous with xy fine-homogeneous (zero allowed), reports whether
/// x and y are fine-homogeneous with nonzero product. Throws
/// PreconditionViolated otherwise.
P70Verdict lemma_p70_check(const NormalForm &nf, const GroupHom &psi, const Element &x,
                                const Element &y);

} // namespace gradal

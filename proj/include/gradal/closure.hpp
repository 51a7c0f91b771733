#pragma once

#include "gradal/element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradal {

/// An element num/den of S tested against a subring. The denominator must be
/// a nonzero homogeneous element of S; plain elements use den = 1.
struct Candidate {
    Element num;
    Element den;

    explicit Candidate(const Element &x);
    explicit Candidate(const Fraction &x);
    Candidate(Element num, Element den);

    const RingPtr &parent() const { return num.parent(); }
    /// Degree under the parent's grading, nullopt if not homogeneous.
    std::optional<GroupElem> degree() const;
    std::string to_string() const;
};

/// x^n + a_1 x^(n-1) + ... + a_n = 0 with a_i in R.
struct IntegralityWitness {
    unsigned degree = 0;
    std::vector<Element> coefficients;

    /// "monic n; a1 = <elem>; ...; an = <elem>"
    std::string to_string() const;
};

struct SearchBounds {
    unsigned max_degree = 3;
    /// Extra slack, per free coordinate, around the support window of x.
    int box = 1;
};

struct IntegralSearch {
    std::optional<IntegralityWitness> witness;
    SearchBounds bounds;
    bool found() const { return witness.has_value(); }
};

/// x^(k+1) = b_0 + b_1 x + ... + b_k x^k with b_j in R, so R[x] lies in the
/// R-module generated by 1, x, ..., x^k.
struct AlmostIntegralWitness {
    unsigned k = 0;
    std::vector<Candidate> generators;
    std::vector<Element> coefficients;
};

struct AlmostIntegralSearch {
    std::optional<AlmostIntegralWitness> witness;
    SearchBounds bounds;
    bool found() const { return witness.has_value(); }
};

/// Throws IncompatibleRings unless R and S share E and delta, R is not a
/// fraction field and base(R) is contained in base(S).
void require_compatible(const NormalForm &R, const NormalForm &S);

bool verify_integral_witness(const RingPtr &R, const Candidate &x, const IntegralityWitness &w);

/// Lowest-degree witness with coefficients a_i supported on monomials of
/// degree i deg(x) whose free coordinates lie in i * window(x) widened by
/// `box`. Throws NotHomogeneous.
IntegralSearch find_integral_equation(const RingPtr &R, const Candidate &x,
                                      const SearchBounds &bounds);

/// Searches k = 0 .. max_degree - 1 for x^(k+1) in the R-span of 1..x^k with
/// the same coefficient windows as find_integral_equation.
AlmostIntegralSearch find_almost_integral_witness(const RingPtr &R, const Candidate &x,
                                                  const SearchBounds &bounds);

/// Exact re-check of an almost-integrality witness.
bool verify_almost_integral_witness(const RingPtr &R, const Candidate &x,
                                    const AlmostIntegralWitness &w);

enum class ComponentsOutcome { Both, OnlyCoarse, OnlyFine, Neither };

std::string to_string(ComponentsOutcome o);

struct ComponentsReport {
    ComponentsOutcome outcome = ComponentsOutcome::Neither;
    IntegralSearch coarse;
    std::vector<std::pair<GroupElem, IntegralSearch>> components;
};

/// x (in S, homogeneous for psi o delta) over the psi-coarsening of R versus
/// each of its delta-components over R.
ComponentsReport components_integral_check(const RingPtr &R, const GroupHom &psi,
                                           const Candidate &x, const SearchBounds &bounds);

struct TorsionIdempotent {
    RingPtr R; // Z[Z/n] coarsely graded over 0
    RingPtr S; // Q[Z/n] coarsely graded over 0
    Element f, c, d;
    IntegralityWitness witness;
};

/// f = (1/n) sum e_g^i, c = 1 + (n-1) e_g^(n-1), d = n f and the monic
/// equation f^2 + (c-1) f - d = 0, all checked on construction.
TorsionIdempotent torsion_idempotent(unsigned n);

struct DivisionResult {
    Element u, v;
};

/// g = u f + v in R[Z] coarsely graded, R simple, with deg_Z v < deg_Z f and
/// u free of negative Z-exponents. The Z coordinate is the last free
/// coordinate of E. Throws NotSimpleBase, ZeroDivisor, NotHomogeneous.
DivisionResult graded_euclidean_division(const Element &f, const Element &g);

/// Degree in the Z coordinate used by graded_euclidean_division.
Int z_degree(const Element &x);

/// Ring morphism sending c e_f to c e_{phi(f)}.
struct RingMap {
    RingPtr domain, codomain;
    GroupHom on_elements;

    Element operator()(const Element &x) const;
};

struct Lem50Iso {
    RingPtr source; // R coarsened along the projection onto H
    RingPtr target; // R_(H)[D n F] coarsely graded over H
    RingMap p;      // target -> source
    RingMap q;      // source -> target
};

/// F must be a free direct summand of G with complement H (computed from a
/// section when not given), R simple and psi(D) inside D for D = delta(E).
/// Throws HypothesisViolated.
Lem50Iso lem50_iso(const RingPtr &R, const std::vector<GroupElem> &F,
                   const std::optional<std::vector<GroupElem>> &H = std::nullopt);

/// R coarsened along psi into its coarse group algebra over ker(psi), with
/// a degree-g term x sent to x e_{g - pi(psi(g))}. Throws NotASection.
RingMap j_pi_embedding(const RingPtr &R, const GroupHom &psi, const GroupHom &pi);

} // namespace gradal

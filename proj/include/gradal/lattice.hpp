#pragma once

#include "gradal/matrix.hpp"

#include <optional>

namespace gradal {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// d_i > 0 on the nonzero part. The inverses of U and V are tracked as well
/// since presentations need the new generators in terms of the old ones.
struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

/// Pivoting picks the entry of smallest nonzero absolute value in the
/// remaining block, ties broken row-major, so the output is deterministic.
SmithForm smith_normal_form(const IntMatrix &A);

/// Row-style Hermite form: U * A = H with U unimodular, H in row echelon
/// form, positive pivots and entries above each pivot reduced into
/// [0, pivot). `pivots[k]` is the pivot column of row k.
struct HermiteForm {
    IntMatrix U, H;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix &A);

/// An integer solution of A x = b (lattice membership of b in the column
/// lattice of A). Columns are inserted one at a time into a reduced echelon
/// basis of the lattice, so only basis rows carry their coefficients.
std::optional<IntVec> solve_integer(const IntMatrix &A, const IntVec &b);

/// Solves A x = b through the Smith form of A, over Z when `integral`
/// and over Q otherwise. An alternative route to solve_integer and
/// solve_rational, used where two independent solvers are wanted.
std::optional<RatVec> solve_via_smith(const IntMatrix &A, const IntVec &b, bool integral);

/// Basis (as columns) of the integer kernel {x : A x = 0}, via Smith form.
IntMatrix integer_kernel(const IntMatrix &A);

/// Rational solve by Gauss-Jordan elimination; free variables set to zero.
std::optional<RatVec> solve_rational(const RatMatrix &A, const RatVec &b);

/// Basis (as columns) of the rational kernel of A.
RatMatrix rational_kernel(const RatMatrix &A);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int determinant(const IntMatrix &A);

} // namespace gradal

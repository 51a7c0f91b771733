#include "gradal/lattice.hpp"

#include <algorithm>

namespace gradal {

std::string to_string(const IntMatrix &m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i)
            s += ",";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                s += ",";
            s += m(i, j).get_str();
        }
        s += "]";
    }
    return s + "]";
}

std::vector<Int> SmithForm::diagonal() const
{
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

// Elementary operations applied to D together with the transforms and their
// inverses, keeping U*A*V = D and U*U_inv = V*V_inv = 1 at every step.
struct SmithState {
    SmithForm &s;

    void swap_rows(std::size_t a, std::size_t b)
    {
        s.D.swap_rows(a, b);
        s.U.swap_rows(a, b);
        s.U_inv.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Int &f)
    {
        s.D.add_row(dst, src, f);
        s.U.add_row(dst, src, f);
        s.U_inv.add_col(src, dst, -f);
    }
    void negate_row(std::size_t i)
    {
        s.D.negate_row(i);
        s.U.negate_row(i);
        s.U_inv.negate_col(i);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        s.D.swap_cols(a, b);
        s.V.swap_cols(a, b);
        s.V_inv.swap_rows(a, b);
    }
    void add_col(std::size_t dst, std::size_t src, const Int &f)
    {
        s.D.add_col(dst, src, f);
        s.V.add_col(dst, src, f);
        s.V_inv.add_row(src, dst, -f);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix &A)
{
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm s{IntMatrix::identity(m), A, IntMatrix::identity(n),
                IntMatrix::identity(m), IntMatrix::identity(n), 0};
    SmithState ops{s};
    IntMatrix &D = s.D;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        bool have_pivot = true;
        while (true) {
            std::size_t pi = m, pj = n;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0)
                        continue;
                    Int a = abs(D(i, j));
                    if (pi == m || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                have_pivot = false;
                break;
            }
            ops.swap_rows(t, pi);
            ops.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Int q = D(i, t) / D(t, t);
                ops.add_row(i, t, -q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Int q = D(t, j) / D(t, t);
                ops.add_col(j, t, -q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        ops.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (!have_pivot)
            break;
        if (D(t, t) < 0)
            ops.negate_row(t);
    }
    s.rank = t;
    return s;
}

HermiteForm hermite_normal_form(const IntMatrix &A)
{
    const std::size_t m = A.rows(), n = A.cols();
    HermiteForm h{IntMatrix::identity(m), A, {}};
    IntMatrix &H = h.H;
    IntMatrix &U = h.U;

    // Apply [[s, t], [-b/g, a/g]] to rows (r, i) of H and U.
    auto combine = [&](std::size_t r, std::size_t i, const Int &s, const Int &t,
                       const Int &u, const Int &v) {
        for (IntMatrix *M : {&H, &U})
            for (std::size_t j = 0; j < M->cols(); ++j) {
                Int x = (*M)(r, j), y = (*M)(i, j);
                if (x == 0 && y == 0)
                    continue;
                (*M)(r, j) = s * x + t * y;
                (*M)(i, j) = u * x + v * y;
            }
    };

    std::size_t row = 0;
    for (std::size_t j = 0; j < n && row < m; ++j) {
        for (std::size_t i = row + 1; i < m; ++i) {
            if (H(i, j) == 0)
                continue;
            Int a = H(row, j), b = H(i, j);
            Bezout e = xgcd(a, b);
            combine(row, i, e.s, e.t, -b / e.g, a / e.g);
        }
        if (H(row, j) == 0)
            continue;
        if (H(row, j) < 0) {
            H.negate_row(row);
            U.negate_row(row);
        }
        for (std::size_t k = 0; k < row; ++k) {
            Int q = floor_div(H(k, j), H(row, j));
            if (q != 0) {
                H.add_row(k, row, -q);
                U.add_row(k, row, -q);
            }
        }
        h.pivots.push_back(j);
        ++row;
    }
    return h;
}

namespace {

// A row of an echelon basis of the column lattice, with its expression in
// the columns of A.
struct BasisRow {
    IntVec vec;
    IntVec coeff;
    std::size_t pivot;
};

std::size_t leading(const IntVec &v)
{
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0)
        ++i;
    return i;
}

void axpy(IntVec &y, const Int &a, const IntVec &x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            y[i] += a * x[i];
}

} // namespace

std::optional<IntVec> solve_integer(const IntMatrix &A, const IntVec &b)
{
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m)
        return std::nullopt;
    std::vector<BasisRow> basis; // sorted by pivot
    for (std::size_t j = 0; j < n; ++j) {
        BasisRow v{IntVec(m), IntVec(n, Int(0)), 0};
        for (std::size_t i = 0; i < m; ++i)
            v.vec[i] = A(i, j);
        v.coeff[j] = 1;
        std::size_t k = 0;
        while (true) {
            v.pivot = leading(v.vec);
            if (v.pivot == m)
                break;
            while (k < basis.size() && basis[k].pivot < v.pivot)
                ++k;
            if (k == basis.size() || basis[k].pivot > v.pivot) {
                if (v.vec[v.pivot] < 0) {
                    for (auto &x : v.vec)
                        x = -x;
                    for (auto &x : v.coeff)
                        x = -x;
                }
                basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
                break;
            }
            BasisRow &r = basis[k];
            const Int a = r.vec[r.pivot], c = v.vec[v.pivot];
            if (c % a == 0) {
                const Int q = c / a;
                axpy(v.vec, -q, r.vec);
                axpy(v.coeff, -q, r.coeff);
                continue;
            }
            const Bezout e = xgcd(a, c);
            BasisRow g{r.vec, r.coeff, r.pivot};
            for (std::size_t i = 0; i < m; ++i)
                g.vec[i] = e.s * r.vec[i] + e.t * v.vec[i];
            for (std::size_t i = 0; i < n; ++i)
                g.coeff[i] = e.s * r.coeff[i] + e.t * v.coeff[i];
            const Int ra = a / e.g, rc = c / e.g;
            for (std::size_t i = 0; i < m; ++i)
                v.vec[i] = ra * v.vec[i] - rc * r.vec[i];
            for (std::size_t i = 0; i < n; ++i)
                v.coeff[i] = ra * v.coeff[i] - rc * r.coeff[i];
            if (g.vec[g.pivot] < 0) {
                for (auto &x : g.vec)
                    x = -x;
                for (auto &x : g.coeff)
                    x = -x;
            }
            r = std::move(g);
        }
        // Keep entries above each pivot reduced.
        for (std::size_t k2 = 0; k2 < basis.size(); ++k2)
            for (std::size_t k1 = 0; k1 < k2; ++k1) {
                const Int q = floor_div(basis[k1].vec[basis[k2].pivot],
                                        basis[k2].vec[basis[k2].pivot]);
                if (q != 0) {
                    axpy(basis[k1].vec, -q, basis[k2].vec);
                    axpy(basis[k1].coeff, -q, basis[k2].coeff);
                }
            }
    }
    IntVec rest = b, x(n, Int(0));
    for (const auto &r : basis) {
        const Int &p = r.vec[r.pivot];
        if (rest[r.pivot] % p != 0)
            return std::nullopt;
        const Int q = rest[r.pivot] / p;
        axpy(rest, -q, r.vec);
        axpy(x, q, r.coeff);
    }
    if (leading(rest) != m)
        return std::nullopt;
    return x;
}

IntMatrix integer_kernel(const IntMatrix &A)
{
    SmithForm s = smith_normal_form(A);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < A.cols(); ++j)
        idx.push_back(j);
    return s.V.select_cols(idx);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &M, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t j = 0; j < ncols && row < M.rows(); ++j) {
        std::size_t p = row;
        while (p < M.rows() && M(p, j) == 0)
            ++p;
        if (p == M.rows())
            continue;
        M.swap_rows(row, p);
        Rat inv = 1 / M(row, j);
        for (std::size_t k = 0; k < M.cols(); ++k)
            if (M(row, k) != 0)
                M(row, k) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == row || M(i, j) == 0)
                continue;
            Rat f = -M(i, j);
            M.add_row(i, row, f);
        }
        pivots.push_back(j);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve_rational(const RatMatrix &A, const RatVec &b)
{
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m)
        return std::nullopt;
    RatMatrix M(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            M(i, j) = A(i, j);
        M(i, n) = b[i];
    }
    auto pivots = rref(M, n);
    for (std::size_t i = pivots.size(); i < m; ++i)
        if (M(i, n) != 0)
            return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = M(k, n);
    return x;
}

RatMatrix rational_kernel(const RatMatrix &A)
{
    RatMatrix M = A;
    const std::size_t n = A.cols();
    auto pivots = rref(M, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -M(k, f);
        basis.push_back(std::move(v));
    }
    return RatMatrix::from_columns(n, basis);
}

Int determinant(const IntMatrix &A)
{
    const std::size_t n = A.rows();
    if (n == 0)
        return 1;
    IntMatrix M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::optional<RatVec> solve_via_smith(const IntMatrix &A, const IntVec &b, bool integral)
{
    const SmithForm s = smith_normal_form(A);
    const IntVec c = s.U * b;
    RatVec y(A.cols(), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i >= s.rank) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        if (integral && c[i] % s.D(i, i) != 0)
            return std::nullopt;
        y[i] = make_rat(c[i], s.D(i, i));
    }
    RatVec x(A.cols(), Rat(0));
    for (std::size_t i = 0; i < A.cols(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (s.V(i, j) != 0 && y[j] != 0)
                x[i] += Rat(s.V(i, j)) * y[j];
    return x;
}

} // namespace gradal

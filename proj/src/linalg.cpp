#include "nullary/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nullary::linalg {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(Matrix m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::optional<RationalVector> solve_impl(const Matrix& a, const RationalVector& b, bool unique) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (unique && pivots.size() != cols) return std::nullopt;
    RationalVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

}  // namespace

std::optional<RationalVector> solve_unique(const Matrix& a, const RationalVector& b) {
    return solve_impl(a, b, true);
}

std::optional<RationalVector> solve_any(const Matrix& a, const RationalVector& b) {
    return solve_impl(a, b, false);
}

// Bareiss fraction-free elimination.
Integer determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] /= prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer maximal_minor_gcd(const IntMatrix& rows) {
    const std::size_t k = rows.size();
    if (k == 0) return 1;
    const std::size_t n = rows[0].size();
    if (k > n) return 0;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    Integer g = 0;
    while (true) {
        IntMatrix sub(k, IntegerVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = rows[i][pick[j]];
        g = gcd(g, determinant(std::move(sub)));
        if (g == 1) return g;
        // next k-combination of [0, n)
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

ColumnHermite column_hermite(const IntMatrix& w) {
    const std::size_t r = w.size();
    const std::size_t n = r ? w[0].size() : 0;
    IntMatrix a = w;
    IntMatrix u(n, IntegerVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto combine = [&](std::size_t ci, std::size_t cj, const Integer& s, const Integer& t,
                       const Integer& p, const Integer& q) {
        // col_i <- s col_i + t col_j ; col_j <- p col_i + q col_j
        for (auto* mat : {&a, &u})
            for (auto& row : *mat) {
                Integer xi = row[ci], xj = row[cj];
                row[ci] = s * xi + t * xj;
                row[cj] = p * xi + q * xj;
            }
    };

    for (std::size_t i = 0; i < r; ++i) {
        if (a[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && a[i][j] == 0) ++j;
            if (j == n) throw Error(ErrorCode::BadInput, "column_hermite: rows are dependent");
            combine(i, j, 0, 1, 1, 0);
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i][j] == 0) continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i][i].get_mpz_t(),
                       a[i][j].get_mpz_t());
            Integer p = -a[i][j] / g;
            Integer q = a[i][i] / g;
            combine(i, j, s, t, p, q);
        }
        if (a[i][i] < 0)
            for (auto* mat : {&a, &u})
                for (auto& row : *mat) row[i] = -row[i];
    }
    ColumnHermite out;
    out.h.assign(r, IntegerVector(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.h[i][j] = a[i][j];
    out.u = std::move(u);
    return out;
}

std::optional<IntegerVector> solve_integer(const IntMatrix& w, const IntegerVector& b) {
    const std::size_t r = w.size();
    const std::size_t n = r ? w[0].size() : 0;
    auto [h, u] = column_hermite(w);
    IntegerVector y(n, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        Integer rhs = b[i];
        for (std::size_t j = 0; j < i; ++j) rhs -= h[i][j] * y[j];
        if (rhs % h[i][i] != 0) return std::nullopt;
        y[i] = rhs / h[i][i];
    }
    IntegerVector x(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) x[i] += u[i][j] * y[j];
    return x;
}

std::optional<LatticePoint> parallelepiped_point(const IntMatrix& rows) {
    const std::size_t r = rows.size();
    if (r == 0) return std::nullopt;
    const std::size_t n = rows[0].size();
    auto h = column_hermite(rows).h;
    // Invert the lower-triangular h row by row: inv * h = I.
    Matrix inv(r, RationalVector(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
        // Solve x h = e_i for row vector x (back substitution, h lower triangular).
        for (std::size_t jj = r; jj-- > 0;) {
            Rational acc = (i == jj) ? Rational(1) : Rational(0);
            for (std::size_t k = jj + 1; k < r; ++k) acc -= inv[i][k] * h[k][jj];
            inv[i][jj] = acc / h[jj][jj];
        }
    }
    // the lattice points of the half-open parallelepiped form a group generated
    // by the rows of inv mod 1; take the element with the smallest coefficient sum
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < r; ++i) {
        RationalVector frac(r);
        for (std::size_t j = 0; j < r; ++j) frac[j] = inv[i][j] - floor(inv[i][j]);
        if (std::any_of(frac.begin(), frac.end(), [](const Rational& x) { return x != 0; })) gens.push_back(std::move(frac));
    }
    if (gens.empty()) return std::nullopt;
    constexpr std::size_t limit = 4096;
    std::set<RationalVector> seen{RationalVector(r, Rational(0))};
    std::vector<RationalVector> queue{RationalVector(r, Rational(0))};
    std::optional<std::pair<Rational, RationalVector>> best;
    for (std::size_t head = 0; head < queue.size() && seen.size() < limit; ++head) {
        for (const auto& g : gens) {
            RationalVector e(r);
            for (std::size_t j = 0; j < r; ++j) {
                e[j] = queue[head][j] + g[j];
                if (e[j] >= 1) e[j] -= 1;
            }
            if (!seen.insert(e).second) continue;
            Rational sum = 0;
            for (const auto& x : e) sum += x;
            if (!best || sum < best->first || (sum == best->first && e < best->second)) best.emplace(sum, e);
            queue.push_back(std::move(e));
        }
    }
    const RationalVector& frac = best->second;
    RationalVector p(n, Rational(0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t c = 0; c < n; ++c) p[c] += frac[j] * rows[j][c];
    LatticePoint out;
    out.point.resize(n);
    Integer g = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_integer(p[c])) throw Error(ErrorCode::IntegralityFailure, "parallelepiped point not integral");
        out.point[c] = p[c].get_num();
        g = gcd(g, out.point[c]);
    }
    for (auto& c : out.point) c /= g;
    out.coefficients.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
        out.coefficients[j] = frac[j] / g;
        out.coefficients[j].canonicalize();
    }
    return out;
}

}  // namespace nullary::linalg

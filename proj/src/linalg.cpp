#include "degenlocus/linalg.hpp"

#include <stdexcept>

namespace degenlocus {

GaussianRational det_exact(const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: non-square matrix");
    const size_t n = m.rows();
    QMat w = m;
    GaussianRational det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && w(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return GaussianRational(0);
        if (pivot != k) {
            w.swap_rows(pivot, k);
            det = -det;
        }
        det *= w(k, k);
        GaussianRational inv = w(k, k).inv();
        for (size_t i = k + 1; i < n; ++i) {
            if (w(i, k).is_zero()) continue;
            GaussianRational f = w(i, k) * inv;
            for (size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
        }
    }
    return det;
}

namespace {

// Laplace expansion over column subsets: minor(mask) is the determinant of the
// rows [n - popcount(mask), n) against the columns in mask.
MultiPoly det_by_subsets(const PMat& m) {
    const size_t n = m.rows();
    if (n == 0) return MultiPoly::constant(MultiPoly::make_vars({}), GaussianRational(1));
    if (n > 20) throw std::invalid_argument("det_exact: symbolic matrix too large");
    const MultiPoly::VarList vars = m(0, 0).vars();
    std::vector<MultiPoly> memo(size_t(1) << n);
    memo[0] = MultiPoly::constant(vars, GaussianRational(1));
    for (size_t mask = 1; mask < memo.size(); ++mask) {
        int cnt = __builtin_popcountll(mask);
        size_t row = n - static_cast<size_t>(cnt);
        MultiPoly acc = MultiPoly::zero(vars);
        int idx = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (size_t(1) << j))) continue;
            const MultiPoly& entry = m(row, j);
            if (!entry.is_zero()) {
                MultiPoly term = entry * memo[mask & ~(size_t(1) << j)];
                acc += (idx % 2 == 0) ? term : -term;
            }
            ++idx;
        }
        memo[mask] = std::move(acc);
    }
    return memo[(size_t(1) << n) - 1];
}

}  // namespace

MultiPoly det_exact(const PMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: non-square matrix");
    return det_by_subsets(m);
}

bool RowSpace::insert(std::vector<GaussianRational> row) {
    if (row.size() != width_) throw std::invalid_argument("RowSpace: wrong row width");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const GaussianRational& f = row[pivots_[r]];
        if (f.is_zero()) continue;
        GaussianRational factor = f;  // stored rows have pivot 1
        for (size_t j = 0; j < width_; ++j) {
            if (!rows_[r][j].is_zero()) row[j] -= factor * rows_[r][j];
        }
    }
    size_t p = 0;
    while (p < width_ && row[p].is_zero()) ++p;
    if (p == width_) return false;
    GaussianRational inv = row[p].inv();
    for (size_t j = p; j < width_; ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    // keep stored rows reduced against the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
        const GaussianRational f = rows_[r][p];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < width_; ++j)
            if (!row[j].is_zero()) rows_[r][j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

size_t rank_exact(const QMat& m) {
    RowSpace space(m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        std::vector<GaussianRational> row(m.cols());
        for (size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        space.insert(std::move(row));
    }
    return space.rank();
}

SolveResult linear_solve_exact(const QMat& a, const std::vector<GaussianRational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("linear_solve_exact: dimension mismatch");
    const size_t rows = a.rows(), cols = a.cols();
    QMat w(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) w(i, j) = a(i, j);
        w(i, cols) = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && w(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        w.swap_rows(pr, rank);
        GaussianRational inv = w(rank, col).inv();
        for (size_t j = col; j <= cols; ++j) w(rank, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || w(i, col).is_zero()) continue;
            GaussianRational f = w(i, col);
            for (size_t j = col; j <= cols; ++j) w(i, j) -= f * w(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i) {
        if (!w(i, cols).is_zero()) return SolveResult{false, {}};
    }
    SolveResult res;
    res.consistent = true;
    res.solution.assign(cols, GaussianRational(0));
    for (size_t r = 0; r < rank; ++r) res.solution[pivot_col[r]] = w(r, cols);
    return res;
}

std::vector<std::vector<GaussianRational>> nullspace_exact(const QMat& a) {
    const size_t rows = a.rows(), cols = a.cols();
    QMat w = a;
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && w(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        w.swap_rows(pr, rank);
        GaussianRational inv = w(rank, col).inv();
        for (size_t j = col; j < cols; ++j) w(rank, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || w(i, col).is_zero()) continue;
            GaussianRational f = w(i, col);
            for (size_t j = col; j < cols; ++j) w(i, j) -= f * w(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(cols, GaussianRational(0));
        v[free] = GaussianRational(1);
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -w(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMat> invert(const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("invert: non-square matrix");
    const size_t n = m.rows();
    QMat w(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
        w(i, n + i) = GaussianRational(1);
    }
    for (size_t k = 0; k < n; ++k) {
        size_t pr = k;
        while (pr < n && w(pr, k).is_zero()) ++pr;
        if (pr == n) return std::nullopt;
        w.swap_rows(pr, k);
        GaussianRational inv = w(k, k).inv();
        for (size_t j = k; j < 2 * n; ++j) w(k, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k).is_zero()) continue;
            GaussianRational f = w(i, k);
            for (size_t j = k; j < 2 * n; ++j) w(i, j) -= f * w(k, j);
        }
    }
    QMat r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = w(i, n + j);
    return r;
}

namespace {

void strip_content(std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (const mpz_class& v : row) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (mpz_class& v : row)
        if (v != 0) v /= g;
}

}  // namespace

bool IntRowSpace::insert(std::vector<mpz_class> row) {
    if (row.size() != width_) throw std::invalid_argument("IntRowSpace: wrong row width");
    // reduce in increasing pivot order: every stored row is zero before its
    // own pivot, so once a column is cleared it stays cleared
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    for (size_t r : order) {
        const size_t p = pivots_[r];
        if (row[p] == 0) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), rows_[r][p].get_mpz_t());
        mpz_class a = rows_[r][p] / g;
        mpz_class b = row[p] / g;
        // row <- a*row - b*stored: the whole row is rescaled, including the
        // columns before p where the stored row vanishes
        for (size_t j = 0; j < p; ++j)
            if (row[j] != 0) row[j] *= a;
        for (size_t j = p; j < width_; ++j) {
            if (row[j] == 0 && rows_[r][j] == 0) continue;
            row[j] = a * row[j] - b * rows_[r][j];
        }
        strip_content(row);
    }
    size_t p = 0;
    while (p < width_ && row[p] == 0) ++p;
    if (p == width_) return false;
    if (row[p] < 0)
        for (mpz_class& v : row) v = -v;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

bool IntRowSpace::insert_rational(const std::vector<Rational>& row) {
    mpz_class lcm = 1;
    for (const Rational& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<mpz_class> scaled(row.size());
    for (size_t j = 0; j < row.size(); ++j)
        scaled[j] = row[j].numerator() * (lcm / row[j].denominator());
    return insert(std::move(scaled));
}

MultiPoly char_poly(const QMat& a, const std::string& var_name) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    auto vars = MultiPoly::make_vars({var_name});
    const size_t n = a.rows();
    PMat m(n, n, MultiPoly::zero(vars));
    MultiPoly x = MultiPoly::variable(vars, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m(i, j) = MultiPoly::constant(vars, -a(i, j));
            if (i == j) m(i, j) += x;
        }
    return det_exact(m);
}

}  // namespace degenlocus

#include "degenlocus/covariants.hpp"

#include <stdexcept>

#include "degenlocus/linalg.hpp"

namespace degenlocus {

MultiPoly::VarList extend_with_aux(const MultiPoly::VarList& base, int n_aux) {
    std::vector<std::string> names = *base;
    // form variables default to x1..xn; switch to X1..Xn when the space's own
    // coordinates already use those names (Hermitian diagonals)
    bool clash = false;
    for (int i = 1; i <= n_aux && !clash; ++i)
        for (const std::string& b : names)
            if (b == "x" + std::to_string(i)) {
                clash = true;
                break;
            }
    for (int i = 1; i <= n_aux; ++i) names.push_back((clash ? "X" : "x") + std::to_string(i));
    return MultiPoly::make_vars(std::move(names));
}

QMat c1(const QMat& a) {
    if (!a.is_square()) throw std::invalid_argument("c1: non-square matrix");
    const size_t n = a.rows();
    GaussianRational shift = trace(a) * GaussianRational(Rational(1, static_cast<long>(n)));
    QMat r = a;
    for (size_t i = 0; i < n; ++i) r(i, i) -= shift;
    return r;
}

PMat c1(const PMat& a) {
    if (!a.is_square()) throw std::invalid_argument("c1: non-square matrix");
    const size_t n = a.rows();
    MultiPoly shift = trace(a).scaled(GaussianRational(Rational(1, static_cast<long>(n))));
    PMat r = a;
    for (size_t i = 0; i < n; ++i) r(i, i) -= shift;
    return r;
}

QMat c2(const QMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c2: expected a 3x3 matrix");
    QMat t = c1(a);
    return c1(t * t);
}

PMat c2(const PMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c2: expected a 3x3 matrix");
    PMat t = c1(a);
    return c1(t * t);
}

std::array<GaussianRational, 3> d_invariants(const QMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("d_invariants: expected a 3x3 matrix");
    QMat t = c1(a);
    GaussianRational d1 = trace(a);
    GaussianRational d2 = trace(t * t) * GaussianRational(Rational(1, 6));
    GaussianRational d3 = det_exact(t) * GaussianRational(Rational(1, 2));
    return {d1, d2, d3};
}

std::array<MultiPoly, 3> d_invariants(const PMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("d_invariants: expected a 3x3 matrix");
    PMat t = c1(a);
    MultiPoly d1 = trace(a);
    MultiPoly d2 = trace(t * t).scaled(GaussianRational(Rational(1, 6)));
    MultiPoly d3 = det_exact(t).scaled(GaussianRational(Rational(1, 2)));
    return {d1, d2, d3};
}

namespace {

// Columns x, Ax, ..., A^(m-1) x assembled over the matrix variables extended
// with x1..xn.
PMat krylov_columns(const PMat& a, size_t m) {
    const size_t n = a.rows();
    const MultiPoly::VarList base = a(0, 0).vars();
    const MultiPoly::VarList ext = extend_with_aux(base, static_cast<int>(n));

    PMat lifted(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) lifted(i, j) = a(i, j).with_vars(ext);

    std::vector<MultiPoly> xcol(n);
    for (size_t i = 0; i < n; ++i) xcol[i] = MultiPoly::variable(ext, base->size() + i);

    PMat cols(n, m);
    std::vector<MultiPoly> cur = xcol;
    for (size_t p = 0; p < m; ++p) {
        for (size_t i = 0; i < n; ++i) cols(i, p) = cur[i];
        if (p + 1 == m) break;
        std::vector<MultiPoly> next(n, MultiPoly::zero(ext));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) next[i] += lifted(i, j) * cur[j];
        cur = std::move(next);
    }
    return cols;
}

PMat lift_numeric(const QMat& a) {
    auto vars = MultiPoly::make_vars({});
    return lift(a, vars);
}

}  // namespace

MultiPoly c_full(const PMat& a) {
    if (!a.is_square()) throw std::invalid_argument("c_full: non-square matrix");
    return det_exact(krylov_columns(a, a.rows()));
}

MultiPoly c_full(const QMat& a) {
    return c_full(lift_numeric(a));
}

MultiPoly c3(const PMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c3: expected a 3x3 matrix");
    return c_full(a);
}

MultiPoly c3(const QMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c3: expected a 3x3 matrix");
    return c_full(a);
}

MultiPoly c4(const PMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c4: expected a 3x3 matrix");
    return c3(a.transpose());
}

MultiPoly c4(const QMat& a) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("c4: expected a 3x3 matrix");
    return c3(a.transpose());
}

namespace {

template <class T>
Mat<T> stacked_powers(const Mat<T>& a, int k) {
    const size_t n = a.rows();
    const int m = static_cast<int>(n) - k + 1;  // I, A, ..., A^(n-k)
    Mat<T> w(n * n, static_cast<size_t>(m));
    Mat<T> power = Mat<T>::identity(n);
    for (int p = 0; p < m; ++p) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) w(i * n + j, static_cast<size_t>(p)) = power(i, j);
        if (p + 1 < m) power = power * a;
    }
    return w;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    size_t i = k;
    while (i-- > 0) {
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
        if (i == 0) break;
    }
    return false;
}

template <class T>
std::vector<T> wedge_minors(const Mat<T>& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (a.rows() != a.cols()) throw std::invalid_argument("wedge_P: non-square matrix");
    if (k < 0 || k > n - 1) throw std::invalid_argument("wedge_P: k out of range");
    Mat<T> w = stacked_powers(a, k);
    const size_t m = static_cast<size_t>(n - k + 1);
    std::vector<T> out;
    std::vector<size_t> rows(m);
    for (size_t i = 0; i < m; ++i) rows[i] = i;
    do {
        Mat<T> sub(m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) sub(i, j) = w(rows[i], j);
        out.push_back(det_exact(sub));
    } while (next_combination(rows, w.rows()));
    return out;
}

}  // namespace

std::vector<MultiPoly> wedge_P(const PMat& a, int k) {
    return wedge_minors<MultiPoly>(a, k);
}

std::vector<GaussianRational> wedge_P(const QMat& a, int k) {
    return wedge_minors<GaussianRational>(a, k);
}

namespace {

template <class T>
Mat<T> fk_minor(const Mat<T>& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (a.rows() != a.cols()) throw std::invalid_argument("f_k: non-square matrix");
    if (k < 1 || k > n - 1) throw std::invalid_argument("f_k: k out of range");
    const int m = n - k;
    // columns A e1, A^2 e1, ..., A^(n-k) e1; rows k+1..n
    Mat<T> cols(n, static_cast<size_t>(m));
    std::vector<T> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = a(i, 0);
    for (int p = 0; p < m; ++p) {
        for (int i = 0; i < n; ++i) cols(i, p) = cur[i];
        if (p + 1 == m) break;
        std::vector<T> next(n);
        for (int i = 0; i < n; ++i) {
            T acc{};
            for (int j = 0; j < n; ++j) acc = acc + a(i, j) * cur[j];
            next[i] = acc;
        }
        cur = std::move(next);
    }
    Mat<T> sub(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub(i, j) = cols(k + i, j);
    return sub;
}

}  // namespace

GaussianRational f_k(const QMat& a, int k) {
    return det_exact(fk_minor(a, k));
}

MultiPoly f_k(const PMat& a, int k) {
    return det_exact(fk_minor(a, k));
}

MultiPoly laplacian(const MultiPoly& p, std::span<const size_t> var_idxs) {
    MultiPoly acc(p.vars());
    for (size_t v : var_idxs) acc += p.derivative(v).derivative(v);
    return acc;
}

MultiPoly hessian_quartic(const MultiPoly& q) {
    if (q.nvars() != 2) throw std::invalid_argument("hessian_quartic: expected a binary form");
    int deg = 0;
    if (!q.is_homogeneous(&deg) || (deg != 4 && !q.is_zero()))
        throw std::invalid_argument("hessian_quartic: expected a binary quartic");
    MultiPoly qxx = q.derivative(0).derivative(0);
    MultiPoly qxy = q.derivative(0).derivative(1);
    MultiPoly qyy = q.derivative(1).derivative(1);
    return qxx * qyy - qxy * qxy;
}

MultiPoly jacobian_pair(const MultiPoly& q, const MultiPoly& r) {
    if (q.nvars() != 2 || r.nvars() != 2)
        throw std::invalid_argument("jacobian_pair: expected binary forms");
    return q.derivative(0) * r.derivative(1) - q.derivative(1) * r.derivative(0);
}

namespace {

// Substitution images realizing A -> u^-1 A u for the generators of the
// maximal unipotent subgroup, over base variables extended with t.
std::vector<std::vector<MultiPoly>> unipotent_images(const SpaceDescriptor& space) {
    const int n = space.n;
    GenericMatrix gm = generic_matrix(space);
    const MultiPoly::VarList base = gm.vars;
    std::vector<std::string> names = *base;
    names.push_back("t");
    const MultiPoly::VarList ext = MultiPoly::make_vars(std::move(names));
    const size_t t_idx = base->size();
    MultiPoly t = MultiPoly::variable(ext, t_idx);

    PMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = gm.entries(i, j).with_vars(ext);

    auto images_from = [&](const PMat& u, const PMat& u_inv) {
        PMat b = (u_inv * a) * u;
        std::vector<MultiPoly> images;
        if (space.kind == SpaceKind::full_complex) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) images.push_back(b(i, j));
        } else {  // symmetric coordinates, upper triangle
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) images.push_back(b(i, j));
        }
        return images;
    };

    std::vector<std::vector<MultiPoly>> result;
    if (space.kind == SpaceKind::full_complex) {
        for (int root = 0; root + 1 < n; ++root) {
            PMat u = PMat::identity(n);
            PMat u_inv = PMat::identity(n);
            u(root, root + 1) = t;
            u_inv(root, root + 1) = -t;
            result.push_back(images_from(u, u_inv));
        }
    } else if (space.kind == SpaceKind::sym_complex) {
        if (n != 3)
            throw std::invalid_argument("u_invariance_check: symmetric case implemented for n = 3");
        // fixed nilpotent antisymmetric generator K with K^3 = 0
        const GaussianRational one(1), iu = GaussianRational::i();
        QMat kq(3, 3);
        kq(0, 1) = one;
        kq(1, 0) = -one;
        kq(0, 2) = iu;
        kq(2, 0) = -iu;
        QMat k2 = kq * kq;
        auto expm = [&](int sign) {
            PMat u = PMat::identity(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    MultiPoly e = MultiPoly::constant(ext, GaussianRational(Rational(i == j ? 1 : 0)));
                    e += t.scaled(kq(i, j) * GaussianRational(Rational(sign)));
                    e += (t * t).scaled(k2(i, j) * GaussianRational(Rational(1, 2)));
                    u(i, j) = e;
                }
            return u;
        };
        result.push_back(images_from(expm(1), expm(-1)));
    } else {
        throw std::invalid_argument("u_invariance_check: defined for full_complex and sym_complex");
    }
    return result;
}

}  // namespace

bool u_invariance_check(const MultiPoly& p, const SpaceDescriptor& space) {
    auto image_sets = unipotent_images(space);
    if (image_sets.empty()) return true;
    const MultiPoly::VarList ext = image_sets[0][0].vars();
    MultiPoly p_ext = p.with_vars(ext);
    for (const auto& images : image_sets) {
        if (images.size() != p.nvars())
            throw std::invalid_argument("u_invariance_check: polynomial/space variable mismatch");
        if (p_ext != p.subst(images)) return false;
    }
    return true;
}

std::optional<std::vector<long>> torus_weight(const MultiPoly& p, const SpaceDescriptor& space) {
    if (space.kind != SpaceKind::full_complex)
        throw std::invalid_argument("torus_weight: defined for full_complex coordinates");
    const int n = space.n;
    if (p.nvars() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("torus_weight: polynomial/space variable mismatch");
    // eps_i in Z^(n-1): unit vector for i < n, all -1 for i = n. The entry
    // function A -> A_jk has weight eps_k - eps_j.
    auto eps = [&](int i) {
        std::vector<long> w(n - 1, 0);
        if (i < n - 1)
            w[i] = 1;
        else
            for (auto& c : w) c = -1;
        return w;
    };
    std::optional<std::vector<long>> weight;
    for (const auto& [e, c] : p.terms()) {
        std::vector<long> w(n - 1, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int exp = e[static_cast<size_t>(j) * n + k];
                if (exp == 0) continue;
                auto wj = eps(j), wk = eps(k);
                for (int c2 = 0; c2 < n - 1; ++c2) w[c2] += exp * (wk[c2] - wj[c2]);
            }
        if (!weight)
            weight = std::move(w);
        else if (*weight != w)
            return std::nullopt;
    }
    if (!weight) weight = std::vector<long>(n - 1, 0);  // zero polynomial
    return weight;
}

namespace {

// Maximal linearly independent subfamily, scanning in order.
std::vector<MultiPoly> independent_subset(std::span<const MultiPoly> family) {
    std::map<ExpVec, size_t, GradedLexLess> col;
    for (const MultiPoly& p : family)
        for (const auto& [e, c] : p.terms())
            if (!col.count(e)) col.emplace(e, col.size());
    RowSpace rs(col.size());
    std::vector<MultiPoly> keep;
    for (const MultiPoly& p : family) {
        std::vector<GaussianRational> row(col.size());
        for (const auto& [e, c] : p.terms()) row[col.at(e)] = c;
        if (rs.insert(std::move(row))) keep.push_back(p);
    }
    return keep;
}

}  // namespace

MultiPoly u_invariant_in_span(std::span<const MultiPoly> family, const SpaceDescriptor& space) {
    if (family.empty()) throw std::invalid_argument("u_invariant_in_span: empty family");
    std::vector<MultiPoly> basis_family = independent_subset(family);
    auto image_sets = unipotent_images(space);
    const MultiPoly::VarList ext = image_sets[0][0].vars();

    // one equation per (root generator, monomial) pair
    std::map<std::pair<size_t, ExpVec>, size_t> row_index;
    std::vector<std::vector<std::pair<size_t, GaussianRational>>> col_entries(basis_family.size());
    for (size_t i = 0; i < basis_family.size(); ++i) {
        MultiPoly lifted = basis_family[i].with_vars(ext);
        for (size_t s = 0; s < image_sets.size(); ++s) {
            MultiPoly diff = basis_family[i].subst(image_sets[s]) - lifted;
            for (const auto& [e, c] : diff.terms()) {
                auto key = std::make_pair(s, e);
                auto it = row_index.find(key);
                if (it == row_index.end()) it = row_index.emplace(key, row_index.size()).first;
                col_entries[i].emplace_back(it->second, c);
            }
        }
    }
    QMat cond(row_index.size(), basis_family.size());
    for (size_t i = 0; i < basis_family.size(); ++i)
        for (const auto& [r, c] : col_entries[i]) cond(r, i) = c;

    auto basis = nullspace_exact(cond);
    if (basis.size() != 1)
        throw std::logic_error("u_invariant_in_span: invariant subspace dimension " +
                               std::to_string(basis.size()));
    MultiPoly rep(basis_family[0].vars());
    for (size_t i = 0; i < basis_family.size(); ++i) rep += basis_family[i].scaled(basis[0][i]);
    return rep.monic();
}

long weyl_dim(int n, int k) {
    if (k < 0 || k > n - 1) throw std::invalid_argument("weyl_dim: k out of range");
    // hook content product for the hook partition (n-k, 1^k) in n variables
    Rational dim(1);
    dim *= Rational(n, n);  // cell (1,1): content 0, hook n
    for (int j = 2; j <= n - k; ++j) dim *= Rational(n + j - 1, n - k - j + 1);
    for (int i = 2; i <= k + 1; ++i) dim *= Rational(n + 1 - i, k + 2 - i);
    if (!dim.is_integer()) throw std::logic_error("weyl_dim: non-integer dimension");
    return static_cast<long>(dim.numerator().get_si());
}

std::vector<MultiPoly> coefficient_family(const MultiPoly& value, const MultiPoly::VarList& base,
                                          int n_aux) {
    const size_t total = value.nvars();
    const size_t nb = base->size();
    if (total != nb + static_cast<size_t>(n_aux))
        throw std::invalid_argument("coefficient_family: variable count mismatch");
    std::vector<size_t> aux_idx(n_aux);
    for (int i = 0; i < n_aux; ++i) aux_idx[i] = nb + static_cast<size_t>(i);
    auto groups = value.split_by(aux_idx);
    std::vector<MultiPoly> out;
    out.reserve(groups.size());
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.push_back(it->second.with_vars(base));
    return out;
}

const UCovariantReps& full_case_reps() {
    static const UCovariantReps reps = [] {
        SpaceDescriptor space(SpaceKind::full_complex, 3);
        GenericMatrix gm = generic_matrix(space);
        UCovariantReps r;
        r.vars = gm.vars;
        auto d = d_invariants(gm.entries);
        r.d2 = d[1];
        r.d3 = d[2];

        auto matrix_family = [&](const PMat& m) {
            std::vector<MultiPoly> fam;
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j)
                    if (!m(i, j).is_zero()) fam.push_back(m(i, j));
            return fam;
        };
        r.c1U = u_invariant_in_span(matrix_family(c1(gm.entries)), space);
        r.c2U = u_invariant_in_span(matrix_family(c2(gm.entries)), space);
        r.c3U = u_invariant_in_span(coefficient_family(c3(gm.entries), gm.vars, 3), space);
        r.c4U = u_invariant_in_span(coefficient_family(c4(gm.entries), gm.vars, 3), space);

        // Fix the relative scale of c1U, c2U by the identity d3*c1U = d2*c2U on
        // the degenerate locus, measured on sampled conjugates of
        // diag(z, z, -2z).
        SeededRng rng(20240915);
        std::optional<GaussianRational> ratio;
        for (int trial = 0; trial < 8; ++trial) {
            QMat g = cayley_conjugator(space, rng);
            auto gi = invert(g);
            Rational z = rng.next_nonzero_rational();
            QMat dz(3, 3);
            dz(0, 0) = GaussianRational(z);
            dz(1, 1) = GaussianRational(z);
            dz(2, 2) = GaussianRational(z * Rational(-2));
            QMat a = (g * dz) * (*gi);
            std::vector<GaussianRational> coords(9);
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) coords[i * 3 + j] = a(i, j);
            GaussianRational lhs = r.d3.eval(coords) * r.c1U.eval(coords);
            GaussianRational rhs = r.d2.eval(coords) * r.c2U.eval(coords);
            if (rhs.is_zero()) continue;
            GaussianRational q = lhs / rhs;
            if (ratio && *ratio != q) throw std::logic_error("full_case_reps: normalization ratio unstable");
            ratio = q;
        }
        if (!ratio) throw std::logic_error("full_case_reps: could not measure normalization ratio");
        r.c2U = r.c2U.scaled(*ratio);
        return r;
    }();
    return reps;
}

}  // namespace degenlocus

#include "degenlocus/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace degenlocus {

SpaceDescriptor::SpaceDescriptor(SpaceKind k, int size) : kind(k), n(size) {
    if (n < 2) throw std::invalid_argument("SpaceDescriptor: size must be >= 2");
}

size_t SpaceDescriptor::dim() const {
    size_t nn = static_cast<size_t>(n);
    return symmetric_kind() ? nn * (nn + 1) / 2 : nn * nn;
}

std::vector<std::string> SpaceDescriptor::coordinate_names() const {
    std::vector<std::string> names;
    if (kind == SpaceKind::hermitian) {
        for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                names.push_back("a" + std::to_string(j) + std::to_string(k));
                names.push_back("b" + std::to_string(j) + std::to_string(k));
            }
    } else if (symmetric_kind()) {
        for (int j = 1; j <= n; ++j)
            for (int k = j; k <= n; ++k) names.push_back("s" + std::to_string(j) + std::to_string(k));
    } else {
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) names.push_back("a" + std::to_string(j) + std::to_string(k));
    }
    return names;
}

SpaceDescriptor SpaceDescriptor::parse(const std::string& token, int n) {
    if (token == "her") return SpaceDescriptor(SpaceKind::hermitian, n);
    if (token == "symr") return SpaceDescriptor(SpaceKind::sym_real, n);
    if (token == "full") return SpaceDescriptor(SpaceKind::full_complex, n);
    if (token == "symc") return SpaceDescriptor(SpaceKind::sym_complex, n);
    throw std::invalid_argument("SpaceDescriptor: unknown space '" + token + "'");
}

std::string SpaceDescriptor::token() const {
    switch (kind) {
        case SpaceKind::hermitian: return "her";
        case SpaceKind::sym_real: return "symr";
        case SpaceKind::full_complex: return "full";
        case SpaceKind::sym_complex: return "symc";
    }
    return "?";
}

GenericMatrix generic_matrix(const SpaceDescriptor& space) {
    auto vars = MultiPoly::make_vars(space.coordinate_names());
    const int n = space.n;
    PMat m(n, n, MultiPoly::zero(vars));
    auto var = [&](size_t idx) { return MultiPoly::variable(vars, idx); };

    if (space.kind == SpaceKind::hermitian) {
        for (int j = 0; j < n; ++j) m(j, j) = var(j);
        size_t idx = static_cast<size_t>(n);
        const GaussianRational i_unit = GaussianRational::i();
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                MultiPoly a = var(idx++);
                MultiPoly b = var(idx++);
                m(j, k) = a + b.scaled(i_unit);
                m(k, j) = a - b.scaled(i_unit);
            }
    } else if (space.symmetric_kind()) {
        size_t idx = 0;
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                m(j, k) = var(idx);
                m(k, j) = var(idx);
                ++idx;
            }
    } else {
        size_t idx = 0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m(j, k) = var(idx++);
    }
    return GenericMatrix{space, vars, std::move(m)};
}

bool lies_in_space(const QMat& a, const SpaceDescriptor& space) {
    if (!a.is_square() || a.rows() != static_cast<size_t>(space.n)) return false;
    const size_t n = a.rows();
    switch (space.kind) {
        case SpaceKind::hermitian:
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (a(j, k) != a(k, j).conj()) return false;
            return true;
        case SpaceKind::sym_real:
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (!a(j, k).is_real() || a(j, k) != a(k, j)) return false;
            return true;
        case SpaceKind::sym_complex:
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (a(j, k) != a(k, j)) return false;
            return true;
        case SpaceKind::full_complex: return true;
    }
    return false;
}

int min_poly_degree(const QMat& a) {
    if (!a.is_square()) throw std::invalid_argument("min_poly_degree: non-square matrix");
    const size_t n = a.rows();
    RowSpace space(n * n);
    QMat power = QMat::identity(n);
    for (int m = 0;; ++m) {
        std::vector<GaussianRational> row(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) row[i * n + j] = power(i, j);
        if (!space.insert(std::move(row))) return m;
        power = power * a;
        if (m > static_cast<int>(n)) throw std::logic_error("min_poly_degree: no dependency found");
    }
}

bool membership_Mk(const QMat& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (k < 0 || k > n - 1) throw std::invalid_argument("membership_Mk: k out of range");
    return min_poly_degree(a) <= n - k;
}

namespace {

QMat random_matrix(int n, SeededRng& rng, bool gaussian) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gaussian ? rng.next_gaussian() : GaussianRational(rng.next_rational());
    return m;
}

}  // namespace

QMat cayley_conjugator(const SpaceDescriptor& space, SeededRng& rng) {
    const int n = space.n;
    for (;;) {
        QMat k(n, n);
        switch (space.kind) {
            case SpaceKind::hermitian: {
                // anti-Hermitian: K = P + iQ with P antisymmetric, Q symmetric
                for (int i = 0; i < n; ++i) k(i, i) = GaussianRational(Rational(0), rng.next_rational());
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        GaussianRational v = rng.next_gaussian();
                        k(i, j) = v;
                        k(j, i) = -v.conj();
                    }
                break;
            }
            case SpaceKind::sym_real:
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        GaussianRational v(rng.next_rational());
                        k(i, j) = v;
                        k(j, i) = -v;
                    }
                break;
            case SpaceKind::sym_complex:
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        GaussianRational v = rng.next_gaussian();
                        k(i, j) = v;
                        k(j, i) = -v;
                    }
                break;
            case SpaceKind::full_complex: {
                QMat g = random_matrix(n, rng, true);
                if (!det_exact(g).is_zero()) return g;
                continue;
            }
        }
        QMat id = QMat::identity(n);
        auto inv = invert(id + k);
        if (!inv) continue;  // (I+K) singular for this draw
        return (id - k) * (*inv);
    }
}

QMat cayley_conjugator(const SpaceDescriptor& space, std::uint64_t seed) {
    SeededRng rng(seed);
    return cayley_conjugator(space, rng);
}

std::vector<GaussianRational> DegeneratePoint::coordinates() const {
    const int n = desc.n;
    std::vector<GaussianRational> out;
    out.reserve(desc.dim());
    if (desc.kind == SpaceKind::hermitian) {
        for (int j = 0; j < n; ++j) out.push_back(matrix(j, j));
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                out.push_back(GaussianRational(matrix(j, k).re()));
                out.push_back(GaussianRational(matrix(j, k).im()));
            }
    } else if (desc.symmetric_kind()) {
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) out.push_back(matrix(j, k));
    } else {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.push_back(matrix(j, k));
    }
    return out;
}

DegeneratePoint sample_degenerate(const SpaceDescriptor& space, std::vector<int> multiplicities,
                                  std::vector<Rational> eigenvalues, std::uint64_t seed) {
    const int n = space.n;
    if (multiplicities.size() != eigenvalues.size())
        throw std::invalid_argument("sample_degenerate: multiplicities and eigenvalues disagree");
    int total = 0;
    for (int m : multiplicities) {
        if (m <= 0) throw std::invalid_argument("sample_degenerate: nonpositive multiplicity");
        total += m;
    }
    if (total != n) throw std::invalid_argument("sample_degenerate: multiplicities must sum to n");
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        for (size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw std::invalid_argument("sample_degenerate: repeated eigenvalue");

    QMat d(n, n);
    {
        int pos = 0;
        for (size_t part = 0; part < multiplicities.size(); ++part)
            for (int c = 0; c < multiplicities[part]; ++c) d(pos, pos) = GaussianRational(eigenvalues[part]), ++pos;
    }

    SeededRng rng(seed);
    QMat g = cayley_conjugator(space, rng);
    QMat a;
    switch (space.kind) {
        case SpaceKind::hermitian: a = (g * d) * conj_transpose(g); break;
        case SpaceKind::sym_real:
        case SpaceKind::sym_complex: a = (g * d) * g.transpose(); break;
        case SpaceKind::full_complex: {
            auto gi = invert(g);
            a = (g * d) * (*gi);
            break;
        }
    }
    return DegeneratePoint{std::move(a), space, std::move(multiplicities), std::move(eigenvalues), seed};
}

DegeneratePoint sample_degenerate_random(const SpaceDescriptor& space,
                                         const std::vector<int>& multiplicities, SeededRng& rng) {
    std::vector<Rational> eigs;
    while (eigs.size() < multiplicities.size()) {
        Rational cand = rng.next_rational();
        bool fresh = true;
        for (const Rational& e : eigs)
            if (e == cand) fresh = false;
        if (fresh) eigs.push_back(cand);
    }
    return sample_degenerate(space, multiplicities, std::move(eigs), rng.next_u64());
}

namespace {

struct JordanBlock {
    size_t start;
    size_t size;
    GaussianRational eigenvalue;
};

std::vector<JordanBlock> jordan_blocks(const QMat& a) {
    if (!a.is_square()) throw std::invalid_argument("jordan_perturb: non-square matrix");
    const size_t n = a.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (j == i + 1) {
                const GaussianRational& v = a(i, j);
                if (!(v.is_zero() || v.is_one()))
                    throw std::invalid_argument("jordan_perturb: superdiagonal entries must be 0 or 1");
                if (v.is_one() && a(i, i) != a(i + 1, i + 1))
                    throw std::invalid_argument("jordan_perturb: eigenvalue changes inside a block");
            } else if (!a(i, j).is_zero()) {
                throw std::invalid_argument("jordan_perturb: matrix is not in Jordan form");
            }
        }
    std::vector<JordanBlock> blocks;
    size_t start = 0;
    for (size_t i = 0; i < n; ++i) {
        bool block_ends = (i + 1 == n) || a(i, i + 1).is_zero();
        if (block_ends) {
            blocks.push_back({start, i - start + 1, a(start, start)});
            start = i + 1;
        }
    }
    return blocks;
}

}  // namespace

QMat jordan_perturb(const QMat& jordan_form, const GaussianRational& lambda, const Rational& eps) {
    auto blocks = jordan_blocks(jordan_form);
    size_t max_size = 0;
    bool seen = false;
    for (const auto& b : blocks)
        if (b.eigenvalue == lambda) {
            seen = true;
            max_size = std::max(max_size, b.size);
        }
    if (!seen) throw std::invalid_argument("jordan_perturb: lambda is not an eigenvalue");
    QMat r = jordan_form;
    for (const auto& b : blocks)
        if (b.eigenvalue == lambda && b.size == max_size)
            r(b.start, b.start) = lambda + GaussianRational(eps);
    return r;
}

QMat conj_B(const QMat& x) {
    if (!x.is_square()) throw std::invalid_argument("conj_B: non-square matrix");
    const size_t r = x.rows();
    if (r < 1) throw std::invalid_argument("conj_B: size must be >= 1");
    const Rational half(1, 2);
    const GaussianRational h(half);
    const GaussianRational ih(Rational(0), half);
    QMat y(r, r);
    for (size_t s = 0; s < r; ++s)
        for (size_t t = 0; t < r; ++t) {
            const GaussianRational& v = x(s, t);
            if (v.is_zero()) continue;
            const size_t rs = r - 1 - s;  // r+1-s with 1-based indices
            const size_t rt = r - 1 - t;
            y(s, t) += v * h;
            y(rs, rt) += v * h;
            y(rs, t) += v * ih;
            y(s, rt) -= v * ih;
        }
    return y;
}

QMat symmetrize_jordan(int r, const GaussianRational& lambda) {
    if (r < 1) throw std::invalid_argument("symmetrize_jordan: r must be >= 1");
    QMat j(r, r);
    for (int i = 0; i < r; ++i) {
        j(i, i) = lambda;
        if (i + 1 < r) j(i, i + 1) = GaussianRational(1);
    }
    return conj_B(j);
}

QMat s_perturb(int r, const GaussianRational& lambda, const Rational& eps) {
    if (r < 1) throw std::invalid_argument("s_perturb: r must be >= 1");
    if (r == 1) {
        QMat m(1, 1);
        m(0, 0) = lambda + GaussianRational(eps);
        return m;
    }
    QMat j(r, r);
    for (int i = 0; i < r; ++i) {
        j(i, i) = lambda;
        if (i + 1 < r) j(i, i + 1) = GaussianRational(1);
    }
    const GaussianRational eps2{eps * eps};
    if (r % 2 == 0) {
        const int m = r / 2;
        // sign chosen so the characteristic polynomial splits as
        // (x-l-e)(x-l+e)(x-l)^(r-2); the opposite sign would split at l -+ ie
        j(m, m - 1) += eps2;                       // (m+1, m) with 1-based indices
    } else {
        const int m = (r - 1) / 2;
        const GaussianRational half_eps2{eps * eps * Rational(1, 2)};
        j(m, m - 1) += half_eps2;                  // (m+1, m)
        j(m + 1, m) += half_eps2;                  // (m+2, m+1)
    }
    return conj_B(j);
}

}  // namespace degenlocus

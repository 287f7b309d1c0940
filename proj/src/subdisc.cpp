#include "degenlocus/subdisc.hpp"

#include <stdexcept>

#include "degenlocus/linalg.hpp"
#include "degenlocus/prng.hpp"

namespace degenlocus {

Rational sdisc_def(std::span<const Rational> eigenvalues, int k) {
    const int n = static_cast<int>(eigenvalues.size());
    if (k < 0 || k > n - 1) throw std::invalid_argument("sdisc_def: k out of range");
    const int m = n - k;
    Rational total(0);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        Rational prod(1);
        for (int s = 0; s < m; ++s)
            for (int t = s + 1; t < m; ++t) {
                Rational diff = eigenvalues[idx[s]] - eigenvalues[idx[t]];
                prod *= diff * diff;
            }
        total += prod;
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return total;
}

namespace {

template <class T, class MatT>
MatT hankel_of_traces(const MatT& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (a.rows() != a.cols()) throw std::invalid_argument("sdisc: non-square matrix");
    if (k < 0 || k > n - 1) throw std::invalid_argument("sdisc: k out of range");
    const int m = n - k;
    std::vector<T> p;  // p[j] = tr(A^j), j = 0 .. 2(m-1)
    p.reserve(2 * m - 1);
    MatT power = MatT::identity(n);
    for (int j = 0; j <= 2 * (m - 1); ++j) {
        p.push_back(trace(power));
        if (j < 2 * (m - 1)) power = power * a;
    }
    MatT h(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h(i, j) = p[i + j];
    return h;
}

}  // namespace

GaussianRational sdisc(const QMat& a, int k) {
    return det_exact(hankel_of_traces<GaussianRational, QMat>(a, k));
}

MultiPoly sdisc(const PMat& a, int k) {
    return det_exact(hankel_of_traces<MultiPoly, PMat>(a, k));
}

namespace {

Rational exponent_factorial(const ExpVec& e) {
    Rational w(1);
    for (int x : e) w *= Rational::factorial(static_cast<unsigned>(x));
    return w;
}

size_t two_binomial(int n) {
    Rational b = Rational::binomial(static_cast<unsigned>(2 * n - 1), static_cast<unsigned>(n - 1));
    return 2 * static_cast<size_t>(b.numerator().get_ui());
}

QMat random_hermitian(int n, SeededRng& rng) {
    QMat a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = GaussianRational(rng.next_rational());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GaussianRational v = rng.next_gaussian();
            a(i, j) = v;
            a(j, i) = v.conj();
        }
    return a;
}

QMat random_symmetric(int n, SeededRng& rng) {
    QMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            GaussianRational v(rng.next_rational());
            a(i, j) = v;
            a(j, i) = v;
        }
    return a;
}

}  // namespace

Rational sos_sum_at(const QMat& hermitian) {
    MultiPoly value = c_full(hermitian);  // polynomial in x1..xn
    Rational sum(0);
    for (const auto& [e, c] : value.terms()) {
        sum += exponent_factorial(e) * c.norm2();
    }
    return sum;
}

SosCertificate sos_certificate(int n, int verify_samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sos_certificate: n must be >= 2");
    SpaceDescriptor space(SpaceKind::hermitian, n);
    GenericMatrix gm = generic_matrix(space);
    MultiPoly value = c_full(gm.entries);

    SosCertificate cert;
    cert.n = n;
    cert.square_bound = two_binomial(n);
    cert.seed = seed;

    std::vector<size_t> aux_idx(n);
    for (int i = 0; i < n; ++i) aux_idx[i] = gm.vars->size() + static_cast<size_t>(i);
    auto groups = value.split_by(aux_idx);
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        MultiPoly coeff = it->second.with_vars(gm.vars);
        Rational w = exponent_factorial(it->first);
        MultiPoly re = coeff.real_part();
        MultiPoly im = coeff.imag_part();
        if (!re.is_zero()) cert.terms.push_back({w, std::move(re)});
        if (!im.is_zero()) cert.terms.push_back({w, std::move(im)});
    }
    if (cert.terms.size() > cert.square_bound)
        throw std::logic_error("sos_certificate: term count exceeds the square bound");

    if (n <= 3) {
        // full symbolic expansion
        MultiPoly sum(gm.vars);
        for (const auto& t : cert.terms) sum += (t.poly * t.poly).scaled(GaussianRational(t.weight));
        MultiPoly target = sdisc(gm.entries, 0);
        cert.verified = (sum == target);
        cert.symbolic = true;
    } else {
        int samples = verify_samples > 0 ? verify_samples : 10 * static_cast<int>(space.dim());
        SeededRng rng(seed);
        bool ok = true;
        for (int s = 0; s < samples && ok; ++s) {
            QMat a = random_hermitian(n, rng);
            GaussianRational disc = sdisc(a, 0);
            if (!disc.is_real()) { ok = false; break; }
            ok = (sos_sum_at(a) == disc.re());
        }
        cert.verified = ok;
        cert.symbolic = false;
        cert.samples = samples;
    }
    if (!cert.verified) throw std::logic_error("sos_certificate: identity failed to verify");
    return cert;
}

bool harmonic_check_cR(int n, int samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("harmonic_check_cR: n must be >= 2");
    std::vector<size_t> aux(n);
    if (n <= 3) {
        SpaceDescriptor space(SpaceKind::sym_real, n);
        GenericMatrix gm = generic_matrix(space);
        MultiPoly value = c_full(gm.entries);
        for (int i = 0; i < n; ++i) aux[i] = gm.vars->size() + static_cast<size_t>(i);
        return laplacian(value, aux).is_zero();
    }
    SeededRng rng(seed);
    for (int i = 0; i < n; ++i) aux[i] = static_cast<size_t>(i);
    for (int s = 0; s < samples; ++s) {
        QMat a = random_symmetric(n, rng);
        MultiPoly value = c_full(a);  // in x1..xn only
        if (!laplacian(value, aux).is_zero()) return false;
    }
    return true;
}

namespace {

// Partitions of n into exactly `parts` positive decreasing parts.
void partitions_rec(int n, int parts, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (n >= 1 && n <= max_part) {
            cur.push_back(n);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = std::min(n - (parts - 1), max_part); first >= 1; --first) {
        if (first * parts < n) break;
        cur.push_back(first);
        partitions_rec(n - first, parts - 1, first, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_into(int n, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, parts, n, cur, out);
    return out;
}

}  // namespace

FkVanishingReport vanishing_fk_on_stratum(int n, int k, int trials, std::uint64_t seed) {
    if (n < 3 || k < 0 || k > n - 3)
        throw std::invalid_argument("vanishing_fk_on_stratum: need n >= 3 and 0 <= k <= n-3");
    FkVanishingReport rep;
    rep.n = n;
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    rep.module_dim = weyl_dim(n, k);
    rep.squares = 2 * rep.module_dim;

    const int distinct = n - k - 1;
    auto parts = partitions_into(n, distinct);
    SpaceDescriptor space(SpaceKind::hermitian, n);
    SeededRng rng(seed);
    rep.all_vanish = true;
    for (int t = 0; t < trials; ++t) {
        const auto& mult = parts[static_cast<size_t>(t) % parts.size()];
        DegeneratePoint pt = sample_degenerate_random(space, mult, rng);
        if (!f_k(pt.matrix, k + 1).is_zero()) {
            rep.all_vanish = false;
            break;
        }
    }
    return rep;
}

}  // namespace degenlocus

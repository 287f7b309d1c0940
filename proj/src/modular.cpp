#include "degenlocus/modular.hpp"

#include <stdexcept>

namespace degenlocus {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
}

namespace {
std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}
}  // namespace

std::optional<std::uint32_t> PrimeField::reduce(const Rational& r) const {
    std::uint32_t den = reduce_mpz(r.denominator(), p);
    if (den == 0) return std::nullopt;
    std::uint32_t num = reduce_mpz(r.numerator(), p);
    return mul(num, inv(den));
}

std::optional<std::uint32_t> PrimeField::reduce(const GaussianRational& q) const {
    auto re = reduce(q.re());
    if (!re) return std::nullopt;
    if (q.im().is_zero()) return re;
    auto im = reduce(q.im());
    if (!im) return std::nullopt;
    return add(*re, mul(sqrt_m1, *im));
}

const std::vector<PrimeField>& prime_fields() {
    static const std::vector<PrimeField> fields = [] {
        std::vector<PrimeField> out;
        mpz_class candidate = (mpz_class(1) << 31) - 1;
        while (out.size() < 25) {
            if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) && candidate % 4 == 1) {
                PrimeField f{static_cast<std::uint32_t>(candidate.get_ui()), 0};
                // deterministic search for sqrt(-1): a^((p-1)/4) for a = 2, 3, ...
                for (std::uint32_t a = 2;; ++a) {
                    std::uint32_t s = f.pow(a, (f.p - 1) / 4);
                    if (f.mul(s, s) == f.p - 1) {
                        f.sqrt_m1 = s;
                        break;
                    }
                }
                out.push_back(f);
            }
            candidate -= 1;
        }
        return out;
    }();
    return fields;
}

size_t ModMatrix::echelonize(std::vector<size_t>* pivot_cols) {
    const std::uint64_t p = f_.p;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pr = rank;
        while (pr < rows_ && at(pr, col) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != rank) {
            std::uint32_t* a = row(pr);
            std::uint32_t* b = row(rank);
            for (size_t j = 0; j < cols_; ++j) std::swap(a[j], b[j]);
        }
        const std::uint32_t inv = f_.inv(at(rank, col));
        std::uint32_t* prow = row(rank);
        for (size_t j = col; j < cols_; ++j)
            prow[j] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(prow[j]) * inv) % p);
        for (size_t i = rank + 1; i < rows_; ++i) {
            std::uint32_t* r = row(i);
            const std::uint64_t f = r[col];
            if (f == 0) continue;
            r[col] = 0;
            for (size_t j = col + 1; j < cols_; ++j) {
                if (prow[j] == 0) continue;
                std::uint64_t sub = (f * prow[j]) % p;
                std::uint64_t v = r[j] + p - sub;
                r[j] = static_cast<std::uint32_t>(v >= p ? v - p : v);
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

ModSolveResult mod_solve(ModMatrix& augmented) {
    ModSolveResult res;
    const size_t cols = augmented.cols() - 1;
    size_t rank = augmented.echelonize(&res.pivot_cols);
    // a pivot in the rhs column means inconsistency
    if (!res.pivot_cols.empty() && res.pivot_cols.back() == cols) {
        res.consistent = false;
        res.pivot_cols.pop_back();
        return res;
    }
    res.consistent = true;
    res.solution.assign(cols, 0);
    const PrimeField& f = augmented.field();
    for (size_t r = rank; r-- > 0;) {
        size_t pc = res.pivot_cols[r];
        std::uint64_t value = augmented.at(r, cols);
        for (size_t j = pc + 1; j < cols; ++j) {
            if (augmented.at(r, j) == 0 || res.solution[j] == 0) continue;
            std::uint64_t sub = (static_cast<std::uint64_t>(augmented.at(r, j)) * res.solution[j]) % f.p;
            value = (value + f.p - sub) % f.p;
        }
        res.solution[pc] = static_cast<std::uint32_t>(value);
    }
    return res;
}

void CrtAccumulator::add(std::uint32_t residue, std::uint32_t prime) {
    if (modulus_ == 1) {
        value_ = residue;
        modulus_ = prime;
        return;
    }
    // x = value (mod modulus), x = residue (mod prime)
    mpz_class p(prime);
    mpz_class minv;
    if (mpz_invert(minv.get_mpz_t(), modulus_.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("CrtAccumulator: non-coprime moduli");
    mpz_class diff = (mpz_class(residue) - value_) % p;
    if (diff < 0) diff += p;
    mpz_class t = (diff * minv) % p;
    value_ += t * modulus_;
    modulus_ *= p;
}

std::optional<Rational> rational_reconstruct(const mpz_class& value, const mpz_class& modulus) {
    mpz_class bound;
    mpz_class half = (modulus - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    if (bound == 0) return std::nullopt;

    mpz_class a0 = modulus, a1 = value % modulus;
    if (a1 < 0) a1 += modulus;
    mpz_class x0 = 0, x1 = 1;
    while (a1 > bound) {
        mpz_class q = a0 / a1;
        mpz_class a2 = a0 - q * a1;
        mpz_class x2 = x0 - q * x1;
        a0 = std::move(a1);
        a1 = std::move(a2);
        x0 = std::move(x1);
        x1 = std::move(x2);
    }
    if (x1 == 0) return std::nullopt;
    mpz_class num = a1, den = x1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(num, den);
}

}  // namespace degenlocus

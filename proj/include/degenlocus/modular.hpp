#ifndef DEGENLOCUS_MODULAR_HPP
#define DEGENLOCUS_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "degenlocus/rational.hpp"

namespace degenlocus {

// Prime field F_p with p = 1 (mod 4), so i has a square root and Q(i) data
// reduces into F_p through i -> sqrt_m1. Reductions mod p can only lower the
// rank of an exact matrix, which is what every certified bound here rests on.
struct PrimeField {
    std::uint32_t p;
    std::uint32_t sqrt_m1;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Reductions; nullopt when a denominator vanishes mod p.
    std::optional<std::uint32_t> reduce(const Rational& r) const;
    std::optional<std::uint32_t> reduce(const GaussianRational& q) const;
};

// Deterministic list of 31-bit primes = 1 (mod 4), largest first.
const std::vector<PrimeField>& prime_fields();

// Dense matrix over F_p, row-major.
class ModMatrix {
public:
    ModMatrix(size_t rows, size_t cols, PrimeField f)
        : rows_(rows), cols_(cols), f_(f), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return f_; }

    std::uint32_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t* row(size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(size_t i) const { return a_.data() + i * cols_; }

    // In-place row echelon; returns rank and (optionally) the pivot columns.
    size_t echelonize(std::vector<size_t>* pivot_cols = nullptr);

private:
    size_t rows_, cols_;
    PrimeField f_;
    std::vector<std::uint32_t> a_;
};

struct ModSolveResult {
    bool consistent = false;
    std::vector<std::uint32_t> solution;   // free variables 0
    std::vector<size_t> pivot_cols;
};

// Solves A x = b over F_p given the augmented matrix [A | b] (destroys it).
ModSolveResult mod_solve(ModMatrix& augmented);

// Chinese remainders accumulated pairwise.
class CrtAccumulator {
public:
    void add(std::uint32_t residue, std::uint32_t prime);
    const mpz_class& value() const { return value_; }
    const mpz_class& modulus() const { return modulus_; }

private:
    mpz_class value_ = 0;
    mpz_class modulus_ = 1;
};

// Classic rational reconstruction: the unique p/q with |p|, q <= sqrt(M/2)
// congruent to value mod M, if one exists.
std::optional<Rational> rational_reconstruct(const mpz_class& value, const mpz_class& modulus);

}  // namespace degenlocus

#endif

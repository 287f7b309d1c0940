#ifndef DEGENLOCUS_LINALG_HPP
#define DEGENLOCUS_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "degenlocus/matrix.hpp"

namespace degenlocus {

// Exact determinant of a concrete matrix (Gaussian elimination over Q(i)).
GaussianRational det_exact(const QMat& m);

// Exact determinant of a symbolic matrix (memoized Laplace expansion; the
// result is identical to any other exact method).
MultiPoly det_exact(const PMat& m);

// Rank over Q(i).
size_t rank_exact(const QMat& m);

struct SolveResult {
    bool consistent = false;
    std::vector<GaussianRational> solution;  // one solution; free variables set to 0
};

// Exact solution of A x = b, or inconsistent.
SolveResult linear_solve_exact(const QMat& a, const std::vector<GaussianRational>& b);

std::optional<QMat> invert(const QMat& m);

// Basis of the right null space of A.
std::vector<std::vector<GaussianRational>> nullspace_exact(const QMat& a);

// Incrementally maintained reduced row space; used for rank computations
// where rows arrive one at a time.
class RowSpace {
public:
    explicit RowSpace(size_t width) : width_(width) {}
    // Returns true when the row was independent of the space so far.
    bool insert(std::vector<GaussianRational> row);
    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }

private:
    size_t width_;
    std::vector<std::vector<GaussianRational>> rows_;  // reduced, pivot = 1
    std::vector<size_t> pivots_;
};

// Characteristic polynomial det(x I - A) in the named variable.
MultiPoly char_poly(const QMat& a, const std::string& var_name = "x");

// Incremental exact rank over Q for real data: rows are scaled to integers
// and reduced fraction-free (cross-multiplication with gcd-minimal factors),
// which is several times faster than rational elimination.
class IntRowSpace {
public:
    explicit IntRowSpace(size_t width) : width_(width) {}
    bool insert(std::vector<mpz_class> row);
    bool insert_rational(const std::vector<Rational>& row);
    size_t rank() const { return rows_.size(); }

private:
    size_t width_;
    std::vector<std::vector<mpz_class>> rows_;  // content-stripped, pivot > 0
    std::vector<size_t> pivots_;
};

}  // namespace degenlocus

#endif

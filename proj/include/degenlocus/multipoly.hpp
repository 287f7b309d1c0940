#ifndef DEGENLOCUS_MULTIPOLY_HPP
#define DEGENLOCUS_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degenlocus/rational.hpp"

namespace degenlocus {

// Exponent vector, one entry per variable of the owning polynomial's list.
using ExpVec = std::vector<int>;

int expvec_degree(const ExpVec& e);

// Graded lexicographic order: first by total degree, ties broken so that a
// higher exponent on an earlier variable wins. Used as the one global
// monomial order; column orders of all coefficient matrices derive from it.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

struct ExpVecHash {
    size_t operator()(const ExpVec& e) const;
};

// All monomials of the given total degree in `nvars` variables, listed in
// descending graded-lex order (x1^d first, xn^d last).
std::vector<ExpVec> monomials_of_degree(size_t nvars, int d);

// Sparse multivariate polynomial over Q(i) with a fixed, ordered variable
// list. Zero coefficients are never stored. Values are immutable in spirit:
// every operation returns a fresh polynomial.
class MultiPoly {
public:
    using VarList = std::shared_ptr<const std::vector<std::string>>;
    using TermMap = std::map<ExpVec, GaussianRational, GradedLexLess>;

    static VarList make_vars(std::vector<std::string> names);

    MultiPoly() : vars_(empty_vars()) {}
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}
    // Variable-free constant, compatible with any variable list.
    explicit MultiPoly(long c) : vars_(empty_vars()) {
        if (c != 0) terms_.emplace(ExpVec{}, GaussianRational(c));
    }

    static MultiPoly zero(VarList vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarList vars, GaussianRational c);
    static MultiPoly variable(VarList vars, size_t idx);
    static MultiPoly monomial(VarList vars, ExpVec exp, GaussianRational c);

    const std::vector<std::string>& var_names() const { return *vars_; }
    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous(int* degree = nullptr) const;
    int degree_in(std::span<const size_t> var_idxs) const;

    GaussianRational coefficient(const ExpVec& exp) const;
    GaussianRational constant_term() const;
    // Leading (graded-lex largest) monomial; polynomial must be nonzero.
    const std::pair<const ExpVec, GaussianRational>& leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const GaussianRational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(size_t var_idx) const;

    // Full substitution: variable i is replaced by images[i]. All images must
    // share one variable list, which becomes the result's list.
    MultiPoly subst(std::span<const MultiPoly> images) const;

    GaussianRational eval(std::span<const GaussianRational> point) const;

    // Rewrites this polynomial over `new_vars`; every current variable must
    // occur there (matched by name).
    MultiPoly with_vars(VarList new_vars) const;

    // Groups terms by their exponents on the given variable subset. Keys are
    // exponent vectors over the subset; values carry the remaining variables
    // (subset exponents zeroed, full variable list kept).
    std::map<ExpVec, MultiPoly, GradedLexLess> split_by(std::span<const size_t> subset) const;

    // Coefficient-wise real/imaginary part (meaningful when all variables
    // denote real quantities).
    MultiPoly real_part() const;
    MultiPoly imag_part() const;

    // Divides by the leading coefficient.
    MultiPoly monic() const;

    std::string str() const;

private:
    static const VarList& empty_vars();
    // Variable-free polynomials are constants and combine with anything.
    bool is_universal() const { return vars_->empty(); }
    void insert_term(ExpVec exp, GaussianRational c);
    void require_same_vars(const MultiPoly& o) const;

    VarList vars_;
    TermMap terms_;

    friend class MultiPolyBuilder;
};

// Exact quotient f / g in the polynomial ring, or nullopt when g does not
// divide f. Leading-term reduction in graded-lex order; sound because exact
// divisibility forces divisibility of leading terms at every step.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

// Accumulates terms without intermediate copies; used by hot loops.
class MultiPolyBuilder {
public:
    explicit MultiPolyBuilder(MultiPoly::VarList vars) : poly_(std::move(vars)) {}
    void add_term(const ExpVec& exp, const GaussianRational& c);
    void add(const MultiPoly& p);
    void add_scaled(const MultiPoly& p, const GaussianRational& c);
    // adds p * q * c
    void add_product(const MultiPoly& p, const MultiPoly& q, const GaussianRational& c);
    MultiPoly take();

private:
    MultiPoly poly_;
};

}  // namespace degenlocus

#endif

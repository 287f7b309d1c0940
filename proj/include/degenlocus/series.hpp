#ifndef DEGENLOCUS_SERIES_HPP
#define DEGENLOCUS_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "degenlocus/multipoly.hpp"
#include "degenlocus/rational.hpp"

namespace degenlocus {

// Laurent polynomial: integer exponents of either sign, rational coefficients.
// Half-integer character powers never appear here; callers clear them by the
// substitution q -> q^2 before entering this ring.
class LaurentPoly {
public:
    using VarList = MultiPoly::VarList;

    LaurentPoly() : vars_(MultiPoly::make_vars({})) {}
    explicit LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarList vars, Rational c);
    static LaurentPoly monomial(VarList vars, std::vector<int> exp, Rational c);

    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Monomial substitution: variable i becomes the (Laurent) monomial
    // images[i]; exponents combine additively.
    LaurentPoly subst_monomials(const std::vector<std::vector<int>>& images) const;

    // Specializes every variable to 1.
    Rational eval_at_one() const;

    // True when the polynomial is c * single monomial (invertible element).
    bool is_term() const { return terms_.size() == 1; }
    LaurentPoly term_inverse() const;

    std::string str() const;

private:
    VarList vars_;
    std::map<std::vector<int>, Rational> terms_;  // no zero coefficients

    void insert_term(std::vector<int> exp, Rational c);
    friend LaurentPoly laurent_divide_exact(const LaurentPoly& f, const LaurentPoly& g);
};

// Exact quotient in the Laurent polynomial ring; throws std::domain_error when
// g does not divide f (which signals an antisymmetrization bug upstream).
LaurentPoly laurent_divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Power series in t truncated at a fixed order, with Laurent-polynomial
// coefficients in designated character variables.
class TruncSeries {
public:
    TruncSeries(size_t order, LaurentPoly::VarList qvars);

    static TruncSeries from_coefficients(std::vector<LaurentPoly> coeffs, size_t order,
                                         LaurentPoly::VarList qvars);

    size_t order() const { return order_; }
    const LaurentPoly& coeff(size_t d) const { return c_.at(d); }
    LaurentPoly& coeff(size_t d) { return c_.at(d); }
    const LaurentPoly::VarList& qvars() const { return qvars_; }

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // Multiplicative inverse; the constant coefficient must be an invertible
    // Laurent term.
    TruncSeries inverse_unit() const;

    TruncSeries divide_exact(const TruncSeries& o) const { return *this * o.inverse_unit(); }

    std::vector<Rational> specialize_q_to_one() const;

private:
    size_t order_;
    LaurentPoly::VarList qvars_;
    std::vector<LaurentPoly> c_;
};

// Expansion of numerator / prod(denominator_factors) to the given order.
// Polynomials in t are passed as coefficient lists (index = power of t); every
// denominator factor must have an invertible constant coefficient.
TruncSeries series_from_rational(const std::vector<LaurentPoly>& numerator,
                                 const std::vector<std::vector<LaurentPoly>>& denominator_factors,
                                 size_t order, LaurentPoly::VarList qvars);

// Convenience overload for pure rational coefficients (no character vars).
TruncSeries series_from_rational(const std::vector<Rational>& numerator,
                                 const std::vector<std::vector<Rational>>& denominator_factors,
                                 size_t order);

}  // namespace degenlocus

#endif

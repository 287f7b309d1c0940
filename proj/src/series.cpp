#include "degenlocus/series.hpp"

#include <sstream>
#include <stdexcept>

namespace degenlocus {

LaurentPoly LaurentPoly::constant(VarList vars, Rational c) {
    LaurentPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::vector<int>(p.nvars(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarList vars, std::vector<int> exp, Rational c) {
    LaurentPoly p(std::move(vars));
    if (exp.size() != p.nvars()) throw std::invalid_argument("LaurentPoly::monomial: exponent size mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
}

void LaurentPoly::insert_term(std::vector<int> exp, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exp), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.vars_);
    std::vector<int> e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::subst_monomials(const std::vector<std::vector<int>>& images) const {
    if (images.size() != nvars()) throw std::invalid_argument("subst_monomials: wrong image count");
    size_t out_width = images.empty() ? 0 : images[0].size();
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(out_width, 0);
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = 0; j < out_width; ++j) ne[j] += e[i] * images[i][j];
        r.insert_term(std::move(ne), c);
    }
    return r;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::term_inverse() const {
    if (!is_term()) throw std::domain_error("LaurentPoly: not an invertible term");
    const auto& [e, c] = *terms_.begin();
    std::vector<int> ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return monomial(vars_, std::move(ne), c.inv());
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << (*vars_)[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

LaurentPoly laurent_divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("laurent_divide_exact: division by zero");
    if (f.is_zero()) return LaurentPoly(f.vars());
    const size_t n = f.nvars();
    // shift each operand into the ordinary polynomial ring independently; the
    // quotient picks up the difference of the shifts (it may be a genuine
    // Laurent polynomial even when f and g are both ordinary)
    auto min_exps = [&](const LaurentPoly& p) {
        std::vector<int> s(n, 0);
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            for (size_t i = 0; i < n; ++i) s[i] = first ? e[i] : std::min(s[i], e[i]);
            first = false;
        }
        return s;
    };
    const std::vector<int> sf = min_exps(f), sg = min_exps(g);

    auto to_poly = [&](const LaurentPoly& p, const std::vector<int>& shift) {
        MultiPolyBuilder b(p.vars());
        for (const auto& [e, c] : p.terms()) {
            ExpVec ne(n);
            for (size_t i = 0; i < n; ++i) ne[i] = e[i] - shift[i];
            b.add_term(ne, GaussianRational(c));
        }
        return b.take();
    };

    auto q = divide_exact(to_poly(f, sf), to_poly(g, sg));
    if (!q) throw std::domain_error("laurent_divide_exact: not divisible");

    LaurentPoly result(f.vars());
    for (const auto& [e, c] : q->terms()) {
        if (!c.im().is_zero()) throw std::logic_error("laurent_divide_exact: unexpected imaginary part");
        std::vector<int> ne(e.begin(), e.end());
        for (size_t i = 0; i < n; ++i) ne[i] += sf[i] - sg[i];
        result.insert_term(std::move(ne), c.re());
    }
    return result;
}

TruncSeries::TruncSeries(size_t order, LaurentPoly::VarList qvars)
    : order_(order), qvars_(std::move(qvars)), c_(order + 1, LaurentPoly(qvars_)) {}

TruncSeries TruncSeries::from_coefficients(std::vector<LaurentPoly> coeffs, size_t order,
                                           LaurentPoly::VarList qvars) {
    TruncSeries s(order, std::move(qvars));
    for (size_t d = 0; d <= order && d < coeffs.size(); ++d) s.c_[d] = std::move(coeffs[d]);
    return s;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("TruncSeries: order mismatch");
    for (size_t d = 0; d <= order_; ++d) c_[d] += o.c_[d];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("TruncSeries: order mismatch");
    for (size_t d = 0; d <= order_; ++d) c_[d] -= o.c_[d];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("TruncSeries: order mismatch");
    TruncSeries r(a.order_, a.qvars_);
    for (size_t i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j <= a.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::inverse_unit() const {
    if (!c_[0].is_term())
        throw std::domain_error("TruncSeries: constant coefficient is not invertible");
    TruncSeries r(order_, qvars_);
    LaurentPoly a0_inv = c_[0].term_inverse();
    r.c_[0] = a0_inv;
    for (size_t d = 1; d <= order_; ++d) {
        LaurentPoly acc(qvars_);
        for (size_t j = 1; j <= d; ++j) {
            if (c_[j].is_zero() || r.c_[d - j].is_zero()) continue;
            acc += c_[j] * r.c_[d - j];
        }
        r.c_[d] = -(a0_inv * acc);
    }
    return r;
}

std::vector<Rational> TruncSeries::specialize_q_to_one() const {
    std::vector<Rational> out(order_ + 1);
    for (size_t d = 0; d <= order_; ++d) out[d] = c_[d].eval_at_one();
    return out;
}

TruncSeries series_from_rational(const std::vector<LaurentPoly>& numerator,
                                 const std::vector<std::vector<LaurentPoly>>& denominator_factors,
                                 size_t order, LaurentPoly::VarList qvars) {
    TruncSeries result = TruncSeries::from_coefficients(numerator, order, qvars);
    for (const auto& factor : denominator_factors) {
        if (factor.empty() || factor[0].is_zero())
            throw std::invalid_argument("series_from_rational: denominator factor with zero constant term");
        TruncSeries fs = TruncSeries::from_coefficients(factor, order, qvars);
        result = result * fs.inverse_unit();
    }
    return result;
}

TruncSeries series_from_rational(const std::vector<Rational>& numerator,
                                 const std::vector<std::vector<Rational>>& denominator_factors,
                                 size_t order) {
    auto qvars = MultiPoly::make_vars({});
    auto lift = [&](const std::vector<Rational>& v) {
        std::vector<LaurentPoly> out;
        out.reserve(v.size());
        for (const Rational& r : v) out.push_back(LaurentPoly::constant(qvars, r));
        return out;
    };
    std::vector<std::vector<LaurentPoly>> factors;
    factors.reserve(denominator_factors.size());
    for (const auto& f : denominator_factors) factors.push_back(lift(f));
    return series_from_rational(lift(numerator), factors, order, qvars);
}

}  // namespace degenlocus

#include "degenlocus/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degenlocus {

int expvec_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db;
    // same degree: a < b when the first differing exponent is smaller in a
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

size_t ExpVecHash::operator()(const ExpVec& e) const {
    size_t h = 1469598103934665603ull;
    for (int x : e) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
void enumerate_monomials(size_t nvars, size_t idx, int remaining, ExpVec& cur, std::vector<ExpVec>& out) {
    if (idx + 1 == nvars) {
        cur[idx] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[idx] = e;
        enumerate_monomials(nvars, idx + 1, remaining - e, cur, out);
    }
    cur[idx] = 0;
}
}  // namespace

std::vector<ExpVec> monomials_of_degree(size_t nvars, int d) {
    if (d < 0) return {};
    if (nvars == 0) return d == 0 ? std::vector<ExpVec>{ExpVec{}} : std::vector<ExpVec>{};
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    enumerate_monomials(nvars, 0, d, cur, out);
    return out;
}

const MultiPoly::VarList& MultiPoly::empty_vars() {
    static const VarList empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

MultiPoly::VarList MultiPoly::make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly MultiPoly::constant(VarList vars, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(ExpVec(p.nvars(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, size_t idx) {
    MultiPoly p(std::move(vars));
    if (idx >= p.nvars()) throw std::out_of_range("MultiPoly::variable: index out of range");
    ExpVec e(p.nvars(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarList vars, ExpVec exp, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (exp.size() != p.nvars()) throw std::invalid_argument("MultiPoly::monomial: exponent size mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
}

void MultiPoly::insert_term(ExpVec exp, GaussianRational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exp), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (is_universal() || o.is_universal()) return;
    if (*vars_ == *o.vars_) return;
    throw std::invalid_argument("MultiPoly: mismatched variable lists");
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return expvec_degree(terms_.rbegin()->first);  // graded order: last term has max degree
}

bool MultiPoly::is_homogeneous(int* degree) const {
    if (terms_.empty()) {
        if (degree) *degree = -1;
        return true;
    }
    int d = expvec_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (expvec_degree(e) != d) return false;
    if (degree) *degree = d;
    return true;
}

int MultiPoly::degree_in(std::span<const size_t> var_idxs) const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i : var_idxs) d += e[i];
        best = std::max(best, d);
    }
    return best;
}

GaussianRational MultiPoly::coefficient(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational MultiPoly::constant_term() const {
    return coefficient(ExpVec(nvars(), 0));
}

const std::pair<const ExpVec, GaussianRational>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o);
    if (o.is_universal() && !is_universal()) {
        insert_term(ExpVec(nvars(), 0), o.constant_term());
        return *this;
    }
    if (is_universal() && !o.is_universal()) {
        GaussianRational c = constant_term();
        *this = o;
        insert_term(ExpVec(nvars(), 0), c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o);
    if (o.is_universal() && !is_universal()) {
        insert_term(ExpVec(nvars(), 0), -o.constant_term());
        return *this;
    }
    if (is_universal() && !o.is_universal()) {
        GaussianRational c = constant_term();
        *this = -o;
        insert_term(ExpVec(nvars(), 0), c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    if (a.is_universal() && !b.is_universal()) return b.scaled(a.constant_term());
    if (b.is_universal() && !a.is_universal()) return a.scaled(b.constant_term());
    MultiPoly r(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
    ExpVec e(a.nvars());
    for (const auto& [ea, ca] : small.terms_) {
        for (const auto& [eb, cb] : big.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            GaussianRational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, GaussianRational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_universal() != b.is_universal()) {
        const MultiPoly& uni = a.is_universal() ? a : b;
        const MultiPoly& other = a.is_universal() ? b : a;
        if (other.total_degree() > 0) return false;
        return uni.constant_term() == other.constant_term();
    }
    a.require_same_vars(b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(size_t var_idx) const {
    if (var_idx >= nvars()) throw std::out_of_range("MultiPoly::derivative: index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_idx] == 0) continue;
        ExpVec de = e;
        de[var_idx] -= 1;
        r.terms_.emplace(std::move(de), c * GaussianRational(Rational(e[var_idx])));
    }
    return r;
}

MultiPoly MultiPoly::subst(std::span<const MultiPoly> images) const {
    if (images.size() != nvars()) throw std::invalid_argument("MultiPoly::subst: wrong image count");
    VarList target = images.empty() ? empty_vars() : images[0].vars();
    for (const MultiPoly& im : images) im.require_same_vars(images[0]);

    // cache images[i]^k
    std::vector<std::vector<MultiPoly>> powers(nvars());
    auto power_of = [&](size_t i, int k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, GaussianRational(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    MultiPoly result(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term = term * power_of(i, e[i]);
        }
        result += term;
    }
    return result;
}

GaussianRational MultiPoly::eval(std::span<const GaussianRational> point) const {
    if (point.size() != nvars()) throw std::invalid_argument("MultiPoly::eval: wrong point size");
    std::vector<std::vector<GaussianRational>> powers(nvars());
    auto power_of = [&](size_t i, int k) -> const GaussianRational& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(GaussianRational(1));
        while (static_cast<int>(cache.size()) <= k) {
            GaussianRational next = cache.back() * point[i];
            cache.push_back(std::move(next));
        }
        return cache[k];
    };
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= power_of(i, e[i]);
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::with_vars(VarList new_vars) const {
    constexpr size_t kAbsent = static_cast<size_t>(-1);
    std::vector<size_t> where(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(new_vars->begin(), new_vars->end(), (*vars_)[i]);
        where[i] = it == new_vars->end() ? kAbsent : static_cast<size_t>(it - new_vars->begin());
    }
    MultiPoly r(std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        ExpVec ne(r.nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] == kAbsent)
                throw std::invalid_argument("MultiPoly::with_vars: variable '" + (*vars_)[i] +
                                            "' occurs but is missing from the target list");
            ne[where[i]] = e[i];
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::map<ExpVec, MultiPoly, GradedLexLess> MultiPoly::split_by(std::span<const size_t> subset) const {
    std::map<ExpVec, MultiPoly, GradedLexLess> groups;
    for (const auto& [e, c] : terms_) {
        ExpVec key(subset.size());
        ExpVec rest = e;
        for (size_t j = 0; j < subset.size(); ++j) {
            key[j] = e[subset[j]];
            rest[subset[j]] = 0;
        }
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(std::move(key), MultiPoly(vars_)).first;
        it->second.insert_term(std::move(rest), c);
    }
    return groups;
}

MultiPoly MultiPoly::real_part() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (!c.re().is_zero()) r.terms_.emplace(e, GaussianRational(c.re()));
    return r;
}

MultiPoly MultiPoly::imag_part() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (!c.im().is_zero()) r.terms_.emplace(e, GaussianRational(c.im()));
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_term().second.inv());
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool needs_paren = cs.find('+') != std::string::npos ||
                           (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
        if (!first) os << " + ";
        first = false;
        bool has_var = expvec_degree(e) > 0;
        if (!has_var) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (c.is_one()) {
            // nothing
        } else if (needs_paren) {
            os << "(" << cs << ")*";
        } else {
            os << cs << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MultiPoly rem = f;
    MultiPoly quot(g.vars());
    const auto& [ge, gc] = g.leading_term();
    const GaussianRational gc_inv = gc.inv();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        ExpVec qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - ge[i];
            if (qe[i] < 0) return std::nullopt;
        }
        MultiPoly term = MultiPoly::monomial(g.vars(), std::move(qe), rc * gc_inv);
        quot += term;
        rem -= term * g;
    }
    return quot;
}

void MultiPolyBuilder::add_term(const ExpVec& exp, const GaussianRational& c) {
    poly_.insert_term(exp, c);
}

void MultiPolyBuilder::add(const MultiPoly& p) {
    poly_ += p;
}

void MultiPolyBuilder::add_scaled(const MultiPoly& p, const GaussianRational& c) {
    if (c.is_zero()) return;
    for (const auto& [e, v] : p.terms()) poly_.insert_term(e, v * c);
}

void MultiPolyBuilder::add_product(const MultiPoly& p, const MultiPoly& q, const GaussianRational& c) {
    if (c.is_zero()) return;
    ExpVec e(poly_.nvars());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            poly_.insert_term(e, cp * cq * c);
        }
    }
}

MultiPoly MultiPolyBuilder::take() {
    return std::move(poly_);
}

}  // namespace degenlocus

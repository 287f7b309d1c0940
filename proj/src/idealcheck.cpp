#include "degenlocus/idealcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "degenlocus/linalg.hpp"
#include "degenlocus/modular.hpp"
#include "degenlocus/prng.hpp"

namespace degenlocus {

SpaceDescriptor case_space(LocusCase c) {
    return c == LocusCase::full ? SpaceDescriptor(SpaceKind::full_complex, 3)
                                : SpaceDescriptor(SpaceKind::sym_complex, 3);
}

namespace {

std::vector<MultiPoly> build_c3_family(LocusCase c) {
    GenericMatrix gm = generic_matrix(case_space(c));
    return coefficient_family(c3(gm.entries), gm.vars, 3);
}

std::vector<MultiPoly> build_generators(LocusCase c) {
    GenericMatrix gm = generic_matrix(case_space(c));
    auto fam = coefficient_family(c3(gm.entries), gm.vars, 3);
    if (c == LocusCase::full) {
        auto fam4 = coefficient_family(c4(gm.entries), gm.vars, 3);
        fam.insert(fam.end(), fam4.begin(), fam4.end());
    }
    return fam;
}

}  // namespace

const std::vector<MultiPoly>& degree3_generators(LocusCase c) {
    static const std::vector<MultiPoly> full = build_generators(LocusCase::full);
    static const std::vector<MultiPoly> sym = build_generators(LocusCase::sym);
    return c == LocusCase::full ? full : sym;
}

const std::vector<MultiPoly>& c3_coordinate_functions(LocusCase c) {
    static const std::vector<MultiPoly> full = build_c3_family(LocusCase::full);
    static const std::vector<MultiPoly> sym = build_c3_family(LocusCase::sym);
    return c == LocusCase::full ? full : sym;
}

namespace {

struct MonomialBasis {
    std::vector<ExpVec> monomials;  // descending graded-lex
    std::unordered_map<ExpVec, size_t, ExpVecHash> index;

    MonomialBasis(size_t nvars, int d) {
        monomials = monomials_of_degree(nvars, d);
        index.reserve(monomials.size());
        for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    }
    size_t size() const { return monomials.size(); }
};

// Sparse row description of the degree-d component matrix of an ideal:
// one row per (generator, complementary monomial) pair.
struct IdealRows {
    size_t cols = 0;
    std::vector<std::vector<std::pair<size_t, GaussianRational>>> rows;
};

IdealRows ideal_rows(std::span<const MultiPoly> gens, int d, const MonomialBasis& basis) {
    if (gens.empty()) throw std::invalid_argument("ideal rows: no generators");
    const size_t nv = gens[0].nvars();
    IdealRows out;
    out.cols = basis.size();
    for (const MultiPoly& g : gens) {
        int gd = 0;
        if (!g.is_homogeneous(&gd) || g.is_zero())
            throw std::invalid_argument("ideal rows: generators must be nonzero homogeneous");
        if (gd > d) continue;
        for (const ExpVec& m : monomials_of_degree(nv, d - gd)) {
            std::vector<std::pair<size_t, GaussianRational>> row;
            row.reserve(g.num_terms());
            ExpVec e(nv);
            for (const auto& [ge, gc] : g.terms()) {
                for (size_t i = 0; i < nv; ++i) e[i] = ge[i] + m[i];
                row.emplace_back(basis.index.at(e), gc);
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

long exact_rank_of_rows(const IdealRows& rows) {
    bool real = true;
    for (const auto& sparse : rows.rows)
        for (const auto& [j, c] : sparse)
            if (!c.im().is_zero()) {
                real = false;
                break;
            }
    if (real) {
        IntRowSpace space(rows.cols);
        for (const auto& sparse : rows.rows) {
            std::vector<Rational> dense(rows.cols);
            for (const auto& [j, c] : sparse) dense[j] = c.re();
            space.insert_rational(dense);
        }
        return static_cast<long>(space.rank());
    }
    RowSpace space(rows.cols);
    for (const auto& sparse : rows.rows) {
        std::vector<GaussianRational> dense(rows.cols);
        for (const auto& [j, c] : sparse) dense[j] = c;
        space.insert(std::move(dense));
    }
    return static_cast<long>(space.rank());
}

// mod-p rank of the sparse rows; nullopt if some coefficient fails to reduce.
std::optional<long> modp_rank_of_rows(const IdealRows& rows, const PrimeField& f) {
    ModMatrix m(rows.rows.size(), rows.cols, f);
    for (size_t i = 0; i < rows.rows.size(); ++i)
        for (const auto& [j, c] : rows.rows[i]) {
            auto r = f.reduce(c);
            if (!r) return std::nullopt;
            m.at(i, j) = f.add(m.at(i, j), *r);
        }
    return static_cast<long>(m.echelonize());
}

}  // namespace

long ideal_component_dim(std::span<const MultiPoly> generators, int d) {
    if (generators.empty()) return 0;
    MonomialBasis basis(generators[0].nvars(), d);
    return exact_rank_of_rows(ideal_rows(generators, d, basis));
}

bool MembershipCertificate::verify() const {
    if (cofactors.size() != generators.size()) return false;
    MultiPoly sum(target.vars());
    for (size_t i = 0; i < generators.size(); ++i) sum += cofactors[i] * generators[i];
    return sum == target;
}

namespace {

// Shared description of a rational linear system, column-sparse.
struct RationalSystem {
    size_t rows = 0;
    std::vector<std::vector<std::pair<size_t, Rational>>> columns;
    std::vector<Rational> rhs;  // dense, length rows
};

std::optional<ModSolveResult> solve_mod(const RationalSystem& sys, const PrimeField& f) {
    ModMatrix aug(sys.rows, sys.columns.size() + 1, f);
    for (size_t c = 0; c < sys.columns.size(); ++c)
        for (const auto& [r, v] : sys.columns[c]) {
            auto red = f.reduce(v);
            if (!red) return std::nullopt;
            aug.at(r, c) = f.add(aug.at(r, c), *red);
        }
    for (size_t r = 0; r < sys.rows; ++r) {
        auto red = f.reduce(sys.rhs[r]);
        if (!red) return std::nullopt;
        aug.at(r, sys.columns.size()) = *red;
    }
    auto res = mod_solve(aug);
    return res;
}

// Multi-prime solve with rational reconstruction. The verifier must perform
// an exact check; reconstruction keeps adding primes until it passes.
std::optional<std::vector<Rational>> solve_reconstruct(
    const RationalSystem& sys, int max_primes, int* primes_used,
    const std::function<bool(const std::vector<Rational>&)>& verify) {
    const auto& fields = prime_fields();
    std::vector<CrtAccumulator> acc;
    std::vector<size_t> pivot_ref;
    size_t rank_ref = 0;
    int used = 0;
    for (const PrimeField& f : fields) {
        if (used >= max_primes) break;
        auto solved = solve_mod(sys, f);
        if (!solved || !solved->consistent) continue;
        if (acc.empty() || solved->pivot_cols.size() > rank_ref) {
            // first usable prime, or a strictly better rank (previous primes
            // were unlucky); restart accumulation
            acc.assign(sys.columns.size(), CrtAccumulator());
            pivot_ref = solved->pivot_cols;
            rank_ref = pivot_ref.size();
            used = 0;
        } else if (solved->pivot_cols != pivot_ref) {
            continue;  // incompatible pivot structure under this prime
        }
        for (size_t c = 0; c < sys.columns.size(); ++c) acc[c].add(solved->solution[c], f.p);
        ++used;
        if (primes_used) *primes_used = used;

        std::vector<Rational> candidate(sys.columns.size());
        bool all = true;
        for (size_t c = 0; c < sys.columns.size() && all; ++c) {
            auto rec = rational_reconstruct(acc[c].value(), acc[c].modulus());
            if (!rec)
                all = false;
            else
                candidate[c] = *rec;
        }
        if (all && verify(candidate)) return candidate;
    }
    return std::nullopt;
}

}  // namespace

MembershipOutcome membership_fixed_degree(const MultiPoly& target,
                                          std::span<const MultiPoly> generators) {
    MembershipOutcome out;
    if (generators.empty()) throw std::invalid_argument("membership_fixed_degree: no generators");
    int target_deg = 0, gen_deg = 0;
    if (!target.is_homogeneous(&target_deg) || target.is_zero())
        throw std::invalid_argument("membership_fixed_degree: target must be nonzero homogeneous");
    if (!generators[0].is_homogeneous(&gen_deg))
        throw std::invalid_argument("membership_fixed_degree: generators must be homogeneous");
    for (const MultiPoly& g : generators) {
        int d = 0;
        if (!g.is_homogeneous(&d) || d != gen_deg)
            throw std::invalid_argument("membership_fixed_degree: generators of equal degree expected");
    }
    if (target_deg < gen_deg)
        throw std::invalid_argument("membership_fixed_degree: target degree below generator degree");
    const int cof_deg = target_deg - gen_deg;
    const size_t nv = target.nvars();

    // real (rational) data expected throughout
    auto require_real = [](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (!c.im().is_zero())
                throw std::invalid_argument("membership_fixed_degree: rational coefficients expected");
    };
    require_real(target);
    for (const MultiPoly& g : generators) require_real(g);

    MonomialBasis basis(nv, target_deg);
    const auto cof_monomials = monomials_of_degree(nv, cof_deg);

    RationalSystem sys;
    sys.rows = basis.size();
    sys.rhs.assign(sys.rows, Rational(0));
    for (const auto& [e, c] : target.terms()) sys.rhs[basis.index.at(e)] = c.re();
    sys.columns.reserve(generators.size() * cof_monomials.size());
    ExpVec tmp(nv);
    for (const MultiPoly& g : generators)
        for (const ExpVec& m : cof_monomials) {
            std::vector<std::pair<size_t, Rational>> col;
            col.reserve(g.num_terms());
            for (const auto& [ge, gc] : g.terms()) {
                for (size_t i = 0; i < nv; ++i) tmp[i] = ge[i] + m[i];
                col.emplace_back(basis.index.at(tmp), gc.re());
            }
            sys.columns.push_back(std::move(col));
        }

    auto assemble = [&](const std::vector<Rational>& sol) {
        std::vector<MultiPoly> cofs;
        cofs.reserve(generators.size());
        size_t idx = 0;
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            MultiPolyBuilder b(target.vars());
            for (const ExpVec& m : cof_monomials) {
                const Rational& v = sol[idx++];
                if (!v.is_zero()) b.add_term(m, GaussianRational(v));
            }
            cofs.push_back(b.take());
        }
        return cofs;
    };

    int primes_used = 0;
    auto verify_primal = [&](const std::vector<Rational>& sol) {
        MembershipCertificate cert{target, {generators.begin(), generators.end()}, assemble(sol), cof_deg};
        return cert.verify();
    };
    auto sol = solve_reconstruct(sys, 12, &primes_used, verify_primal);
    out.primes_used = primes_used;
    if (sol) {
        out.in_component = true;
        out.certificate =
            MembershipCertificate{target, {generators.begin(), generators.end()}, assemble(*sol), cof_deg};
        return out;
    }

    // Dual (Farkas) system: y with A^T y = 0 and b^T y = 1.
    RationalSystem dual;
    dual.rows = sys.columns.size() + 1;
    dual.columns.assign(sys.rows, {});
    for (size_t c = 0; c < sys.columns.size(); ++c)
        for (const auto& [r, v] : sys.columns[c]) dual.columns[r].emplace_back(c, v);
    for (size_t r = 0; r < sys.rows; ++r)
        if (!sys.rhs[r].is_zero()) dual.columns[r].emplace_back(sys.columns.size(), sys.rhs[r]);
    dual.rhs.assign(dual.rows, Rational(0));
    dual.rhs.back() = Rational(1);

    auto verify_dual = [&](const std::vector<Rational>& y) {
        for (size_t c = 0; c < sys.columns.size(); ++c) {
            Rational dot(0);
            for (const auto& [r, v] : sys.columns[c]) dot += v * y[r];
            if (!dot.is_zero()) return false;
        }
        Rational dotb(0);
        for (size_t r = 0; r < sys.rows; ++r) dotb += sys.rhs[r] * y[r];
        return dotb == Rational(1);
    };
    auto witness = solve_reconstruct(dual, 12, nullptr, verify_dual);
    if (witness) {
        out.in_component = false;
        out.farkas_witness = *witness;
        return out;
    }
    throw std::logic_error("membership_fixed_degree: modular search exhausted without a certificate");
}

std::vector<std::pair<std::string, MultiPoly>> membership_targets(LocusCase c) {
    const auto& reps = full_case_reps();
    std::vector<std::pair<std::string, MultiPoly>> out;
    out.emplace_back("d2^3 - d3^2", reps.d2.pow(3) - reps.d3.pow(2));
    out.emplace_back("d2*c2U - d3*c1U", reps.d2 * reps.c2U - reps.d3 * reps.c1U);
    out.emplace_back("c2U^2 - d2*c1U^2", reps.c2U.pow(2) - reps.d2 * reps.c1U.pow(2));
    out.emplace_back("d3*c2U - d2^2*c1U", reps.d3 * reps.c2U - reps.d2.pow(2) * reps.c1U);
    if (c == LocusCase::sym) {
        // restrict to symmetric coordinates: a_jk and a_kj both map to s_jk
        GenericMatrix gm = generic_matrix(case_space(LocusCase::sym));
        std::vector<MultiPoly> images;
        images.reserve(9);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) images.push_back(gm.entries(j, k));
        for (auto& [name, poly] : out) poly = poly.subst(images);
    }
    return out;
}

namespace {

std::vector<int> stratum_multiplicities(LocusCase) {
    return {2, 1};
}

SpaceDescriptor sampling_space(LocusCase c) {
    // sym-case points are sampled real symmetric (orthogonal rational Cayley
    // conjugates), which keeps all evaluations rational
    return c == LocusCase::full ? SpaceDescriptor(SpaceKind::full_complex, 3)
                                : SpaceDescriptor(SpaceKind::sym_real, 3);
}

// Pool of stratum points whose generator-vanishing has been checked in exact
// arithmetic (c3 and c4 vanish identically at each point).
struct PointPool {
    LocusCase locus;
    SeededRng rng;
    std::vector<std::vector<GaussianRational>> coords;

    PointPool(LocusCase c, std::uint64_t seed) : locus(c), rng(seed) {}

    void ensure(size_t count) {
        SpaceDescriptor space = sampling_space(locus);
        while (coords.size() < count) {
            DegeneratePoint pt = sample_degenerate_random(space, stratum_multiplicities(locus), rng);
            if (!c3(pt.matrix).is_zero() || !c4(pt.matrix).is_zero())
                throw std::logic_error("stratum point fails exact generator vanishing");
            // full-case coordinates are the 9 entries; sym-case points are
            // read in the 6 symmetric coordinates
            if (locus == LocusCase::full) {
                coords.push_back(pt.coordinates());
            } else {
                std::vector<GaussianRational> v;
                for (int j = 0; j < 3; ++j)
                    for (int k = j; k < 3; ++k) v.push_back(pt.matrix(j, k));
                coords.push_back(std::move(v));
            }
        }
    }
};

// Evaluation matrix mod p of the degree-d monomials at the pooled points.
std::optional<long> modp_eval_rank(const std::vector<std::vector<GaussianRational>>& pts,
                                   const MonomialBasis& basis, int d, const PrimeField& f) {
    if (pts.empty()) return 0;
    const size_t nv = pts[0].size();
    ModMatrix m(pts.size(), basis.size(), f);
    std::vector<std::vector<std::uint32_t>> pow(nv);
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t v = 0; v < nv; ++v) {
            auto red = f.reduce(pts[i][v]);
            if (!red) return std::nullopt;
            pow[v].assign(static_cast<size_t>(d) + 1, 1);
            for (int e = 1; e <= d; ++e) pow[v][e] = f.mul(pow[v][e - 1], *red);
        }
        for (size_t j = 0; j < basis.size(); ++j) {
            std::uint32_t val = 1;
            const ExpVec& e = basis.monomials[j];
            for (size_t v = 0; v < nv; ++v)
                if (e[v]) val = f.mul(val, pow[v][e[v]]);
            m.at(i, j) = val;
        }
    }
    return static_cast<long>(m.echelonize());
}

}  // namespace

long eval_rank_on_stratum(const SpaceDescriptor& space, const std::vector<int>& multiplicities,
                          int d, int num_points, std::uint64_t seed) {
    SeededRng rng(seed);
    MonomialBasis basis(space.dim(), d);
    // real coordinates (hermitian / sym_real samples) go through the faster
    // fraction-free integer reduction; complex ones use field elimination
    const bool real_coords =
        space.kind == SpaceKind::hermitian || space.kind == SpaceKind::sym_real;
    RowSpace rows(basis.size());
    IntRowSpace int_rows(basis.size());
    auto rank_now = [&] { return real_coords ? int_rows.rank() : rows.rank(); };

    for (int p = 0; p < num_points; ++p) {
        DegeneratePoint pt = sample_degenerate_random(space, multiplicities, rng);
        auto coords = pt.coordinates();
        if (real_coords) {
            std::vector<std::vector<Rational>> pow(coords.size());
            for (size_t v = 0; v < coords.size(); ++v) {
                pow[v].assign(static_cast<size_t>(d) + 1, Rational(1));
                for (int e = 1; e <= d; ++e) pow[v][e] = pow[v][e - 1] * coords[v].re();
            }
            std::vector<Rational> row(basis.size());
            for (size_t j = 0; j < basis.size(); ++j) {
                Rational val(1);
                const ExpVec& e = basis.monomials[j];
                for (size_t v = 0; v < coords.size(); ++v)
                    if (e[v]) val *= pow[v][e[v]];
                row[j] = val;
            }
            int_rows.insert_rational(row);
        } else {
            std::vector<std::vector<GaussianRational>> pow(coords.size());
            for (size_t v = 0; v < coords.size(); ++v) {
                pow[v].assign(static_cast<size_t>(d) + 1, GaussianRational(1));
                for (int e = 1; e <= d; ++e) pow[v][e] = pow[v][e - 1] * coords[v];
            }
            std::vector<GaussianRational> row(basis.size());
            for (size_t j = 0; j < basis.size(); ++j) {
                GaussianRational val(1);
                const ExpVec& e = basis.monomials[j];
                for (size_t v = 0; v < coords.size(); ++v)
                    if (e[v]) val *= pow[v][e[v]];
                row[j] = val;
            }
            rows.insert(std::move(row));
        }
        if (rank_now() == basis.size()) break;  // saturated
    }
    return static_cast<long>(rank_now());
}

QuotientDims quotient_hilbert(LocusCase c, int d_max, std::uint64_t seed) {
    const auto& gens = degree3_generators(c);
    const size_t nv = gens[0].nvars();
    QuotientDims out;
    out.certified = true;
    PointPool pool(c, seed);

    for (int d = 0; d <= d_max; ++d) {
        MonomialBasis basis(nv, d);
        const long n_d = static_cast<long>(basis.size());
        if (d < 3) {
            // generators are homogeneous of degree 3; no lower-degree elements
            out.ideal_rank.push_back(0);
            out.quotient.push_back(n_d);
            continue;
        }
        IdealRows rows = ideal_rows(gens, d, basis);
        const size_t work = rows.rows.size() * basis.size();
        if (work <= 30000) {
            long rank = exact_rank_of_rows(rows);
            out.ideal_rank.push_back(rank);
            out.quotient.push_back(n_d - rank);
            continue;
        }
        // certified two-sided modular bound
        bool closed = false;
        for (const PrimeField& f : prime_fields()) {
            auto r_ideal = modp_rank_of_rows(rows, f);
            if (!r_ideal) continue;
            size_t pts = static_cast<size_t>(n_d - *r_ideal) + (n_d - *r_ideal) / 2 + 16;
            for (int attempt = 0; attempt < 3 && !closed; ++attempt) {
                pool.ensure(pts);
                auto r_eval = modp_eval_rank(pool.coords, basis, d, f);
                if (!r_eval) break;
                if (*r_ideal + *r_eval == n_d) {
                    out.ideal_rank.push_back(*r_ideal);
                    out.quotient.push_back(*r_eval);
                    closed = true;
                } else if (*r_eval == static_cast<long>(pool.coords.size())) {
                    pts *= 2;  // rank limited by the number of points
                } else {
                    break;  // bounds disagree under this prime; try the next one
                }
            }
            if (closed) break;
        }
        if (!closed) {
            // last resort: exact elimination
            long rank = exact_rank_of_rows(rows);
            out.ideal_rank.push_back(rank);
            out.quotient.push_back(n_d - rank);
        }
    }
    return out;
}

namespace {

LaurentPoly::VarList full_qvars() {
    static const LaurentPoly::VarList v = MultiPoly::make_vars({"q1", "q2"});
    return v;
}

LaurentPoly::VarList sym_qvars() {
    static const LaurentPoly::VarList v = MultiPoly::make_vars({"q"});
    return v;
}

LaurentPoly lq(const LaurentPoly::VarList& vars, std::vector<int> exp, long num, long den = 1) {
    return LaurentPoly::monomial(vars, std::move(exp), Rational(num, den));
}

// multiplicity series numerator/denominator in the full case with the marker
// z := q1^2 q2 replaced by the Laurent monomial `z`
TruncSeries full_mult_series(const std::vector<int>& z, size_t order, const LaurentPoly::VarList& vars) {
    LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
    LaurentPoly zm = LaurentPoly::monomial(vars, z, Rational(1));
    std::vector<LaurentPoly> num = {one, -one, one + zm, -zm};
    std::vector<std::vector<LaurentPoly>> den = {{one, -one}, {one, -one}, {one, -zm}};
    return series_from_rational(num, den, order, vars);
}

// sym-case multiplicity series with marker q^2 replaced by monomial exponent e
TruncSeries sym_mult_series(int marker_exp, size_t order, const LaurentPoly::VarList& vars) {
    LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
    LaurentPoly zm = lq(vars, {marker_exp}, 1);
    // (1/(1-t)) * ( 1/((1-t)(1-z t)) - t )
    std::vector<LaurentPoly> inner_num = {one};
    std::vector<std::vector<LaurentPoly>> inner_den = {{one, -one}, {one, -zm}};
    TruncSeries inner = series_from_rational(inner_num, inner_den, order, vars);
    TruncSeries t_series = TruncSeries::from_coefficients({LaurentPoly(vars), one}, order, vars);
    inner -= t_series;
    std::vector<std::vector<LaurentPoly>> outer_den = {{one, -one}};
    TruncSeries outer = series_from_rational({one}, outer_den, order, vars);
    return inner * outer;
}

}  // namespace

TruncSeries multiplicity_series(LocusCase c, size_t order) {
    if (c == LocusCase::full) return full_mult_series({2, 1}, order, full_qvars());
    return sym_mult_series(2, order, sym_qvars());
}

TruncSeries multiplicity_series_alt(LocusCase c, size_t order) {
    if (c == LocusCase::full) {
        // 1/((1-t)^2 (1-zt)) - t/(1-t)
        auto vars = full_qvars();
        LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
        LaurentPoly zm = lq(vars, {2, 1}, 1);
        TruncSeries a = series_from_rational({one}, {{one, -one}, {one, -one}, {one, -zm}}, order, vars);
        TruncSeries b = series_from_rational({LaurentPoly(vars), one}, {{one, -one}}, order, vars);
        return a - b;
    }
    // 1/((1-t)^2 (1-q^2 t)) - t/(1-t)
    auto vars = sym_qvars();
    LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
    LaurentPoly zm = lq(vars, {2}, 1);
    TruncSeries a = series_from_rational({one}, {{one, -one}, {one, -one}, {one, -zm}}, order, vars);
    TruncSeries b = series_from_rational({LaurentPoly(vars), one}, {{one, -one}}, order, vars);
    return a - b;
}

TruncSeries character_series(LocusCase c, size_t order) {
    if (c == LocusCase::full) {
        auto vars = full_qvars();
        // q1 -> (1,0), q2 -> (0,1), q3 := q1^-1 q2^-1 -> (-1,-1)
        const std::vector<std::vector<int>> q = {{1, 0}, {0, 1}, {-1, -1}};
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int signs[6] = {1, -1, -1, 1, 1, -1};
        TruncSeries numerator(order, vars);
        for (int p = 0; p < 6; ++p) {
            const auto& a = q[perms[p][0]];
            const auto& b = q[perms[p][1]];
            // prefix q_{pi(1)}^2 q_{pi(2)}
            std::vector<int> pre = {2 * a[0] + b[0], 2 * a[1] + b[1]};
            // marker z = q_{pi(1)}^2 q_{pi(2)}
            TruncSeries m = full_mult_series(pre, order, vars);
            LaurentPoly prefix = lq(vars, pre, signs[p]);
            TruncSeries scaled(order, vars);
            for (size_t d = 0; d <= order; ++d) scaled.coeff(d) = prefix * m.coeff(d);
            numerator += scaled;
        }
        // Weyl denominator (q1-q2)(q1-q3)(q2-q3)
        LaurentPoly q1 = lq(vars, {1, 0}, 1), q2 = lq(vars, {0, 1}, 1), q3 = lq(vars, {-1, -1}, 1);
        LaurentPoly weyl = (q1 - q2) * (q1 - q3) * (q2 - q3);
        TruncSeries h(order, vars);
        for (size_t d = 0; d <= order; ++d) h.coeff(d) = laurent_divide_exact(numerator.coeff(d), weyl);
        return h;
    }
    // sym case: half powers cleared by q -> q^2, so the module marker q^2
    // becomes q^4 and the Weyl denominator is q - q^-1
    auto vars = sym_qvars();
    TruncSeries m_pos = sym_mult_series(4, order, vars);
    TruncSeries m_neg = sym_mult_series(-4, order, vars);
    LaurentPoly qp = lq(vars, {1}, 1), qn = lq(vars, {-1}, 1);
    TruncSeries numerator(order, vars);
    for (size_t d = 0; d <= order; ++d) numerator.coeff(d) = qp * m_pos.coeff(d) - qn * m_neg.coeff(d);
    LaurentPoly weyl = qp - qn;
    TruncSeries h(order, vars);
    for (size_t d = 0; d <= order; ++d) h.coeff(d) = laurent_divide_exact(numerator.coeff(d), weyl);
    return h;
}

std::vector<Rational> hilbert_from_character(LocusCase c, size_t order) {
    return character_series(c, order).specialize_q_to_one();
}

std::vector<Rational> hilbert_closed_form(LocusCase c, size_t order) {
    auto r = [](long v) { return Rational(v); };
    if (c == LocusCase::full) {
        std::vector<Rational> num = {r(1), r(3), r(6), r(-10), r(10), r(-5), r(1)};
        std::vector<std::vector<Rational>> den(6, {r(1), r(-1)});
        return series_from_rational(num, den, order).specialize_q_to_one();
    }
    std::vector<Rational> num = {r(1), r(2), r(3), r(-3), r(1)};
    std::vector<std::vector<Rational>> den(4, {r(1), r(-1)});
    return series_from_rational(num, den, order).specialize_q_to_one();
}

bool weight_multiplicity_check(int d, int num_points, std::uint64_t seed) {
    if (d < 0 || d > 3) throw std::invalid_argument("weight_multiplicity_check: d must be 0..3");
    SpaceDescriptor space(SpaceKind::full_complex, 3);
    auto vars = MultiPoly::make_vars(space.coordinate_names());

    // group the degree-d monomials by torus weight
    MonomialBasis basis(9, d);
    std::map<std::vector<long>, std::vector<size_t>> groups;
    for (size_t j = 0; j < basis.size(); ++j) {
        MultiPoly mono = MultiPoly::monomial(vars, basis.monomials[j], GaussianRational(1));
        auto w = torus_weight(mono, space);
        groups[*w].push_back(j);
    }

    // expected dimensions: q-coefficients of the character series at t^d
    TruncSeries h = character_series(LocusCase::full, static_cast<size_t>(d));
    std::map<std::vector<long>, Rational> expected;
    for (const auto& [e, coeff] : h.coeff(static_cast<size_t>(d)).terms())
        expected.emplace(std::vector<long>(e.begin(), e.end()), coeff);

    PointPool pool(LocusCase::full, seed);
    pool.ensure(static_cast<size_t>(num_points));

    Rational total(0);
    for (const auto& [w, members] : groups) {
        RowSpace rows(members.size());
        for (const auto& coords : pool.coords) {
            std::vector<GaussianRational> row(members.size());
            for (size_t c = 0; c < members.size(); ++c) {
                GaussianRational val(1);
                const ExpVec& e = basis.monomials[members[c]];
                for (size_t v = 0; v < 9; ++v)
                    for (int rep = 0; rep < e[v]; ++rep) val *= coords[v];
                row[c] = val;
            }
            rows.insert(std::move(row));
            if (rows.rank() == members.size()) break;
        }
        Rational got(static_cast<long>(rows.rank()));
        auto it = expected.find(w);
        Rational want = it == expected.end() ? Rational(0) : it->second;
        if (got != want) return false;
        total += got;
    }
    // the per-weight dimensions must add up to the Hilbert coefficient
    return total == hilbert_closed_form(LocusCase::full, static_cast<size_t>(d)).back();
}

bool monomial_kernel_check(int total_degree_bound) {
    // x1..x4 carry the bidegrees of z^2, z^3, D, zD: (N-degree, D-degree) =
    // (2,0), (3,0), (1,1), (2,1).
    auto vars = MultiPoly::make_vars({"x1", "x2", "x3", "x4"});
    auto x = [&](size_t i) { return MultiPoly::variable(vars, i); };
    const std::vector<MultiPoly> rel = {
        x(0).pow(3) - x(1).pow(2),
        x(0) * x(3) - x(1) * x(2),
        x(3).pow(2) - x(0) * x(2).pow(2),
        x(1) * x(3) - x(0).pow(2) * x(2),
    };
    const int ndeg[4] = {2, 3, 1, 2};
    const int ddeg[4] = {0, 0, 1, 1};
    auto bidegree = [&](const ExpVec& e) {
        int nd = 0, dd = 0;
        for (int i = 0; i < 4; ++i) {
            nd += e[i] * ndeg[i];
            dd += e[i] * ddeg[i];
        }
        return std::pair<int, int>(nd, dd);
    };
    // enumerate all monomials with N-degree <= bound
    std::map<std::pair<int, int>, std::vector<ExpVec>> pieces;
    for (int e1 = 0; 2 * e1 <= total_degree_bound; ++e1)
        for (int e2 = 0; 2 * e1 + 3 * e2 <= total_degree_bound; ++e2)
            for (int e3 = 0; 2 * e1 + 3 * e2 + e3 <= total_degree_bound; ++e3)
                for (int e4 = 0; 2 * e1 + 3 * e2 + e3 + 2 * e4 <= total_degree_bound; ++e4) {
                    ExpVec e = {e1, e2, e3, e4};
                    pieces[bidegree(e)].push_back(e);
                }

    auto basis_monomial_in = [&](int nd, int dd) -> std::optional<ExpVec> {
        // the standard monomials x3^i x4, x1^i x3^j, x1^i x2 x3^j cover
        // z^k D^l for k = 1 / k even / k odd >= 3 respectively
        const int k = nd - dd, l = dd;
        if (k < 0 || (k == 1 && l == 0)) return std::nullopt;
        if (k == 1) return ExpVec{0, 0, l - 1, 1};
        if (k % 2 == 0) return ExpVec{k / 2, 0, l, 0};
        return ExpVec{(k - 3) / 2, 1, l, 0};
    };

    for (const auto& [bid, monos] : pieces) {
        const auto [nd, dd] = bid;
        std::unordered_map<ExpVec, size_t, ExpVecHash> index;
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

        RowSpace rows(monos.size());
        for (size_t r = 0; r < rel.size(); ++r) {
            int rn = 0, rd = 0;
            for (const auto& [e, c] : rel[r].terms()) {
                auto [a, b] = bidegree(e);
                rn = a;
                rd = b;
                break;
            }
            if (rn > nd || rd > dd) continue;
            // multipliers of complementary bidegree
            auto it = pieces.find({nd - rn, dd - rd});
            if (it == pieces.end()) continue;
            for (const ExpVec& m : it->second) {
                std::vector<GaussianRational> row(monos.size());
                for (const auto& [e, c] : rel[r].terms()) {
                    ExpVec prod(4);
                    for (int i = 0; i < 4; ++i) prod[i] = e[i] + m[i];
                    row[index.at(prod)] = c;
                }
                rows.insert(std::move(row));
            }
        }
        const long quot = static_cast<long>(monos.size()) - static_cast<long>(rows.rank());
        const int k = nd - dd, l = dd;
        const long expected = (k >= 0 && !(k == 1 && l == 0)) ? 1 : 0;
        if (quot != expected) return false;

        auto bm = basis_monomial_in(nd, dd);
        if (expected == 1) {
            if (!bm || !index.count(*bm)) return false;
            // the basis monomial must be nonzero in the quotient
            std::vector<GaussianRational> row(monos.size());
            row[index.at(*bm)] = GaussianRational(1);
            RowSpace probe = rows;
            if (!probe.insert(std::move(row))) return false;
        } else if (bm && index.count(*bm)) {
            return false;  // a basis monomial landed in a zero piece
        }
    }
    return true;
}

SpanReport span_equality_check(LocusCase c) {
    SpanReport rep;
    rep.expected = c == LocusCase::full ? 20 : 7;
    const auto& gens = degree3_generators(c);
    GenericMatrix gm = generic_matrix(case_space(c));
    auto wedge = wedge_P(gm.entries, 1);

    std::map<ExpVec, size_t, GradedLexLess> col;
    auto scan = [&](const MultiPoly& p) {
        for (const auto& [e, cf] : p.terms())
            if (!col.count(e)) col.emplace(e, col.size());
    };
    for (const auto& g : gens) scan(g);
    std::vector<MultiPoly> wedge_base;
    for (const auto& w : wedge) {
        MultiPoly p = w.with_vars(gm.vars);
        scan(p);
        wedge_base.push_back(std::move(p));
    }

    auto insert_all = [&](RowSpace& rs, const std::vector<MultiPoly>& polys) {
        for (const auto& p : polys) {
            std::vector<GaussianRational> row(col.size());
            for (const auto& [e, cf] : p.terms()) row[col.at(e)] = cf;
            rs.insert(std::move(row));
        }
    };
    {
        RowSpace rs(col.size());
        insert_all(rs, gens);
        rep.generator_rank = static_cast<long>(rs.rank());
    }
    {
        RowSpace rs(col.size());
        insert_all(rs, wedge_base);
        rep.wedge_rank = static_cast<long>(rs.rank());
    }
    {
        RowSpace rs(col.size());
        insert_all(rs, wedge_base);
        insert_all(rs, gens);
        rep.stacked_rank = static_cast<long>(rs.rank());
    }
    rep.pass = rep.generator_rank == rep.expected && rep.wedge_rank == rep.expected &&
               rep.stacked_rank == rep.expected;
    return rep;
}

RelationsReport relations_on_M1_check(std::uint64_t seed, int samples_per_case) {
    RelationsReport rep;
    rep.samples_per_case = samples_per_case;
    rep.pass = true;

    const auto& reps = full_case_reps();
    SeededRng rng(seed);
    for (LocusCase c : {LocusCase::full, LocusCase::sym}) {
        SpaceDescriptor space = sampling_space(c);
        for (int s = 0; s < samples_per_case; ++s) {
            DegeneratePoint pt = sample_degenerate_random(space, {2, 1}, rng);
            const QMat& a = pt.matrix;
            if (!c3(a).is_zero()) rep.failures.push_back("c3 nonzero on a degenerate sample");
            if (!c4(a).is_zero()) rep.failures.push_back("c4 nonzero on a degenerate sample");
            auto d = d_invariants(a);
            if (d[1] * d[1] * d[1] != d[2] * d[2])
                rep.failures.push_back("d2^3 != d3^2 on a degenerate sample");
            QMat lhs = c1(a).scaled(d[2]);
            QMat rhs = c2(a).scaled(d[1]);
            if (lhs != rhs) rep.failures.push_back("d3 c1 != d2 c2 on a degenerate sample");
            if (c == LocusCase::full) {
                std::vector<GaussianRational> coords(9);
                for (size_t i = 0; i < 3; ++i)
                    for (size_t j = 0; j < 3; ++j) coords[i * 3 + j] = a(i, j);
                GaussianRational l = reps.d3.eval(coords) * reps.c1U.eval(coords);
                GaussianRational r = reps.d2.eval(coords) * reps.c2U.eval(coords);
                if (l != r) rep.failures.push_back("d3 c1U != d2 c2U on a degenerate sample");
            }
            if (!rep.failures.empty()) {
                rep.pass = false;
                return rep;
            }
        }
    }

    // negative control: diag(1,2,3) has three distinct eigenvalues
    QMat diag(3, 3);
    diag(0, 0) = GaussianRational(1);
    diag(1, 1) = GaussianRational(2);
    diag(2, 2) = GaussianRational(3);
    auto d = d_invariants(diag);
    rep.negative_control_pass = (d[1] * d[1] * d[1] != d[2] * d[2]);
    rep.pass = rep.pass && rep.negative_control_pass;
    return rep;
}

}  // namespace degenlocus

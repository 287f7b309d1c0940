#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "degenlocus/covariants.hpp"
#include "degenlocus/idealcheck.hpp"
#include "degenlocus/json_io.hpp"
#include "degenlocus/spaces.hpp"
#include "degenlocus/subdisc.hpp"

namespace py = pybind11;
namespace dl = degenlocus;

namespace {

dl::MatrixFile matrix_from(const std::vector<std::vector<std::string>>& entries,
                           const std::string& space) {
    nlohmann::json j;
    j["space"] = space;
    j["n"] = entries.size();
    j["entries"] = entries;
    return dl::matrix_from_json(j);
}

dl::LocusCase case_from(const std::string& name) {
    if (name == "full") return dl::LocusCase::full;
    if (name == "sym") return dl::LocusCase::sym;
    throw std::invalid_argument("case must be 'full' or 'sym'");
}

std::vector<long> longs(const std::vector<dl::Rational>& v) {
    std::vector<long> out;
    for (const auto& r : v) out.push_back(static_cast<long>(r.numerator().get_si()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_degenlocus, m) {
    m.doc() = "exact covariants, subdiscriminants and vanishing-ideal checks for matrices "
              "with a bounded number of distinct eigenvalues";

    m.def(
        "sdisc",
        [](const std::vector<std::vector<std::string>>& entries, const std::string& space, int k) {
            auto mf = matrix_from(entries, space);
            return dl::sdisc(mf.matrix, k).str();
        },
        py::arg("entries"), py::arg("space"), py::arg("k"),
        "subdiscriminant of an exact matrix; entries are scalar strings like '1/2+3i'");

    m.def(
        "sdisc_from_eigenvalues",
        [](const std::vector<std::string>& eigs, int k) {
            std::vector<dl::Rational> parsed;
            for (const auto& s : eigs) parsed.push_back(dl::Rational::parse(s));
            return dl::sdisc_def(parsed, k).str();
        },
        py::arg("eigenvalues"), py::arg("k"));

    m.def(
        "min_poly_degree",
        [](const std::vector<std::vector<std::string>>& entries, const std::string& space) {
            return dl::min_poly_degree(matrix_from(entries, space).matrix);
        },
        py::arg("entries"), py::arg("space") = "full");

    m.def(
        "sample_degenerate",
        [](const std::string& space, int n, const std::vector<int>& multiplicities,
           const std::vector<std::string>& eigenvalues, std::uint64_t seed) {
            std::vector<dl::Rational> eigs;
            for (const auto& s : eigenvalues) eigs.push_back(dl::Rational::parse(s));
            auto desc = dl::SpaceDescriptor::parse(space, n);
            auto pt = dl::sample_degenerate(desc, multiplicities, eigs, seed);
            return dl::matrix_to_json(pt.matrix, desc).dump();
        },
        py::arg("space"), py::arg("n"), py::arg("multiplicities"), py::arg("eigenvalues"),
        py::arg("seed"), "returns the matrix JSON of an exact degenerate sample");

    m.def("weyl_dim", &dl::weyl_dim, py::arg("n"), py::arg("k"));

    m.def(
        "hilbert_series",
        [](const std::string& c, int dmax) {
            return longs(dl::hilbert_closed_form(case_from(c), static_cast<size_t>(dmax)));
        },
        py::arg("case"), py::arg("dmax"), "closed-form Hilbert coefficients of the degenerate locus");

    m.def(
        "quotient_dimensions",
        [](const std::string& c, int dmax, std::uint64_t seed) {
            auto q = dl::quotient_hilbert(case_from(c), dmax, seed);
            if (!q.certified) throw std::runtime_error("quotient dimensions could not be certified");
            return q.quotient;
        },
        py::arg("case"), py::arg("dmax"), py::arg("seed") = 1,
        "rank-computed quotient dimensions (certified exact)");

    m.def(
        "sos_certificate_summary",
        [](int n, int samples, std::uint64_t seed) {
            auto cert = dl::sos_certificate(n, samples, seed);
            py::dict d;
            d["n"] = cert.n;
            d["count"] = cert.terms.size();
            d["bound"] = cert.square_bound;
            d["verified"] = cert.verified;
            d["symbolic"] = cert.symbolic;
            return d;
        },
        py::arg("n"), py::arg("samples") = 0, py::arg("seed") = 1);

    m.def(
        "covariant_c",
        [](const std::vector<std::vector<std::string>>& entries, const std::string& space) {
            auto mf = matrix_from(entries, space);
            return dl::poly_to_json(dl::c_full(mf.matrix)).dump();
        },
        py::arg("entries"), py::arg("space"),
        "JSON of the degree-n covariant det(x | Ax | ... | A^(n-1) x)");

    m.def("monomial_kernel_check", &dl::monomial_kernel_check, py::arg("total_degree_bound") = 12);

    m.def(
        "relations_check",
        [](std::uint64_t seed, int samples) {
            auto rep = dl::relations_on_M1_check(seed, samples);
            return rep.pass && rep.negative_control_pass;
        },
        py::arg("seed") = 1, py::arg("samples") = 20);
}

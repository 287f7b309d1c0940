#include "degenlocus/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace degenlocus {

MatrixFile matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix json: object expected");
    if (!j.contains("space") || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix json: fields space, n, entries required");
    SpaceDescriptor space = SpaceDescriptor::parse(j.at("space").get<std::string>(), j.at("n").get<int>());
    const auto& entries = j.at("entries");
    const size_t n = static_cast<size_t>(space.n);
    if (!entries.is_array() || entries.size() != n)
        throw std::invalid_argument("matrix json: entries must be an n x n array");
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) {
        const auto& row = entries.at(i);
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix json: entries must be an n x n array");
        for (size_t k = 0; k < n; ++k) m(i, k) = GaussianRational::parse(row.at(k).get<std::string>());
    }
    if (!lies_in_space(m, space))
        throw std::invalid_argument("matrix json: entries violate the declared space '" + space.token() +
                                    "'");
    return MatrixFile{space, std::move(m)};
}

MatrixFile load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in);  // throws with byte position on bad input
    return matrix_from_json(j);
}

nlohmann::json qmat_entries_json(const QMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json matrix_to_json(const QMat& m, const SpaceDescriptor& space) {
    nlohmann::json j;
    j["space"] = space.token();
    j["n"] = space.n;
    j["entries"] = qmat_entries_json(m);
    return j;
}

nlohmann::json poly_to_json(const MultiPoly& p) {
    nlohmann::json j;
    j["vars"] = p.var_names();
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) {
        std::ostringstream key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key << ",";
            key << e[i];
        }
        terms[key.str()] = c.str();
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace degenlocus

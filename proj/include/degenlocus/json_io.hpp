#ifndef DEGENLOCUS_JSON_IO_HPP
#define DEGENLOCUS_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "degenlocus/matrix.hpp"
#include "degenlocus/spaces.hpp"

namespace degenlocus {

struct MatrixFile {
    SpaceDescriptor space;
    QMat matrix;
};

// Matrix JSON: {"space":"her|symr|full|symc","n":3,"entries":[[...strings...]]}
// with scalars in the canonical "a/b" / "a/b+c/di" encodings. The declared
// space is validated entrywise (exact Hermitian/symmetry checks).
MatrixFile matrix_from_json(const nlohmann::json& j);
MatrixFile load_matrix_file(const std::string& path);
nlohmann::json matrix_to_json(const QMat& m, const SpaceDescriptor& space);

// Polynomials: {"vars":[...], "terms":{"e1,e2,...":"coeff", ...}}
nlohmann::json poly_to_json(const MultiPoly& p);

nlohmann::json qmat_entries_json(const QMat& m);

}  // namespace degenlocus

#endif

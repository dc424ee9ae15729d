#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gybe/matrix_core.hpp"

namespace gybe {

// {"dim": n, "entries": [[re, im], ...]} with entries in row-major order.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// One "i,j,re,im" row per entry, row-major, no header.
void write_matrix_csv(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix_csv(std::istream& is);

}  // namespace gybe

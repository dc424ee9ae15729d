#include "gybe/matrix_io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gybe {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix_to_json: matrix is not square");
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<long long>();
  if (dim < 1) throw DimensionMismatch("matrix_from_json: dim must be >= 1");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionMismatch("matrix_from_json: expected dim^2 entries");
  }
  require_within_cap(static_cast<std::size_t>(dim), "matrix_from_json");
  ComplexMatrix m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++k) {
      const auto& e = entries[k];
      const Complex z(e.at(0).get<double>(), e.at(1).get<double>());
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("matrix_from_json: non-finite entry");
      }
      m(r, c) = z;
    }
  }
  return m;
}

void write_matrix_csv(std::ostream& os, const ComplexMatrix& m) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << i << ',' << j << ',' << m(i, j).real() << ',' << m(i, j).imag() << '\n';
    }
  }
  os.flags(flags);
  os.precision(prec);
}

ComplexMatrix read_matrix_csv(std::istream& is) {
  struct Row {
    long long i, j;
    double re, im;
  };
  std::vector<Row> rows;
  long long max_index = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Row r{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> r.i >> c1 >> r.j >> c2 >> r.re >> c3 >> r.im) || c1 != ',' || c2 != ',' ||
        c3 != ',' || r.i < 0 || r.j < 0) {
      throw DomainError("read_matrix_csv: malformed row '" + line + "'");
    }
    max_index = std::max({max_index, r.i, r.j});
    rows.push_back(r);
  }
  if (max_index < 0) throw DimensionMismatch("read_matrix_csv: empty input");
  const long long dim = max_index + 1;
  require_within_cap(static_cast<std::size_t>(dim), "read_matrix_csv");
  if (rows.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionMismatch("read_matrix_csv: expected dim^2 rows");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& r : rows) m(r.i, r.j) = Complex(r.re, r.im);
  return m;
}

}  // namespace gybe

#include "liekit/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace liekit {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  require_square(m, "matrix_to_json");
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

namespace {

double finite_number(const nlohmann::json& v) {
  if (!v.is_number()) throw FormatError("matrix: entry component is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError("matrix: non-finite entry");
  return x;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw FormatError("matrix: expected object with \"dim\" and \"entries\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw FormatError("matrix: \"dim\" must be a positive integer");
  const auto n = static_cast<Eigen::Index>(j["dim"].get<long long>());
  const auto& rows = j["entries"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw FormatError("matrix: row count does not match dim");
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw FormatError("matrix: not square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2) throw FormatError("matrix: entry must be [re, im]");
      m(i, k) = cplx(finite_number(e[0]), finite_number(e[1]));
    }
  }
  return m;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace liekit

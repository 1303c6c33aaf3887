#include "sptri/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "sptri/errors.hpp"

namespace sptri
{

MatrixFormat parse_matrix_format(std::string const &name)
{
  if (name == "matrixmarket" || name == "matrix-market" || name == "mm")
    return MatrixFormat::matrix_market;
  if (name == "json")
    return MatrixFormat::json;
  throw ParseError("unknown matrix format '" + name + "'");
}

nlohmann::ordered_json matrix_to_json(SparseMatQ const &m)
{
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (auto const &e : m.entries())
    entries.push_back({e.row, e.col, to_string(e.value)});
  j["entries"] = std::move(entries);
  return j;
}

SparseMatQ matrix_from_json(nlohmann::json const &j)
{
  try {
    std::size_t const rows = j.at("rows").get<std::size_t>();
    std::size_t const cols = j.at("cols").get<std::size_t>();
    std::vector<SparseMatQ::Entry> entries;
    for (auto const &e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError("matrix entry must be [row, col, \"num/den\"]");
      entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                         parse_rational(e[2].get<std::string>())});
    }
    return SparseMatQ(rows, cols, std::move(entries));
  } catch (nlohmann::json::exception const &ex) {
    throw ParseError(std::string("malformed matrix JSON: ") + ex.what());
  } catch (IndexError const &ex) {
    throw ParseError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

void export_matrix(SparseMatQ const &m, MatrixFormat format, std::ostream &out)
{
  if (format == MatrixFormat::json) {
    out << matrix_to_json(m).dump() << '\n';
  } else {
    mpz_class denominator = 1;
    for (auto const &e : m.entries())
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), e.value.get_den_mpz_t());
    out << kMatrixMarketHeader << '\n';
    if (denominator != 1)
      out << "% denominator " << denominator.get_str() << '\n';
    out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (auto const &e : m.entries()) {
      mpz_class const v = e.value.get_num() * (denominator / e.value.get_den());
      out << e.row + 1 << ' ' << e.col + 1 << ' ' << v.get_str() << '\n';
    }
  }
  if (!out)
    throw Error("failed to write matrix");
}

void export_matrix(MatQ const &m, MatrixFormat format, std::ostream &out)
{
  export_matrix(SparseMatQ::from_dense(m), format, out);
}

SparseMatQ import_matrix_market(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || line != kMatrixMarketHeader)
    throw ParseError("missing Matrix Market coordinate integer header");
  Rational denominator = 1;
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
    std::istringstream comment(line.substr(1));
    std::string key, value;
    if (comment >> key >> value && key == "denominator")
      denominator = parse_rational(value);
  }
  std::istringstream size_line(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(size_line >> rows >> cols >> nnz))
    throw ParseError("malformed Matrix Market size line '" + line + "'");
  std::vector<SparseMatQ::Entry> entries;
  entries.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value) || r == 0 || c == 0 || r > rows || c > cols)
      throw ParseError("malformed Matrix Market entry " + std::to_string(k + 1));
    entries.push_back({r - 1, c - 1, parse_rational(value) / denominator});
  }
  return SparseMatQ(rows, cols, std::move(entries));
}

SparseMatQ import_matrix_json(std::istream &in)
{
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const &ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return matrix_from_json(j);
}

} // namespace sptri

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sptri/matrix.hpp"

namespace sptri
{

enum class MatrixFormat
{
  matrix_market,
  json,
};

/// Parses "matrixmarket" / "matrix-market" / "mm" / "json".
MatrixFormat parse_matrix_format(std::string const &name);

inline constexpr char const *kMatrixMarketHeader = "%%MatrixMarket matrix coordinate integer general";

/**
 * Writes a matrix in Matrix Market coordinate integer format or as JSON.
 *
 * Matrix Market output is integral: all entries are multiplied by the lcm
 * of their denominators, which is recorded in a "% denominator <d>"
 * comment line when it differs from 1. Indices are 1-based.
 *
 * JSON output is {"rows", "cols", "entries": [[r, c, "num/den"], ...]}
 * with 0-based indices in row-major order.
 */
void export_matrix(SparseMatQ const &m, MatrixFormat format, std::ostream &out);
void export_matrix(MatQ const &m, MatrixFormat format, std::ostream &out);

SparseMatQ import_matrix_market(std::istream &in);
SparseMatQ import_matrix_json(std::istream &in);

nlohmann::ordered_json matrix_to_json(SparseMatQ const &m);
SparseMatQ matrix_from_json(nlohmann::json const &j);

} // namespace sptri

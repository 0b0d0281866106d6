#pragma once

#include <iosfwd>
#include <string>

#include "kronperm/tpm.hpp"
#include "kronperm/types.hpp"

namespace kronperm {

// Plain-text matrix format shared by the whole tool set:
//   - optional comment lines starting with '#' before the header,
//   - a header line "<rows> <cols>",
//   - <rows> lines of <cols> decimal numbers separated by single spaces.
// On output integral values are written without a decimal point and all
// other values with 17 significant digits, which round-trips doubles.
//
// Coordinate format for explicit tensor permutation matrices:
//   - header "tpm <N> <N> <N>" (rows, cols, number of stored entries),
//   - N lines "<row> <col>" with 0-based indices sorted by row; every stored
//     entry has value 1.

std::string formatNumber(double value);

Matrixd readMatrix(std::istream& in);
Matrixd readMatrixFile(const std::string& path);
void writeMatrix(std::ostream& out, const Matrixd& m);
void writeMatrixFile(const std::string& path, const Matrixd& m);

SparseTpm readCoo(std::istream& in);
SparseTpm readCooFile(const std::string& path);
void writeCoo(std::ostream& out, const SparseTpm& u);
void writeCooFile(const std::string& path, const SparseTpm& u);

/// Writes the dense 0/1 form of an explicit permutation matrix row by row
/// without materializing the N x N array.
void writeDenseTpm(std::ostream& out, const SparseTpm& u);

}  // namespace kronperm

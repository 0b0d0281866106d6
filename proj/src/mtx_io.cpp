#include "kronperm/mtx_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kronperm {

namespace {

// Reads lines until one that is neither blank nor a '#' comment, then
// returns it. Used for the header only; the body is read token-wise.
bool nextContentLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

Index parseExtent(std::istream& header, const char* what) {
  long long value = 0;
  if (!(header >> value) || value < 1) {
    throw ParseError(std::string("bad or missing ") + what + " in header");
  }
  return static_cast<Index>(value);
}

}  // namespace

std::string formatNumber(double value) {
  if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Matrixd readMatrix(std::istream& in) {
  std::string line;
  if (!nextContentLine(in, line)) {
    throw ParseError("missing matrix header");
  }
  std::istringstream header(line);
  const Index rows = parseExtent(header, "row count");
  const Index cols = parseExtent(header, "column count");
  std::string trailing;
  if (header >> trailing) {
    throw ParseError("matrix header has trailing content: " + trailing);
  }
  checkedMulIndex(rows, cols);
  Matrixd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      double value = 0;
      if (!(in >> value)) {
        throw ParseError("matrix body ended early at entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
      m(i, j) = value;
    }
  }
  return m;
}

Matrixd readMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  try {
    return readMatrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void writeMatrix(std::ostream& out, const Matrixd& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << formatNumber(m(i, j));
    }
    out << '\n';
  }
}

void writeMatrixFile(const std::string& path, const Matrixd& m) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  writeMatrix(out, m);
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

SparseTpm readCoo(std::istream& in) {
  std::string line;
  if (!nextContentLine(in, line)) {
    throw ParseError("missing coordinate header");
  }
  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "tpm") {
    throw ParseError("coordinate header must start with 'tpm', got '" + tag + "'");
  }
  const Index rows = parseExtent(header, "row count");
  const Index cols = parseExtent(header, "column count");
  const Index nnz = parseExtent(header, "entry count");
  if (rows != cols || nnz != rows) {
    throw ParseError("coordinate header must read 'tpm N N N'");
  }
  std::vector<std::pair<Index, Index>> coords;
  coords.reserve(static_cast<std::size_t>(nnz));
  for (Index k = 0; k < nnz; ++k) {
    long long row = 0;
    long long col = 0;
    if (!(in >> row >> col)) {
      throw ParseError("coordinate body ended early at entry " + std::to_string(k));
    }
    coords.emplace_back(static_cast<Index>(row), static_cast<Index>(col));
  }
  try {
    return SparseTpm(rows, std::move(coords));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid coordinate body: ") + e.what());
  }
}

SparseTpm readCooFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  try {
    return readCoo(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void writeCoo(std::ostream& out, const SparseTpm& u) {
  out << "tpm " << u.size() << ' ' << u.size() << ' ' << u.size() << '\n';
  for (const auto& [row, col] : u.coords()) {
    out << row << ' ' << col << '\n';
  }
}

void writeCooFile(const std::string& path, const SparseTpm& u) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  writeCoo(out, u);
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

void writeDenseTpm(std::ostream& out, const SparseTpm& u) {
  const Index n = u.size();
  out << n << ' ' << n << '\n';
  for (const auto& [row, col] : u.coords()) {
    for (Index j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << (j == col ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace kronperm

#include "kronperm/equations.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kronperm/kron.hpp"

namespace kronperm {

AxbEquation::AxbEquation(Matrixd a_, Matrixd b_, Matrixd c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.rows() != c.rows()) {
    throw DimensionError("A has " + std::to_string(a.rows()) + " rows but C has " +
                         std::to_string(c.rows()));
  }
  if (b.cols() != c.cols()) {
    throw DimensionError("B has " + std::to_string(b.cols()) + " columns but C has " +
                         std::to_string(c.cols()));
  }
}

SylvesterEquation::SylvesterEquation(Matrixd a_, Matrixd b_, Matrixd c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.rows() != a.cols()) {
    throw DimensionError("A must be square, got " + std::to_string(a.rows()) + " x " +
                         std::to_string(a.cols()));
  }
  if (b.rows() != b.cols()) {
    throw DimensionError("B must be square, got " + std::to_string(b.rows()) + " x " +
                         std::to_string(b.cols()));
  }
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw DimensionError("C must be " + std::to_string(a.rows()) + " x " +
                         std::to_string(b.rows()) + ", got " + std::to_string(c.rows()) +
                         " x " + std::to_string(c.cols()));
  }
}

LinearSystem assembleAxb(const AxbEquation& eq) {
  const Matrixd bt = eq.b.transpose();
  return LinearSystem{kron(eq.a, bt), vecRow(eq.c), eq.unknownRows(), eq.unknownCols()};
}

LinearSystem assembleAxbTransposed(const AxbEquation& eq) {
  const Matrixd bt = eq.b.transpose();
  const Matrixd ct = eq.c.transpose();
  return LinearSystem{kron(bt, eq.a), vecRow(ct), eq.unknownCols(), eq.unknownRows()};
}

LinearSystem assembleSylvester(const SylvesterEquation& eq) {
  const Index m = eq.a.rows();
  const Index n = eq.b.rows();
  const Matrixd bt = eq.b.transpose();
  const Matrixd coeff = kron(eq.a, Matrixd::Identity(n, n)) + kron(Matrixd::Identity(m, m), bt);
  return LinearSystem{coeff, vecRow(eq.c), m, n};
}

LinearSystem assembleSylvesterTransposed(const SylvesterEquation& eq) {
  const Index m = eq.a.rows();
  const Index n = eq.b.rows();
  const Matrixd bt = eq.b.transpose();
  const Matrixd ct = eq.c.transpose();
  const Matrixd coeff = kron(Matrixd::Identity(n, n), eq.a) + kron(bt, Matrixd::Identity(m, m));
  return LinearSystem{coeff, vecRow(ct), n, m};
}

LinearSystem tcmTransform(const LinearSystem& sys, const TpmSpec& left, const TpmSpec& right) {
  if (left.size() != sys.coeff.rows()) {
    throw DimensionError("left operator size " + std::to_string(left.size()) +
                         " does not match " + std::to_string(sys.coeff.rows()) + " rows");
  }
  if (right.size() != sys.coeff.cols()) {
    throw DimensionError("right operator size " + std::to_string(right.size()) +
                         " does not match " + std::to_string(sys.coeff.cols()) + " columns");
  }
  if (right.dims().rank() != 2 || right.dims().dim(0) != sys.unknownRows ||
      right.dims().dim(1) != sys.unknownCols) {
    throw DimensionError("right operator extents must match the unknown shape " +
                         std::to_string(sys.unknownRows) + " x " +
                         std::to_string(sys.unknownCols));
  }
  const ImplicitTpm u(left);
  const ImplicitTpm v(right);
  const MixedRadix newShape = right.permutedDims();
  return LinearSystem{u.applyLeft(v.applyRightTranspose(sys.coeff)), u.apply(sys.rhs),
                      newShape.dim(0), newShape.dim(1)};
}

Vectord solveDense(const LinearSystem& sys) {
  if (sys.coeff.rows() != sys.coeff.cols()) {
    throw DimensionError("system is not square: " + std::to_string(sys.coeff.rows()) + " x " +
                         std::to_string(sys.coeff.cols()));
  }
  if (sys.rhs.rows() != sys.coeff.rows()) {
    throw DimensionError("right-hand side length " + std::to_string(sys.rhs.rows()) +
                         " does not match system size " + std::to_string(sys.coeff.rows()));
  }
  Matrixd a = sys.coeff;
  Vectord b = sys.rhs;
  const Index n = a.rows();
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  const double pivotFloor = 1e-12 * scale;

  for (Index step = 0; step < n; ++step) {
    Index pivotRow = step;
    double pivotMag = std::abs(a(step, step));
    for (Index r = step + 1; r < n; ++r) {
      const double mag = std::abs(a(r, step));
      if (mag > pivotMag) {  // strict: ties keep the lowest row index
        pivotMag = mag;
        pivotRow = r;
      }
    }
    if (pivotMag <= pivotFloor) {
      throw SingularSystemError(step, n);
    }
    if (pivotRow != step) {
      a.row(step).swap(a.row(pivotRow));
      std::swap(b(step), b(pivotRow));
    }
    const double pivot = a(step, step);
    for (Index r = step + 1; r < n; ++r) {
      const double factor = a(r, step) / pivot;
      if (factor == 0.0) continue;
      a(r, step) = 0.0;
      a.row(r).tail(n - step - 1) -= factor * a.row(step).tail(n - step - 1);
      b(r) -= factor * b(step);
    }
  }

  Vectord x(n);
  for (Index r = n - 1; r >= 0; --r) {
    double sum = b(r);
    for (Index c = r + 1; c < n; ++c) sum -= a(r, c) * x(c);
    x(r) = sum / a(r, r);
  }
  return x;
}

Matrixd solveAxb(const AxbEquation& eq, AxbRoute route) {
  const LinearSystem sys =
      route == AxbRoute::Primal ? assembleAxb(eq) : assembleAxbTransposed(eq);
  if (sys.coeff.rows() != sys.coeff.cols()) {
    throw DimensionError("A*X*B = C is not a determined system: coefficient matrix is " +
                         std::to_string(sys.coeff.rows()) + " x " +
                         std::to_string(sys.coeff.cols()));
  }
  const Vectord y = solveDense(sys);
  const Matrixd folded = unvecRow(y, sys.unknownRows, sys.unknownCols);
  return route == AxbRoute::Primal ? folded : Matrixd(folded.transpose());
}

Matrixd solveSylvester(const SylvesterEquation& eq, SylvesterRoute route) {
  const LinearSystem sys = route == SylvesterRoute::Primal ? assembleSylvester(eq)
                                                           : assembleSylvesterTransposed(eq);
  const Vectord y = solveDense(sys);
  const Matrixd folded = unvecRow(y, sys.unknownRows, sys.unknownCols);
  return route == SylvesterRoute::Primal ? folded : Matrixd(folded.transpose());
}

double residualInf(const AxbEquation& eq, const Matrixd& x) {
  if (x.rows() != eq.unknownRows() || x.cols() != eq.unknownCols()) {
    throw DimensionError("candidate X must be " + std::to_string(eq.unknownRows()) + " x " +
                         std::to_string(eq.unknownCols()));
  }
  return (eq.a * x * eq.b - eq.c).cwiseAbs().maxCoeff();
}

double residualInf(const SylvesterEquation& eq, const Matrixd& x) {
  if (x.rows() != eq.a.rows() || x.cols() != eq.b.rows()) {
    throw DimensionError("candidate X must be " + std::to_string(eq.a.rows()) + " x " +
                         std::to_string(eq.b.rows()));
  }
  return (eq.a * x + x * eq.b - eq.c).cwiseAbs().maxCoeff();
}

}  // namespace kronperm

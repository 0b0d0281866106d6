#pragma once

#include "kronperm/tpm.hpp"
#include "kronperm/types.hpp"

namespace kronperm {

/// The data of A * X * B = C with A (m x n), B (p x q), C (m x q). The
/// unknown X is n x p.
struct AxbEquation {
  AxbEquation(Matrixd a_, Matrixd b_, Matrixd c_);

  Matrixd a, b, c;

  Index unknownRows() const { return a.cols(); }
  Index unknownCols() const { return b.rows(); }
};

/// The data of A * X + X * B = C with A (m x m), B (n x n), C (m x n).
struct SylvesterEquation {
  SylvesterEquation(Matrixd a_, Matrixd b_, Matrixd c_);

  Matrixd a, b, c;
};

/// An assembled linear system coeff * y = rhs, together with the matrix shape
/// the solution vector folds back into. Whether y stands for the row-major
/// vec of X or of X^T is encoded entirely by that shape, so callers cannot
/// unfold against the wrong layout. Assembly may produce a rectangular coeff;
/// solving requires a square one.
struct LinearSystem {
  Matrixd coeff;
  Vectord rhs;
  Index unknownRows = 0;
  Index unknownCols = 0;
};

/// System (A (x) B^T) vec(X) = vec(C), solving A*X*B = C for vec(X).
LinearSystem assembleAxb(const AxbEquation& eq);

/// Equivalent system (B^T (x) A) vec(X^T) = vec(C^T) for the same equation.
LinearSystem assembleAxbTransposed(const AxbEquation& eq);

/// System (A (x) I_n + I_m (x) B^T) vec(X) = vec(C), solving A*X + X*B = C.
LinearSystem assembleSylvester(const SylvesterEquation& eq);

/// Equivalent system (I_n (x) A + B^T (x) I_m) vec(X^T) = vec(C^T).
LinearSystem assembleSylvesterTransposed(const SylvesterEquation& eq);

/// Conjugates a system by two tensor permutation matrices: returns
/// (U * coeff * V^T, U * rhs) with U = explicit(left), V = explicit(right).
/// The unknown of the new system is V * (old unknown); right must act on the
/// vec of the old unknown shape, so the new unknown shape is its permuted
/// extent pair. With swap specs this carries each assembled system onto its
/// transposed twin and back, exactly.
LinearSystem tcmTransform(const LinearSystem& sys, const TpmSpec& left, const TpmSpec& right);

/// Gaussian elimination with partial pivoting (largest absolute pivot, ties
/// to the lowest row index). Works on private copies of coeff and rhs.
/// Throws SingularSystemError when the best remaining pivot magnitude is at
/// or below 1e-12 times the largest absolute entry of the initial matrix
/// (floored at 1e-300), reporting the elimination step reached.
Vectord solveDense(const LinearSystem& sys);

enum class AxbRoute : int { Primal = 1, Transposed = 2 };
enum class SylvesterRoute : int { Primal = 3, Transposed = 4 };

/// Solves A*X*B = C through the chosen assembled system and folds the
/// solution vector back into X. Requires the assembled coeff to be square,
/// i.e. m*q = n*p.
Matrixd solveAxb(const AxbEquation& eq, AxbRoute route);

/// Solves A*X + X*B = C; the assembled system is always square (mn x mn).
Matrixd solveSylvester(const SylvesterEquation& eq, SylvesterRoute route);

/// Max-norm residual of a candidate solution against the matrix equation.
double residualInf(const AxbEquation& eq, const Matrixd& x);
double residualInf(const SylvesterEquation& eq, const Matrixd& x);

}  // namespace kronperm

#pragma once

#include <vector>

#include "rhosym/matrix.hpp"

namespace rhosym {

/// Numerical thresholds shared across the library. Each lies in [0, 1e-2].
struct Tolerances {
  double resid = 1e-10;           // eigen/singular residuals, relative to ‖M‖
  double orth = 1e-10;            // Gram deviation of computed bases
  double unit = 1e-10;            // |‖v‖ − 1| for unit vectors
  double attain = 1e-8;           // relative gap admitting σᵢ into the top singular subspace
  double ortho_decision = 1e-8;   // orthogonality decisions, scaled by ‖T‖·‖A‖

  void validate() const;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  Matrix eigenvectors;              // orthonormal columns, matching order
};

/// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius mass drops below 1e-14·‖M‖_F
/// (at most 60 sweeps). Each eigenvector is phase-normalized so that its
/// first nonzero coordinate is real and positive.
EigenDecomposition hermitian_eig(const Matrix& m, const Tolerances& tol = {});

struct SingularValueDecomposition {
  std::vector<double> singular_values;  // descending, min(rows, cols) of them
  Matrix right_vectors;                 // cols × k
  Matrix left_vectors;                  // rows × k
};

/// SVD through the eigendecomposition of M*M. Left vectors belonging to
/// σᵢ ≤ 1e-12·σ₁ are completed by orthonormalization.
SingularValueDecomposition svd(const Matrix& m, const Tolerances& tol = {});

double operator_norm(const Matrix& m);

struct PolarDecomposition {
  Matrix unitary;   // U
  Matrix positive;  // P = (S*S)^{1/2}
};

/// S = U·P with U unitary even when S is singular.
PolarDecomposition polar_decompose(const Matrix& s, const Tolerances& tol = {});

/// True iff T*T = ‖T‖²·I within tol.resid·‖T‖², i.e. T is a nonzero scalar
/// multiple of an isometry. The zero operator is not.
bool is_isometry(const Matrix& t, const Tolerances& tol = {});

/// Two-pass Gram-Schmidt; columns that are numerically dependent on earlier
/// ones are dropped.
Matrix orthonormalize_columns(const Matrix& m);

/// Orthonormal basis (as columns) of the orthogonal complement of the
/// column span.
Matrix orthonormal_complement(const Matrix& spanning);

/// ‖V*V − I‖_max for a matrix with intended-orthonormal columns.
double gram_deviation(const Matrix& v);

}  // namespace rhosym

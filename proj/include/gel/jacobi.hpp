#pragma once

#include <cstddef>
#include <vector>

namespace gel {

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm drops below tolerance_per_row * n.
  double tolerance_per_row = 1e-12;
  int max_sweeps = 100;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  // descending
  int sweeps = 0;
  double off_norm = 0.0;
};

/// Eigenvalues of a dense symmetric n*n matrix (row-major) by cyclic Jacobi
/// rotations. Throws Error{NumericFailure} if the sweep cap is reached.
JacobiResult jacobi_eigenvalues(std::vector<double> matrix, std::size_t n,
                                const JacobiOptions& options = {});

}  // namespace gel

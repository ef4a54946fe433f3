#pragma once

#include <string>

#include "mlf/derooted.hpp"
#include "mlf/matrix.hpp"

namespace mlf {

struct BenchResult {
  std::string name;
  double approx_seconds = 0.0;     ///< median over repetitions
  double reference_seconds = 0.0;  ///< median over repetitions
  double speedup() const { return reference_seconds / approx_seconds; }
};

/// R^{m,n,r} (built once, then evaluated) against per-point mlf_oracle calls
/// at `accuracy`, on `points` equispaced t in (0, t_max].
BenchResult bench_scalar(const MLParams& params, PadeOrder order, int r, int points, double t_max, double accuracy,
                         int repetitions = 5);

/// eval_matrix_rational with `method` against matrix_reference on the same A.
BenchResult bench_matrix(const MLParams& params, PadeOrder order, const DenseMatrix& a, MatrixMethod method,
                         double reference_accuracy, int repetitions = 5);

}  // namespace mlf

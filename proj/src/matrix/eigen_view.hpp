#pragma once

#include <Eigen/Dense>

#include "mlf/dense.hpp"

namespace mlf::detail {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexRowMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const RowMatrix> view(const DenseMatrix& a) {
  return Eigen::Map<const RowMatrix>(a.data().data(), a.rows(), a.cols());
}

inline DenseMatrix from_eigen(const RowMatrix& m) {
  return DenseMatrix(static_cast<int>(m.rows()), static_cast<int>(m.cols()),
                     std::vector<double>(m.data(), m.data() + m.size()));
}

}  // namespace mlf::detail

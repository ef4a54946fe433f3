#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace mlf {

/// Real dense matrix, row-major, finite entries.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero matrix.
  DenseMatrix(int rows, int cols);
  /// Throws DomainError on a size mismatch or a non-finite entry.
  DenseMatrix(int rows, int cols, std::vector<double> data);

  static DenseMatrix identity(int n);
  static DenseMatrix diagonal(const std::vector<double>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Throws DimensionMismatch on incompatible shapes.
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);
std::vector<double> operator*(const DenseMatrix& a, const std::vector<double>& x);

double frobenius_norm(const DenseMatrix& a);
/// ||a - ref||_F / ||ref||_F (absolute when ref is zero).
double relative_frobenius(const DenseMatrix& a, const DenseMatrix& ref);
bool is_symmetric(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
/// LU with partial pivoting; throws DomainError when singular.
DenseMatrix inverse(const DenseMatrix& a);
/// 2-norm condition number (infinite when singular).
double condition_number(const DenseMatrix& a);

/// Text format: "rows cols" then row-major entries, whitespace separated.
/// Throws IOError on malformed input.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::filesystem::path& path);
/// 17 significant digits, one row per line.
void write_matrix(std::ostream& out, const DenseMatrix& a);

/// Entry (i, j), 1-based, is 1 if j = 1 or i divides j, else 0.
DenseMatrix redheffer(int n);

}  // namespace mlf

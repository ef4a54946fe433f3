#include "mlf/dense.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "eigen_view.hpp"
#include "mlf/errors.hpp"

namespace mlf {

using detail::RowMatrix;
using detail::view;

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DomainError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                      std::to_string(static_cast<std::size_t>(rows) * cols));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw DomainError("matrix entries must be finite");
  }
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& entries) {
  const int n = static_cast<int>(entries.size());
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
}

}  // namespace

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("inner matrix dimensions differ");
  return detail::from_eigen(view(a) * view(b));
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  return detail::from_eigen(view(a) + view(b));
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  return detail::from_eigen(view(a) - view(b));
}

DenseMatrix operator*(double s, const DenseMatrix& a) { return detail::from_eigen(s * view(a)); }

std::vector<double> operator*(const DenseMatrix& a, const std::vector<double>& x) {
  if (static_cast<std::size_t>(a.cols()) != x.size()) throw DimensionMismatch("vector length differs");
  std::vector<double> y(a.rows());
  Eigen::Map<Eigen::VectorXd>(y.data(), a.rows()) = view(a) * Eigen::Map<const Eigen::VectorXd>(x.data(), a.cols());
  return y;
}

double frobenius_norm(const DenseMatrix& a) { return view(a).norm(); }

double relative_frobenius(const DenseMatrix& a, const DenseMatrix& ref) {
  require_same_shape(a, ref);
  const double diff = (view(a) - view(ref)).norm();
  const double scale = view(ref).norm();
  return scale > 0.0 ? diff / scale : diff;
}

bool is_symmetric(const DenseMatrix& a) {
  if (!a.square()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

DenseMatrix transpose(const DenseMatrix& a) { return detail::from_eigen(view(a).transpose()); }

DenseMatrix inverse(const DenseMatrix& a) {
  if (!a.square()) throw DimensionMismatch("only square matrices can be inverted");
  const Eigen::PartialPivLU<RowMatrix> lu(view(a));
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (a.rows() == 0 || !(pivots.minCoeff() > 1e-300 * view(a).norm())) throw DomainError("matrix is singular");
  return detail::from_eigen(lu.inverse());
}

double condition_number(const DenseMatrix& a) {
  const Eigen::JacobiSVD<RowMatrix> svd(view(a));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 1.0;
  const double smallest = sv(sv.size() - 1);
  return smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
}

namespace {

double parse_number(const std::string& token) {
  double v = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) throw IOError("malformed matrix entry '" + token + "'");
  return v;
}

int parse_dimension(const std::string& token) {
  int v = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || v < 1) throw IOError("malformed matrix dimension '" + token + "'");
  return v;
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw IOError("empty matrix input");
  const int rows = parse_dimension(token);
  if (!(in >> token)) throw IOError("missing column count");
  const int cols = parse_dimension(token);
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(rows) * cols);
  while (in >> token) data.push_back(parse_number(token));
  if (data.size() != static_cast<std::size_t>(rows) * cols) {
    throw IOError("matrix input has " + std::to_string(data.size()) + " entries, expected " +
                  std::to_string(static_cast<std::size_t>(rows) * cols));
  }
  try {
    return DenseMatrix(rows, cols, std::move(data));
  } catch (const DomainError& e) {
    throw IOError(e.what());
  }
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open matrix file " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  char buf[32];
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const auto res = std::to_chars(buf, buf + sizeof buf, a(i, j), std::chars_format::general, 17);
      if (j > 0) out << ' ';
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

DenseMatrix redheffer(int n) {
  if (n < 1) throw DomainError("Redheffer size must be >= 1");
  DenseMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == 1 || j % i == 0) m(i - 1, j - 1) = 1.0;
    }
  }
  return m;
}

}  // namespace mlf

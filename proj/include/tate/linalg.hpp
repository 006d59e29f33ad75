#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "tate/field.hpp"

namespace tate {

using Index = Eigen::Index;

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
struct Echelon {
  Mat<F> rref;
  std::vector<Index> pivots;
  Index rank = 0;
};

template <class F>
Mat<F> zeros(const FieldDescriptor& fd, Index r, Index c) {
  return Mat<F>::Constant(r, c, ScalarOps<F>::make(fd, 0));
}

template <class F>
Mat<F> identity(const FieldDescriptor& fd, Index n) {
  Mat<F> m = zeros<F>(fd, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = ScalarOps<F>::make(fd, 1);
  return m;
}

template <class F>
bool is_zero(const Mat<F>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

// Field of the first non-literal entry (F_p scalars carry their prime).
template <class F>
FieldDescriptor field_of(const Mat<F>& a);

template <class F>
Echelon<F> echelon(const Mat<F>& a);

// Columns: free variables set to 1 one at a time, in ascending order.
template <class F>
Mat<F> kernel_basis(const Mat<F>& a);

template <class F>
struct Kernel {
  Mat<F> basis;
  std::vector<Index> free;  // basis(free[j], :) is the j-th unit row
};

template <class F>
Kernel<F> kernel(const Mat<F>& a, const FieldDescriptor& fd);
template <class F>
Kernel<F> kernel(const Mat<F>& a) {
  return kernel(a, field_of(a));
}

// Canonical particular solution of a X = b (free variables zero), if any.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b, const FieldDescriptor& fd);
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  FieldDescriptor fd = field_of(a);
  return solve(a, b, fd.p ? fd : field_of(b));
}

template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b);

template <class F>
Index rank(const Mat<F>& a);

// Canonical basis (columns) of the column span: transposed nonzero rows of rref(a^T).
template <class F>
Mat<F> column_space(const Mat<F>& a);

template <class F>
Mat<F> inverse(const Mat<F>& a, const FieldDescriptor& fd);
template <class F>
Mat<F> inverse(const Mat<F>& a) {
  return inverse(a, field_of(a));
}

// Quotient of k^n by the column span of u: the projection onto the coordinates
// that are not pivots of rref(u^T), and the section picking those unit vectors.
template <class F>
struct Quotient {
  Mat<F> projection;
  Mat<F> section;
  std::vector<Index> kept;
};

template <class F>
Quotient<F> quotient(const Mat<F>& u, Index n, const FieldDescriptor& fd);

// Row-reduction of a kept for repeated solves against several right-hand sides.
template <class F>
class Solver {
 public:
  Solver() = default;
  Solver(const Mat<F>& a, const FieldDescriptor& fd);
  explicit Solver(const Mat<F>& a) : Solver(a, field_of(a)) {}

  Index rank() const { return rank_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::optional<Mat<F>> solve(const Mat<F>& b) const;
  // Throws when b is outside the column span.
  Mat<F> solve_or_throw(const Mat<F>& b, const char* what) const;

 private:
  FieldDescriptor fd_;
  Mat<F> transform_;
  std::vector<Index> pivots_;
  Index rank_ = 0, rows_ = 0, cols_ = 0;
};

template <class F>
Mat<F> hstack(const std::vector<Mat<F>>& blocks, Index rows);
template <class F>
Mat<F> vstack(const std::vector<Mat<F>>& blocks, Index cols);
template <class F>
Mat<F> block_diag(const std::vector<Mat<F>>& blocks, const FieldDescriptor& fd);

}  // namespace tate

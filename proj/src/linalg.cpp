#include "tate/linalg.hpp"

#include <utility>

namespace tate {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor parse_field(const std::string& s) {
  if (s == "Q") return FieldDescriptor{0};
  if (s.size() >= 2 && s[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad field '" + s + "'");
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (p >= (1ull << 32)) throw std::invalid_argument("prime too large in '" + s + "'");
    }
    if (!is_prime(p)) throw std::invalid_argument("field '" + s + "' is not F_p for a prime p");
    return FieldDescriptor{static_cast<std::uint32_t>(p)};
  }
  throw std::invalid_argument("bad field '" + s + "'");
}

namespace {

template <class F>
void reduce_rows(Mat<F>& m, Index ncols, std::vector<Index>& pivots, Mat<F>* companion) {
  Index rows = m.rows();
  Index r = 0;
  for (Index c = 0; c < ncols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      m.row(sel).swap(m.row(r));
      if (companion) companion->row(sel).swap(companion->row(r));
    }
    F inv = F(1) / m(r, c);
    for (Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    if (companion)
      for (Index j = 0; j < companion->cols(); ++j) (*companion)(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      if (companion)
        for (Index j = 0; j < companion->cols(); ++j)
          if (!is_zero((*companion)(r, j))) (*companion)(i, j) -= f * (*companion)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
}

}  // namespace

template <class F>
FieldDescriptor field_of(const Mat<F>& a) {
  if constexpr (std::is_same_v<F, Zp>) {
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j)
        if (a(i, j).modulus()) return FieldDescriptor{a(i, j).modulus()};
    return FieldDescriptor{0};
  } else {
    return FieldDescriptor{0};
  }
}

template <class F>
Echelon<F> echelon(const Mat<F>& a) {
  Echelon<F> e;
  e.rref = a;
  reduce_rows<F>(e.rref, a.cols(), e.pivots, nullptr);
  e.rank = static_cast<Index>(e.pivots.size());
  return e;
}

template <class F>
Kernel<F> kernel(const Mat<F>& a, const FieldDescriptor& fd) {
  Echelon<F> e = echelon(a);
  Index n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : e.pivots) is_pivot[p] = true;
  Kernel<F> k;
  k.basis = zeros<F>(fd, n, n - e.rank);
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k.free.push_back(f);
    k.basis(f, col) = ScalarOps<F>::make(fd, 1);
    for (Index i = 0; i < e.rank; ++i) k.basis(e.pivots[i], col) = -e.rref(i, f);
    ++col;
  }
  return k;
}

template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
  return kernel(a).basis;
}

template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b, const FieldDescriptor& fd) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve: " + std::to_string(a.rows()) + " equations but right side has " +
                            std::to_string(b.rows()) + " rows");
  Mat<F> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  std::vector<Index> pivots;
  reduce_rows<F>(aug, aug.cols(), pivots, nullptr);
  Mat<F> x = zeros<F>(fd, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (Index j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(static_cast<Index>(i), a.cols() + j);
  }
  return x;
}

template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

template <class F>
Index rank(const Mat<F>& a) {
  return echelon(a).rank;
}

template <class F>
Mat<F> column_space(const Mat<F>& a) {
  Mat<F> t = a.transpose();
  Echelon<F> e = echelon(t);
  return e.rref.topRows(e.rank).transpose();
}

template <class F>
Mat<F> inverse(const Mat<F>& a, const FieldDescriptor& fd) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  Solver<F> s(a, fd);
  if (s.rank() != a.rows()) throw std::domain_error("inverse of a singular matrix");
  return *s.solve(identity<F>(fd, a.rows()));
}

template <class F>
Quotient<F> quotient(const Mat<F>& u, Index n, const FieldDescriptor& fd) {
  Quotient<F> q;
  Mat<F> t = u.transpose();
  Echelon<F> e = echelon(t);
  std::vector<bool> is_pivot(n, false);
  for (Index p : e.pivots) is_pivot[p] = true;
  for (Index i = 0; i < n; ++i)
    if (!is_pivot[i]) q.kept.push_back(i);
  Index m = static_cast<Index>(q.kept.size());
  q.section = zeros<F>(fd, n, m);
  q.projection = zeros<F>(fd, m, n);
  for (Index j = 0; j < m; ++j) q.section(q.kept[j], j) = ScalarOps<F>::make(fd, 1);
  // v -> v - sum_k v[pivot_k] * row_k, then read the kept coordinates.
  for (Index j = 0; j < m; ++j) {
    Index c = q.kept[j];
    q.projection(j, c) = ScalarOps<F>::make(fd, 1);
    for (Index k = 0; k < e.rank; ++k) q.projection(j, e.pivots[k]) = -e.rref(k, c);
  }
  return q;
}

template <class F>
Solver<F>::Solver(const Mat<F>& a, const FieldDescriptor& fd) : fd_(fd), rows_(a.rows()), cols_(a.cols()) {
  Mat<F> m = a;
  transform_ = identity<F>(fd, a.rows());
  reduce_rows<F>(m, a.cols(), pivots_, &transform_);
  rank_ = static_cast<Index>(pivots_.size());
}

template <class F>
std::optional<Mat<F>> Solver<F>::solve(const Mat<F>& b) const {
  if (b.rows() != rows_)
    throw DimensionMismatch("solve: " + std::to_string(rows_) + " equations but right side has " +
                            std::to_string(b.rows()) + " rows");
  Mat<F> c = transform_ * b;
  for (Index i = rank_; i < rows_; ++i)
    for (Index j = 0; j < c.cols(); ++j)
      if (!is_zero(c(i, j))) return std::nullopt;
  Mat<F> x = zeros<F>(fd_, cols_, b.cols());
  for (Index i = 0; i < rank_; ++i) x.row(pivots_[i]) = c.row(i);
  return x;
}

template <class F>
Mat<F> Solver<F>::solve_or_throw(const Mat<F>& b, const char* what) const {
  auto x = solve(b);
  if (!x) throw std::logic_error(std::string("no solution: ") + what);
  return *x;
}

template <class F>
Mat<F> hstack(const std::vector<Mat<F>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat<F> out(rows, cols);
  Index c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack: row count mismatch");
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

template <class F>
Mat<F> vstack(const std::vector<Mat<F>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Mat<F> out(rows, cols);
  Index r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column count mismatch");
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

template <class F>
Mat<F> block_diag(const std::vector<Mat<F>>& blocks, const FieldDescriptor& fd) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat<F> out = zeros<F>(fd, rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

#define TATE_INSTANTIATE(F)                                                        \
  template FieldDescriptor field_of(const Mat<F>&);                               \
  template Echelon<F> echelon(const Mat<F>&);                                     \
  template Kernel<F> kernel(const Mat<F>&, const FieldDescriptor&);               \
  template Mat<F> kernel_basis(const Mat<F>&);                                    \
  template std::optional<Mat<F>> solve(const Mat<F>&, const Mat<F>&,              \
                                        const FieldDescriptor&);                  \
  template Mat<F> kron(const Mat<F>&, const Mat<F>&);                             \
  template Index rank(const Mat<F>&);                                             \
  template Mat<F> column_space(const Mat<F>&);                                    \
  template Mat<F> inverse(const Mat<F>&, const FieldDescriptor&);                 \
  template Quotient<F> quotient(const Mat<F>&, Index, const FieldDescriptor&);    \
  template class Solver<F>;                                                       \
  template Mat<F> hstack(const std::vector<Mat<F>>&, Index);                      \
  template Mat<F> vstack(const std::vector<Mat<F>>&, Index);                      \
  template Mat<F> block_diag(const std::vector<Mat<F>>&, const FieldDescriptor&);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

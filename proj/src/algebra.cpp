#include "tate/algebra.hpp"

namespace tate {

template <class F>
std::vector<Index> Algebra<F>::nonunit() const {
  std::vector<Index> out;
  for (Index i = 0; i < dim(); ++i)
    if (i != unit) out.push_back(i);
  return out;
}

template <class F>
Mat<F> Algebra<F>::left_mult(const Vec<F>& r) const {
  Mat<F> out = zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (!is_zero(r(i))) out += r(i) * mult[i];
  return out;
}

template <class F>
Index Algebra<F>::index_of(const std::string& n) const {
  for (Index i = 0; i < dim(); ++i)
    if (basis[i] == n) return i;
  return -1;
}

template <class F>
void Algebra<F>::finalize() {
  // m^2 is spanned by the products of non-unit basis elements.
  std::vector<Mat<F>> cols;
  for (Index i : nonunit())
    for (Index j : nonunit()) cols.push_back(mult[i].col(j));
  Mat<F> sq = cols.empty() ? zero(dim(), 0) : hstack(cols, dim());
  Quotient<F> q = quotient<F>(sq, dim(), field);
  generators.clear();
  for (Index k : q.kept)
    if (k != unit) generators.push_back(k);
}

template <class F>
Verdict validate_algebra(const Algebra<F>& a) {
  Index n = a.dim();
  if (n == 0) return Verdict::fail("empty basis");
  if (a.unit < 0 || a.unit >= n) return Verdict::fail("unit index out of range");
  if (static_cast<Index>(a.mult.size()) != n) return Verdict::fail("missing structure constants");
  for (const auto& m : a.mult)
    if (m.rows() != n || m.cols() != n) return Verdict::fail("structure constant matrix has wrong shape");
  auto name = [&](Index i) { return a.basis[i]; };
  if (a.mult[a.unit] != a.eye(n)) return Verdict::fail("unit does not act as identity");
  for (Index i = 0; i < n; ++i)
    if (a.mult[i].col(a.unit) != a.eye(n).col(i)) return Verdict::fail("unit is not a right identity for " + name(i));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (a.mult[i].col(j) != a.mult[j].col(i)) return Verdict::fail("commutativity fails at (" + name(i) + "," + name(j) + ")");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      // (b_i b_j) b_k = b_i (b_j b_k)
      Mat<F> lhs = a.left_mult(a.mult[i].col(j));
      Mat<F> rhs = a.mult[i] * a.mult[j];
      for (Index k = 0; k < n; ++k)
        if (lhs.col(k) != rhs.col(k))
          return Verdict::fail("associativity fails at (" + name(i) + "," + name(j) + "," + name(k) + ")");
    }
  for (Index i : a.nonunit())
    for (Index j : a.nonunit())
      if (!is_zero(a.mult[i](a.unit, j)))
        return Verdict::fail("non-unit span is not an ideal: " + name(i) + "*" + name(j) + " has a unit component");
  // The non-unit span m is nilpotent iff m^k = 0 for some k <= dim.
  std::vector<Mat<F>> gens;
  for (Index i : a.nonunit()) gens.push_back(a.mult[i]);
  Mat<F> power = a.eye(n);
  Index steps = 0;
  while (!is_zero(power)) {
    if (steps++ > n) return Verdict::fail("non-unit span is not nilpotent (algebra is not local)");
    std::vector<Mat<F>> cols;
    for (const auto& g : gens) cols.push_back(g * power);
    power = gens.empty() ? a.zero(n, 0) : column_space(hstack(cols, n));
    if (power.cols() == 0) break;
  }
  return Verdict::pass();
}

template struct Algebra<Zp>;
template struct Algebra<Rational>;
template Verdict validate_algebra(const Algebra<Zp>&);
template Verdict validate_algebra(const Algebra<Rational>&);

}  // namespace tate

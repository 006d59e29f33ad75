#include "tate/module.hpp"

namespace tate {

template <class F>
Mat<F> Module<F>::action(const Vec<F>& r) const {
  Mat<F> out = zero(dim, dim);
  for (Index i = 0; i < ring->dim(); ++i)
    if (!is_zero(r(i))) out += r(i) * act[i];
  return out;
}

template <class F>
bool same_module(const Module<F>& a, const Module<F>& b) {
  if (a.dim != b.dim || a.act.size() != b.act.size()) return false;
  if (a.free_rank >= 0 && b.free_rank >= 0) return a.free_rank == b.free_rank;
  for (std::size_t i = 0; i < a.act.size(); ++i)
    if (a.act[i] != b.act[i]) return false;
  return true;
}

template <class F>
Module<F> module_from_actions(AlgebraPtr<F> ring, Index dim, std::vector<Mat<F>> act) {
  Module<F> m;
  m.ring = std::move(ring);
  m.dim = dim;
  m.act = std::move(act);
  return m;
}

template <class F>
Module<F> free_module(AlgebraPtr<F> ring, Index rank) {
  Module<F> m;
  m.dim = rank * ring->dim();
  Mat<F> id = ring->eye(rank);
  for (Index i = 0; i < ring->dim(); ++i) m.act.push_back(kron(id, ring->mult[i]));
  m.free_rank = rank;
  m.ring = std::move(ring);
  return m;
}

template <class F>
Module<F> zero_module(AlgebraPtr<F> ring) {
  return free_module(std::move(ring), 0);
}

template <class F>
Module<F> residue_field(AlgebraPtr<F> ring) {
  Module<F> m;
  m.dim = 1;
  for (Index i = 0; i < ring->dim(); ++i) m.act.push_back(ring->zero(1, 1));
  m.act[ring->unit](0, 0) = ring->scalar(1);
  m.name = "k";
  m.ring = std::move(ring);
  return m;
}

template <class F>
Module<F> direct_sum(const std::vector<Module<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no modules");
  Module<F> m;
  m.ring = parts.front().ring;
  bool all_free = true;
  Index rank = 0;
  for (const auto& p : parts) {
    m.dim += p.dim;
    all_free = all_free && p.free_rank >= 0;
    rank += p.free_rank;
  }
  for (Index i = 0; i < m.ring->dim(); ++i) {
    std::vector<Mat<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p.act[i]);
    m.act.push_back(block_diag(blocks, m.ring->field));
  }
  if (all_free) m.free_rank = rank;
  return m;
}

template <class F>
Module<F> power(const Module<F>& m, Index n) {
  if (n == 0) return zero_module(m.ring);
  return direct_sum(std::vector<Module<F>>(static_cast<std::size_t>(n), m));
}

template <class F>
Verdict validate_module(const Module<F>& m) {
  const Algebra<F>& r = *m.ring;
  if (static_cast<Index>(m.act.size()) != r.dim()) return Verdict::fail("wrong number of action matrices");
  for (const auto& a : m.act)
    if (a.rows() != m.dim || a.cols() != m.dim) return Verdict::fail("action matrix has wrong shape");
  if (m.act[r.unit] != m.eye()) return Verdict::fail("unit does not act as identity");
  for (Index i = 0; i < r.dim(); ++i)
    for (Index j = i; j < r.dim(); ++j) {
      Mat<F> expect = m.action(r.mult[i].col(j));
      if (m.act[i] * m.act[j] != expect || m.act[j] * m.act[i] != expect)
        return Verdict::fail("action of " + r.basis[i] + "*" + r.basis[j] + " is not the product of the actions");
    }
  return Verdict::pass();
}

template <class F>
bool is_hom(const Module<F>& s, const Module<F>& t, const Mat<F>& f) {
  if (f.rows() != t.dim || f.cols() != s.dim) return false;
  for (Index g : s.ring->generators)
    if (t.act[g] * f != f * s.act[g]) return false;
  return true;
}

template <class F>
Vec<F> HomSpace<F>::coords(const Mat<F>& f) const {
  Vec<F> c(dim());
  Index cols = source.dim;
  for (Index j = 0; j < dim(); ++j) c(j) = f(positions[j] / cols, positions[j] % cols);
  return c;
}

template <class F>
Mat<F> HomSpace<F>::element(const Vec<F>& c) const {
  Mat<F> f = source.zero(target.dim, source.dim);
  for (Index j = 0; j < dim(); ++j)
    if (!is_zero(c(j))) f += c(j) * basis[j];
  return f;
}

template <class F>
HomSpace<F> hom_space(const Module<F>& m, const Module<F>& n) {
  HomSpace<F> h;
  h.source = m;
  h.target = n;
  const Algebra<F>& r = *m.ring;
  Index dr = r.dim();
  if (m.free_rank >= 0) {
    for (Index j = 0; j < m.free_rank; ++j)
      for (Index i = 0; i < n.dim; ++i) {
        Mat<F> f = m.zero(n.dim, m.dim);
        for (Index b = 0; b < dr; ++b) f.col(j * dr + b) = n.act[b].col(i);
        h.basis.push_back(std::move(f));
        h.positions.push_back(i * m.dim + j * dr + r.unit);
      }
  } else {
    Index sz = m.dim * n.dim;
    std::vector<Mat<F>> rows;
    for (Index g : r.generators) {
      Mat<F> mt = m.act[g].transpose();
      rows.push_back(kron<F>(n.act[g], m.eye()) - kron<F>(n.eye(), mt));
    }
    Mat<F> sys = rows.empty() ? m.zero(0, sz) : vstack(rows, sz);
    Kernel<F> k = kernel(sys, r.field);
    for (Index c = 0; c < k.basis.cols(); ++c) {
      Mat<F> f(n.dim, m.dim);
      for (Index i = 0; i < n.dim; ++i)
        for (Index j = 0; j < m.dim; ++j) f(i, j) = k.basis(i * m.dim + j, c);
      h.basis.push_back(std::move(f));
    }
    h.positions = k.free;
  }
  Module<F>& hm = h.module;
  hm.ring = m.ring;
  hm.dim = h.dim();
  for (Index b = 0; b < dr; ++b) {
    Mat<F> a = m.zero(hm.dim, hm.dim);
    for (Index c = 0; c < hm.dim; ++c) a.col(c) = h.coords(h.basis[c] * m.act[b]);
    hm.act.push_back(std::move(a));
  }
  return h;
}

template <class F>
Mat<F> hom_map(const HomSpace<F>& from, const HomSpace<F>& to, const Mat<F>& pre, const Mat<F>& post) {
  Mat<F> out = from.source.zero(to.dim(), from.dim());
  for (Index c = 0; c < from.dim(); ++c) out.col(c) = to.coords(post * from.basis[c] * pre);
  return out;
}

template <class F>
std::optional<Mat<F>> factor_through(const HomSpace<F>& hs, const Mat<F>* post, const Mat<F>* pre, const Mat<F>& rhs) {
  const FieldDescriptor& fd = hs.source.field();
  Index sz = rhs.rows() * rhs.cols();
  Mat<F> sys = zeros<F>(fd, sz, hs.dim());
  for (Index c = 0; c < hs.dim(); ++c) {
    Mat<F> h = hs.basis[c];
    if (post) h = *post * h;
    if (pre) h = h * *pre;
    if (h.rows() != rhs.rows() || h.cols() != rhs.cols()) throw DimensionMismatch("factor_through: shapes differ");
    sys.col(c) = Eigen::Map<const Vec<F>>(h.data(), sz);
  }
  Mat<F> b = Eigen::Map<const Vec<F>>(rhs.data(), sz);
  auto sol = solve(sys, b, fd);
  if (!sol) return std::nullopt;
  if (hs.dim() == 0) return zeros<F>(fd, hs.target.dim, hs.source.dim);
  return hs.element(sol->col(0));
}

template <class F>
Tensor<F> tensor_over(const Module<F>& m, const Module<F>& n) {
  Tensor<F> t;
  t.left_dim = m.dim;
  t.right_dim = n.dim;
  const Algebra<F>& r = *m.ring;
  Index sz = m.dim * n.dim;
  std::vector<Mat<F>> rel;
  for (Index g : r.generators) rel.push_back(kron<F>(m.act[g], n.eye()) - kron<F>(m.eye(), n.act[g]));
  Mat<F> span = rel.empty() ? m.zero(sz, 0) : hstack(rel, sz);
  Quotient<F> q = quotient<F>(span, sz, r.field);
  t.projection = q.projection;
  t.section = q.section;
  t.module.ring = m.ring;
  t.module.dim = static_cast<Index>(q.kept.size());
  for (Index b = 0; b < r.dim(); ++b) t.module.act.push_back(q.projection * kron<F>(m.act[b], n.eye()) * q.section);
  return t;
}

template <class F>
Mat<F> tensor_map(const Tensor<F>& from, const Tensor<F>& to, const Mat<F>& f, const Mat<F>& g) {
  return to.projection * kron(f, g) * from.section;
}

template <class F>
Module<F> matlis_dual(const Module<F>& m) {
  Module<F> d;
  d.ring = m.ring;
  d.dim = m.dim;
  for (const auto& a : m.act) d.act.push_back(a.transpose());
  return d;
}

template <class F>
Generators<F> minimal_generators(const Module<F>& m) {
  std::vector<Mat<F>> cols;
  for (Index g : m.ring->generators) cols.push_back(m.act[g]);
  Mat<F> span = cols.empty() ? m.zero(m.dim, 0) : hstack(cols, m.dim);
  Quotient<F> q = quotient<F>(span, m.dim, m.field());
  Generators<F> g;
  g.count = static_cast<Index>(q.kept.size());
  g.lift = q.section;
  return g;
}

template <class F>
Mat<F> cover_map(const Module<F>& m, const Mat<F>& gens) {
  Index dr = m.ring->dim();
  Mat<F> c = m.zero(m.dim, gens.cols() * dr);
  for (Index j = 0; j < gens.cols(); ++j)
    for (Index b = 0; b < dr; ++b) c.col(j * dr + b) = m.act[b] * gens.col(j);
  return c;
}

template <class F>
Mat<F> Sub<F>::coords(const Mat<F>& v) const {
  Mat<F> out(static_cast<Index>(rows.size()), v.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = v.row(rows[i]);
  return out;
}

namespace {

template <class F>
Sub<F> make_sub(const Module<F>& m, Mat<F> inclusion, std::vector<Index> rows) {
  Sub<F> s;
  s.inclusion = std::move(inclusion);
  s.rows = std::move(rows);
  s.module.ring = m.ring;
  s.module.dim = s.inclusion.cols();
  for (const auto& a : m.act) s.module.act.push_back(s.coords(a * s.inclusion));
  return s;
}

template <class F>
Mat<F> closure(const Module<F>& m, const Mat<F>& span, std::vector<Index>* pivots) {
  Mat<F> cur = span;
  Index prev = -1;
  while (true) {
    Mat<F> t = cur.transpose();
    Echelon<F> e = echelon(t);
    cur = e.rref.topRows(e.rank).transpose();
    if (e.rank == prev || e.rank == m.dim) {
      if (pivots) *pivots = e.pivots;
      return cur;
    }
    prev = e.rank;
    std::vector<Mat<F>> cols{cur};
    for (Index g : m.ring->generators) cols.push_back(m.act[g] * cur);
    cur = hstack(cols, m.dim);
  }
}

}  // namespace

template <class F>
Sub<F> submodule(const Module<F>& m, const Mat<F>& span) {
  std::vector<Index> pivots;
  Mat<F> basis = closure(m, span, &pivots);
  return make_sub(m, std::move(basis), std::move(pivots));
}

template <class F>
Quo<F> quotient_module(const Module<F>& m, const Mat<F>& span) {
  Mat<F> basis = closure(m, span, nullptr);
  Quotient<F> q = quotient<F>(basis, m.dim, m.field());
  Quo<F> out;
  out.projection = q.projection;
  out.section = q.section;
  out.module.ring = m.ring;
  out.module.dim = static_cast<Index>(q.kept.size());
  for (const auto& a : m.act) out.module.act.push_back(q.projection * a * q.section);
  return out;
}

template <class F>
Sub<F> kernel_module(const Module<F>& m, const Mat<F>& f) {
  Kernel<F> k = kernel(f, m.field());
  return make_sub(m, std::move(k.basis), std::move(k.free));
}

template <class F>
Quo<F> cokernel_module(const Module<F>& n, const Mat<F>& f) {
  return quotient_module(n, f);
}

template <class F>
Sub<F> image_module(const Module<F>& n, const Mat<F>& f) {
  return submodule(n, f);
}

template <class F>
F random_scalar(const FieldDescriptor& fd, std::mt19937_64& rng) {
  if (fd.p) return ScalarOps<F>::make(fd, static_cast<long long>(rng() % fd.p));
  return ScalarOps<F>::make(fd, static_cast<long long>(rng() % 7) - 3);
}

template <class F>
Mat<F> random_matrix(const FieldDescriptor& fd, Index r, Index c, std::mt19937_64& rng) {
  Mat<F> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_scalar<F>(fd, rng);
  return m;
}

template <class F>
std::optional<Mat<F>> is_isomorphic(const Module<F>& m, const Module<F>& n, int attempts, std::uint64_t seed) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return m.zero(0, 0);
  HomSpace<F> h = hom_space(m, n);
  for (const auto& b : h.basis)
    if (rank(b) == m.dim) return b;
  std::mt19937_64 rng(seed);
  for (int a = 0; a < attempts && h.dim() > 1; ++a) {
    Vec<F> c = random_matrix<F>(m.field(), h.dim(), 1, rng);
    Mat<F> f = h.element(c);
    if (rank(f) == m.dim) return f;
  }
  return std::nullopt;
}

template <class F>
HomSpace<F> ring_dual(const Module<F>& m) {
  return hom_space(m, free_module(m.ring, 1));
}

template <class F>
bool is_free(const Module<F>& m) {
  return minimal_generators(m).count * m.ring->dim() == m.dim;
}

template <class F>
bool is_injective(const Module<F>& m) {
  return is_free(matlis_dual(m));
}

#define TATE_INSTANTIATE(F)                                                                          \
  template struct Module<F>;                                                                        \
  template struct HomSpace<F>;                                                                      \
  template struct Sub<F>;                                                                           \
  template bool same_module(const Module<F>&, const Module<F>&);                                    \
  template Module<F> module_from_actions(AlgebraPtr<F>, Index, std::vector<Mat<F>>);                \
  template Module<F> free_module(AlgebraPtr<F>, Index);                                             \
  template Module<F> zero_module(AlgebraPtr<F>);                                                    \
  template Module<F> residue_field(AlgebraPtr<F>);                                                  \
  template Module<F> direct_sum(const std::vector<Module<F>>&);                                     \
  template Module<F> power(const Module<F>&, Index);                                                \
  template Verdict validate_module(const Module<F>&);                                               \
  template bool is_hom(const Module<F>&, const Module<F>&, const Mat<F>&);                          \
  template HomSpace<F> hom_space(const Module<F>&, const Module<F>&);                               \
  template Mat<F> hom_map(const HomSpace<F>&, const HomSpace<F>&, const Mat<F>&, const Mat<F>&);    \
  template std::optional<Mat<F>> factor_through(const HomSpace<F>&, const Mat<F>*, const Mat<F>*, const Mat<F>&); \
  template Tensor<F> tensor_over(const Module<F>&, const Module<F>&);                               \
  template Mat<F> tensor_map(const Tensor<F>&, const Tensor<F>&, const Mat<F>&, const Mat<F>&);     \
  template Module<F> matlis_dual(const Module<F>&);                                                 \
  template Generators<F> minimal_generators(const Module<F>&);                                      \
  template Mat<F> cover_map(const Module<F>&, const Mat<F>&);                                       \
  template Sub<F> submodule(const Module<F>&, const Mat<F>&);                                       \
  template Quo<F> quotient_module(const Module<F>&, const Mat<F>&);                                 \
  template Sub<F> kernel_module(const Module<F>&, const Mat<F>&);                                   \
  template Quo<F> cokernel_module(const Module<F>&, const Mat<F>&);                                 \
  template Sub<F> image_module(const Module<F>&, const Mat<F>&);                                    \
  template F random_scalar(const FieldDescriptor&, std::mt19937_64&);                               \
  template Mat<F> random_matrix(const FieldDescriptor&, Index, Index, std::mt19937_64&);            \
  template std::optional<Mat<F>> is_isomorphic(const Module<F>&, const Module<F>&, int, std::uint64_t); \
  template HomSpace<F> ring_dual(const Module<F>&);                                                 \
  template bool is_free(const Module<F>&);                                                          \
  template bool is_injective(const Module<F>&);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

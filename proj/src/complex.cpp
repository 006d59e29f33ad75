#include "tate/complex.hpp"

#include <numeric>

namespace tate {

namespace {

Index ceil_div(Index a, Index b) { return (a + b - 1) / b; }

std::string deg(Index n) { return std::to_string(n); }

}  // namespace

template <class F>
std::optional<Index> Complex<F>::rep(Index n) const {
  if (n >= lo && n <= hi) return n;
  if (n > hi) {
    if (right == Tail::Zero) return std::nullopt;
    if (right == Tail::Unknown) throw BoundExceeded("degree " + deg(n) + " is beyond the materialized window");
    return n - right_period * ceil_div(n - hi, right_period);
  }
  if (left == Tail::Zero) return std::nullopt;
  if (left == Tail::Unknown) throw BoundExceeded("degree " + deg(n) + " is below the materialized window");
  return n + left_period * ceil_div(lo - n, left_period);
}

template <class F>
std::optional<Index> Complex<F>::rep_diff(Index n) const {
  if (n > lo && n <= hi) return n;
  if (n > hi) {
    if (right == Tail::Zero) return std::nullopt;
    if (right == Tail::Unknown) throw BoundExceeded("differential " + deg(n) + " is beyond the materialized window");
    return n - right_period * ceil_div(n - hi, right_period);
  }
  if (left == Tail::Zero) return std::nullopt;
  if (left == Tail::Unknown) throw BoundExceeded("differential " + deg(n) + " is below the materialized window");
  return n + left_period * ceil_div(lo + 1 - n, left_period);
}

template <class F>
Module<F> Complex<F>::object(Index n) const {
  auto r = rep(n);
  if (!r) return zero_module(ring);
  return obj[*r - lo];
}

template <class F>
Mat<F> Complex<F>::d(Index n) const {
  auto r = rep_diff(n);
  if (!r) return zeros<F>(ring->field, dim(n - 1), dim(n));
  return dif[*r - lo];
}

template <class F>
bool Complex<F>::known(Index n) const {
  if (n >= lo && n <= hi) return true;
  return n > hi ? right != Tail::Unknown : left != Tail::Unknown;
}

template <class F>
Complex<F> make_complex(AlgebraPtr<F> ring, Index lo, std::vector<Module<F>> objects, std::vector<Mat<F>> diffs) {
  if (objects.empty()) throw std::invalid_argument("complex needs at least one degree");
  if (diffs.size() + 1 != objects.size()) throw DimensionMismatch("complex: need one differential between consecutive degrees");
  Complex<F> x;
  x.ring = std::move(ring);
  x.lo = lo;
  x.hi = lo + static_cast<Index>(objects.size()) - 1;
  x.obj = std::move(objects);
  x.dif.push_back(x.ring->zero(0, 0));
  for (auto& d : diffs) x.dif.push_back(std::move(d));
  return x;
}

template <class F>
Complex<F> concentrated(const Module<F>& m, Index degree) {
  return make_complex<F>(m.ring, degree, {m}, {});
}

template <class F>
Complex<F> window_complex(AlgebraPtr<F> ring, Index lo, Index hi, const std::function<Module<F>(Index)>& obj,
                          const std::function<Mat<F>(Index)>& d) {
  std::vector<Module<F>> objects;
  std::vector<Mat<F>> diffs;
  for (Index n = lo; n <= hi; ++n) objects.push_back(obj(n));
  for (Index n = lo + 1; n <= hi; ++n) diffs.push_back(d(n));
  return make_complex(std::move(ring), lo, std::move(objects), std::move(diffs));
}

template <class F>
Verdict validate_complex(const Complex<F>& x) {
  if (x.right == Tail::Periodic) {
    if (x.right_period <= 0 || x.hi - x.right_period < x.lo) return Verdict::fail("right period does not fit in the window");
    if (!same_module(x.obj[x.hi - x.lo], x.obj[x.hi - x.right_period - x.lo]))
      return Verdict::fail("right tail seam objects differ");
  }
  if (x.left == Tail::Periodic) {
    if (x.left_period <= 0 || x.lo + x.left_period > x.hi) return Verdict::fail("left period does not fit in the window");
    if (!same_module(x.obj[0], x.obj[x.left_period])) return Verdict::fail("left tail seam objects differ");
  }
  Index from = x.left == Tail::Periodic ? x.lo - x.left_period - 1 : x.lo;
  Index to = x.right == Tail::Periodic ? x.hi + x.right_period + 1 : x.hi;
  for (Index n = from; n <= to; ++n) {
    Module<F> a = x.object(n);
    Verdict v = validate_module(a);
    if (!v.ok) return Verdict::fail("degree " + deg(n) + ": " + v.detail);
    if (n == from && x.left == Tail::Unknown) continue;
    Mat<F> d = x.d(n);
    Module<F> b = x.object(n - 1);
    if (d.rows() != b.dim || d.cols() != a.dim) return Verdict::fail("differential " + deg(n) + " has wrong shape");
    if (!is_hom(a, b, d)) return Verdict::fail("differential " + deg(n) + " is not R-linear");
    if (n > from && !is_zero<F>(x.d(n - 1) * d)) return Verdict::fail("d(" + deg(n - 1) + ") d(" + deg(n) + ") != 0");
  }
  return Verdict::pass();
}

template <class F>
Mat<F> ChainMap<F>::at(Index n) const {
  if (n >= lo && n <= hi) return comp[n - lo];
  if (n > hi && right_period > 0) return comp[n - right_period * ceil_div(n - hi, right_period) - lo];
  if (n < lo && left_period > 0) return comp[n + left_period * ceil_div(lo - n, left_period) - lo];
  return zeros<F>(source.ring->field, target.dim(n), source.dim(n));
}

template <class F>
ChainMap<F> make_chain_map(const Complex<F>& s, const Complex<F>& t, Index lo, std::vector<Mat<F>> comp) {
  ChainMap<F> f;
  f.source = s;
  f.target = t;
  f.lo = lo;
  f.hi = lo + static_cast<Index>(comp.size()) - 1;
  f.comp = std::move(comp);
  return f;
}

template <class F>
ChainMap<F> identity_map(const Complex<F>& x, Index lo, Index hi) {
  std::vector<Mat<F>> comp;
  for (Index n = lo; n <= hi; ++n) comp.push_back(identity<F>(x.ring->field, x.dim(n)));
  return make_chain_map(x, x, lo, std::move(comp));
}

template <class F>
Verdict validate_chain_map(const ChainMap<F>& f, Index lo, Index hi) {
  for (Index n = lo; n <= hi; ++n) {
    Mat<F> c = f.at(n);
    Module<F> s = f.source.object(n), t = f.target.object(n);
    if (!is_hom(s, t, c)) return Verdict::fail("component " + deg(n) + " is not an R-linear map of the right shape");
    if (n > lo && f.target.d(n) * c != f.at(n - 1) * f.source.d(n))
      return Verdict::fail("square at degree " + deg(n) + " does not commute");
  }
  return Verdict::pass();
}

template <class F>
Mat<F> Homology<F>::class_of(const Mat<F>& v) const {
  Mat<F> c(static_cast<Index>(zrows.size()), v.cols());
  for (std::size_t i = 0; i < zrows.size(); ++i) c.row(static_cast<Index>(i)) = v.row(zrows[i]);
  return proj * c;
}

template <class F>
Homology<F> homology(const Complex<F>& x, Index n) {
  const FieldDescriptor& fd = x.ring->field;
  Homology<F> h;
  h.degree = n;
  Mat<F> dn = x.d(n);
  Mat<F> dn1 = x.d(n + 1);
  Kernel<F> z = kernel(dn, fd);
  h.cycles = z.basis;
  h.zrows = z.free;
  h.boundaries = column_space(dn1);
  Mat<F> bc(static_cast<Index>(h.zrows.size()), h.boundaries.cols());
  for (std::size_t i = 0; i < h.zrows.size(); ++i) bc.row(static_cast<Index>(i)) = h.boundaries.row(h.zrows[i]);
  Quotient<F> q = quotient<F>(bc, static_cast<Index>(h.zrows.size()), fd);
  h.proj = q.projection;
  h.reps = h.cycles * q.section;
  h.dim = static_cast<Index>(q.kept.size());
  return h;
}

template <class F>
Mat<F> induced_map(const Homology<F>& a, const Homology<F>& b, const Mat<F>& f) {
  return b.class_of(f * a.reps);
}

template <class F>
Complex<F> shift(const Complex<F>& x, Index i) {
  Complex<F> y = x;
  y.lo += i;
  y.hi += i;
  if (i % 2 != 0)
    for (auto& d : y.dif) d = -d;
  return y;
}

template <class F>
Complex<F> cone(const ChainMap<F>& f) {
  const Complex<F>& m = f.source;
  const Complex<F>& n = f.target;
  if (!m.bounded() || !n.bounded()) throw std::invalid_argument("cone needs bounded complexes");
  Index lo = std::min(n.lo, m.lo + 1), hi = std::max(n.hi, m.hi + 1);
  const FieldDescriptor& fd = m.ring->field;
  auto obj = [&](Index k) { return direct_sum<F>({n.object(k), m.object(k - 1)}); };
  auto d = [&](Index k) {
    Index a = n.dim(k), b = m.dim(k - 1), c = n.dim(k - 1), e = m.dim(k - 2);
    Mat<F> out = zeros<F>(fd, c + e, a + b);
    out.block(0, 0, c, a) = n.d(k);
    out.block(0, a, c, b) = f.at(k - 1);
    out.block(c, a, e, b) = -m.d(k - 1);
    return out;
  };
  return window_complex<F>(m.ring, lo, hi, obj, d);
}

namespace {

template <class F>
Complex<F> rewindow(const Complex<F>& x, Index lo, Index hi, Tail left, Tail right, Index lp, Index rp) {
  Complex<F> y = window_complex<F>(
      x.ring, lo, hi, [&](Index n) { return x.object(n); }, [&](Index n) { return x.d(n); });
  y.left = left;
  y.right = right;
  y.left_period = lp;
  y.right_period = rp;
  return y;
}

}  // namespace

template <class F>
Complex<F> truncate_ge(const Complex<F>& x, Index k) {
  Index hi = std::max(x.hi, k);
  if (x.right == Tail::Periodic) hi = std::max(hi, k + x.right_period);
  if (x.right == Tail::Unknown && k > x.hi) throw BoundExceeded("truncation above the materialized window");
  return rewindow(x, k, hi, Tail::Zero, x.right, 0, x.right_period);
}

template <class F>
Complex<F> truncate_le(const Complex<F>& x, Index k) {
  Index lo = std::min(x.lo, k);
  if (x.left == Tail::Periodic) lo = std::min(lo, k - x.left_period);
  if (x.left == Tail::Unknown && k < x.lo) throw BoundExceeded("truncation below the materialized window");
  return rewindow(x, lo, k, x.left, Tail::Zero, x.left_period, 0);
}

template <class F>
Complex<F> direct_sum(const Complex<F>& a, const Complex<F>& b) {
  auto side = [](Tail s, Tail t, Index p, Index q, Tail& out, Index& period) {
    if (s == Tail::Unknown || t == Tail::Unknown) {
      out = Tail::Unknown;
      period = 0;
    } else if (s == Tail::Periodic || t == Tail::Periodic) {
      out = Tail::Periodic;
      period = std::lcm(s == Tail::Periodic ? p : 1, t == Tail::Periodic ? q : 1);
    } else {
      out = Tail::Zero;
      period = 0;
    }
  };
  Tail l, r;
  Index lp, rp;
  side(a.left, b.left, a.left_period, b.left_period, l, lp);
  side(a.right, b.right, a.right_period, b.right_period, r, rp);
  Index lo = std::min(a.lo, b.lo) - (l == Tail::Periodic ? lp : 0);
  Index hi = std::max(a.hi, b.hi) + (r == Tail::Periodic ? rp : 0);
  if (l == Tail::Unknown) lo = std::max(a.left == Tail::Unknown ? a.lo : lo, b.left == Tail::Unknown ? b.lo : lo);
  if (r == Tail::Unknown) hi = std::min(a.right == Tail::Unknown ? a.hi : hi, b.right == Tail::Unknown ? b.hi : hi);
  const FieldDescriptor& fd = a.ring->field;
  Complex<F> y = window_complex<F>(
      a.ring, lo, hi, [&](Index n) { return direct_sum<F>({a.object(n), b.object(n)}); },
      [&](Index n) { return block_diag<F>({a.d(n), b.d(n)}, fd); });
  y.left = l;
  y.right = r;
  y.left_period = lp;
  y.right_period = rp;
  return y;
}

template <class F>
Complex<F> matlis_dual(const Complex<F>& x) {
  Complex<F> y = window_complex<F>(
      x.ring, -x.hi, -x.lo, [&](Index n) { return matlis_dual(x.object(-n)); },
      [&](Index n) { return Mat<F>(x.d(-n + 1).transpose()); });
  y.left = x.right;
  y.right = x.left;
  y.left_period = x.right_period;
  y.right_period = x.left_period;
  return y;
}

template <class F>
HomComplex<F>::HomComplex(Complex<F> x, Complex<F> y) : x_(std::move(x)), y_(std::move(y)) {
  Index lo = 0, hi = -1;
  Tail left = Tail::Zero, right = Tail::Zero;
  Index lp = 0, rp = 0;
  auto period = [](Index q) { return std::lcm(q, Index(2)); };
  if (x_.bounded()) {
    x_bounded_ = true;
    Index a = x_.lo, b = x_.hi;
    switch (y_.right) {
      case Tail::Zero: hi = y_.hi - a; break;
      case Tail::Periodic: rp = period(y_.right_period); hi = y_.hi - a + 1 + rp; break;
      case Tail::Unknown: hi = y_.hi - b; break;
    }
    switch (y_.left) {
      case Tail::Zero: lo = y_.lo - b; break;
      case Tail::Periodic: lp = period(y_.left_period); lo = y_.lo - b - 1 - lp; break;
      case Tail::Unknown: lo = y_.lo - a; break;
    }
    right = y_.right;
    left = y_.left;
  } else if (y_.bounded()) {
    x_bounded_ = false;
    Index c = y_.lo, e = y_.hi;
    switch (x_.left) {
      case Tail::Zero: hi = e - x_.lo; break;
      case Tail::Periodic: rp = period(x_.left_period); hi = e - x_.lo + 1 + rp; break;
      case Tail::Unknown: hi = c - x_.lo; break;
    }
    switch (x_.right) {
      case Tail::Zero: lo = c - x_.hi; break;
      case Tail::Periodic: lp = period(x_.right_period); lo = c - x_.hi - 1 - lp; break;
      case Tail::Unknown: lo = e - x_.hi; break;
    }
    right = x_.left;
    left = x_.right;
  } else {
    throw std::invalid_argument("hom complex needs one bounded argument");
  }
  if (hi < lo) hi = lo;
  cx_ = window_complex<F>(
      x_.ring, lo, hi,
      [&](Index n) {
        std::vector<Module<F>> mods;
        for (const auto& part : parts(n)) mods.push_back(part.space->module);
        return mods.empty() ? zero_module(x_.ring) : direct_sum(mods);
      },
      [&](Index n) { return differential(n); });
  cx_.left = left;
  cx_.right = right;
  cx_.left_period = lp;
  cx_.right_period = rp;
}

template <class F>
std::pair<Index, Index> HomComplex<F>::p_range(Index n) const {
  if (x_bounded_) return {x_.lo, x_.hi};
  return {y_.lo - n, y_.hi - n};
}

template <class F>
std::shared_ptr<const HomSpace<F>> HomComplex<F>::space(Index p, Index j) const {
  auto rp = x_.rep(p);
  auto rj = y_.rep(j);
  if (!rp || !rj) return nullptr;
  auto key = std::make_pair(*rp, *rj);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto s = std::make_shared<const HomSpace<F>>(hom_space(x_.object(p), y_.object(j)));
  cache_.emplace(key, s);
  return s;
}

template <class F>
std::vector<typename HomComplex<F>::Part> HomComplex<F>::parts(Index n) const {
  std::vector<Part> out;
  auto [a, b] = p_range(n);
  Index off = 0;
  for (Index p = a; p <= b; ++p) {
    auto s = space(p, p + n);
    if (!s || s->dim() == 0) continue;
    out.push_back(Part{p, off, s});
    off += s->dim();
  }
  return out;
}

template <class F>
Mat<F> HomComplex<F>::coords(Index n, const std::function<Mat<F>(Index)>& family) const {
  auto ps = parts(n);
  Index total = ps.empty() ? 0 : ps.back().offset + ps.back().space->dim();
  Mat<F> out = zeros<F>(x_.ring->field, total, 1);
  for (const auto& part : ps) out.block(part.offset, 0, part.space->dim(), 1) = part.space->coords(family(part.p));
  return out;
}

template <class F>
Mat<F> HomComplex<F>::differential(Index n) const {
  auto src = parts(n);
  auto dst = parts(n - 1);
  Index cols = src.empty() ? 0 : src.back().offset + src.back().space->dim();
  Index rows = dst.empty() ? 0 : dst.back().offset + dst.back().space->dim();
  Mat<F> out = zeros<F>(x_.ring->field, rows, cols);
  auto find = [&](Index p) -> const Part* {
    for (const auto& d : dst)
      if (d.p == p) return &d;
    return nullptr;
  };
  F sign = x_.ring->scalar(n % 2 == 0 ? -1 : 1);
  for (const auto& part : src) {
    Index p = part.p;
    const Part* same = find(p);
    const Part* next = find(p + 1);
    Mat<F> dy = same ? y_.d(p + n) : Mat<F>();
    Mat<F> dx = next ? x_.d(p + 1) : Mat<F>();
    for (Index c = 0; c < part.space->dim(); ++c) {
      const Mat<F>& f = part.space->basis[c];
      if (same) out.block(same->offset, part.offset + c, same->space->dim(), 1) += same->space->coords(dy * f);
      if (next) out.block(next->offset, part.offset + c, next->space->dim(), 1) += sign * next->space->coords(f * dx);
    }
  }
  return out;
}

template <class F>
HomComplex<F> hom_complex(const Complex<F>& x, const Complex<F>& y) {
  return HomComplex<F>(x, y);
}

template <class F>
Mat<F> hom_functor(const HomComplex<F>& from, const HomComplex<F>& to, OptChainMap<F> pre, OptChainMap<F> post,
                   Index n) {
  auto src = from.parts(n);
  auto dst = to.parts(n);
  Index cols = src.empty() ? 0 : src.back().offset + src.back().space->dim();
  Index rows = dst.empty() ? 0 : dst.back().offset + dst.back().space->dim();
  Mat<F> out = zeros<F>(from.first().ring->field, rows, cols);
  for (const auto& part : src) {
    const typename HomComplex<F>::Part* target = nullptr;
    for (const auto& d : dst)
      if (d.p == part.p) target = &d;
    if (!target) continue;
    Mat<F> a = pre ? pre->at(part.p) : Mat<F>();
    Mat<F> b = post ? post->at(part.p + n) : Mat<F>();
    for (Index c = 0; c < part.space->dim(); ++c) {
      Mat<F> h = part.space->basis[c];
      if (post) h = b * h;
      if (pre) h = h * a;
      out.block(target->offset, part.offset + c, target->space->dim(), 1) = target->space->coords(h);
    }
  }
  return out;
}

template <class F>
NullHomotopy<F> null_homotopy(const ChainMap<F>& f, Index lo, Index hi) {
  const Complex<F>& x = f.source;
  const Complex<F>& y = f.target;
  const FieldDescriptor& fd = x.ring->field;
  std::vector<HomSpace<F>> spaces;
  std::vector<Index> col_off;
  Index cols = 0;
  for (Index n = lo - 1; n <= hi; ++n) {
    spaces.push_back(hom_space(x.object(n), y.object(n + 1)));
    col_off.push_back(cols);
    cols += spaces.back().dim();
  }
  std::vector<Index> row_off;
  Index rows = 0;
  for (Index n = lo; n <= hi; ++n) {
    row_off.push_back(rows);
    rows += y.dim(n) * x.dim(n);
  }
  Mat<F> sys = zeros<F>(fd, rows, cols);
  Mat<F> rhs = zeros<F>(fd, rows, 1);
  auto put = [&](Index eq, Index col, const Mat<F>& m) {
    Index r = row_off[eq - lo];
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) sys(r + i * m.cols() + j, col) += m(i, j);
  };
  for (Index n = lo - 1; n <= hi; ++n) {
    const HomSpace<F>& h = spaces[n - lo + 1];
    for (Index c = 0; c < h.dim(); ++c) {
      Index col = col_off[n - lo + 1] + c;
      if (n >= lo) put(n, col, y.d(n + 1) * h.basis[c]);
      if (n + 1 <= hi) put(n + 1, col, h.basis[c] * x.d(n + 1));
    }
  }
  for (Index n = lo; n <= hi; ++n) {
    Mat<F> fn = f.at(n);
    Index r = row_off[n - lo];
    for (Index i = 0; i < fn.rows(); ++i)
      for (Index j = 0; j < fn.cols(); ++j) rhs(r + i * fn.cols() + j, 0) = fn(i, j);
  }
  NullHomotopy<F> out;
  out.lo = lo;
  out.hi = hi;
  auto sol = solve(sys, rhs, fd);
  if (!sol) return out;
  out.found = true;
  for (Index n = lo - 1; n <= hi; ++n) {
    const HomSpace<F>& h = spaces[n - lo + 1];
    out.s.push_back(h.element(sol->block(col_off[n - lo + 1], 0, h.dim(), 1)));
  }
  return out;
}

template <class F>
ExactnessReport check_exactness(const Complex<F>& x) {
  ExactnessReport r;
  Index from = x.lo, to = x.hi;
  if (x.left == Tail::Periodic) from -= x.left_period;
  if (x.right == Tail::Periodic) to += x.right_period;
  if (x.left == Tail::Unknown) {
    from = x.lo + 1;
    r.conclusive = false;
  }
  if (x.right == Tail::Unknown) {
    to = x.hi - 1;
    r.conclusive = false;
  }
  r.lo = from;
  r.hi = to;
  for (Index n = from; n <= to; ++n) {
    Homology<F> h = homology(x, n);
    if (h.dim != 0) {
      r.exact = false;
      r.conclusive = true;
      r.failing_degree = n;
      r.detail = "homology of dimension " + std::to_string(h.dim) + " in degree " + deg(n);
      return r;
    }
  }
  return r;
}

template <class F>
ExactnessReport check_relative_exactness(const Complex<F>& x, const Module<F>& probe, ProbeSide side) {
  Complex<F> p = concentrated(probe, 0);
  if (side == ProbeSide::HomFromProbe) return check_exactness(hom_complex(p, x).complex());
  return check_exactness(hom_complex(x, p).complex());
}

template <class F>
Mat<F> connecting_map(const Complex<F>& a, const Complex<F>& b, const Complex<F>& c,
                      const DegreeMaps<F>& i, const DegreeMaps<F>& pi, Index n) {
  const FieldDescriptor& fd = a.ring->field;
  Homology<F> hc = homology(c, n);
  Homology<F> ha = homology(a, n - 1);
  auto lift = solve(pi(n), hc.reps, fd);
  if (!lift) throw std::logic_error("connecting map: projection is not surjective");
  Mat<F> db = b.d(n) * *lift;
  auto pre = solve(i(n - 1), db, fd);
  if (!pre) throw std::logic_error("connecting map: boundary does not come from the subcomplex");
  return ha.class_of(*pre);
}

#define TATE_INSTANTIATE(F)                                                                                  \
  template struct Complex<F>;                                                                               \
  template struct ChainMap<F>;                                                                              \
  template struct Homology<F>;                                                                              \
  template class HomComplex<F>;                                                                             \
  template Complex<F> make_complex(AlgebraPtr<F>, Index, std::vector<Module<F>>, std::vector<Mat<F>>);      \
  template Complex<F> concentrated(const Module<F>&, Index);                                                \
  template Complex<F> window_complex(AlgebraPtr<F>, Index, Index, const std::function<Module<F>(Index)>&,   \
                                     const std::function<Mat<F>(Index)>&);                                  \
  template Verdict validate_complex(const Complex<F>&);                                                     \
  template ChainMap<F> make_chain_map(const Complex<F>&, const Complex<F>&, Index, std::vector<Mat<F>>);    \
  template ChainMap<F> identity_map(const Complex<F>&, Index, Index);                                       \
  template Verdict validate_chain_map(const ChainMap<F>&, Index, Index);                                    \
  template Homology<F> homology(const Complex<F>&, Index);                                                  \
  template Mat<F> induced_map(const Homology<F>&, const Homology<F>&, const Mat<F>&);                       \
  template Complex<F> shift(const Complex<F>&, Index);                                                      \
  template Complex<F> cone(const ChainMap<F>&);                                                             \
  template Complex<F> truncate_ge(const Complex<F>&, Index);                                                \
  template Complex<F> truncate_le(const Complex<F>&, Index);                                                \
  template Complex<F> direct_sum(const Complex<F>&, const Complex<F>&);                                     \
  template Complex<F> matlis_dual(const Complex<F>&);                                                       \
  template HomComplex<F> hom_complex(const Complex<F>&, const Complex<F>&);                                 \
  template Mat<F> hom_functor(const HomComplex<F>&, const HomComplex<F>&, const ChainMap<F>*,               \
                              const ChainMap<F>*, Index);                                                   \
  template NullHomotopy<F> null_homotopy(const ChainMap<F>&, Index, Index);                                 \
  template ExactnessReport check_exactness(const Complex<F>&);                                              \
  template ExactnessReport check_relative_exactness(const Complex<F>&, const Module<F>&, ProbeSide);         \
  template Mat<F> connecting_map(const Complex<F>&, const Complex<F>&, const Complex<F>&,                   \
                                 const std::function<Mat<F>(Index)>&, const std::function<Mat<F>(Index)>&, \
                                 Index);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

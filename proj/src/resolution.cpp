#include "tate/resolution.hpp"

#include <algorithm>

namespace tate {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string GDimReport::str() const {
  switch (status) {
    case GStatus::Finite: return std::to_string(value);
    case GStatus::Infinite: return "infinite";
    case GStatus::Exceeded: return ">= " + std::to_string(value);
  }
  return "?";
}

namespace {

constexpr int iso_attempts = 24;

template <class F>
Module<F> free_or_zero(const AlgebraPtr<F>& ring, Index rank) {
  return rank == 0 ? zero_module(ring) : free_module(ring, rank);
}

template <class F>
Mat<F> inverse_of(const Mat<F>& a, const FieldDescriptor& fd) {
  if (a.rows() == 0) return a;
  return inverse(a, fd);
}

}  // namespace

template <class F>
Resolution<F> minimal_free_resolution(const Module<F>& m, Index length, std::uint64_t seed) {
  const AlgebraPtr<F>& ring = m.ring;
  Index dr = ring->dim();
  Resolution<F> res;
  res.resolved = m;
  std::vector<Module<F>> objects, syz;
  std::vector<Mat<F>> diffs, covers;
  std::vector<Index> gens;
  Module<F> cur = m;
  Mat<F> inc;  // cur -> F_{i-1}
  Tail tail = Tail::Unknown;
  for (Index i = 0;; ++i) {
    if (cur.dim == 0) {
      if (i == 0) {
        objects.push_back(zero_module(ring));
        res.free_augmentation = m.zero(0, 0);
      }
      tail = Tail::Zero;
      break;
    }
    Generators<F> g = minimal_generators(cur);
    Mat<F> cov = cover_map(cur, g.lift);
    // Periodicity: cur is isomorphic to an earlier syzygy.
    bool closed = false;
    for (Index a = 0; a < i && !closed; ++a) {
      if (syz[a].dim != cur.dim || gens[a] != g.count) continue;
      auto phi = is_isomorphic(syz[a], cur, iso_attempts, seed + static_cast<std::uint64_t>(i));
      if (!phi) continue;
      objects.push_back(objects[a]);
      diffs.push_back(inc * *phi * covers[a]);
      res.period_start = a;
      res.period = i - a;
      closed = true;
    }
    if (closed) {
      tail = Tail::Periodic;
      break;
    }
    objects.push_back(free_module(ring, g.count));
    if (i == 0)
      res.free_augmentation = cov;
    else
      diffs.push_back(inc * cov);
    syz.push_back(cur);
    covers.push_back(cov);
    gens.push_back(g.count);
    if (i == length) break;
    Sub<F> k = kernel_module(objects.back(), cov);
    cur = k.module;
    inc = k.inclusion;
  }
  (void)dr;
  res.free = make_complex(ring, 0, std::move(objects), std::move(diffs));
  res.free.right = tail;
  if (tail == Tail::Periodic) res.free.right_period = res.period;
  res.complex = res.free;
  res.augmentation = res.free_augmentation;
  res.properness.detail = "free resolution";
  return res;
}

template <class F>
Mat<F> free_entry(const Algebra<F>& r, const Mat<F>& d, Index row, Index col) {
  Index dr = r.dim();
  return d.block(row * dr, col * dr + r.unit, dr, 1);
}

template <class F>
Mat<F> free_dual(const Algebra<F>& r, const Mat<F>& d) {
  Index dr = r.dim();
  Index a = d.cols() / dr, b = d.rows() / dr;
  Mat<F> out = r.zero(a * dr, b * dr);
  for (Index l = 0; l < a; ++l)
    for (Index j = 0; j < b; ++j) {
      Mat<F> e = free_entry(r, d, j, l);
      out.block(l * dr, j * dr, dr, dr) = r.left_mult(e.col(0));
    }
  return out;
}

template <class F>
Mat<F> tensor_free(const Module<F>& c, const Mat<F>& d) {
  const Algebra<F>& r = *c.ring;
  Index dr = r.dim(), dc = c.dim;
  Index a = d.cols() / dr, b = d.rows() / dr;
  Mat<F> out = c.zero(b * dc, a * dc);
  for (Index l = 0; l < a; ++l)
    for (Index j = 0; j < b; ++j) {
      Mat<F> e = free_entry(r, d, j, l);
      out.block(j * dc, l * dc, dc, dc) = c.action(e.col(0));
    }
  return out;
}

template <class F>
Complex<F> tensor_free(const Module<F>& c, const Complex<F>& x) {
  Index dr = c.ring->dim();
  if (c.free_rank == 1) return x;
  Complex<F> y = window_complex<F>(
      c.ring, x.lo, x.hi,
      [&](Index n) {
        Index r = x.dim(n) / dr;
        return r == 0 ? zero_module(c.ring) : power(c, r);
      },
      [&](Index n) { return tensor_free(c, x.d(n)); });
  y.left = x.left;
  y.right = x.right;
  y.left_period = x.left_period;
  y.right_period = x.right_period;
  return y;
}

template <class F>
ChainMap<F> tensor_free(const Module<F>& c, const ChainMap<F>& f, const Complex<F>& source, const Complex<F>& target) {
  ChainMap<F> g = f;
  g.source = source;
  g.target = target;
  if (c.free_rank != 1)
    for (auto& m : g.comp) m = tensor_free(c, m);
  return g;
}

template <class F>
Complex<F> augmented(const Resolution<F>& r) {
  const Complex<F>& x = r.complex;
  Complex<F> y = window_complex<F>(
      x.ring, -1, x.hi, [&](Index n) { return n == -1 ? r.resolved : x.object(n); },
      [&](Index n) { return n == 0 ? r.augmentation : x.d(n); });
  y.right = x.right;
  y.right_period = x.right_period;
  return y;
}

template <class F>
Resolution<F> pc_from_free(const Module<F>& m, const Module<F>& c, const HomSpace<F>& hom_cm, const Resolution<F>& f) {
  const Algebra<F>& r = *m.ring;
  Index dr = r.dim();
  Resolution<F> w = f;
  w.kind = ResolutionKind::ProjC;
  w.resolved = m;
  w.c = c;
  w.complex = tensor_free(c, f.free);
  Index g0 = f.free.dim(0) / dr;
  std::vector<Mat<F>> blocks;
  for (Index j = 0; j < g0; ++j) blocks.push_back(hom_cm.element(f.free_augmentation.col(j * dr + r.unit)));
  w.augmentation = blocks.empty() ? m.zero(m.dim, 0) : hstack(blocks, m.dim);
  ExactnessReport ex = check_exactness(augmented(w));
  if (!ex.exact)
    throw NotInBassClass("C (x) Hom(C, M) does not resolve M (" + ex.detail + "); M is outside the Bass class of C");
  w.properness = check_relative_exactness(augmented(w), c, ProbeSide::HomFromProbe);
  if (w.properness.conclusive && !ex.conclusive) w.properness.conclusive = false;
  return w;
}

template <class F>
Resolution<F> proper_pc_resolution(const Module<F>& m, const Module<F>& c, Index length, std::uint64_t seed) {
  HomSpace<F> h = hom_space(c, m);
  Resolution<F> f = minimal_free_resolution(h.module, length, seed);
  return pc_from_free(m, c, h, f);
}

template <class F>
std::vector<Index> ext_dims(const Resolution<F>& x, const Module<F>& y, Index from, Index to) {
  HomComplex<F> h = hom_complex(x.complex, concentrated(y, 0));
  std::vector<Index> out;
  for (Index i = from; i <= to; ++i) out.push_back(i < 0 ? 0 : homology(h.complex(), -i).dim);
  return out;
}

template <class F>
Answer ext_vanishes(const Resolution<F>& x, const Module<F>& y, std::string* witness) {
  Index top;
  bool certain = true;
  if (x.finite()) {
    top = x.length();
  } else if (x.periodic()) {
    top = x.period_start + x.period + 1;
  } else {
    top = x.length() - 1;
    certain = false;
  }
  if (top >= 1) {
    std::vector<Index> d = ext_dims(x, y, 1, top);
    for (Index i = 1; i <= top; ++i)
      if (d[i - 1] != 0) {
        if (witness) *witness = "Ext^" + std::to_string(i) + " has dimension " + std::to_string(d[i - 1]);
        return Answer::No;
      }
  }
  if (!certain) {
    if (witness) *witness = "Ext vanishes through degree " + std::to_string(top) + " but no periodicity was found";
    return Answer::Inconclusive;
  }
  return Answer::Yes;
}

template <class F>
Answer ext_vanishing(const Module<F>& x, const Module<F>& y, Index bound, std::string* witness, std::uint64_t seed) {
  if (is_free(x)) {
    if (witness) *witness = "first argument is free";
    return Answer::Yes;
  }
  if (is_injective(y)) {
    if (witness) *witness = "second argument is injective";
    return Answer::Yes;
  }
  std::string w1, w2;
  Answer a = deepening(bound, [&](Index len) { return ext_vanishes(minimal_free_resolution(x, len, seed), y, &w1); });
  if (a != Answer::Inconclusive) {
    if (witness) *witness = w1;
    return a;
  }
  Module<F> dy = matlis_dual(y), dx = matlis_dual(x);
  Answer b = deepening(bound, [&](Index len) { return ext_vanishes(minimal_free_resolution(dy, len, seed), dx, &w2); });
  if (witness) *witness = b == Answer::Inconclusive ? w1 : w2;
  return b;
}

template <class F>
ReflexivityReport<F> totally_reflexive(const Module<F>& m, Index bound, std::uint64_t seed) {
  ReflexivityReport<F> out;
  AlgebraPtr<F> ring = m.ring;
  Module<F> r = free_module(ring, 1);
  if (is_free(m)) {
    out.answer = Answer::Yes;
    out.witness = "free";
    return out;
  }
  std::string w;
  Answer a = deepening(bound, [&](Index len) { return ext_vanishes(minimal_free_resolution(m, len, seed), r, &w); });
  if (a == Answer::No) {
    out.answer = Answer::No;
    out.witness = "Ext(M, R): " + w;
    return out;
  }
  HomSpace<F> dual = ring_dual(m);
  std::string wd;
  Answer b =
      deepening(bound, [&](Index len) { return ext_vanishes(minimal_free_resolution(dual.module, len, seed), r, &wd); });
  if (b == Answer::No) {
    out.answer = Answer::No;
    out.witness = "Ext(M*, R): " + wd;
    return out;
  }
  HomSpace<F> ddual = ring_dual(dual.module);
  Mat<F> ev = m.zero(ddual.dim(), m.dim);
  for (Index c = 0; c < m.dim; ++c) {
    Mat<F> e = m.zero(r.dim, dual.dim());
    for (Index k = 0; k < dual.dim(); ++k) e.col(k) = dual.basis[k].col(c);
    ev.col(c) = ddual.coords(e);
  }
  if (ddual.dim() != m.dim || rank(ev) != m.dim) {
    out.answer = Answer::No;
    out.witness = "M -> M** is not bijective";
    return out;
  }
  if (a == Answer::Inconclusive || b == Answer::Inconclusive) {
    out.answer = Answer::Inconclusive;
    out.witness = a == Answer::Inconclusive ? "Ext(M, R): " + w : "Ext(M*, R): " + wd;
    return out;
  }
  out.answer = Answer::Yes;
  out.witness = "Ext vanishing certified by periodic syzygies; M -> M** bijective";
  return out;
}

template <class F>
GDimReport gorenstein_pd(const Module<F>& m, OptModule<F> c, Index bound, std::uint64_t seed) {
  GDimReport rep;
  if (c) {
    std::string w;
    Answer bass = ext_vanishing(*c, m, bound, &w, seed);
    if (bass == Answer::No) {
      rep.status = GStatus::Infinite;
      rep.witness = "outside the Bass class: Ext(C, M): " + w;
      return rep;
    }
    HomSpace<F> h = hom_space(*c, m);
    GDimReport inner = gorenstein_pd<F>(h.module, nullptr, bound, seed);
    if (inner.status == GStatus::Infinite) {
      inner.witness = "Hom(C, M): " + inner.witness;
      return inner;
    }
    Resolution<F> pc;
    try {
      deepening(bound, [&](Index len) {
        pc = pc_from_free(m, *c, h, minimal_free_resolution(h.module, len, seed));
        return pc.properness.conclusive ? Answer::Yes : Answer::Inconclusive;
      });
    } catch (const NotInBassClass& e) {
      rep.status = GStatus::Infinite;
      rep.witness = e.what();
      return rep;
    }
    if (inner.finite() && (bass == Answer::Inconclusive || !pc.properness.conclusive)) {
      rep.status = GStatus::Exceeded;
      rep.value = bound;
      rep.witness = "Bass class membership inconclusive: " + (bass == Answer::Inconclusive ? w : pc.properness.detail);
      return rep;
    }
    inner.witness = "Hom(C, M): " + inner.witness;
    return inner;
  }
  ReflexivityReport<F> tr = totally_reflexive(m, bound, seed);
  switch (tr.answer) {
    case Answer::Yes:
      rep.status = GStatus::Finite;
      rep.value = 0;
      break;
    case Answer::No:
      // Over an artinian local ring a finite Gorenstein projective dimension
      // equals depth R - depth M = 0, so failing total reflexivity means infinite.
      rep.status = GStatus::Infinite;
      break;
    case Answer::Inconclusive:
      rep.status = GStatus::Exceeded;
      rep.value = bound;
      break;
  }
  rep.witness = tr.witness;
  return rep;
}

namespace {

template <class F>
struct FreeTate {
  Complex<F> t;
  ChainMap<F> alpha;
};

// Complete resolution of the e-th syzygy spliced onto F_{>=e}, the comparison
// map to F, and optionally the contractible summand making it split.
template <class F>
FreeTate<F> free_tate(const Resolution<F>& res, Index e, bool split, Index bound, std::uint64_t seed) {
  const Complex<F>& fr = res.free;
  const AlgebraPtr<F>& ring = fr.ring;
  const FieldDescriptor& fd = ring->field;
  Index dr = ring->dim();
  if (!fr.known(e)) throw BoundExceeded("resolution does not reach degree " + std::to_string(e));
  Module<F> omega;
  Mat<F> pi;
  if (e == 0) {
    omega = res.resolved;
    pi = res.free_augmentation;
  } else {
    Sub<F> img = image_module(fr.object(e - 1), fr.d(e));
    omega = img.module;
    pi = img.coords(fr.d(e));
  }
  HomSpace<F> dual = ring_dual(omega);
  Resolution<F> g = minimal_free_resolution(dual.module, bound, seed);
  Index g0 = g.free.dim(0) / dr;
  std::vector<Mat<F>> rows;
  for (Index j = 0; j < g0; ++j) rows.push_back(dual.element(g.free_augmentation.col(j * dr + ring->unit)) * pi);
  Mat<F> de = rows.empty() ? zeros<F>(fd, 0, fr.dim(e)) : vstack(rows, fr.dim(e));

  Index lo = e - 1 - g.free.hi;
  Index hi = std::max(fr.hi, e);
  if (fr.right == Tail::Periodic) hi = std::max(hi, e + fr.right_period);
  if (fr.right == Tail::Unknown) hi = fr.hi;
  FreeTate<F> out;
  out.t = window_complex<F>(
      ring, lo, hi, [&](Index n) { return n >= e ? fr.object(n) : g.free.object(e - 1 - n); },
      [&](Index n) -> Mat<F> {
        if (n > e) return fr.d(n);
        if (n == e) return de;
        return free_dual(*ring, g.free.d(e - n));
      });
  out.t.left = g.free.right;
  out.t.left_period = g.free.right_period;
  out.t.right = fr.right;
  out.t.right_period = fr.right_period;

  // alpha: identity from e up, zero below 0, lifted in between.
  std::vector<Mat<F>> comp(static_cast<std::size_t>(hi + 1));
  for (Index n = e; n <= hi; ++n) comp[n] = identity<F>(fd, fr.dim(n));
  for (Index n = std::min(e, hi + 1); n >= 1; --n) {
    Index k = n - 1;
    Mat<F> rhs = fr.d(n) * (n <= hi ? comp[n] : identity<F>(fd, fr.dim(n)));
    Mat<F> dt = out.t.d(n);
    auto x = factor_through(hom_space(out.t.object(k), fr.object(k)), static_cast<const Mat<F>*>(nullptr), &dt, rhs);
    if (!x) throw std::logic_error("comparison map does not lift");
    comp[k] = *x;
  }
  out.alpha = make_chain_map(out.t, fr, 0, std::move(comp));
  if (fr.right == Tail::Periodic) out.alpha.right_period = fr.right_period;
  if (!split || e == 0) return out;

  auto part = [&](Index k) { return k >= 0 && k < e ? fr.object(k) : zero_module(ring); };
  auto pdim = [&](Index k) { return k >= 0 && k < e ? fr.dim(k) : Index(0); };
  Complex<F> t2 = window_complex<F>(
      ring, -1, e - 1, [&](Index n) { return direct_sum<F>({part(n + 1), part(n)}); },
      [&](Index n) {
        Index a = pdim(n + 1), b = pdim(n), c = pdim(n), d = pdim(n - 1);
        Mat<F> m = zeros<F>(fd, c + d, a + b);
        if (a > 0 && c > 0) m.block(0, 0, c, a) = -fr.d(n + 1);
        if (b > 0) m.block(0, a, c, b) = -identity<F>(fd, b);
        if (d > 0 && b > 0) m.block(c, a, d, b) = fr.d(n);
        return m;
      });
  Complex<F> total = direct_sum(out.t, t2);
  std::vector<Mat<F>> comp2;
  for (Index n = total.lo; n <= total.hi; ++n) {
    Mat<F> a = out.alpha.at(n);
    Mat<F> f2 = zeros<F>(fd, fr.dim(n), pdim(n + 1) + pdim(n));
    if (pdim(n) > 0) f2.block(0, pdim(n + 1), pdim(n), pdim(n)) = identity<F>(fd, pdim(n));
    comp2.push_back(hstack<F>({a, f2}, fr.dim(n)));
  }
  ChainMap<F> alpha = make_chain_map(total, fr, total.lo, std::move(comp2));
  alpha.right_period = out.alpha.right_period;
  out.t = total;
  out.alpha = alpha;
  return out;
}

}  // namespace

template <class F>
Complex<F> complete_resolution(const Module<F>& m, Index bound, Mat<F>* cover, std::uint64_t seed) {
  ReflexivityReport<F> tr = totally_reflexive(m, bound, seed);
  if (tr.answer != Answer::Yes)
    throw PreconditionFailure(std::string("module is not certified totally reflexive (") + answer_name(tr.answer) +
                              ": " + tr.witness + ")");
  Resolution<F> res = minimal_free_resolution(m, bound, seed);
  if (cover) *cover = res.free_augmentation;
  return free_tate(res, 0, false, bound, seed).t;
}

template <class F>
TateResolution<F> tate_resolution(const Module<F>& m, OptModule<F> c, Index bound, bool split, Index iso_degree,
                                  std::uint64_t seed) {
  GDimReport gd = gorenstein_pd(m, c, bound, seed);
  if (!gd.finite())
    throw NoTateResolution("no Tate resolution: G-projective dimension " + gd.str() + " (" + gd.witness + ")", gd);
  Index e = iso_degree < 0 ? gd.value : iso_degree;
  if (e < gd.value) throw PreconditionFailure("iso degree below the G-projective dimension");
  Index len = std::max(bound, e + 1);
  TateResolution<F> tr;
  tr.resolved = m;
  tr.gdim = gd;
  tr.iso_degree = e;
  tr.split = split || e == 0;
  if (c) {
    tr.c = *c;
    HomSpace<F> h = hom_space(*c, m);
    Resolution<F> f = minimal_free_resolution(h.module, len, seed);
    tr.w = pc_from_free(m, *c, h, f);
    FreeTate<F> ft = free_tate(f, e, split, bound, seed);
    tr.t = tensor_free(*c, ft.t);
    tr.alpha = tensor_free(*c, ft.alpha, tr.t, tr.w.complex);
  } else {
    tr.w = minimal_free_resolution(m, len, seed);
    FreeTate<F> ft = free_tate(tr.w, e, split, bound, seed);
    tr.t = ft.t;
    tr.alpha = ft.alpha;
  }
  return tr;
}

template <class F>
ExactnessReport check_total_acyclicity(const Complex<F>& t, const Module<F>& c) {
  ExactnessReport r = check_exactness(t);
  if (!r.exact) return r;
  for (ProbeSide side : {ProbeSide::HomFromProbe, ProbeSide::HomToProbe}) {
    ExactnessReport p = check_relative_exactness(t, c, side);
    if (!p.exact) {
      p.detail = std::string(side == ProbeSide::HomFromProbe ? "Hom(C, T): " : "Hom(T, C): ") + p.detail;
      return p;
    }
    r.conclusive = r.conclusive && p.conclusive;
  }
  return r;
}

template <class F>
Verdict validate_tate(const TateResolution<F>& tr) {
  const Complex<F>& t = tr.t;
  const Complex<F>& w = tr.w.complex;
  const FieldDescriptor& fd = t.ring->field;
  Verdict v = validate_complex(t);
  if (!v.ok) return Verdict::fail("T: " + v.detail);
  Module<F> c = tr.c ? *tr.c : free_module(t.ring, 1);
  ExactnessReport ta = check_total_acyclicity(t, c);
  if (!ta.exact) return Verdict::fail("T is not totally acyclic: " + ta.detail);
  ExactnessReport wa = check_exactness(augmented(tr.w));
  if (!wa.exact) return Verdict::fail("W does not resolve M: " + wa.detail);
  ExactnessReport pr = check_relative_exactness(augmented(tr.w), c, ProbeSide::HomFromProbe);
  if (!pr.exact) return Verdict::fail("W is not proper: " + pr.detail);
  Index lo = t.known(t.lo - 1) ? t.lo - 1 : t.lo + 1;
  Index hi = t.right == Tail::Periodic ? std::max(t.hi, tr.iso_degree) + t.right_period : t.hi;
  hi = std::min(hi, w.right == Tail::Unknown ? w.hi : hi);
  for (Index n = lo; n <= hi; ++n) {
    Mat<F> a = tr.alpha.at(n);
    Module<F> s = t.object(n), g = w.object(n);
    if (!is_hom(s, g, a)) return Verdict::fail("alpha_" + std::to_string(n) + " is not R-linear");
    if (n > lo && w.d(n) * a != tr.alpha.at(n - 1) * t.d(n))
      return Verdict::fail("alpha does not commute at degree " + std::to_string(n));
    if (n >= tr.iso_degree && (a.rows() != a.cols() || rank(a) != a.rows()))
      return Verdict::fail("alpha_" + std::to_string(n) + " is not an isomorphism");
    if (tr.split) {
      Mat<F> id = identity<F>(fd, g.dim);
      if (!factor_through(hom_space(g, s), &a, static_cast<const Mat<F>*>(nullptr), id))
        return Verdict::fail("alpha_" + std::to_string(n) + " is not a split surjection");
    }
  }
  return Verdict::pass();
}

template <class F>
TateLift<F> lift_to_tate(const Mat<F>& f, const TateResolution<F>& a, const TateResolution<F>& b, Index lo, Index hi) {
  const Complex<F>& w = a.w.complex;
  const Complex<F>& w2 = b.w.complex;
  const Complex<F>& t = a.t;
  const Complex<F>& t2 = b.t;
  const FieldDescriptor& fd = t.ring->field;
  const Mat<F>* none = nullptr;
  Index top = std::max({a.iso_degree, b.iso_degree, hi});
  std::vector<Mat<F>> fbar;
  for (Index n = 0; n <= top; ++n) {
    std::optional<Mat<F>> x;
    if (n == 0) {
      x = factor_through(hom_space(w.object(0), w2.object(0)), &b.w.augmentation, none, Mat<F>(f * a.w.augmentation));
    } else {
      Mat<F> d = w2.d(n);
      x = factor_through(hom_space(w.object(n), w2.object(n)), &d, none, Mat<F>(fbar.back() * w.d(n)));
    }
    if (!x) throw std::logic_error("lift over the resolutions failed at degree " + std::to_string(n));
    fbar.push_back(*x);
  }
  TateLift<F> out;
  out.fbar = make_chain_map(w, w2, 0, fbar);
  Index d = std::max(a.iso_degree, b.iso_degree);
  std::vector<Mat<F>> fh(static_cast<std::size_t>(top - lo + 1));
  for (Index n = top; n >= lo; --n) {
    if (n >= d) {
      fh[n - lo] = inverse_of<F>(b.alpha.at(n), fd) * fbar[n] * a.alpha.at(n);
    } else {
      Mat<F> dt = t.d(n + 1);
      Mat<F> rhs = t2.d(n + 1) * fh[n + 1 - lo];
      auto x = factor_through(hom_space(t.object(n), t2.object(n)), none, &dt, rhs);
      if (!x) throw std::logic_error("lift over the Tate resolutions failed at degree " + std::to_string(n));
      fh[n - lo] = *x;
    }
  }
  fh.resize(static_cast<std::size_t>(hi - lo + 1));
  out.fhat = make_chain_map(t, t2, lo, fh);
  out.commutes = true;
  std::vector<Mat<F>> diff;
  for (Index n = lo; n <= hi; ++n) {
    Mat<F> lhs = b.alpha.at(n) * out.fhat.at(n);
    Mat<F> rhs = out.fbar.at(n) * a.alpha.at(n);
    if (lhs != rhs) out.commutes = false;
    diff.push_back(lhs - rhs);
  }
  ChainMap<F> dm = make_chain_map(t, w2, lo, diff);
  out.homotopic = out.commutes || null_homotopy(dm, lo + 1, hi).found;
  return out;
}

template <class F>
Horseshoe<F> horseshoe_tate(const Mat<F>& i, const Mat<F>& p, const Module<F>& middle, const TateResolution<F>& t1,
                            const TateResolution<F>& t3, Index lo, Index hi) {
  if (!t1.split || !t3.split) throw PreconditionFailure("horseshoe needs split comparison maps");
  const Complex<F>& w1 = t1.w.complex;
  const Complex<F>& w3 = t3.w.complex;
  const Complex<F>& s1 = t1.t;
  const Complex<F>& s3 = t3.t;
  const ChainMap<F>& a1 = t1.alpha;
  const ChainMap<F>& a3 = t3.alpha;
  const AlgebraPtr<F>& ring = middle.ring;
  const FieldDescriptor& fd = ring->field;
  const Mat<F>* none = nullptr;
  Index d = std::max(t1.iso_degree, t3.iso_degree);
  Index top = std::max(hi + 1, d + 1);
  if (lo > 0) lo = 0;

  Mat<F> lift0;
  {
    auto x = factor_through(hom_space(w3.object(0), middle), &p, none, t3.w.augmentation);
    if (!x) throw PreconditionFailure("the sequence is not Hom(C, -)-exact");
    lift0 = *x;
  }
  // f_n: W''_n -> W'_{n-1}
  auto zero_f = [&](Index n) { return zeros<F>(fd, w1.dim(n - 1), w3.dim(n)); };
  std::vector<Mat<F>> f(static_cast<std::size_t>(top - lo + 1));
  for (Index n = lo; n <= top; ++n) {
    if (n <= 0) {
      f[n - lo] = zero_f(n);
      continue;
    }
    std::optional<Mat<F>> x;
    if (n == 1) {
      Mat<F> post = i * t1.w.augmentation;
      x = factor_through(hom_space(w3.object(1), w1.object(0)), &post, none, Mat<F>(-(lift0 * w3.d(1))));
    } else {
      Mat<F> post = w1.d(n - 1);
      x = factor_through(hom_space(w3.object(n), w1.object(n - 1)), &post, none, Mat<F>(-(f[n - 1 - lo] * w3.d(n))));
    }
    if (!x) throw std::logic_error("horseshoe lift failed at degree " + std::to_string(n));
    f[n - lo] = *x;
  }
  // g_n: T''_n -> T'_{n-1}
  std::vector<Mat<F>> g(f.size());
  for (Index n = top; n > d; --n) g[n - lo] = inverse_of<F>(a1.at(n - 1), fd) * f[n - lo] * a3.at(n);
  for (Index n = d; n >= lo; --n) {
    Mat<F> pre = s3.d(n + 1);
    Mat<F> rhs = -(s1.d(n) * g[n + 1 - lo]);
    auto x = factor_through(hom_space(s3.object(n), s1.object(n - 1)), none, &pre, rhs);
    if (!x) throw std::logic_error("horseshoe differential failed at degree " + std::to_string(n));
    g[n - lo] = *x;
  }
  // h_n: T''_n -> W'_n
  std::vector<Mat<F>> h(f.size());
  for (Index n = top; n >= lo; --n) {
    if (n >= d || w1.dim(n) == 0) {
      h[n - lo] = zeros<F>(fd, w1.dim(n), s3.dim(n));
      continue;
    }
    Mat<F> pre = s3.d(n + 1);
    Mat<F> rhs = w1.d(n + 1) * h[n + 1 - lo] + f[n + 1 - lo] * a3.at(n + 1) - a1.at(n) * g[n + 1 - lo];
    auto x = factor_through(hom_space(s3.object(n), w1.object(n)), none, &pre, rhs);
    if (!x) throw std::logic_error("horseshoe comparison failed at degree " + std::to_string(n));
    h[n - lo] = *x;
  }

  auto upper = [&](const Mat<F>& a, const Mat<F>& b, const Mat<F>& c) {
    Mat<F> m = zeros<F>(fd, a.rows() + c.rows(), a.cols() + c.cols());
    m.block(0, 0, a.rows(), a.cols()) = a;
    m.block(0, a.cols(), b.rows(), b.cols()) = b;
    m.block(a.rows(), a.cols(), c.rows(), c.cols()) = c;
    return m;
  };
  Horseshoe<F> out;
  out.lo = lo;
  out.hi = hi;
  TateResolution<F>& tr = out.tate;
  tr.resolved = middle;
  tr.c = t1.c;
  tr.iso_degree = d;
  tr.split = true;
  tr.gdim = t1.gdim;
  tr.t = window_complex<F>(
      ring, lo, hi, [&](Index n) { return direct_sum<F>({s1.object(n), s3.object(n)}); },
      [&](Index n) { return upper(s1.d(n), g[n - lo], s3.d(n)); });
  tr.t.left = tr.t.right = Tail::Unknown;
  Resolution<F>& w = tr.w;
  w.kind = t1.w.kind;
  w.resolved = middle;
  w.c = t1.c;
  w.complex = window_complex<F>(
      ring, 0, hi, [&](Index n) { return direct_sum<F>({w1.object(n), w3.object(n)}); },
      [&](Index n) { return upper(w1.d(n), f[n - lo], w3.d(n)); });
  w.complex.right = Tail::Unknown;
  w.free = w.complex;
  w.augmentation = hstack<F>({Mat<F>(i * t1.w.augmentation), lift0}, middle.dim);
  w.free_augmentation = w.augmentation;
  Module<F> c = t1.c ? *t1.c : free_module(ring, 1);
  w.properness = check_relative_exactness(augmented(w), c, ProbeSide::HomFromProbe);
  std::vector<Mat<F>> alpha;
  for (Index n = lo; n <= hi; ++n) alpha.push_back(upper(a1.at(n), h[n - lo], a3.at(n)));
  tr.alpha = make_chain_map(tr.t, w.complex, lo, alpha);

  out.identities = Verdict::pass();
  for (Index n = lo; n < top; ++n) {
    std::string at = " at degree " + std::to_string(n);
    if (n >= 0 && !is_zero<F>(w1.d(n) * f[n + 1 - lo] + f[n - lo] * w3.d(n + 1)))
      out.identities = Verdict::fail("resolution differential identity fails" + at);
    if (!is_zero<F>(s1.d(n) * g[n + 1 - lo] + g[n - lo] * s3.d(n + 1)))
      out.identities = Verdict::fail("Tate differential identity fails" + at);
    if (h[n - lo] * s3.d(n + 1) != w1.d(n + 1) * h[n + 1 - lo] + f[n + 1 - lo] * a3.at(n + 1) - a1.at(n) * g[n + 1 - lo])
      out.identities = Verdict::fail("comparison identity fails" + at);
    if (!out.identities.ok) break;
  }
  out.f = std::move(f);
  out.g = std::move(g);
  out.h = std::move(h);
  return out;
}

template <class F>
StrictResolution<F> strict_from_tate(const TateResolution<F>& tr) {
  if (!tr.split) throw PreconditionFailure("strict resolution needs a split Tate resolution");
  const Complex<F>& t = tr.t;
  const AlgebraPtr<F>& ring = t.ring;
  const FieldDescriptor& fd = ring->field;
  Index d = tr.iso_degree;
  StrictResolution<F> out;
  Quo<F> k = cokernel_module(t.object(0), t.d(1));
  Index hi = std::max<Index>(t.hi, 0);
  if (t.right == Tail::Periodic) hi = std::max(hi, t.right_period);
  out.ttilde = window_complex<F>(
      ring, -1, hi, [&](Index n) { return n == -1 ? k.module : t.object(n); },
      [&](Index n) { return n == 0 ? k.projection : t.d(n); });
  out.ttilde.right = t.right;
  out.ttilde.right_period = t.right_period;

  std::vector<Sub<F>> kers;  // kers[n] = Ker(alpha_n), n in [0, d)
  for (Index n = 0; n < d; ++n) kers.push_back(kernel_module(t.object(n), tr.alpha.at(n)));
  std::vector<Module<F>> objs{k.module};
  std::vector<Mat<F>> diffs;
  for (Index n = 1; n <= d; ++n) {
    objs.push_back(kers[n - 1].module);
    if (n == 1)
      diffs.push_back(-(k.projection * kers[0].inclusion));
    else
      diffs.push_back(-kers[n - 2].coords(t.d(n - 1) * kers[n - 1].inclusion));
  }
  out.x = make_complex(ring, 0, std::move(objs), std::move(diffs));
  out.augmentation = tr.w.augmentation * tr.alpha.at(0) * k.section;
  out.x0_to_t = t.d(0) * k.section;
  for (Index n = -1; n <= hi; ++n) {
    if (n == -1)
      out.inclusion.push_back(identity<F>(fd, k.module.dim));
    else if (n < d)
      out.inclusion.push_back(kers[n].inclusion);
    else
      out.inclusion.push_back(zeros<F>(fd, t.dim(n), 0));
    out.projection.push_back(n == -1 ? zeros<F>(fd, 0, k.module.dim) : tr.alpha.at(n));
  }
  return out;
}

template <class F>
Hull<F> wx_hull(const Module<F>& m, OptModule<F> c, Index bound, std::uint64_t seed) {
  TateResolution<F> tr = tate_resolution(m, c, bound, true, -1, seed);
  StrictResolution<F> s = strict_from_tate(tr);
  const Complex<F>& t = tr.t;
  const FieldDescriptor& fd = m.ring->field;
  Module<F> sum = direct_sum<F>({m, t.object(-1)});
  Mat<F> rel = vstack<F>({s.augmentation, Mat<F>(-s.x0_to_t)}, s.x.dim(0));
  Quo<F> q = cokernel_module(sum, rel);
  Quo<F> cos = cokernel_module(t.object(-1), t.d(0));
  Hull<F> h;
  h.k = q.module;
  h.cosyzygy = cos.module;
  Mat<F> first = zeros<F>(fd, sum.dim, m.dim);
  first.block(0, 0, m.dim, m.dim) = identity<F>(fd, m.dim);
  h.into = q.projection * first;
  Mat<F> second = zeros<F>(fd, t.dim(-1), sum.dim);
  second.block(0, m.dim, t.dim(-1), t.dim(-1)) = identity<F>(fd, t.dim(-1));
  h.onto = cos.projection * second * q.section;
  return h;
}

template <class F>
TateCoresolution<F> ic_coresolution_via_dual(const Module<F>& n, OptModule<F> c, Index bound, bool split,
                                             Index iso_degree, std::uint64_t seed) {
  TateCoresolution<F> out;
  out.coresolved = n;
  out.dual = tate_resolution(matlis_dual(n), c, bound, split, iso_degree, seed);
  const TateResolution<F>& tr = out.dual;
  out.s = matlis_dual(tr.t);
  out.v = matlis_dual(tr.w.complex);
  std::vector<Mat<F>> comp;
  for (Index k = -tr.alpha.hi; k <= -tr.alpha.lo; ++k) comp.push_back(tr.alpha.at(-k).transpose());
  out.beta = make_chain_map(out.v, out.s, -tr.alpha.hi, std::move(comp));
  out.beta.left_period = tr.alpha.right_period;
  out.coaugmentation = tr.w.augmentation.transpose();
  out.iso_degree = tr.iso_degree;
  return out;
}

#define TATE_INSTANTIATE(F)                                                                                       \
  template Resolution<F> minimal_free_resolution(const Module<F>&, Index, std::uint64_t);                         \
  template Mat<F> free_entry(const Algebra<F>&, const Mat<F>&, Index, Index);                                      \
  template Mat<F> free_dual(const Algebra<F>&, const Mat<F>&);                                                     \
  template Mat<F> tensor_free(const Module<F>&, const Mat<F>&);                                                    \
  template Complex<F> tensor_free(const Module<F>&, const Complex<F>&);                                            \
  template ChainMap<F> tensor_free(const Module<F>&, const ChainMap<F>&, const Complex<F>&, const Complex<F>&);     \
  template Complex<F> augmented(const Resolution<F>&);                                                             \
  template Resolution<F> pc_from_free(const Module<F>&, const Module<F>&, const HomSpace<F>&, const Resolution<F>&); \
  template Resolution<F> proper_pc_resolution(const Module<F>&, const Module<F>&, Index, std::uint64_t);           \
  template std::vector<Index> ext_dims(const Resolution<F>&, const Module<F>&, Index, Index);                      \
  template Answer ext_vanishes(const Resolution<F>&, const Module<F>&, std::string*);                              \
  template Answer ext_vanishing(const Module<F>&, const Module<F>&, Index, std::string*, std::uint64_t);            \
  template ReflexivityReport<F> totally_reflexive(const Module<F>&, Index, std::uint64_t);                         \
  template GDimReport gorenstein_pd(const Module<F>&, const Module<F>*, Index, std::uint64_t);                     \
  template Complex<F> complete_resolution(const Module<F>&, Index, Mat<F>*, std::uint64_t);                        \
  template TateResolution<F> tate_resolution(const Module<F>&, const Module<F>*, Index, bool, Index, std::uint64_t); \
  template ExactnessReport check_total_acyclicity(const Complex<F>&, const Module<F>&);                            \
  template Verdict validate_tate(const TateResolution<F>&);                                                        \
  template TateLift<F> lift_to_tate(const Mat<F>&, const TateResolution<F>&, const TateResolution<F>&, Index, Index); \
  template Horseshoe<F> horseshoe_tate(const Mat<F>&, const Mat<F>&, const Module<F>&, const TateResolution<F>&,    \
                                       const TateResolution<F>&, Index, Index);                                    \
  template StrictResolution<F> strict_from_tate(const TateResolution<F>&);                                         \
  template Hull<F> wx_hull(const Module<F>&, const Module<F>*, Index, std::uint64_t);                              \
  template TateCoresolution<F> ic_coresolution_via_dual(const Module<F>&, const Module<F>*, Index, bool, Index,    \
                                                        std::uint64_t);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

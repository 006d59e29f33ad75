#include "tate/cohomology.hpp"

#include <algorithm>
#include <map>

namespace tate {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "OK";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::NotApplicable: return "N/A";
  }
  return "?";
}

void Report::add(std::string name, Status s, std::string detail) {
  checks.push_back({std::move(name), s, std::move(detail)});
}

void Report::add(std::string name, bool ok, std::string detail) {
  add(std::move(name), ok ? Status::Ok : Status::Fail, std::move(detail));
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.status, c.detail});
}

Status Report::overall() const {
  Status s = Status::Ok;
  for (const Check& c : checks) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

namespace {

const std::vector<std::pair<ExtKind, const char*>> kind_names = {
    {ExtKind::Abs, "abs"},       {ExtKind::RelPC, "relPC"},   {ExtKind::RelGPC, "relGPC"}, {ExtKind::RelIC, "relIC"},
    {ExtKind::RelGIC, "relGIC"}, {ExtKind::TatePC, "tatePC"}, {ExtKind::TateIC, "tateIC"}};

const std::vector<std::pair<MemberClass, const char*>> class_names = {
    {MemberClass::Semidualizing, "semidualizing"}, {MemberClass::Auslander, "auslander"},
    {MemberClass::Bass, "bass"},                   {MemberClass::GPC, "GPC"},
    {MemberClass::GIC, "GIC"},                     {MemberClass::PC, "PC"},
    {MemberClass::IC, "IC"},                       {MemberClass::GPCReflexive, "GPC-reflexive"}};

Answer both(Answer a, Answer b) {
  if (a == Answer::No || b == Answer::No) return Answer::No;
  if (a == Answer::Inconclusive || b == Answer::Inconclusive) return Answer::Inconclusive;
  return Answer::Yes;
}

Status status_of(Answer a) {
  return a == Answer::Yes ? Status::Ok : a == Answer::No ? Status::Fail : Status::Inconclusive;
}

Answer answer_of(const GDimReport& g) {
  return g.status == GStatus::Finite ? Answer::Yes : g.status == GStatus::Infinite ? Answer::No : Answer::Inconclusive;
}

bool is_iso(Index rows, Index cols, Index rk) { return rows == cols && rk == rows; }

// Folds a partial membership verdict into the running answer; the first
// negative witness wins.
void fold(Membership& out, Answer a, const std::string& what, const std::string& w) {
  out.evidence.push_back(what + ": " + answer_name(a) + (w.empty() ? "" : " (" + w + ")"));
  if (a == Answer::No && out.answer != Answer::No) {
    out.answer = Answer::No;
    out.witness = what + ": " + w;
  } else if (a == Answer::Inconclusive && out.answer == Answer::Yes) {
    out.answer = Answer::Inconclusive;
    out.witness = what + ": " + w;
  }
}

template <class F>
Answer tor_from(const Resolution<F>& res, const Module<F>& x, std::string* witness) {
  Index top;
  bool certain = true;
  if (res.finite()) {
    top = res.length();
  } else if (res.periodic()) {
    top = res.period_start + res.period + 1;
  } else {
    top = res.length() - 1;
    certain = false;
  }
  Complex<F> t = tensor_free(x, res.free);
  for (Index i = 1; i <= top; ++i) {
    Index h = homology(t, i).dim;
    if (h != 0) {
      if (witness) *witness = "Tor_" + std::to_string(i) + " has dimension " + std::to_string(h);
      return Answer::No;
    }
  }
  if (!certain) {
    if (witness) *witness = "Tor vanishes through degree " + std::to_string(top) + " but no periodicity was found";
    return Answer::Inconclusive;
  }
  return Answer::Yes;
}

// C (x) Hom(C, M) -> M, c (x) f -> f(c).
template <class F>
Mat<F> evaluation_map(const Module<F>& c, const Module<F>& m, const HomSpace<F>& h, const Tensor<F>& t) {
  Index dh = h.dim();
  Mat<F> ev = m.zero(m.dim, c.dim * dh);
  for (Index i = 0; i < c.dim; ++i)
    for (Index j = 0; j < dh; ++j) ev.col(i * dh + j) = h.basis[j].col(i);
  return ev * t.section;
}

// M -> Hom(C, C (x) M), m -> (c -> c (x) m), in hom-space coordinates.
template <class F>
Mat<F> coevaluation_map(const Module<F>& c, const Module<F>& m, const Tensor<F>& t, const HomSpace<F>& h) {
  Mat<F> out = m.zero(h.dim(), m.dim);
  for (Index j = 0; j < m.dim; ++j) {
    Mat<F> phi = m.zero(t.module.dim, c.dim);
    for (Index i = 0; i < c.dim; ++i) phi.col(i) = t.projection.col(i * m.dim + j);
    out.col(j) = h.coords(phi);
  }
  return out;
}

// M -> Hom(Hom(M, C), C), m -> (f -> f(m)).
template <class F>
Mat<F> biduality_map(const Module<F>& m, const HomSpace<F>& dual, const HomSpace<F>& ddual, Index cdim) {
  Mat<F> out = m.zero(ddual.dim(), m.dim);
  for (Index j = 0; j < m.dim; ++j) {
    Mat<F> e = m.zero(cdim, dual.dim());
    for (Index k = 0; k < dual.dim(); ++k) e.col(k) = dual.basis[k].col(j);
    out.col(j) = ddual.coords(e);
  }
  return out;
}

template <class F>
Membership totally_c_reflexive(const Module<F>& m, const Module<F>& c, Index bound, std::uint64_t seed) {
  Membership out;
  out.cls = MemberClass::GPCReflexive;
  out.answer = Answer::Yes;
  std::string w;
  fold(out, ext_vanishing(m, c, bound, &w, seed), "Ext(M, C)", w);
  HomSpace<F> dual = hom_space(m, c);
  w.clear();
  fold(out, ext_vanishing(dual.module, c, bound, &w, seed), "Ext(Hom(M, C), C)", w);
  HomSpace<F> ddual = hom_space(dual.module, c);
  Mat<F> bi = biduality_map(m, dual, ddual, c.dim);
  bool bij = ddual.dim() == m.dim && rank(bi) == m.dim;
  fold(out, bij ? Answer::Yes : Answer::No, "M -> Hom(Hom(M, C), C)",
       bij ? "" : "rank " + std::to_string(rank(bi)) + " into dimension " + std::to_string(ddual.dim()));
  return out;
}

template <class F>
Membership auslander(const Module<F>& m, const Module<F>& c, Index bound, std::uint64_t seed) {
  Membership out;
  out.cls = MemberClass::Auslander;
  out.answer = Answer::Yes;
  std::string w;
  fold(out, tor_vanishing(c, m, bound, &w, seed), "Tor(C, M)", w);
  Tensor<F> t = tensor_over(c, m);
  w.clear();
  fold(out, ext_vanishing(c, t.module, bound, &w, seed), "Ext(C, C (x) M)", w);
  HomSpace<F> h = hom_space(c, t.module);
  Mat<F> g = coevaluation_map(c, m, t, h);
  bool bij = h.dim() == m.dim && rank(g) == m.dim;
  fold(out, bij ? Answer::Yes : Answer::No, "M -> Hom(C, C (x) M)",
       bij ? "" : "rank " + std::to_string(rank(g)) + " into dimension " + std::to_string(h.dim()));
  return out;
}

template <class F>
Membership bass(const Module<F>& m, const Module<F>& c, Index bound, std::uint64_t seed) {
  Membership out;
  out.cls = MemberClass::Bass;
  out.answer = Answer::Yes;
  std::string w;
  fold(out, ext_vanishing(c, m, bound, &w, seed), "Ext(C, M)", w);
  HomSpace<F> h = hom_space(c, m);
  w.clear();
  fold(out, tor_vanishing(c, h.module, bound, &w, seed), "Tor(C, Hom(C, M))", w);
  Tensor<F> t = tensor_over(c, h.module);
  Mat<F> ev = evaluation_map(c, m, h, t);
  bool bij = t.module.dim == m.dim && rank(ev) == m.dim;
  fold(out, bij ? Answer::Yes : Answer::No, "C (x) Hom(C, M) -> M",
       bij ? "" : "rank " + std::to_string(rank(ev)) + " from dimension " + std::to_string(t.module.dim));
  return out;
}

template <class F>
Membership pc_member(const Module<F>& m, const Module<F>& c) {
  Membership out;
  out.cls = MemberClass::PC;
  if (m.dim % c.dim != 0) {
    out.answer = Answer::No;
    out.witness = "dimension " + std::to_string(m.dim) + " is not a multiple of " + std::to_string(c.dim);
    return out;
  }
  // M = C (x) P with P free exactly when Hom(C, M) is free and evaluates onto M.
  HomSpace<F> h = hom_space(c, m);
  if (!is_free(h.module)) {
    out.answer = Answer::No;
    out.witness = "Hom(C, M) is not free";
    return out;
  }
  Tensor<F> t = tensor_over(c, h.module);
  Mat<F> ev = evaluation_map(c, m, h, t);
  if (t.module.dim != m.dim || rank(ev) != m.dim) {
    out.answer = Answer::No;
    out.witness = "C (x) Hom(C, M) -> M is not bijective";
    return out;
  }
  out.answer = Answer::Yes;
  out.evidence.push_back("M = C^" + std::to_string(h.module.dim / m.ring->dim()));
  return out;
}

// Smallest g <= bound whose syzygy passes `member`.  A finite
// Gorenstein-type dimension over an artinian local ring is depth R - depth M
// = 0, so a definite failure at g = 0 means infinite; later syzygies are only
// consulted while the answer is inconclusive.
template <class F, class Syz, class Test>
GDimReport scan_dimension(Index bound, Syz syzygy, Test member) {
  GDimReport r;
  std::string first;
  for (Index g = 0; g <= bound; ++g) {
    std::optional<Module<F>> k = syzygy(g);
    if (!k) break;
    Membership mb = member(*k);
    if (mb.answer == Answer::Yes) {
      r.status = GStatus::Finite;
      r.value = g;
      r.witness = "syzygy " + std::to_string(g) + " is in the class";
      return r;
    }
    if (g == 0) first = mb.witness;
    if (mb.answer == Answer::No && g == 0) {
      r.status = GStatus::Infinite;
      r.witness = first;
      return r;
    }
  }
  r.status = GStatus::Exceeded;
  r.value = bound;
  r.witness = first;
  return r;
}

template <class F>
std::optional<Module<F>> syzygy_of(const Complex<F>& x, const Module<F>& m, Index g) {
  if (g == 0) return m;
  if (!x.known(g)) return std::nullopt;
  return cokernel_module(x.object(g - 1), x.d(g)).module;
}

// Over an artinian local ring a module of finite P_C-projective dimension is
// in the Bass class with Hom(C, M) of finite projective dimension, hence free
// by Auslander-Buchsbaum; so the dimension is finite exactly on P_C.
template <class F>
Answer pc_pd_finite(const Module<F>& m, OptModule<F> c, std::string* why) {
  Membership mb = pc_member(m, c ? *c : free_module(m.ring, 1));
  if (why) *why = mb.answer == Answer::Yes ? "M is in P_C" : "M is not in P_C: " + mb.witness;
  return mb.answer;
}

template <class F>
Complex<F> hom_into(const Complex<F>& x, const Module<F>& n) {
  return HomComplex<F>(x, concentrated(n)).complex();
}

template <class F>
CohomologyTable table_from(ExtKind kind, const Complex<F>& hom, Index from, Index to, bool relative) {
  CohomologyTable t;
  t.kind = kind;
  t.from = from;
  t.to = to;
  for (Index k = from; k <= to; ++k) t.dims.push_back(relative && k < 0 ? 0 : homology(hom, -k).dim);
  return t;
}

template <class F>
ChainMap<F> module_map(const Module<F>& a, const Module<F>& b, const Mat<F>& f) {
  return make_chain_map<F>(concentrated(a), concentrated(b), 0, {f});
}

// Chain map W -> X over id_M between a P_C-resolution and a proper
// G(P_C)-resolution.
template <class F>
ChainMap<F> lift_identity(const Resolution<F>& w, const Complex<F>& x, const Mat<F>& xaug) {
  const Mat<F>* none = nullptr;
  std::vector<Mat<F>> comp;
  for (Index n = 0; n <= x.hi; ++n) {
    std::optional<Mat<F>> s;
    HomSpace<F> hs = hom_space(w.complex.object(n), x.object(n));
    if (n == 0) {
      s = factor_through(hs, &xaug, none, w.augmentation);
    } else {
      Mat<F> d = x.d(n);
      s = factor_through(hs, &d, none, Mat<F>(comp.back() * w.complex.d(n)));
    }
    if (!s) throw std::logic_error("identity does not lift to the G-resolution at degree " + std::to_string(n));
    comp.push_back(*s);
  }
  return make_chain_map(w.complex, x, 0, std::move(comp));
}

template <class F>
Mat<F> induced(const Complex<F>& a, const Complex<F>& b, const Mat<F>& f, Index deg) {
  return induced_map(homology(a, deg), homology(b, deg), f);
}

std::string sup(const std::string& base, Index n, const std::string& sub = {}) {
  return base + "^" + std::to_string(n) + sub;
}

}  // namespace

const char* kind_name(ExtKind k) {
  for (const auto& [kk, s] : kind_names)
    if (kk == k) return s;
  return "?";
}

std::optional<ExtKind> parse_kind(const std::string& s) {
  for (const auto& [k, name] : kind_names)
    if (s == name) return k;
  return std::nullopt;
}

const char* class_name(MemberClass c) {
  for (const auto& [cc, s] : class_names)
    if (cc == c) return s;
  return "?";
}

std::optional<MemberClass> parse_class(const std::string& s) {
  for (const auto& [c, name] : class_names)
    if (s == name) return c;
  return std::nullopt;
}

bool CohomologyTable::zero() const {
  return std::all_of(dims.begin(), dims.end(), [](Index d) { return d == 0; });
}

template <class F>
Answer tor_vanishing(const Module<F>& x, const Module<F>& y, Index bound, std::string* witness, std::uint64_t seed) {
  if (is_free(x) || is_free(y)) {
    if (witness) *witness = "a free argument";
    return Answer::Yes;
  }
  std::string w1, w2;
  Answer a = deepening(bound, [&](Index len) { return tor_from(minimal_free_resolution(y, len, seed), x, &w1); });
  if (a != Answer::Inconclusive) {
    if (witness) *witness = w1;
    return a;
  }
  Answer b = deepening(bound, [&](Index len) { return tor_from(minimal_free_resolution(x, len, seed), y, &w2); });
  if (witness) *witness = b == Answer::Inconclusive ? w1 : w2;
  return b;
}

template <class F>
Membership check_semidualizing(const Module<F>& c, Index bound, std::uint64_t seed) {
  Membership out;
  out.cls = MemberClass::Semidualizing;
  out.answer = Answer::Yes;
  const Algebra<F>& r = *c.ring;
  HomSpace<F> h = hom_space(c, c);
  Mat<F> hom = c.zero(h.dim(), r.dim());
  for (Index j = 0; j < r.dim(); ++j) hom.col(j) = h.coords(c.act[static_cast<std::size_t>(j)]);
  Index rk = rank(hom);
  bool bij = h.dim() == r.dim() && rk == r.dim();
  fold(out, bij ? Answer::Yes : Answer::No, "homothety R -> Hom(C, C)",
       bij ? "rank " + std::to_string(rk)
           : "dim Hom(C, C) = " + std::to_string(h.dim()) + ", rank " + std::to_string(rk) + ", dim R = " +
                 std::to_string(r.dim()));
  std::string w;
  fold(out, ext_vanishing(c, c, bound, &w, seed), "Ext(C, C)", w);
  return out;
}

template <class F>
Membership class_membership(const Module<F>& m, const Module<F>& c, MemberClass cls, Index bound,
                            std::uint64_t seed) {
  switch (cls) {
    case MemberClass::Semidualizing: return check_semidualizing(m, bound, seed);
    case MemberClass::Auslander: return auslander(m, c, bound, seed);
    case MemberClass::Bass: return bass(m, c, bound, seed);
    case MemberClass::GPCReflexive: return totally_c_reflexive(m, c, bound, seed);
    case MemberClass::PC: return pc_member(m, c);
    case MemberClass::IC: {
      Membership d = pc_member(matlis_dual(m), c);
      d.cls = MemberClass::IC;
      return d;
    }
    case MemberClass::GPC: {
      Membership out;
      out.cls = MemberClass::GPC;
      out.answer = Answer::Yes;
      Membership b = bass(m, c, bound, seed);
      fold(out, b.answer, "Bass class", b.witness);
      HomSpace<F> h = hom_space(c, m);
      ReflexivityReport<F> tr = totally_reflexive(h.module, bound, seed);
      fold(out, tr.answer, "Hom(C, M) totally reflexive", tr.witness);
      Membership a = auslander(h.module, c, bound, seed);
      fold(out, a.answer, "Hom(C, M) in the Auslander class", a.witness);
      return out;
    }
    case MemberClass::GIC: {
      Membership d = class_membership(matlis_dual(m), c, MemberClass::GPC, bound, seed);
      d.cls = MemberClass::GIC;
      return d;
    }
  }
  return {};
}

template <class F>
CohomologyTable tate_ext(const TateResolution<F>& tr, const Module<F>& n, Index from, Index to) {
  return table_from(ExtKind::TatePC, hom_into(tr.t, n), from, to, false);
}

template <class F>
CohomologyTable tate_ext(const Module<F>& m, const TateCoresolution<F>& cr, Index from, Index to) {
  HomComplex<F> h(concentrated(m), cr.s);
  return table_from(ExtKind::TateIC, h.complex(), from, to, false);
}

template <class F>
CohomologyTable tate_ext(const Module<F>& m, const Module<F>& n, OptModule<F> c, Side side, Index from, Index to,
                         const TateOptions& opt) {
  if (side == Side::P)
    return tate_ext(tate_resolution(m, c, opt.bound, opt.split, opt.iso_degree, opt.seed), n, from, to);
  return tate_ext(m, ic_coresolution_via_dual(n, c, opt.bound, opt.split, opt.iso_degree, opt.seed), from, to);
}

template <class F>
CohomologyTable relative_ext(const Module<F>& m, const Module<F>& n, OptModule<F> c, ExtKind kind, Index from,
                             Index to, const TateOptions& opt) {
  Index len = std::max<Index>(to, 0) + 1;
  CohomologyTable t;
  switch (kind) {
    case ExtKind::Abs:
      t = table_from(kind, hom_into(minimal_free_resolution(m, len, opt.seed).complex, n), from, to, true);
      break;
    case ExtKind::RelPC: {
      Resolution<F> w = c ? proper_pc_resolution(m, *c, len, opt.seed) : minimal_free_resolution(m, len, opt.seed);
      t = table_from(kind, hom_into(w.complex, n), from, to, true);
      break;
    }
    case ExtKind::RelGPC: {
      TateResolution<F> tr = tate_resolution(m, c, std::max(opt.bound, len), true, opt.iso_degree, opt.seed);
      t = table_from(kind, hom_into(strict_from_tate(tr).x, n), from, to, true);
      break;
    }
    case ExtKind::RelIC:
      t = relative_ext(matlis_dual(n), matlis_dual(m), c, ExtKind::RelPC, from, to, opt);
      break;
    case ExtKind::RelGIC:
      t = relative_ext(matlis_dual(n), matlis_dual(m), c, ExtKind::RelGPC, from, to, opt);
      break;
    case ExtKind::TatePC: t = tate_ext(m, n, c, Side::P, from, to, opt); break;
    case ExtKind::TateIC: t = tate_ext(m, n, c, Side::I, from, to, opt); break;
  }
  t.kind = kind;
  return t;
}

namespace {

// Everything the comparison maps and the Avramov-Martsinkovsky sequence need
// from one split Tate resolution.
template <class F>
struct TateSetup {
  TateResolution<F> tr;
  StrictResolution<F> sr;
  ChainMap<F> lift;  // W -> X over the identity

  TateSetup(const Module<F>& m, OptModule<F> c, const TateOptions& opt)
      : tr(tate_resolution(m, c, opt.bound, true, opt.iso_degree, opt.seed)),
        sr(strict_from_tate(tr)),
        lift(lift_identity(tr.w, sr.x, sr.augmentation)) {}
};

}  // namespace

template <class F>
std::vector<ComparisonMap> comparison_maps(const Module<F>& m, const Module<F>& n, OptModule<F> c, Index from,
                                           Index to, const TateOptions& opt) {
  TateSetup<F> s(m, c, opt);
  HomComplex<F> hw(s.tr.w.complex, concentrated(n)), ht(s.tr.t, concentrated(n)), hx(s.sr.x, concentrated(n));
  std::vector<ComparisonMap> out;
  for (Index k = std::max<Index>(from, 0); k <= to; ++k) {
    Mat<F> e = induced(hw.complex(), ht.complex(), hom_functor(hw, ht, &s.tr.alpha, nullptr, -k), -k);
    out.push_back({'e', k, e.rows(), e.cols(), rank(e), is_iso(e.rows(), e.cols(), rank(e))});
    Mat<F> th = induced(hx.complex(), hw.complex(), hom_functor(hx, hw, &s.lift, nullptr, -k), -k);
    out.push_back({'t', k, th.rows(), th.cols(), rank(th), is_iso(th.rows(), th.cols(), rank(th))});
  }
  return out;
}

template <class F>
void assess_sequence(LesReport& les, const std::vector<Mat<F>>& maps) {
  les.ranks.clear();
  for (const Mat<F>& m : maps) les.ranks.push_back(rank(m));
  std::size_t nt = les.terms.size();
  for (std::size_t j = 0; j < maps.size(); ++j) {
    const Mat<F>& m = maps[j];
    if (m.cols() != les.dims[j] || m.rows() != les.dims[j + 1])
      les.report.add("shape of " + les.maps[j], false, "matrix does not match the terms");
  }
  for (std::size_t j = 0; j < nt; ++j) {
    Index in = j > 0 ? les.ranks[j - 1] : 0;
    Index out = j < maps.size() ? les.ranks[j] : 0;
    bool has_in = j > 0 || les.leading_zero;
    bool has_out = j < maps.size() || les.trailing_zero;
    if (!has_in || !has_out) continue;
    bool ok = in + out == les.dims[j];
    if (ok && j > 0 && j < maps.size()) ok = is_zero<F>(maps[j] * maps[j - 1]);
    les.report.add("exact at " + les.terms[j], ok,
                   "dim " + std::to_string(les.dims[j]) + ", rank in " + std::to_string(in) + ", rank out " +
                       std::to_string(out));
  }
}

template <class F>
LesReport am_les(const Module<F>& m, const Module<F>& n, OptModule<F> c, Side side, const TateOptions& opt,
                 Index tail) {
  if (side == Side::I) {
    LesReport r = am_les(matlis_dual(n), matlis_dual(m), c, Side::P, opt, tail);
    r.report.checks.insert(r.report.checks.begin(), Check{"I side through Matlis duality", Status::Ok, "(D N, D M)"});
    return r;
  }
  TateSetup<F> s(m, c, opt);
  const TateResolution<F>& tr = s.tr;
  const StrictResolution<F>& sr = s.sr;
  const AlgebraPtr<F>& ring = m.ring;
  const FieldDescriptor& fd = ring->field;
  Index d = tr.iso_degree;
  LesReport les;
  les.d = d;

  // 0 -> Sigma^{-1} X -> Ttilde -> W -> 0, degreewise split.
  Complex<F> sx = shift(sr.x, -1);
  const Complex<F>& tt = sr.ttilde;
  const Complex<F>& w = tr.w.complex;
  std::vector<Mat<F>> pc;
  for (Index k = -1; k <= tt.hi; ++k) pc.push_back(k < 0 ? zeros<F>(fd, 0, tt.dim(k)) : tr.alpha.at(k));
  ChainMap<F> proj = make_chain_map(tt, w, -1, std::move(pc));
  proj.right_period = tr.alpha.right_period;
  std::vector<Mat<F>> ic;
  for (Index k = -1; k <= d - 1; ++k) ic.push_back(sr.inclusion[static_cast<std::size_t>(k + 1)]);
  ChainMap<F> incl = make_chain_map(sx, tt, -1, std::move(ic));
  Index top = std::max(tt.hi, d) + 1;
  les.report.add("Ttilde -> W is a chain map", validate_chain_map(proj, -1, top).ok);
  les.report.add("Sigma^-1 X -> Ttilde is a chain map", validate_chain_map(incl, -1, top).ok);
  bool ses = true;
  for (Index k = -1; k <= top && ses; ++k) {
    Mat<F> a = incl.at(k), b = proj.at(k);
    ses = rank(a) == a.cols() && rank(b) == b.rows() && is_zero<F>(b * a) && a.cols() + b.rows() == tt.dim(k);
  }
  les.report.add("0 -> Sigma^-1 X -> Ttilde -> W -> 0 is exact", ses);

  Complex<F> cn = concentrated(n);
  HomComplex<F> ha(w, cn), hb(tt, cn), hc(sx, cn), hx(sr.x, cn), ht(tr.t, cn);
  auto i = [&](Index k) { return hom_functor(ha, hb, &proj, nullptr, k); };
  auto pi = [&](Index k) { return hom_functor(hb, hc, &incl, nullptr, k); };

  std::vector<Mat<F>> maps;
  for (Index k = 1; k <= d; ++k) {
    les.terms.push_back(sup("Ext", k, "_G"));
    les.dims.push_back(homology(hc.complex(), -(k - 1)).dim);
    les.terms.push_back(sup("Ext", k, "_W"));
    les.dims.push_back(homology(ha.complex(), -k).dim);
    les.terms.push_back(sup("Exthat", k));
    les.dims.push_back(homology(hb.complex(), -k).dim);
    Mat<F> delta = connecting_map(ha.complex(), hb.complex(), hc.complex(), i, pi, -(k - 1));
    maps.push_back(delta);
    les.maps.push_back(sup("theta", k));
    maps.push_back(induced(ha.complex(), hb.complex(), i(-k), -k));
    les.maps.push_back(sup("epsilon", k));
    if (k < d) {
      maps.push_back(induced(hb.complex(), hc.complex(), pi(-k), -k));
      les.maps.push_back(sup("eta", k));
    }
    // The snake map agrees with theta from the lift of the identity, up to sign.
    Mat<F> th = induced(hx.complex(), ha.complex(), hom_functor(hx, ha, &s.lift, nullptr, -k), -k);
    les.report.add(sup("connecting map equals theta", k), delta == th || delta == Mat<F>(-th));
  }
  les.leading_zero = les.trailing_zero = d > 0;
  assess_sequence<F>(les, maps);
  les.report.add("Ext_G vanishes above d", homology(hx.complex(), -(d + 1)).dim == 0);
  for (Index k = d + 1; k <= d + tail; ++k) {
    Mat<F> e = induced(ha.complex(), ht.complex(), hom_functor(ha, ht, &tr.alpha, nullptr, -k), -k);
    Index rk = rank(e);
    les.report.add(sup("epsilon", k, " invertible"), is_iso(e.rows(), e.cols(), rk),
                   std::to_string(e.cols()) + " -> " + std::to_string(e.rows()) + ", rank " + std::to_string(rk));
  }
  return les;
}

template <class F>
LesReport tate_les(const Mat<F>& i, const Mat<F>& p, const Module<F>& a, const Module<F>& b, const Module<F>& cmod,
                   const Module<F>& other, OptModule<F> c, Variable var, Index from, Index to,
                   const TateOptions& opt) {
  LesReport les;
  const AlgebraPtr<F>& ring = a.ring;
  Module<F> cc = c ? *c : free_module(ring, 1);
  Complex<F> seq = make_complex<F>(ring, -1, {cmod, b, a}, {p, i});
  ExactnessReport ex = check_exactness(seq);
  les.report.add("sequence is exact", ex.exact, ex.detail);
  ExactnessReport pr = check_relative_exactness(seq, cc, ProbeSide::HomFromProbe);
  les.report.add("sequence is Hom(C, -)-exact", pr.exact, pr.detail);
  if (!ex.exact || !pr.exact) return les;

  std::vector<Mat<F>> maps;
  auto push_terms = [&](const std::vector<std::string>& names, const std::vector<const Complex<F>*>& cx, Index k) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      les.terms.push_back(sup("Exthat", k, names[j]));
      les.dims.push_back(homology(*cx[j], -k).dim);
    }
  };

  if (var == Variable::Second) {
    TateResolution<F> tr = tate_resolution(other, c, opt.bound, opt.split, opt.iso_degree, opt.seed);
    HomComplex<F> ha(tr.t, concentrated(a)), hb(tr.t, concentrated(b)), hc(tr.t, concentrated(cmod));
    ChainMap<F> ci = module_map(a, b, i), cp = module_map(b, cmod, p);
    auto fi = [&](Index k) { return hom_functor(ha, hb, nullptr, &ci, k); };
    auto fp = [&](Index k) { return hom_functor(hb, hc, nullptr, &cp, k); };
    for (Index k = from; k <= to; ++k) {
      push_terms({"(M, A)", "(M, B)", "(M, C)"}, {&ha.complex(), &hb.complex(), &hc.complex()}, k);
      maps.push_back(induced(ha.complex(), hb.complex(), fi(-k), -k));
      les.maps.push_back("i_*");
      maps.push_back(induced(hb.complex(), hc.complex(), fp(-k), -k));
      les.maps.push_back("p_*");
      if (k < to) {
        maps.push_back(connecting_map(ha.complex(), hb.complex(), hc.complex(), fi, fp, -k));
        les.maps.push_back("delta");
      }
    }
    assess_sequence<F>(les, maps);

    // Naturality against the relative sequence through epsilon.
    HomComplex<F> wa(tr.w.complex, concentrated(a)), wb(tr.w.complex, concentrated(b)),
        wc(tr.w.complex, concentrated(cmod));
    auto gi = [&](Index k) { return hom_functor(wa, wb, nullptr, &ci, k); };
    auto gp = [&](Index k) { return hom_functor(wb, wc, nullptr, &cp, k); };
    auto eps = [&](const HomComplex<F>& w, const HomComplex<F>& t, Index k) {
      return induced(w.complex(), t.complex(), hom_functor(w, t, &tr.alpha, nullptr, -k), -k);
    };
    bool nat = true;
    for (Index k = std::max<Index>(from, 0); k <= to; ++k) {
      Mat<F> ea = eps(wa, ha, k), eb = eps(wb, hb, k), ec = eps(wc, hc, k);
      nat = nat && eb * induced(wa.complex(), wb.complex(), gi(-k), -k) ==
                       induced(ha.complex(), hb.complex(), fi(-k), -k) * ea;
      nat = nat && ec * induced(wb.complex(), wc.complex(), gp(-k), -k) ==
                       induced(hb.complex(), hc.complex(), fp(-k), -k) * eb;
      if (k < to) {
        Mat<F> rel = connecting_map(wa.complex(), wb.complex(), wc.complex(), gi, gp, -k);
        Mat<F> tat = connecting_map(ha.complex(), hb.complex(), hc.complex(), fi, fp, -k);
        nat = nat && eps(wa, ha, k + 1) * rel == tat * ec;
      }
    }
    les.report.add("squares with the relative sequence commute", nat);
    return les;
  }

  // First variable: horseshoe over split Tate resolutions of the ends.
  TateResolution<F> t1 = tate_resolution(a, c, opt.bound, true, opt.iso_degree, opt.seed);
  TateResolution<F> t3 = tate_resolution(cmod, c, opt.bound, true, opt.iso_degree, opt.seed);
  Horseshoe<F> hs = horseshoe_tate(i, p, b, t1, t3, from - 2, to + 3);
  les.report.add("horseshoe identities", hs.identities.ok, hs.identities.detail);
  const Complex<F>& tm = hs.tate.t;
  const FieldDescriptor& fd = ring->field;
  std::vector<Mat<F>> inc, prj;
  for (Index k = tm.lo; k <= tm.hi; ++k) {
    Index d1 = t1.t.dim(k), d3 = t3.t.dim(k);
    Mat<F> e = zeros<F>(fd, d1 + d3, d1), q = zeros<F>(fd, d3, d1 + d3);
    e.block(0, 0, d1, d1) = identity<F>(fd, d1);
    q.block(0, d1, d3, d3) = identity<F>(fd, d3);
    inc.push_back(e);
    prj.push_back(q);
  }
  ChainMap<F> ci = make_chain_map(t1.t, tm, tm.lo, inc), cp = make_chain_map(tm, t3.t, tm.lo, prj);
  Complex<F> cn = concentrated(other);
  HomComplex<F> h3(t3.t, cn), hm(tm, cn), h1(t1.t, cn);
  auto fp = [&](Index k) { return hom_functor(h3, hm, &cp, nullptr, k); };
  auto fi = [&](Index k) { return hom_functor(hm, h1, &ci, nullptr, k); };
  for (Index k = from; k <= to; ++k) {
    push_terms({"(C, N)", "(B, N)", "(A, N)"}, {&h3.complex(), &hm.complex(), &h1.complex()}, k);
    maps.push_back(induced(h3.complex(), hm.complex(), fp(-k), -k));
    les.maps.push_back("p^*");
    maps.push_back(induced(hm.complex(), h1.complex(), fi(-k), -k));
    les.maps.push_back("i^*");
    if (k < to) {
      maps.push_back(connecting_map(h3.complex(), hm.complex(), h1.complex(), fp, fi, -k));
      les.maps.push_back("delta");
    }
  }
  assess_sequence<F>(les, maps);
  // The middle term does not depend on the Tate resolution used.
  try {
    CohomologyTable direct = tate_ext(tate_resolution(b, c, opt.bound, false, -1, opt.seed), other, from, to);
    bool same = true;
    for (Index k = from; k <= to; ++k) same = same && direct.dim(k) == homology(hm.complex(), -k).dim;
    les.report.add("middle term matches a direct Tate resolution", same);
  } catch (const NoTateResolution& e) {
    les.report.add("middle term matches a direct Tate resolution", Status::Fail, e.what());
  }
  return les;
}

template <class F>
VanishingReport vanishing_diagnostic(const Module<F>& m, OptModule<F> c, const std::vector<Module<F>>& family,
                                     Index from, Index to, const TateOptions& opt) {
  VanishingReport out;
  std::string why;
  out.finite_pd = pc_pd_finite(m, c, &why);
  out.report.add("(i) finite P_C-projective dimension", Status::Ok, std::string(answer_name(out.finite_pd)) + ": " + why);

  TateResolution<F> tr = tate_resolution(m, c, opt.bound, false, -1, opt.seed);
  std::vector<bool> all_zero(static_cast<std::size_t>(to - from + 1), true);
  bool first_zero = true;
  for (const Module<F>& nn : family) {
    CohomologyTable t = tate_ext(tr, nn, from, to);
    for (Index k = from; k <= to; ++k) all_zero[k - from] = all_zero[k - from] && t.dim(k) == 0;
    first_zero = first_zero && t.zero();
  }
  out.kills_first = first_zero ? Answer::Yes : Answer::No;
  bool each = std::all_of(all_zero.begin(), all_zero.end(), [](bool b) { return b; });
  bool some = std::any_of(all_zero.begin(), all_zero.end(), [](bool b) { return b; });
  out.report.add("(iii) Ext-hat(M, -) = 0 on the family", Status::Ok, answer_name(out.kills_first));
  out.report.add("(iii) for some degree iff for every degree", each == some);

  std::fill(all_zero.begin(), all_zero.end(), true);
  bool second_zero = true;
  Index used = 0;
  for (const Module<F>& l : family) {
    try {
      CohomologyTable t = tate_ext(tate_resolution(l, c, opt.bound, false, -1, opt.seed), m, from, to);
      for (Index k = from; k <= to; ++k) all_zero[k - from] = all_zero[k - from] && t.dim(k) == 0;
      second_zero = second_zero && t.zero();
      ++used;
    } catch (const NoTateResolution&) {
    }
  }
  out.kills_second = second_zero ? Answer::Yes : Answer::No;
  each = std::all_of(all_zero.begin(), all_zero.end(), [](bool b) { return b; });
  some = std::any_of(all_zero.begin(), all_zero.end(), [](bool b) { return b; });
  out.report.add("(ii) Ext-hat(-, M) = 0 on the family", Status::Ok,
                 std::string(answer_name(out.kills_second)) + " over " + std::to_string(used) + " modules");
  out.report.add("(ii) for some degree iff for every degree", each == some);

  Index self = tate_ext(tr, m, 0, 0).dim(0);
  out.self_zero = self == 0 ? Answer::Yes : Answer::No;
  out.report.add("(iv) Ext-hat^0(M, M) = 0", Status::Ok, "dimension " + std::to_string(self));

  std::vector<Answer> v{out.finite_pd, out.kills_second, out.kills_first, out.self_zero};
  if (std::find(v.begin(), v.end(), Answer::Inconclusive) != v.end())
    out.report.add("conditions agree", Status::Inconclusive, "(i) is not certified");
  else
    out.report.add("conditions agree", std::all_of(v.begin(), v.end(), [&](Answer a) { return a == v[0]; }));

  if (out.self_zero == Answer::Yes) {
    GDimReport g = gorenstein_pd(m, c, opt.bound, opt.seed);
    if (g.finite() && g.value == 0) {
      // f: M -> T_{-1} with f (gamma alpha)_0 = d_0, and s: T_{-1} -> M with s d_0 = (gamma alpha)_0.
      TateResolution<F> t0 = tate_resolution(m, c, opt.bound, false, 0, opt.seed);
      const Mat<F>* none = nullptr;
      Mat<F> ga = t0.w.augmentation * t0.alpha.at(0);
      Mat<F> d0 = t0.t.d(0);
      auto f = factor_through(hom_space(m, t0.t.object(-1)), none, &ga, d0);
      auto s = factor_through(hom_space(t0.t.object(-1), m), none, &d0, ga);
      bool split = f && s && *s * *f == identity<F>(m.ring->field, m.dim);
      out.split_mono = split;
      out.report.add("M splits off T_{-1}", split,
                     !f ? "no f" : !s ? "no null-homotopy" : split ? "s f = id" : "s f != id");
    }
  }
  return out;
}

template <class F>
BalanceReport balance_check(const Module<F>& m, const Module<F>& n, const Module<F>& b, const Module<F>& c, Index from,
                            Index to, const TateOptions& opt) {
  BalanceReport out;
  Report& r = out.report;
  auto cert = [&](const std::string& name, const Membership& mb) {
    r.add(name, status_of(mb.answer), mb.witness);
    return mb.answer == Answer::Yes;
  };
  bool ok = cert("B semidualizing", check_semidualizing(b, opt.bound, opt.seed));
  ok = cert("C semidualizing", check_semidualizing(c, opt.bound, opt.seed)) && ok;
  ok = cert("B in GP_C", class_membership(b, c, MemberClass::GPCReflexive, opt.bound, opt.seed)) && ok;
  Module<F> bd = hom_space(b, c).module;
  ok = cert("Hom(B, C) semidualizing", check_semidualizing(bd, opt.bound, opt.seed)) && ok;
  GDimReport gm = gorenstein_pd(m, &b, opt.bound, opt.seed);
  r.add("G(P_B)-pd(M) finite", status_of(answer_of(gm)), gm.str());
  GDimReport gn = gorenstein_pd(matlis_dual(n), &bd, opt.bound, opt.seed);
  r.add("G(I_B+)-id(N) finite", status_of(answer_of(gn)), gn.str());
  if (!ok || !gm.finite() || !gn.finite()) return out;

  out.dualizing = is_injective(c);
  out.p_side = tate_ext(m, n, &b, Side::P, from, to, opt);
  out.i_side = tate_ext(m, n, &bd, Side::I, from, to, opt);
  for (Index k = from; k <= to; ++k) {
    Index p = out.p_side.dim(k), q = out.i_side.dim(k);
    std::string detail = std::to_string(p) + " vs " + std::to_string(q);
    if (k >= 1 || out.dualizing)
      r.add("dimensions agree in degree " + std::to_string(k), p == q, detail);
    else
      r.add("dimensions agree in degree " + std::to_string(k), Status::NotApplicable, detail + " (C not certified dualizing)");
  }
  return out;
}

template <class F>
DualityReport duality_bridge(const Module<F>& m, const Module<F>& c, Index bound, std::uint64_t seed) {
  DualityReport out;
  Report& r = out.report;
  const AlgebraPtr<F>& ring = m.ring;
  auto gpc = [&](const Module<F>& k) { return class_membership(k, c, MemberClass::GPC, bound, seed); };
  auto refl = [&](const Module<F>& k) { return totally_c_reflexive(k, c, bound, seed); };

  try {
    proper_pc_resolution(m, c, 0, seed);
    out.gpc_pd = scan_dimension<F>(
        bound, [&](Index g) { return syzygy_of(proper_pc_resolution(m, c, g, seed).complex, m, g); }, gpc);
  } catch (const NotInBassClass& e) {
    out.gpc_pd.status = GStatus::Infinite;
    out.gpc_pd.witness = e.what();
  }
  out.gpc_refl_pd = scan_dimension<F>(
      bound, [&](Index g) { return syzygy_of(minimal_free_resolution(m, g, seed).free, m, g); }, refl);
  Module<F> hcm = hom_space(c, m).module;
  out.gp_hom_pd = gorenstein_pd<F>(hcm, nullptr, bound, seed);
  std::string vals = out.gpc_pd.str() + ", " + out.gpc_refl_pd.str() + ", " + out.gp_hom_pd.str();
  if (out.gpc_pd.finite() && out.gpc_refl_pd.finite() && out.gp_hom_pd.finite())
    r.add("three dimensions coincide", out.gpc_pd.value == out.gpc_refl_pd.value &&
                                           out.gpc_refl_pd.value == out.gp_hom_pd.value,
          vals);
  else
    r.add("three dimensions coincide", Status::NotApplicable, vals);
  Membership bm = bass(m, c, bound, seed);
  if (bm.answer == Answer::Yes) {
    std::vector<Answer> fin{answer_of(out.gpc_pd), answer_of(out.gpc_refl_pd), answer_of(out.gp_hom_pd)};
    bool unsure = std::find(fin.begin(), fin.end(), Answer::Inconclusive) != fin.end();
    if (unsure)
      r.add("finiteness agrees in the Bass class", Status::Inconclusive, vals);
    else
      r.add("finiteness agrees in the Bass class", fin[0] == fin[1] && fin[1] == fin[2], vals);
  } else {
    r.add("finiteness agrees in the Bass class", Status::NotApplicable, std::string("Bass: ") + answer_name(bm.answer));
  }

  // G(P_C) through Hom(C, -) against GP_C intersected with the Bass class.
  Answer direct = both(refl(m).answer, bm.answer);
  Answer transported = gpc(m).answer;
  if (direct == Answer::Inconclusive || transported == Answer::Inconclusive)
    r.add("G(P_C) membership transports along Hom(C, -)", Status::Inconclusive);
  else
    r.add("G(P_C) membership transports along Hom(C, -)", direct == transported,
          std::string(answer_name(direct)) + " vs " + answer_name(transported));

  // Totally reflexive modules in the Auslander class go to G(P_C) under C (x) -.
  Answer src = both(totally_reflexive(m, bound, seed).answer, auslander(m, c, bound, seed).answer);
  if (src == Answer::Yes) {
    Module<F> cm = tensor_over(c, m).module;
    Answer tgt = both(refl(cm).answer, bass(cm, c, bound, seed).answer);
    r.add("C (x) M in G(P_C)", status_of(tgt), answer_name(tgt));
  } else {
    r.add("C (x) M in G(P_C)", Status::NotApplicable, std::string("hypothesis ") + answer_name(src));
  }

  // G(I_C) through C (x) - against Matlis duality.
  Answer gic = class_membership(m, c, MemberClass::GIC, bound, seed).answer;
  Module<F> cm = tensor_over(c, m).module;
  Answer gi_side = both(totally_reflexive(matlis_dual(cm), bound, seed).answer, bass(cm, c, bound, seed).answer);
  if (gic == Answer::Inconclusive || gi_side == Answer::Inconclusive)
    r.add("G(I_C) membership transports along C (x) -", Status::Inconclusive);
  else
    r.add("G(I_C) membership transports along C (x) -", gic == gi_side,
          std::string(answer_name(gic)) + " vs " + answer_name(gi_side));

  // P_C-pd finite iff I_{C+}-id finite, with C+ = Hom(C, D(R)).
  std::string w1, w2;
  Module<F> cdag = hom_space(c, matlis_dual(free_module(ring, 1))).module;
  Answer pcf = pc_pd_finite(m, &c, &w1);
  Answer icf = pc_pd_finite(matlis_dual(m), &cdag, &w2);
  if (pcf == Answer::Inconclusive || icf == Answer::Inconclusive)
    r.add("P_C-pd finite iff I_C+-id finite", Status::Inconclusive, w1 + "; " + w2);
  else
    r.add("P_C-pd finite iff I_C+-id finite", pcf == icf,
          std::string(answer_name(pcf)) + " vs " + answer_name(icf));

  // Finiteness implications with a classical side.
  Answer gpcd = answer_of(out.gpc_refl_pd);
  Answer idf = is_injective(m) ? Answer::Yes : Answer::No;
  Answer pdf = pc_pd_finite<F>(m, nullptr, nullptr);
  Answer gp = answer_of(gorenstein_pd<F>(m, nullptr, bound, seed));
  Answer gi = answer_of(gorenstein_pd<F>(matlis_dual(m), nullptr, bound, seed));
  Answer icm = pc_pd_finite(matlis_dual(m), &c, nullptr);
  Module<F> dm = matlis_dual(m);
  Answer gic_id = answer_of(scan_dimension<F>(
      bound, [&](Index g) { return syzygy_of(minimal_free_resolution(dm, g, seed).free, dm, g); }, refl));
  auto implies = [&](const std::string& name, Answer h1, Answer h2, Answer concl) {
    Answer h = both(h1, h2);
    if (h == Answer::No)
      r.add(name, Status::NotApplicable, "hypotheses do not hold");
    else if (h == Answer::Inconclusive || concl == Answer::Inconclusive)
      r.add(name, Status::Inconclusive);
    else
      r.add(name, concl == Answer::Yes, concl == Answer::Yes ? "" : "conclusion fails");
  };
  implies("GP_C-pd and id finite imply P_C-pd finite", gpcd, idf, pcf);
  implies("GI-id and P_C-pd finite imply id finite", gi, pcf, idf);
  implies("GP-pd and I_C-id finite imply pd finite", gp, icm, pdf);
  implies("GI_C-id and pd finite imply I_C-id finite", gic_id, pdf, icm);
  return out;
}

#define TATE_INSTANTIATE(F)                                                                                        \
  template Answer tor_vanishing(const Module<F>&, const Module<F>&, Index, std::string*, std::uint64_t);           \
  template Membership check_semidualizing(const Module<F>&, Index, std::uint64_t);                                 \
  template Membership class_membership(const Module<F>&, const Module<F>&, MemberClass, Index, std::uint64_t);     \
  template CohomologyTable relative_ext(const Module<F>&, const Module<F>&, OptModule<F>, ExtKind, Index, Index,   \
                                        const TateOptions&);                                                       \
  template CohomologyTable tate_ext(const Module<F>&, const Module<F>&, OptModule<F>, Side, Index, Index,          \
                                    const TateOptions&);                                                           \
  template CohomologyTable tate_ext(const TateResolution<F>&, const Module<F>&, Index, Index);                     \
  template CohomologyTable tate_ext(const Module<F>&, const TateCoresolution<F>&, Index, Index);                   \
  template std::vector<ComparisonMap> comparison_maps(const Module<F>&, const Module<F>&, OptModule<F>, Index,     \
                                                      Index, const TateOptions&);                                  \
  template void assess_sequence(LesReport&, const std::vector<Mat<F>>&);                                           \
  template LesReport am_les(const Module<F>&, const Module<F>&, OptModule<F>, Side, const TateOptions&, Index);    \
  template LesReport tate_les(const Mat<F>&, const Mat<F>&, const Module<F>&, const Module<F>&, const Module<F>&,  \
                              const Module<F>&, OptModule<F>, Variable, Index, Index, const TateOptions&);         \
  template VanishingReport vanishing_diagnostic(const Module<F>&, OptModule<F>, const std::vector<Module<F>>&,     \
                                                Index, Index, const TateOptions&);                                 \
  template BalanceReport balance_check(const Module<F>&, const Module<F>&, const Module<F>&, const Module<F>&,     \
                                       Index, Index, const TateOptions&);                                          \
  template DualityReport duality_bridge(const Module<F>&, const Module<F>&, Index, std::uint64_t);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/complex.hpp"

namespace tate {

struct PreconditionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInBassClass : PreconditionFailure {
  using PreconditionFailure::PreconditionFailure;
};

enum class Answer { Yes, No, Inconclusive };
const char* answer_name(Answer a);

inline constexpr std::uint64_t default_seed = 0x7a7e5eedULL;

enum class ResolutionKind { Free, ProjC };

// Augmented resolution X -> M with X_n in degrees n >= 0.  For the P_C kind
// X = C (x) F where F resolves Hom(C, M); for the free kind X = F.
template <class F>
struct Resolution {
  ResolutionKind kind = ResolutionKind::Free;
  Module<F> resolved;
  Complex<F> complex;
  Mat<F> augmentation;
  Complex<F> free;
  Mat<F> free_augmentation;
  std::optional<Module<F>> c;
  Index period_start = -1;  // syzygies a and a + period are isomorphic
  Index period = 0;
  ExactnessReport properness;

  bool finite() const { return free.right == Tail::Zero; }
  bool periodic() const { return free.right == Tail::Periodic; }
  Index length() const { return free.hi; }
  Index rank(Index n) const { return free.dim(n) / free.ring->dim(); }
};

// Minimal free resolution with up to `length` syzygy steps.  Periodic syzygies
// are detected by isomorphism search and installed as a right tail.
template <class F>
Resolution<F> minimal_free_resolution(const Module<F>& m, Index length, std::uint64_t seed = default_seed);

// R-matrix helpers for maps between free modules R^a -> R^b.
template <class F>
Mat<F> free_entry(const Algebra<F>& r, const Mat<F>& d, Index row, Index col);
// Matrix of Hom(d, R): R^b -> R^a.
template <class F>
Mat<F> free_dual(const Algebra<F>& r, const Mat<F>& d);
// Matrix of C (x) d: C^a -> C^b.
template <class F>
Mat<F> tensor_free(const Module<F>& c, const Mat<F>& d);
template <class F>
Complex<F> tensor_free(const Module<F>& c, const Complex<F>& x);
template <class F>
ChainMap<F> tensor_free(const Module<F>& c, const ChainMap<F>& f, const Complex<F>& source, const Complex<F>& target);

// Augmented complex X^+ (M in degree -1).
template <class F>
Complex<F> augmented(const Resolution<F>& r);

// P_C-resolution C (x) F built over a given free resolution F of Hom(C, M).
template <class F>
Resolution<F> pc_from_free(const Module<F>& m, const Module<F>& c, const HomSpace<F>& hom_cm, const Resolution<F>& f);
template <class F>
Resolution<F> proper_pc_resolution(const Module<F>& m, const Module<F>& c, Index length,
                                   std::uint64_t seed = default_seed);

// Runs probe(length) for growing resolution lengths up to `bound` until it
// answers; Betti numbers can grow exponentially, and most negative answers
// show up in low degrees.
template <class Probe>
Answer deepening(Index bound, Probe probe) {
  Answer a = Answer::Inconclusive;
  for (Index len = std::min<Index>(2, bound);; len = std::min(bound, 2 * len)) {
    a = probe(len);
    if (a != Answer::Inconclusive || len >= bound) return a;
  }
}

// Ext^i(X, Y) dimensions for i in [from, to] from a resolution of X.
template <class F>
std::vector<Index> ext_dims(const Resolution<F>& x, const Module<F>& y, Index from, Index to);
// Whether Ext^i(X, Y) = 0 for all i >= 1; `witness` receives the first
// nonzero degree or the reason the answer is inconclusive.
template <class F>
Answer ext_vanishes(const Resolution<F>& x, const Module<F>& y, std::string* witness = nullptr);

template <class F>
struct ReflexivityReport {
  Answer answer = Answer::Inconclusive;
  std::string witness;
};

// Total reflexivity of M: Ext^{>=1}(M, R) = 0 = Ext^{>=1}(M*, R) and M -> M**
// bijective, with the "for all i" parts certified by syzygy periodicity.
template <class F>
ReflexivityReport<F> totally_reflexive(const Module<F>& m, Index bound, std::uint64_t seed = default_seed);

enum class GStatus { Finite, Infinite, Exceeded };

struct GDimReport {
  GStatus status = GStatus::Exceeded;
  Index value = 0;  // the dimension when finite, the bound when exceeded
  std::string witness;

  bool finite() const { return status == GStatus::Finite; }
  std::string str() const;
};

struct NoTateResolution : std::runtime_error {
  NoTateResolution(const std::string& what, GDimReport r) : std::runtime_error(what), report(std::move(r)) {}
  GDimReport report;
};

// Ext^{>=1}(X, Y) = 0, certified when X is free, Y is injective, or a
// resolution of X or of D(Y) is finite or periodic within `bound` steps.
template <class F>
Answer ext_vanishing(const Module<F>& x, const Module<F>& y, Index bound, std::string* witness = nullptr,
                     std::uint64_t seed = default_seed);

// With c null: GP-pd(M).  With c: G(P_C)-pd(M) = GP-pd(Hom(C, M)) for M in
// the Bass class of C.
template <class F>
GDimReport gorenstein_pd(const Module<F>& m, OptModule<F> c, Index bound, std::uint64_t seed = default_seed);

// Complete free resolution of a certified totally reflexive module; M is
// Coker(d(1)) and the augmentation F_0 -> M is returned through `cover`.
template <class F>
Complex<F> complete_resolution(const Module<F>& m, Index bound, Mat<F>* cover = nullptr,
                               std::uint64_t seed = default_seed);

template <class F>
struct TateResolution {
  Module<F> resolved;
  std::optional<Module<F>> c;
  Complex<F> t;
  Resolution<F> w;
  ChainMap<F> alpha;
  Index iso_degree = 0;
  bool split = false;
  GDimReport gdim;
};

// Tate P_C-resolution (free when c is null).  `iso_degree` < 0 selects the
// G(P_C)-projective dimension; larger values splice the complete resolution
// further out, which is a different but equally valid Tate resolution.
template <class F>
TateResolution<F> tate_resolution(const Module<F>& m, OptModule<F> c, Index bound, bool split = false,
                                  Index iso_degree = -1, std::uint64_t seed = default_seed);

// Exactness of T, Hom(C, T) and Hom(T, C) on everything the tails determine.
template <class F>
ExactnessReport check_total_acyclicity(const Complex<F>& t, const Module<F>& c);
// Verifies the defining properties of a Tate resolution.
template <class F>
Verdict validate_tate(const TateResolution<F>& tr);

template <class F>
struct TateLift {
  ChainMap<F> fbar;  // W -> W'
  ChainMap<F> fhat;  // T -> T' on the requested window
  bool commutes = false;   // alpha' fhat = fbar alpha on the window
  bool homotopic = false;  // alpha' fhat - fbar alpha null-homotopic on the window
};

template <class F>
TateLift<F> lift_to_tate(const Mat<F>& f, const TateResolution<F>& a, const TateResolution<F>& b, Index lo,
                         Index hi);

template <class F>
struct Horseshoe {
  TateResolution<F> tate;  // windowed on [lo, hi]
  Index lo = 0, hi = -1;
  std::vector<Mat<F>> f, g, h;  // indexed by n - lo
  Verdict identities;             // the two block identities at every degree
};

// Tate resolution of the middle term of 0 -> M' -i-> M -p-> M'' -> 0 whose
// differential and comparison map are upper triangular over the given ones.
template <class F>
Horseshoe<F> horseshoe_tate(const Mat<F>& i, const Mat<F>& p, const Module<F>& middle, const TateResolution<F>& t1,
                            const TateResolution<F>& t3, Index lo, Index hi);

template <class F>
struct StrictResolution {
  Complex<F> x;           // bounded, degrees 0..d
  Mat<F> augmentation;    // X_0 -> M
  Complex<F> ttilde;      // (T_{>=0})^+ with Coker d(1) in degree -1
  std::vector<Mat<F>> inclusion;   // (Sigma^{-1} X)_n -> Ttilde_n for n in [-1, hi]
  std::vector<Mat<F>> projection;  // Ttilde_n -> W_n
  Index lo = -1;
  Mat<F> x0_to_t;          // X_0 = Coker d(1) -> T_{-1}
};

template <class F>
StrictResolution<F> strict_from_tate(const TateResolution<F>& tr);

template <class F>
struct Hull {
  Module<F> k, cosyzygy;
  Mat<F> into, onto;  // M -> K -> M^(-1)
};

template <class F>
Hull<F> wx_hull(const Module<F>& m, OptModule<F> c, Index bound, std::uint64_t seed = default_seed);

// Tate I_C-coresolution N -> V -> S obtained as the Matlis dual of a Tate
// P_C-resolution of D(N).
template <class F>
struct TateCoresolution {
  Module<F> coresolved;
  Complex<F> s, v;
  ChainMap<F> beta;  // V -> S
  Mat<F> coaugmentation;  // N -> V_0
  Index iso_degree = 0;   // beta_n iso for n <= -iso_degree
  TateResolution<F> dual;
};

template <class F>
TateCoresolution<F> ic_coresolution_via_dual(const Module<F>& n, OptModule<F> c, Index bound, bool split = false,
                                             Index iso_degree = -1, std::uint64_t seed = default_seed);

}  // namespace tate

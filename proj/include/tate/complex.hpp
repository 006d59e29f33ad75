#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tate/module.hpp"

namespace tate {

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// How a complex continues beyond its materialized window on one side.
enum class Tail { Zero, Periodic, Unknown };

// Chain complex with differentials d(n): X_n -> X_{n-1}.  Degrees lo..hi are
// stored; a periodic right tail repeats X_n = X_{n-p} for n > hi, a periodic
// left tail repeats X_n = X_{n+p} for n < lo.
template <class F>
struct Complex {
  AlgebraPtr<F> ring;
  Index lo = 0, hi = -1;
  std::vector<Module<F>> obj;  // obj[n - lo]
  std::vector<Mat<F>> dif;     // dif[n - lo] = d(n) for lo < n <= hi (dif[0] unused)
  Tail left = Tail::Zero, right = Tail::Zero;
  Index left_period = 0, right_period = 0;

  bool bounded() const { return left == Tail::Zero && right == Tail::Zero; }
  // Degree whose stored data represents degree n; nullopt for a zero degree.
  std::optional<Index> rep(Index n) const;
  std::optional<Index> rep_diff(Index n) const;
  Module<F> object(Index n) const;
  Index dim(Index n) const { return object(n).dim; }
  Mat<F> d(Index n) const;
  bool known(Index n) const;
};

template <class F>
Complex<F> make_complex(AlgebraPtr<F> ring, Index lo, std::vector<Module<F>> objects, std::vector<Mat<F>> diffs);
template <class F>
Complex<F> concentrated(const Module<F>& m, Index degree = 0);
// Complex whose window is [lo, hi] with the given degree function; tails are zero.
template <class F>
Complex<F> window_complex(AlgebraPtr<F> ring, Index lo, Index hi, const std::function<Module<F>(Index)>& obj,
                          const std::function<Mat<F>(Index)>& d);

template <class F>
Verdict validate_complex(const Complex<F>& x);

// Chain map with components on [lo, hi]; outside the window components are
// zero, or repeat with right_period when that is positive.
template <class F>
struct ChainMap {
  Complex<F> source, target;
  Index lo = 0, hi = -1;
  std::vector<Mat<F>> comp;
  Index right_period = 0;
  Index left_period = 0;

  Mat<F> at(Index n) const;
};

template <class F>
ChainMap<F> make_chain_map(const Complex<F>& s, const Complex<F>& t, Index lo, std::vector<Mat<F>> comp);
template <class F>
ChainMap<F> identity_map(const Complex<F>& x, Index lo, Index hi);
template <class F>
Verdict validate_chain_map(const ChainMap<F>& f, Index lo, Index hi);

template <class F>
struct Homology {
  Index degree = 0;
  Index dim = 0;
  Mat<F> cycles;            // basis of Z_n (columns)
  std::vector<Index> zrows;  // unit rows of `cycles`
  Mat<F> boundaries;        // basis of B_n
  Mat<F> reps;              // cycles representing a basis of H_n
  Mat<F> proj;              // cycle coordinates -> homology coordinates

  Mat<F> class_of(const Mat<F>& cycle) const;
};

template <class F>
Homology<F> homology(const Complex<F>& x, Index n);

// Induced map H_n(A) -> H_n(B) of a degree-n matrix f: A_n -> B_n.
template <class F>
Mat<F> induced_map(const Homology<F>& a, const Homology<F>& b, const Mat<F>& f);

template <class F>
Complex<F> shift(const Complex<F>& x, Index i);
template <class F>
Complex<F> cone(const ChainMap<F>& f);
template <class F>
Complex<F> truncate_ge(const Complex<F>& x, Index k);
template <class F>
Complex<F> truncate_le(const Complex<F>& x, Index k);
template <class F>
Complex<F> truncate_gt(const Complex<F>& x, Index k) {
  return truncate_ge(x, k + 1);
}
template <class F>
Complex<F> truncate_lt(const Complex<F>& x, Index k) {
  return truncate_le(x, k - 1);
}
template <class F>
Complex<F> direct_sum(const Complex<F>& a, const Complex<F>& b);
template <class F>
Complex<F> matlis_dual(const Complex<F>& x);

// Hom(X, Y)_n = prod_p Hom(X_p, Y_{p+n}), differential
// {f_p} -> {d^Y f_p - (-1)^n f_{p-1} d^X}, summands in ascending p.
// One of X, Y must be bounded.
template <class F>
class HomComplex {
 public:
  HomComplex(Complex<F> x, Complex<F> y);

  const Complex<F>& complex() const { return cx_; }
  const Complex<F>& first() const { return x_; }
  const Complex<F>& second() const { return y_; }

  struct Part {
    Index p;       // degree in X
    Index offset;  // coordinate offset in Hom_n
    std::shared_ptr<const HomSpace<F>> space;
  };
  std::vector<Part> parts(Index n) const;
  // Coordinates in Hom_n of the family {f_p} given as a map p -> matrix.
  Mat<F> coords(Index n, const std::function<Mat<F>(Index)>& family) const;
  Mat<F> differential(Index n) const;

 private:
  std::pair<Index, Index> p_range(Index n) const;
  std::shared_ptr<const HomSpace<F>> space(Index p, Index j) const;

  Complex<F> x_, y_, cx_;
  bool x_bounded_ = true;
  mutable std::map<std::pair<Index, Index>, std::shared_ptr<const HomSpace<F>>> cache_;
};

template <class F>
HomComplex<F> hom_complex(const Complex<F>& x, const Complex<F>& y);

// Degree-n matrix of Hom(pre, post): Hom(X, Y) -> Hom(X', Y'), h -> post h pre,
// where pre: X' -> X and post: Y -> Y'.
template <class F>
using OptChainMap = const std::type_identity_t<ChainMap<F>>*;
template <class F>
using DegreeMaps = std::type_identity_t<std::function<Mat<F>(Index)>>;

template <class F>
Mat<F> hom_functor(const HomComplex<F>& from, const HomComplex<F>& to, OptChainMap<F> pre, OptChainMap<F> post,
                   Index n);

template <class F>
struct NullHomotopy {
  bool found = false;
  std::vector<Mat<F>> s;  // s[n - lo + 1]: X_n -> Y_{n+1} for n in [lo-1, hi]
  Index lo = 0, hi = -1;
};

// Solves f_n = d s_n + s_{n-1} d for R-linear s on degrees lo..hi.
template <class F>
NullHomotopy<F> null_homotopy(const ChainMap<F>& f, Index lo, Index hi);

enum class ProbeSide { HomFromProbe, HomToProbe };

struct ExactnessReport {
  bool exact = true;
  bool conclusive = true;
  Index failing_degree = 0;
  Index lo = 0, hi = -1;
  std::string detail;
};

template <class F>
ExactnessReport check_exactness(const Complex<F>& x);
template <class F>
ExactnessReport check_relative_exactness(const Complex<F>& x, const Module<F>& probe, ProbeSide side);

// Connecting map H_n(C) -> H_{n-1}(A) of 0 -> A -i-> B -pi-> C -> 0.
template <class F>
Mat<F> connecting_map(const Complex<F>& a, const Complex<F>& b, const Complex<F>& c,
                      const DegreeMaps<F>& i, const DegreeMaps<F>& pi, Index n);

}  // namespace tate

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tate/linalg.hpp"

namespace tate {

// Commutative local algebra over a field given by structure constants.
// mult[i] is the matrix of left multiplication by basis element i.
template <class F>
struct Algebra {
  std::string name;
  FieldDescriptor field;
  std::vector<std::string> basis;
  Index unit = 0;
  std::vector<Mat<F>> mult;
  // Non-unit basis elements whose classes span m/m^2 (filled by finalize()).
  std::vector<Index> generators;

  Index dim() const { return static_cast<Index>(basis.size()); }
  F scalar(long long v) const { return ScalarOps<F>::make(field, v); }
  Mat<F> zero(Index r, Index c) const { return zeros<F>(field, r, c); }
  Mat<F> eye(Index n) const { return identity<F>(field, n); }
  std::vector<Index> nonunit() const;
  // Left multiplication by the element with coordinates r.
  Mat<F> left_mult(const Vec<F>& r) const;
  Index index_of(const std::string& name) const;

  void finalize();
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

struct Verdict {
  bool ok = true;
  std::string detail;
  static Verdict pass() { return {}; }
  static Verdict fail(std::string d) { return {false, std::move(d)}; }
};

// Associativity, commutativity, unit, and nilpotency of the span of the
// non-unit basis.  Reports the first failing triple.
template <class F>
Verdict validate_algebra(const Algebra<F>& a);

}  // namespace tate

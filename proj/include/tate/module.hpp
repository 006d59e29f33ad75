#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "tate/algebra.hpp"

namespace tate {

// Finite-dimensional R-module: one action matrix per algebra basis element
// (the unit acts as the identity).
template <class F>
struct Module {
  AlgebraPtr<F> ring;
  std::string name;
  std::vector<std::string> basis;  // optional names, used for printing only
  Index dim = 0;
  std::vector<Mat<F>> act;
  // >= 0 when this is R^free_rank in the standard basis (generator-major).
  Index free_rank = -1;

  const FieldDescriptor& field() const { return ring->field; }
  Mat<F> zero(Index r, Index c) const { return zeros<F>(ring->field, r, c); }
  Mat<F> eye() const { return identity<F>(ring->field, dim); }
  Mat<F> eye(Index n) const { return identity<F>(ring->field, n); }
  F scalar(long long v) const { return ring->scalar(v); }
  Mat<F> action(const Vec<F>& r) const;
};

// Optional module argument; not a deduction context, so nullptr can be passed.
template <class F>
using OptModule = const std::type_identity_t<Module<F>>*;

template <class F>
bool same_module(const Module<F>& a, const Module<F>& b);

template <class F>
Module<F> module_from_actions(AlgebraPtr<F> ring, Index dim, std::vector<Mat<F>> act);
template <class F>
Module<F> free_module(AlgebraPtr<F> ring, Index rank);
template <class F>
Module<F> zero_module(AlgebraPtr<F> ring);
template <class F>
Module<F> residue_field(AlgebraPtr<F> ring);
template <class F>
Module<F> direct_sum(const std::vector<Module<F>>& parts);
template <class F>
Module<F> power(const Module<F>& m, Index n);

template <class F>
Verdict validate_module(const Module<F>& m);
template <class F>
bool is_hom(const Module<F>& s, const Module<F>& t, const Mat<F>& f);

template <class F>
struct HomSpace {
  Module<F> source, target;
  std::vector<Mat<F>> basis;
  // Entry (row-major flattened) positions from which coordinates are read.
  std::vector<Index> positions;
  Module<F> module;  // (b.f)(x) = f(b.x)

  Index dim() const { return static_cast<Index>(basis.size()); }
  Vec<F> coords(const Mat<F>& f) const;
  Mat<F> element(const Vec<F>& c) const;
};

template <class F>
HomSpace<F> hom_space(const Module<F>& m, const Module<F>& n);

// Matrix (in hom-space coordinates) of h -> post * h * pre from `from` to `to`.
template <class F>
Mat<F> hom_map(const HomSpace<F>& from, const HomSpace<F>& to, const Mat<F>& pre, const Mat<F>& post);

// An element h of the hom space with post * h * pre == rhs; null factors are identities.
template <class F>
std::optional<Mat<F>> factor_through(const HomSpace<F>& hs, const Mat<F>* post, const Mat<F>* pre, const Mat<F>& rhs);

template <class F>
struct Tensor {
  Module<F> module;
  Mat<F> projection;  // M (x)_k N -> M (x)_R N
  Mat<F> section;
  Index left_dim = 0, right_dim = 0;
};

template <class F>
Tensor<F> tensor_over(const Module<F>& m, const Module<F>& n);
template <class F>
Mat<F> tensor_map(const Tensor<F>& from, const Tensor<F>& to, const Mat<F>& f, const Mat<F>& g);

template <class F>
Module<F> matlis_dual(const Module<F>& m);

template <class F>
struct Generators {
  Index count = 0;
  Mat<F> lift;  // dim M x count, images of the generators
};

template <class F>
Generators<F> minimal_generators(const Module<F>& m);
// R^g -> M sending the j-th generator to gens.col(j).
template <class F>
Mat<F> cover_map(const Module<F>& m, const Mat<F>& gens);

// Submodule with inclusion whose rows `rows` form an identity block.
template <class F>
struct Sub {
  Module<F> module;
  Mat<F> inclusion;
  std::vector<Index> rows;
  // Coordinates of vectors known to lie in the submodule.
  Mat<F> coords(const Mat<F>& v) const;
};

template <class F>
struct Quo {
  Module<F> module;
  Mat<F> projection;
  Mat<F> section;
};

template <class F>
Sub<F> submodule(const Module<F>& m, const Mat<F>& span);
template <class F>
Quo<F> quotient_module(const Module<F>& m, const Mat<F>& span);
template <class F>
Sub<F> kernel_module(const Module<F>& m, const Mat<F>& f);
template <class F>
Quo<F> cokernel_module(const Module<F>& n, const Mat<F>& f);
template <class F>
Sub<F> image_module(const Module<F>& n, const Mat<F>& f);

template <class F>
F random_scalar(const FieldDescriptor& fd, std::mt19937_64& rng);
template <class F>
Mat<F> random_matrix(const FieldDescriptor& fd, Index r, Index c, std::mt19937_64& rng);

// Tries the hom-space basis, then `attempts` random combinations.
template <class F>
std::optional<Mat<F>> is_isomorphic(const Module<F>& m, const Module<F>& n, int attempts, std::uint64_t seed);

// Hom_R(M, R) with its module structure.
template <class F>
HomSpace<F> ring_dual(const Module<F>& m);
template <class F>
bool is_free(const Module<F>& m);
template <class F>
bool is_injective(const Module<F>& m);

}  // namespace tate

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tate/complex.hpp"

using namespace tate;

namespace {

// ... -> R -x-> R -x-> R -> ... over F_2[x]/(x^2), window [0, 0] with period 1 on both sides.
Complex<Zp> periodic_x(const AlgebraPtr<Zp>& r2) {
  Module<Zp> r = free_module(r2, 1);
  Mat<Zp> x = r.act[static_cast<std::size_t>(r2->index_of("x"))];
  Complex<Zp> c = make_complex<Zp>(r2, 0, {r, r}, {x});
  c.left = c.right = Tail::Periodic;
  c.left_period = c.right_period = 1;
  return c;
}

}  // namespace

TEST_CASE("periodic tails repeat the window") {
  auto r2 = fixture::algebra<Zp>("R2");
  Complex<Zp> c = periodic_x(r2);
  CHECK(validate_complex(c).ok);
  for (Index n = -6; n <= 6; ++n) {
    CHECK(c.dim(n) == 2);
    CHECK(c.d(n) == c.d(1));
    CHECK(is_zero<Zp>(c.d(n - 1) * c.d(n)));
  }
  for (Index n = -4; n <= 4; ++n) CHECK(homology(c, n).dim == 0);
  CHECK(check_exactness(c).exact);
}

TEST_CASE("unknown tails refuse to answer") {
  auto r2 = fixture::algebra<Zp>("R2");
  Complex<Zp> c = periodic_x(r2);
  c.right = Tail::Unknown;
  CHECK_THROWS_AS(c.object(5), BoundExceeded);
  CHECK(c.known(1));
  CHECK_FALSE(c.known(2));
}

TEST_CASE("homology of a bounded complex") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> r = free_module(r2, 1), k = fixture::module(r2, "k");
  Mat<Zp> x = r.act[1];
  // 0 -> R -x-> R -> 0 has H_1 = soc R and H_0 = R/xR.
  Complex<Zp> c = make_complex<Zp>(r2, 0, {r, r}, {x});
  CHECK(homology(c, 1).dim == 1);
  CHECK(homology(c, 0).dim == 1);
  CHECK(homology(c, 2).dim == 0);
  Complex<Zp> k0 = concentrated(k, 3);
  CHECK(homology(k0, 3).dim == 1);
  CHECK(k0.dim(2) == 0);
}

TEST_CASE("Hom complex differential squares to zero with the alternating sign") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> r = free_module(r3, 1);
  Mat<Zp> x = r.act[1], x2 = r.act[2];
  Complex<Zp> a = make_complex<Zp>(r3, 0, {r, r, r}, {x, x2});
  Complex<Zp> b = make_complex<Zp>(r3, -1, {r, r}, {x2});
  HomComplex<Zp> h(a, b);
  for (Index n = -4; n <= 3; ++n) CHECK(is_zero<Zp>(h.differential(n - 1) * h.differential(n)));
  CHECK(validate_complex(h.complex()).ok);
}

TEST_CASE("Hom of a periodic complex into k has zero differentials") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k");
  HomComplex<Zp> h(periodic_x(r2), concentrated(k));
  for (Index n = -5; n <= 5; ++n) {
    CHECK(h.complex().dim(n) == 1);
    CHECK(is_zero<Zp>(h.differential(n)));
    CHECK(homology(h.complex(), n).dim == 1);
  }
}

TEST_CASE("degree-zero homology of Hom(X, N) is the space of chain maps modulo homotopy") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> k = fixture::module(r3, "k");
  Complex<Zp> ck = concentrated(k);
  HomComplex<Zp> h(ck, ck);
  CHECK(homology(h.complex(), 0).dim == hom_space(k, k).dim());
}

TEST_CASE("cone of the identity is contractible") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> r = free_module(r3, 1);
  Complex<Zp> a = make_complex<Zp>(r3, 0, {r, r, r}, {r.act[2], r.act[1]});
  ChainMap<Zp> id = identity_map(a, 0, 2);
  CHECK(validate_chain_map(id, -1, 3).ok);
  Complex<Zp> c = cone(id);
  CHECK(validate_complex(c).ok);
  for (Index n = -1; n <= 4; ++n) CHECK(homology(c, n).dim == 0);
  ChainMap<Zp> idc = identity_map(c, c.lo, c.hi);
  NullHomotopy<Zp> s = null_homotopy(idc, c.lo, c.hi);
  CHECK(s.found);
  // The identity of a complex with homology is not null-homotopic.
  NullHomotopy<Zp> t = null_homotopy(id, 0, 2);
  CHECK_FALSE(t.found);
}

TEST_CASE("shift and truncation") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> r = free_module(r3, 1);
  Complex<Zp> a = make_complex<Zp>(r3, 0, {r, r, r}, {r.act[2], r.act[1]});
  Complex<Zp> s = shift(a, 1);
  CHECK(s.lo == 1);
  CHECK(s.d(2) == -a.d(1));
  CHECK(validate_complex(s).ok);
  Complex<Zp> t = truncate_ge(a, 1);
  CHECK(t.lo == 1);
  CHECK(t.dim(0) == 0);
  CHECK(homology(t, 1).dim == 1);
  Complex<Zp> u = truncate_lt(a, 1);
  CHECK(u.hi == 0);
}

TEST_CASE("Matlis dual of a complex reverses degrees") {
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> r = free_module(s, 1), e = fixture::module(s, "E");
  Complex<Zp> a = make_complex<Zp>(s, 0, {r, r}, {r.act[1]});
  Complex<Zp> d = matlis_dual(a);
  CHECK(d.lo == -1);
  CHECK(d.hi == 0);
  CHECK(is_isomorphic(d.object(0), e, 10, 1).has_value());
  CHECK(validate_complex(d).ok);
  for (Index n = -1; n <= 1; ++n) CHECK(homology(d, -n).dim == homology(a, n).dim);
}

TEST_CASE("relative exactness probes") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = free_module(r2, 1);
  // 0 -> k -> R -> k -> 0 is exact but does not split, so Hom(k, -) kills exactness.
  Mat<Zp> inc = zeros<Zp>(r2->field, 2, 1);
  inc(1, 0) = Zp::in(2, 1);
  Mat<Zp> proj = zeros<Zp>(r2->field, 1, 2);
  proj(0, 0) = Zp::in(2, 1);
  Complex<Zp> ses = make_complex<Zp>(r2, -1, {k, r, k}, {proj, inc});
  CHECK(check_exactness(ses).exact);
  CHECK(check_relative_exactness(ses, r, ProbeSide::HomFromProbe).exact);
  CHECK_FALSE(check_relative_exactness(ses, k, ProbeSide::HomFromProbe).exact);
  CHECK_FALSE(check_relative_exactness(ses, k, ProbeSide::HomToProbe).exact);
}

TEST_CASE("connecting map of 0 -> k -> R -> k -> 0 under Hom(T, -)") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = free_module(r2, 1);
  Mat<Zp> inc = zeros<Zp>(r2->field, 2, 1);
  inc(1, 0) = Zp::in(2, 1);
  Mat<Zp> proj = zeros<Zp>(r2->field, 1, 2);
  proj(0, 0) = Zp::in(2, 1);
  Complex<Zp> t = periodic_x(r2), ck = concentrated(k), cr = concentrated(r);
  HomComplex<Zp> hk(t, ck), hr(t, cr);
  ChainMap<Zp> ci = make_chain_map<Zp>(ck, cr, 0, {inc}), cp = make_chain_map<Zp>(cr, ck, 0, {proj});
  auto i = [&](Index n) { return hom_functor(hk, hr, nullptr, &ci, n); };
  auto pi = [&](Index n) { return hom_functor(hr, hk, nullptr, &cp, n); };
  for (Index n = -3; n <= 3; ++n) {
    // Hom(T, R) is exact, so the connecting map is an isomorphism.
    CHECK(homology(hr.complex(), n).dim == 0);
    CHECK(is_zero<Zp>(pi(n) * i(n)));
    Mat<Zp> delta = connecting_map(hk.complex(), hr.complex(), hk.complex(), i, pi, n);
    CHECK(delta.rows() == 1);
    CHECK(delta.cols() == 1);
    CHECK(rank(delta) == 1);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tate/cohomology.hpp"

using namespace tate;

namespace {

// 0 -> k -> R -> k -> 0 over F_2[x]/(x^2): the hull of k.
struct R2Hull {
  Mat<Zp> inc, proj;
};

R2Hull r2_hull(const AlgebraPtr<Zp>& r2) {
  R2Hull h{zeros<Zp>(r2->field, 2, 1), zeros<Zp>(r2->field, 1, 2)};
  h.inc(1, 0) = Zp::in(2, 1);
  h.proj(0, 0) = Zp::in(2, 1);
  return h;
}

// 0 -> A -> A + B -> B -> 0.
template <class F>
std::pair<Mat<F>, Mat<F>> split_sequence(const Module<F>& a, const Module<F>& b) {
  const FieldDescriptor& fd = a.ring->field;
  Mat<F> i = zeros<F>(fd, a.dim + b.dim, a.dim), p = zeros<F>(fd, b.dim, a.dim + b.dim);
  i.block(0, 0, a.dim, a.dim) = identity<F>(fd, a.dim);
  p.block(0, a.dim, b.dim, b.dim) = identity<F>(fd, b.dim);
  return {i, p};
}

}  // namespace

TEST_CASE("semidualizing verdicts") {
  auto s = fixture::algebra<Zp>("S");
  CHECK(check_semidualizing(fixture::module(s, "R"), 6).answer == Answer::Yes);
  CHECK(check_semidualizing(fixture::module(s, "E"), 6).answer == Answer::Yes);
  Membership k = check_semidualizing(fixture::module(s, "k"), 6);
  CHECK(k.answer == Answer::No);
  CHECK(k.witness.find("dim Hom(C, C) = 1") != std::string::npos);
  CHECK(k.witness.find("dim R = 3") != std::string::npos);
}

TEST_CASE("Auslander and Bass classes") {
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), k = fixture::module(s, "k"), r = fixture::module(s, "R");
  CHECK(class_membership(r, e, MemberClass::Auslander, 6).answer == Answer::Yes);
  CHECK(class_membership(e, e, MemberClass::Bass, 6).answer == Answer::Yes);
  Membership kb = class_membership(k, e, MemberClass::Bass, 6);
  CHECK(kb.answer == Answer::No);
  CHECK_FALSE(kb.witness.empty());
  CHECK(class_membership(k, e, MemberClass::Auslander, 6).answer == Answer::No);
  // With C = R both classes are everything.
  for (const auto& m : {e, k, r}) {
    CHECK(class_membership(m, r, MemberClass::Auslander, 6).answer == Answer::Yes);
    CHECK(class_membership(m, r, MemberClass::Bass, 6).answer == Answer::Yes);
  }
}

TEST_CASE("P_C and I_C membership") {
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), k = fixture::module(s, "k"), r = fixture::module(s, "R");
  CHECK(class_membership(power(e, 2), e, MemberClass::PC, 6).answer == Answer::Yes);
  CHECK(class_membership(r, e, MemberClass::PC, 6).answer == Answer::No);
  CHECK(class_membership(k, e, MemberClass::PC, 6).answer == Answer::No);
  CHECK(class_membership(r, e, MemberClass::IC, 6).answer == Answer::Yes);  // D(R) = E
  CHECK(class_membership(e, r, MemberClass::IC, 6).answer == Answer::Yes);
}

TEST_CASE("Gorenstein classes") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  CHECK(class_membership(k, r, MemberClass::GPC, 6).answer == Answer::Yes);
  CHECK(class_membership(k, r, MemberClass::GIC, 6).answer == Answer::Yes);
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), sk = fixture::module(s, "k");
  CHECK(class_membership(e, e, MemberClass::GPC, 6).answer == Answer::Yes);
  CHECK(class_membership(e, e, MemberClass::GPCReflexive, 6).answer == Answer::Yes);
  CHECK(class_membership(sk, e, MemberClass::GPC, 6).answer == Answer::No);
  // E is dualizing, so every module is totally E-reflexive; k fails only the Bass condition.
  CHECK(class_membership(sk, e, MemberClass::GPCReflexive, 6).answer == Answer::Yes);
}

TEST_CASE("Tor vanishing") {
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), k = fixture::module(s, "k"), r = fixture::module(s, "R");
  CHECK(tor_vanishing(r, k, 6) == Answer::Yes);
  std::string w;
  CHECK(tor_vanishing(k, k, 6, &w) == Answer::No);
  CHECK(w.find("Tor_1") != std::string::npos);
  CHECK(tor_vanishing(e, k, 6) == Answer::No);
}

TEST_CASE("absolute and relative Ext") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k");
  CohomologyTable a = relative_ext<Zp>(k, k, nullptr, ExtKind::Abs, -2, 6);
  for (Index n = -2; n <= 6; ++n) CHECK(a.dim(n) == (n >= 0 ? 1 : 0));
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> sk = fixture::module(s, "k"), e = fixture::module(s, "E");
  CohomologyTable b = relative_ext<Zp>(sk, sk, nullptr, ExtKind::Abs, 0, 5);
  for (Index n = 0; n <= 5; ++n) CHECK(b.dim(n) == (Index{1} << n));
  // C-projectives have no higher relative Ext.
  for (const auto& n : {sk, e}) {
    CohomologyTable c = relative_ext(power(e, 2), n, &e, ExtKind::RelPC, 0, 4);
    CHECK(c.dim(0) == hom_space(power(e, 2), n).dim());
    for (Index i = 1; i <= 4; ++i) CHECK(c.dim(i) == 0);
  }
  CohomologyTable g = relative_ext<Zp>(k, k, nullptr, ExtKind::RelGPC, 0, 4);
  CHECK(g.dim(0) == 1);
  for (Index i = 1; i <= 4; ++i) CHECK(g.dim(i) == 0);
  CohomologyTable ic = relative_ext<Zp>(k, k, nullptr, ExtKind::RelIC, 0, 3);
  for (Index i = 0; i <= 3; ++i) CHECK(ic.dim(i) == 1);
}

TEST_CASE("Tate Ext of k over F_2[x]/(x^2)") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  CohomologyTable t = tate_ext(k, k, &r, Side::P, -5, 5);
  for (Index n = -5; n <= 5; ++n) CHECK(t.dim(n) == 1);
  CohomologyTable u = tate_ext(k, k, &r, Side::I, -5, 5);
  for (Index n = -5; n <= 5; ++n) CHECK(u.dim(n) == 1);
  CHECK(tate_ext<Zp>(r, k, nullptr, Side::P, -4, 4).zero());
  CHECK(tate_ext<Zp>(k, r, nullptr, Side::P, -4, 4).zero());
}

TEST_CASE("Tate Ext does not depend on the Tate resolution") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> k = fixture::module(r3, "k"), rx2 = fixture::module(r3, "Rx2");
  for (const auto& n : {k, rx2}) {
    CohomologyTable a = tate_ext<Zp>(k, n, nullptr, Side::P, -4, 4);
    TateOptions opt;
    opt.split = true;
    opt.iso_degree = 3;
    CohomologyTable b = tate_ext<Zp>(k, n, nullptr, Side::P, -4, 4, opt);
    CHECK(a.dims == b.dims);
  }
}

TEST_CASE("comparison maps") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k");
  std::vector<ComparisonMap> cm = comparison_maps<Zp>(k, k, nullptr, 0, 4);
  for (const ComparisonMap& c : cm) {
    if (c.kind == 'e' && c.degree >= 1) CHECK(c.iso);
    if (c.kind == 't' && c.degree == 0) CHECK(c.iso);
  }
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), sk = fixture::module(s, "k");
  for (const ComparisonMap& c : comparison_maps(power(e, 2), sk, &e, 0, 3))
    if (c.kind == 't') CHECK(c.iso);
}

TEST_CASE("Avramov-Martsinkovsky sequence with d = 0 is empty") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k");
  LesReport les = am_les<Zp>(k, k, nullptr, Side::P);
  CHECK(les.d == 0);
  CHECK(les.terms.empty());
  CHECK(les.ok());
}

TEST_CASE("Avramov-Martsinkovsky sequence for a longer Tate resolution") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> k = fixture::module(r3, "k"), rx2 = fixture::module(r3, "Rx2");
  TateOptions opt;
  opt.iso_degree = 2;
  for (const auto& n : {k, rx2}) {
    LesReport les = am_les<Zp>(k, n, nullptr, Side::P, opt);
    CHECK(les.d == 2);
    CHECK(les.terms.size() == 6);
    for (const Check& c : les.report.checks) CHECK_MESSAGE(c.status == Status::Ok, c.name << " " << c.detail);
    LesReport li = am_les<Zp>(k, n, nullptr, Side::I, opt);
    CHECK(li.ok());
  }
}

TEST_CASE("Tate sequence in the second variable on the hull of k") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  R2Hull h = r2_hull(r2);
  LesReport les = tate_les<Zp>(h.inc, h.proj, k, r, k, k, nullptr, Variable::Second, -3, 3);
  for (const Check& c : les.report.checks) CHECK_MESSAGE(c.status == Status::Ok, c.name << " " << c.detail);
  // The middle terms vanish, so every connecting map is an isomorphism.
  for (std::size_t j = 0; j < les.maps.size(); ++j)
    if (les.maps[j] == "delta") CHECK(les.ranks[j] == 1);
}

TEST_CASE("Tate sequence of a split sequence in the first variable") {
  auto r3 = fixture::algebra<Zp>("R3");
  Module<Zp> k = fixture::module(r3, "k"), rx2 = fixture::module(r3, "Rx2");
  auto [i, p] = split_sequence(k, rx2);
  Module<Zp> mid = direct_sum<Zp>({k, rx2});
  LesReport les = tate_les<Zp>(i, p, k, mid, rx2, k, nullptr, Variable::First, -2, 2);
  for (const Check& c : les.report.checks) CHECK_MESSAGE(c.status == Status::Ok, c.name << " " << c.detail);
  for (std::size_t j = 0; j < les.maps.size(); ++j)
    if (les.maps[j] == "delta") CHECK(les.ranks[j] == 0);
}

TEST_CASE("a sequence that is not Hom(C, -)-exact is rejected") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  R2Hull h = r2_hull(r2);
  LesReport les = tate_les<Zp>(h.inc, h.proj, k, r, k, k, &k, Variable::Second, -2, 2);
  CHECK(les.report.overall() == Status::Fail);
}

TEST_CASE("vanishing diagnostic") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  std::vector<Module<Zp>> fam{k, r, power(k, 2)};
  VanishingReport vr = vanishing_diagnostic<Zp>(power(r, 2), nullptr, fam, -3, 3);
  CHECK(vr.finite_pd == Answer::Yes);
  CHECK(vr.kills_first == Answer::Yes);
  CHECK(vr.kills_second == Answer::Yes);
  CHECK(vr.self_zero == Answer::Yes);
  REQUIRE(vr.split_mono.has_value());
  CHECK(*vr.split_mono);
  CHECK(vr.report.overall() == Status::Ok);
  VanishingReport vk = vanishing_diagnostic<Zp>(k, nullptr, fam, -3, 3);
  CHECK(vk.finite_pd == Answer::No);
  CHECK(vk.self_zero == Answer::No);
  CHECK(vk.report.overall() == Status::Ok);
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E");
  VanishingReport ve = vanishing_diagnostic(power(e, 2), &e, {e, fixture::module(s, "k")}, -3, 3);
  CHECK(ve.finite_pd == Answer::Yes);
  CHECK(ve.report.overall() == Status::Ok);
}

TEST_CASE("balance over a Gorenstein ring") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  BalanceReport b = balance_check(k, k, r, r, -4, 4);
  CHECK(b.dualizing);
  for (Index n = -4; n <= 4; ++n) {
    CHECK(b.p_side.dim(n) == 1);
    CHECK(b.i_side.dim(n) == 1);
  }
  CHECK(b.report.overall() == Status::Ok);
}

TEST_CASE("balance over S with C = E") {
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), r = fixture::module(s, "R"), k = fixture::module(s, "k");
  // B = R needs M of finite Gorenstein projective dimension and D(N) in G(P_E):
  // over S these are the free modules.
  BalanceReport b = balance_check(power(r, 2), r, r, e, -3, 3);
  CHECK(b.dualizing);
  CHECK(b.report.overall() == Status::Ok);
  BalanceReport bad = balance_check(k, k, r, e, -3, 3);
  CHECK(bad.report.overall() == Status::Fail);
}

TEST_CASE("duality bridge") {
  auto r2 = fixture::algebra<Zp>("R2");
  Module<Zp> k = fixture::module(r2, "k"), r = fixture::module(r2, "R");
  DualityReport d = duality_bridge(k, r, 6);
  CHECK(d.gpc_pd.finite());
  CHECK(d.gpc_pd.value == 0);
  CHECK(d.gpc_refl_pd.value == 0);
  CHECK(d.gp_hom_pd.value == 0);
  CHECK(d.report.overall() == Status::Ok);
  auto s = fixture::algebra<Zp>("S");
  Module<Zp> e = fixture::module(s, "E"), sk = fixture::module(s, "k");
  DualityReport de = duality_bridge(e, e, 6);
  CHECK(de.gpc_pd.value == 0);
  CHECK(de.report.overall() == Status::Ok);
  DualityReport dk = duality_bridge(sk, e, 6);
  CHECK(dk.gpc_pd.status == GStatus::Infinite);
  for (const Check& c : dk.report.checks) CHECK_MESSAGE(c.status != Status::Fail, c.name << " " << c.detail);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tate/resolution.hpp"

namespace tate {

enum class Status { Ok, Fail, Inconclusive, NotApplicable };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Ok;
  std::string detail;
};

// Ordered list of verdicts; the overall status is the worst one
// (Fail over Inconclusive over Ok; NotApplicable lines are ignored).
struct Report {
  std::vector<Check> checks;

  void add(std::string name, Status s, std::string detail = {});
  void add(std::string name, bool ok, std::string detail = {});
  void merge(const std::string& prefix, const Report& other);
  Status overall() const;
};

enum class ExtKind { Abs, RelPC, RelGPC, RelIC, RelGIC, TatePC, TateIC };
const char* kind_name(ExtKind k);
std::optional<ExtKind> parse_kind(const std::string& s);

struct CohomologyTable {
  ExtKind kind = ExtKind::Abs;
  Index from = 0, to = -1;
  std::vector<Index> dims;

  Index dim(Index n) const { return dims.at(static_cast<std::size_t>(n - from)); }
  bool zero() const;
};

enum class MemberClass { Semidualizing, Auslander, Bass, GPC, GIC, PC, IC, GPCReflexive };
const char* class_name(MemberClass c);
std::optional<MemberClass> parse_class(const std::string& s);

struct Membership {
  MemberClass cls = MemberClass::Semidualizing;
  Answer answer = Answer::Inconclusive;
  std::string witness;
  std::vector<std::string> evidence;
};

// Tor_{>=1}(X, Y) = 0, certified as for ext_vanishing.
template <class F>
Answer tor_vanishing(const Module<F>& x, const Module<F>& y, Index bound, std::string* witness = nullptr,
                     std::uint64_t seed = default_seed);

template <class F>
Membership check_semidualizing(const Module<F>& c, Index bound, std::uint64_t seed = default_seed);

// GPCReflexive is total C-reflexivity: membership in GP_C for finitely generated modules.
template <class F>
Membership class_membership(const Module<F>& m, const Module<F>& c, MemberClass cls, Index bound,
                            std::uint64_t seed = default_seed);

struct TateOptions {
  Index bound = 8;
  bool split = false;
  Index iso_degree = -1;
  std::uint64_t seed = default_seed;
};

enum class Side { P, I };

// Absolute and relative Ext in degrees from..to (zero below 0).  The I kinds
// and the Tate kinds take c null for the classical classes.
template <class F>
CohomologyTable relative_ext(const Module<F>& m, const Module<F>& n, OptModule<F> c, ExtKind kind, Index from,
                             Index to, const TateOptions& opt = {});

// Ext^n = H_{-n}(Hom(T, N)) on the P side, H_{-n}(Hom(M, S)) on the I side.
template <class F>
CohomologyTable tate_ext(const Module<F>& m, const Module<F>& n, OptModule<F> c, Side side, Index from, Index to,
                         const TateOptions& opt = {});
template <class F>
CohomologyTable tate_ext(const TateResolution<F>& tr, const Module<F>& n, Index from, Index to);
template <class F>
CohomologyTable tate_ext(const Module<F>& m, const TateCoresolution<F>& cr, Index from, Index to);

struct ComparisonMap {
  char kind = 'e';  // 'e' for epsilon, 't' for theta
  Index degree = 0;
  Index rows = 0, cols = 0, rank = 0;
  bool iso = false;
};

// epsilon^n: Ext^n_{P_C}(M, N) -> Ext-hat^n(M, N) and theta^n:
// Ext^n_{G(P_C)}(M, N) -> Ext^n_{P_C}(M, N) for n in from..to (n >= 0).
template <class F>
std::vector<ComparisonMap> comparison_maps(const Module<F>& m, const Module<F>& n, OptModule<F> c, Index from,
                                           Index to, const TateOptions& opt = {});

// Exact sequence V_0 -> V_1 -> ... with maps[j]: V_j -> V_{j+1}.
struct LesReport {
  std::vector<std::string> terms;
  std::vector<Index> dims;
  std::vector<std::string> maps;
  std::vector<Index> ranks;
  bool leading_zero = false, trailing_zero = false;
  Index d = 0;
  Report report;

  bool ok() const { return report.overall() == Status::Ok; }
};

// Exactness of a sequence given by its matrices (composites must vanish,
// rank in + rank out = dim at every interior term).
template <class F>
void assess_sequence(LesReport& les, const std::vector<Mat<F>>& maps);

// 0 -> Ext^1_{G(P_C)} -> Ext^1_{P_C} -> Ext-hat^1 -> Ext^2_{G(P_C)} -> ... -> Ext-hat^d -> 0
// and epsilon^n iso for d < n <= d + tail.  iso_degree >= 0 runs the sequence
// for a longer Tate resolution (the G(P_C)-resolution it induces has that length).
// The I side is reached by Matlis duality: (M, N) -> (D N, D M).
template <class F>
LesReport am_les(const Module<F>& m, const Module<F>& n, OptModule<F> c, Side side, const TateOptions& opt = {},
                 Index tail = 3);

// Long exact sequence of Ext-hat for 0 -> A -i-> B -p-> C -> 0 in the given
// variable against `other`, over degrees from..to.
enum class Variable { First, Second };
template <class F>
LesReport tate_les(const Mat<F>& i, const Mat<F>& p, const Module<F>& a, const Module<F>& b, const Module<F>& cmod,
                   const Module<F>& other, OptModule<F> c, Variable var, Index from, Index to,
                   const TateOptions& opt = {});

struct VanishingReport {
  Answer finite_pd = Answer::Inconclusive;  // (i)
  Answer kills_second = Answer::Inconclusive;  // (ii) Ext-hat(-, M) = 0 on the test family
  Answer kills_first = Answer::Inconclusive;   // (iii) Ext-hat(M, -) = 0 on the test family
  Answer self_zero = Answer::Inconclusive;     // (iv) Ext-hat^0(M, M) = 0
  std::optional<bool> split_mono;             // Ext-hat^0 = 0 extraction of M as a summand of T_{-1}
  Report report;
};

template <class F>
VanishingReport vanishing_diagnostic(const Module<F>& m, OptModule<F> c, const std::vector<Module<F>>& family,
                                     Index from, Index to, const TateOptions& opt = {});

struct BalanceReport {
  CohomologyTable p_side, i_side;
  bool dualizing = false;
  Report report;
};

template <class F>
BalanceReport balance_check(const Module<F>& m, const Module<F>& n, const Module<F>& b, const Module<F>& c, Index from,
                            Index to, const TateOptions& opt = {});

struct DualityReport {
  GDimReport gpc_pd;      // G(P_C)-pd(M) from syzygies of a proper P_C-resolution
  GDimReport gpc_refl_pd; // GP_C-pd(M) from free syzygies
  GDimReport gp_hom_pd;   // GP-pd(Hom(C, M))
  Report report;
};

template <class F>
DualityReport duality_bridge(const Module<F>& m, const Module<F>& c, Index bound, std::uint64_t seed = default_seed);

}  // namespace tate

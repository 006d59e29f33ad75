#include "tate/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <sstream>

#include "tate/cohomology.hpp"
#include "tate/io.hpp"

namespace tate::cli {

namespace {

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string m, n, c, b, kind = "tatePC", range, side = "P", variable, cls, resolution = "free";
  Index bound = 8, window = 2, iso_degree = -1, tail = 3;
  std::uint64_t seed = default_seed;
  bool split = false;
};

struct Range {
  Index from = 0, to = 0;
};

Range parse_range(const std::string& s, Range fallback) {
  if (s.empty()) return fallback;
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError(0, "--range expects a:b, got '" + s + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    Range r{std::stoll(s.substr(0, colon), &p1), std::stoll(s.substr(colon + 1), &p2)};
    if (p1 != colon || p2 != s.size() - colon - 1) throw std::invalid_argument(s);
    if (r.from > r.to) throw InputError(0, "--range " + s + " is empty");
    return r;
  } catch (const std::logic_error&) {
    throw InputError(0, "--range expects integers a:b, got '" + s + "'");
  }
}

// Collects verdict lines and the exit code they imply.
class Printer {
 public:
  Printer(std::ostream& out, Index bound) : out_(out), bound_(bound) {}

  void table(Index n, Index dim) { out_ << n << '\t' << dim << '\n'; }
  void line(const std::string& s) { out_ << s << '\n'; }

  void check(const Check& c) {
    out_ << status_name(c.status) << ' ' << c.name;
    if (!c.detail.empty()) out_ << " (" << c.detail << ')';
    out_ << '\n';
    note(c.status, c.name);
  }
  void report(const Report& r) {
    for (const Check& c : r.checks) check(c);
  }
  void note(Status s, const std::string& what) {
    if (s == Status::Fail && failed_.empty()) failed_ = what;
    if (s == Status::Inconclusive) unsure_ = true;
  }
  void answer(Answer a, const std::string& what) {
    note(a == Answer::Yes ? Status::Ok : a == Answer::No ? Status::Fail : Status::Inconclusive, what);
  }

  int finish() {
    if (!failed_.empty()) {
      out_ << "FAIL " << failed_ << '\n';
      return verification_failure;
    }
    if (unsure_) {
      out_ << "INCONCLUSIVE " << bound_ << '\n';
      return inconclusive;
    }
    out_ << "OK\n";
    return ok;
  }

 private:
  std::ostream& out_;
  Index bound_;
  std::string failed_;
  bool unsure_ = false;
};

std::string algebra_path_for(const std::string& module_path, const std::string& text) {
  std::filesystem::path dir = std::filesystem::path(module_path).parent_path();
  return (dir / (peek_module_ring(text) + ".alg")).string();
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    throw InputError(0, e.what());
  }
}

template <class F>
class Session {
 public:
  Session(AlgebraPtr<F> ring, std::string ring_name) : ring_(std::move(ring)), ring_name_(std::move(ring_name)) {}

  Module<F> module(const std::string& path) {
    std::string text = load(path);
    std::string over = peek_module_ring(text);
    if (over != ring_name_)
      throw InputError(0, path + ": module over " + over + ", expected " + ring_name_);
    try {
      return parse_module<F>(text, ring_);
    } catch (InputError& e) {
      throw InputError(0, path + ": " + e.what());
    }
  }
  std::optional<Module<F>> optional(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return module(path);
  }
  const AlgebraPtr<F>& ring() const { return ring_; }

 private:
  AlgebraPtr<F> ring_;
  std::string ring_name_;
};

template <class F>
const Module<F>* ptr(const std::optional<Module<F>>& m) {
  return m ? &*m : nullptr;
}

std::string require(const std::string& v, const char* flag) {
  if (v.empty()) throw InputError(0, std::string("missing ") + flag);
  return v;
}

TateOptions tate_options(const Options& o) {
  TateOptions t;
  t.bound = o.bound;
  t.split = o.split;
  t.iso_degree = o.iso_degree;
  t.seed = o.seed;
  return t;
}

template <class F>
int cmd_semidualizing(Session<F>& s, const Options& o, Printer& pr) {
  Membership mb = check_semidualizing(s.module(require(o.c, "--c")), o.bound, o.seed);
  for (const std::string& e : mb.evidence) pr.line("# " + e);
  pr.line(std::string("semidualizing\t") + answer_name(mb.answer));
  pr.answer(mb.answer, mb.witness);
  return pr.finish();
}

template <class F>
int cmd_classify(Session<F>& s, const Options& o, Printer& pr) {
  Module<F> m = s.module(require(o.m, "--module"));
  Module<F> c = o.c.empty() ? free_module(s.ring(), 1) : s.module(o.c);
  std::vector<MemberClass> classes{MemberClass::Auslander, MemberClass::Bass,         MemberClass::PC,
                                   MemberClass::IC,        MemberClass::GPCReflexive, MemberClass::GPC,
                                   MemberClass::GIC};
  if (!o.cls.empty()) {
    auto k = parse_class(o.cls);
    if (!k) throw InputError(0, "unknown class '" + o.cls + "'");
    classes = {*k};
  }
  for (MemberClass k : classes) {
    Membership mb = class_membership(m, c, k, o.bound, o.seed);
    std::string l = std::string(class_name(k)) + '\t' + answer_name(mb.answer);
    if (!mb.witness.empty()) l += '\t' + mb.witness;
    pr.line(l);
    if (mb.answer == Answer::Inconclusive) pr.note(Status::Inconclusive, class_name(k));
  }
  GDimReport g = gorenstein_pd(m, o.c.empty() ? nullptr : &c, o.bound, o.seed);
  pr.line(std::string(o.c.empty() ? "GP-pd" : "G(P_C)-pd") + '\t' + g.str() +
          (g.witness.empty() ? "" : '\t' + g.witness));
  if (g.status == GStatus::Exceeded) pr.note(Status::Inconclusive, "G-dimension");
  return pr.finish();
}

template <class F>
int cmd_resolve(Session<F>& s, const Options& o, Printer& pr) {
  Module<F> m = s.module(require(o.m, "--module"));
  std::optional<Module<F>> c = s.optional(o.c);
  Index unit = c ? c->dim : s.ring()->dim();
  if (o.resolution == "tate") {
    Range r = parse_range(o.range, {-4, 4});
    TateResolution<F> tr = tate_resolution(m, ptr(c), o.bound, o.split, o.iso_degree, o.seed);
    pr.line("# G-dimension " + tr.gdim.str() + ", comparison iso from degree " + std::to_string(tr.iso_degree));
    for (Index n = r.from; n <= r.to; ++n) pr.table(n, tr.t.dim(n) / unit);
    Verdict v = validate_tate(tr);
    pr.check({"Tate resolution", v.ok ? Status::Ok : Status::Fail, v.detail});
    return pr.finish();
  }
  Resolution<F> res;
  if (o.resolution == "free")
    res = minimal_free_resolution(m, o.bound, o.seed);
  else if (o.resolution == "pc")
    res = c ? proper_pc_resolution(m, *c, o.bound, o.seed) : minimal_free_resolution(m, o.bound, o.seed);
  else
    throw InputError(0, "unknown resolution '" + o.resolution + "' (free, pc, tate)");
  for (Index n = 0; n <= res.length(); ++n) pr.table(n, res.rank(n));
  ExactnessReport ex = check_exactness(augmented(res));
  pr.check({"resolves M", ex.exact ? Status::Ok : Status::Fail, ex.detail});
  if (res.finite())
    pr.line("# finite, length " + std::to_string(res.length()));
  else if (res.periodic())
    pr.line("# periodic from syzygy " + std::to_string(res.period_start) + " with period " +
            std::to_string(res.period));
  else
    pr.note(Status::Inconclusive, "resolution");
  return pr.finish();
}

template <class F>
int cmd_ext(Session<F>& s, const Options& o, Printer& pr) {
  auto kind = parse_kind(o.kind);
  if (!kind) throw InputError(0, "unknown kind '" + o.kind + "'");
  Module<F> m = s.module(require(o.m, "--m")), n = s.module(require(o.n, "--n"));
  std::optional<Module<F>> c = s.optional(o.c);
  if (o.window < 0) throw InputError(0, "--window must be nonnegative");
  Range r = parse_range(o.range, {0, 4});
  bool tate = *kind == ExtKind::TatePC || *kind == ExtKind::TateIC;
  Range w = tate ? Range{r.from - o.window, r.to + o.window} : r;
  CohomologyTable t = relative_ext(m, n, ptr(c), *kind, w.from, w.to, tate_options(o));
  for (Index k = r.from; k <= r.to; ++k) pr.table(k, t.dim(k));
  if (r.from <= 0 && r.to >= 0 && *kind != ExtKind::TatePC && *kind != ExtKind::TateIC) {
    Index h = hom_space(m, n).dim();
    pr.check({"degree 0 is Hom", t.dim(0) == h ? Status::Ok : Status::Fail, std::to_string(h)});
  }
  return pr.finish();
}

template <class F>
int cmd_les(Session<F>& s, const Options& o, Printer& pr) {
  Module<F> m = s.module(require(o.m, "--m")), n = s.module(require(o.n, "--n"));
  std::optional<Module<F>> c = s.optional(o.c);
  LesReport les;
  if (o.variable.empty()) {
    if (o.side != "P" && o.side != "I") throw InputError(0, "--side expects P or I");
    les = am_les(m, n, ptr(c), o.side == "P" ? Side::P : Side::I, tate_options(o), o.tail);
    pr.line("# d = " + std::to_string(les.d));
  } else {
    if (o.variable != "first" && o.variable != "second") throw InputError(0, "--variable expects first or second");
    Range r = parse_range(o.range, {-3, 3});
    // 0 -> M -> K -> M' -> 0 with K in W and M' the next cosyzygy.
    Hull<F> h = wx_hull(m, ptr(c), o.bound, o.seed);
    les = tate_les(h.into, h.onto, m, h.k, h.cosyzygy, n, ptr(c),
                   o.variable == "first" ? Variable::First : Variable::Second, r.from, r.to, tate_options(o));
  }
  for (std::size_t j = 0; j < les.terms.size(); ++j) {
    pr.line(les.terms[j] + '\t' + std::to_string(les.dims[j]));
    if (j < les.maps.size() && j < les.ranks.size())
      pr.line("  " + les.maps[j] + "\trank " + std::to_string(les.ranks[j]));
  }
  pr.report(les.report);
  return pr.finish();
}

template <class F>
int cmd_balance(Session<F>& s, const Options& o, Printer& pr) {
  Module<F> m = s.module(require(o.m, "--m")), n = s.module(require(o.n, "--n"));
  Module<F> b = s.module(require(o.b, "--b")), c = s.module(require(o.c, "--c"));
  Range r = parse_range(o.range, {-4, 4});
  BalanceReport br = balance_check(m, n, b, c, r.from, r.to, tate_options(o));
  if (!br.p_side.dims.empty()) {
    pr.line("# n\tP side\tI side");
    for (Index k = r.from; k <= r.to; ++k)
      pr.line(std::to_string(k) + '\t' + std::to_string(br.p_side.dim(k)) + '\t' + std::to_string(br.i_side.dim(k)));
  }
  pr.report(br.report);
  return pr.finish();
}

template <class F>
int cmd_dualize(Session<F>& s, const Options& o, Printer& pr) {
  Module<F> m = s.module(require(o.m, "--module")), c = s.module(require(o.c, "--c"));
  DualityReport d = duality_bridge(m, c, o.bound, o.seed);
  pr.line("G(P_C)-pd\t" + d.gpc_pd.str());
  pr.line("GP_C-pd\t" + d.gpc_refl_pd.str());
  pr.line("GP-pd(Hom(C, M))\t" + d.gp_hom_pd.str());
  pr.report(d.report);
  return pr.finish();
}

template <class F>
int dispatch(AlgebraPtr<F> ring, const std::string& ring_name, const Options& o, Printer& pr) {
  Session<F> s(std::move(ring), ring_name);
  if (o.command == "semidualizing") return cmd_semidualizing(s, o, pr);
  if (o.command == "classify") return cmd_classify(s, o, pr);
  if (o.command == "resolve") return cmd_resolve(s, o, pr);
  if (o.command == "ext") return cmd_ext(s, o, pr);
  if (o.command == "les") return cmd_les(s, o, pr);
  if (o.command == "balance") return cmd_balance(s, o, pr);
  if (o.command == "dualize") return cmd_dualize(s, o, pr);
  throw InputError(0, "unknown command " + o.command);
}

// Every module argument names its algebra; the algebra file sits next to it.
int run_on_modules(const Options& o, Printer& pr) {
  std::string first;
  for (const std::string* p : {&o.m, &o.n, &o.c, &o.b})
    if (!p->empty()) {
      first = *p;
      break;
    }
  if (first.empty()) throw InputError(0, "no module file given");
  std::string text = load(first);
  std::string alg_path = algebra_path_for(first, text);
  std::string alg_text = load(alg_path);
  std::string name = peek_module_ring(text);
  if (peek_field(alg_text).rational()) return dispatch(parse_algebra<Rational>(alg_text), name, o, pr);
  return dispatch(parse_algebra<Zp>(alg_text), name, o, pr);
}

// First word of the first line that is not blank or a comment.
std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string w;
    if ((words >> w) && w[0] != '#') return w;
  }
  return {};
}

template <class F>
void check_file(const std::string& path, const std::string& text, Printer& pr) {
  if (first_keyword(text) == "module") {
    std::string alg_text = load(algebra_path_for(path, text));
    auto ring = parse_algebra<F>(alg_text);
    Module<F> m = parse_module<F>(text, ring);
    pr.check({"module " + m.name + " over " + ring->name, Status::Ok, "dim " + std::to_string(m.dim)});
    return;
  }
  auto a = parse_algebra<F>(text);
  pr.check({"algebra " + a->name, Status::Ok, "dim " + std::to_string(a->dim()) + " over " + a->field.name()});
}

int run_check(const Options& o, Printer& pr) {
  if (o.files.empty()) throw InputError(0, "check needs at least one file");
  for (const std::string& path : o.files) {
    std::string text = load(path);
    bool is_module = first_keyword(text) == "module";
    std::string alg_text = is_module ? load(algebra_path_for(path, text)) : text;
    try {
      if (peek_field(alg_text).rational())
        check_file<Rational>(path, text, pr);
      else
        check_file<Zp>(path, text, pr);
    } catch (const ValidationFailure& e) {
      pr.check({std::filesystem::path(path).filename().string(), Status::Fail, e.what()});
    } catch (InputError& e) {
      throw InputError(0, path + ": " + e.what());
    }
  }
  return pr.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative and Tate cohomology over finite-dimensional local algebras", "tatecoh"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "resolution length budget")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
  };
  auto tate_flags = [&](CLI::App* sub) {
    sub->add_flag("--split", o.split, "use a split Tate resolution");
    sub->add_option("--iso-degree", o.iso_degree, "degree from which T -> W is an isomorphism");
  };

  CLI::App* check = app.add_subcommand("check", "validate algebra and module files");
  check->add_option("files", o.files, "algebra or module files")->required();

  CLI::App* sd = app.add_subcommand("semidualizing", "certify a semidualizing module");
  sd->add_option("--c", o.c, "module file")->required();
  common(sd);

  CLI::App* cl = app.add_subcommand("classify", "class memberships and Gorenstein dimension");
  cl->add_option("--module,--m", o.m, "module file")->required();
  cl->add_option("--c", o.c, "semidualizing module (default R)");
  cl->add_option("--class", o.cls, "one class only");
  common(cl);

  CLI::App* rs = app.add_subcommand("resolve", "ranks of a free, P_C or Tate resolution");
  rs->add_option("--module,--m", o.m, "module file")->required();
  rs->add_option("--c", o.c, "semidualizing module");
  rs->add_option("--kind", o.resolution, "free, pc or tate")->capture_default_str();
  rs->add_option("--range", o.range, "degrees a:b (tate)");
  common(rs);
  tate_flags(rs);

  CLI::App* ex = app.add_subcommand("ext", "absolute, relative and Tate Ext");
  ex->add_option("--kind", o.kind, "abs, relPC, relGPC, relIC, relGIC, tatePC, tateIC")->capture_default_str();
  ex->add_option("--m", o.m, "first argument")->required();
  ex->add_option("--n", o.n, "second argument")->required();
  ex->add_option("--c", o.c, "semidualizing module (default R)");
  ex->add_option("--range", o.range, "degrees a:b");
  ex->add_option("--window", o.window, "extra degrees computed on each side (Tate kinds)")->capture_default_str();
  common(ex);
  tate_flags(ex);

  CLI::App* ls = app.add_subcommand("les", "long exact sequences");
  ls->add_option("--m", o.m, "first argument")->required();
  ls->add_option("--n", o.n, "second argument")->required();
  ls->add_option("--c", o.c, "semidualizing module (default R)");
  ls->add_option("--side", o.side, "P or I")->capture_default_str();
  ls->add_option("--tail", o.tail, "degrees above d checked for the comparison isomorphism")->capture_default_str();
  ls->add_option("--variable", o.variable,
                 "first or second: Tate sequence of the hull 0 -> M -> K -> M' -> 0 against --n");
  ls->add_option("--range", o.range, "degrees a:b (with --variable)");
  common(ls);
  tate_flags(ls);

  CLI::App* bl = app.add_subcommand("balance", "compare P_B and I_B+ Tate cohomology");
  bl->add_option("--m", o.m, "first argument")->required();
  bl->add_option("--n", o.n, "second argument")->required();
  bl->add_option("--b", o.b, "semidualizing module B")->required();
  bl->add_option("--c", o.c, "semidualizing module C")->required();
  bl->add_option("--range", o.range, "degrees a:b");
  common(bl);
  tate_flags(bl);

  CLI::App* du = app.add_subcommand("dualize", "cross-check the Gorenstein dimensions attached to C");
  du->add_option("--module,--m", o.m, "module file")->required();
  du->add_option("--c", o.c, "semidualizing module")->required();
  common(du);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.bound < 0) {
    err << "error: --bound must be nonnegative\n";
    return input_error;
  }

  Printer pr(out, o.bound);
  try {
    if (o.command == "check") return run_check(o, pr);
    return run_on_modules(o, pr);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ValidationFailure& e) {
    out << "FAIL " << e.what() << '\n';
    return verification_failure;
  } catch (const NoTateResolution& e) {
    if (e.report.status == GStatus::Exceeded) {
      out << "INCONCLUSIVE " << o.bound << '\n';
      err << e.what() << '\n';
      return inconclusive;
    }
    out << "FAIL " << e.what() << '\n';
    return verification_failure;
  } catch (const PreconditionFailure& e) {
    out << "FAIL " << e.what() << '\n';
    return verification_failure;
  } catch (const BoundExceeded& e) {
    out << "INCONCLUSIVE " << o.bound << '\n';
    err << e.what() << '\n';
    return inconclusive;
  }
}

}  // namespace tate::cli

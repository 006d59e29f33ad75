#include "tate/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace tate {

InputError::InputError(int l, const std::string& what)
    : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + what : what), line(l) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
  std::string rest;  // text after the keyword
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (t.empty()) continue;
    Line l;
    l.number = n;
    std::istringstream ws(t);
    std::string w;
    while (ws >> w) l.words.push_back(w);
    l.rest = trim(t.substr(l.words[0].size()));
    out.push_back(std::move(l));
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

template <class F>
F integer_scalar(const FieldDescriptor& fd, const std::string& digits, int line);

template <>
Zp integer_scalar<Zp>(const FieldDescriptor& fd, const std::string& digits, int) {
  std::uint64_t v = 0;
  for (char c : digits) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % fd.p;
  return Zp::in(fd.p, static_cast<long long>(v));
}

template <>
Rational integer_scalar<Rational>(const FieldDescriptor&, const std::string& digits, int) {
  return Rational(boost::multiprecision::cpp_int(digits));
}

template <class F>
F parse_coefficient(const FieldDescriptor& fd, const std::string& s, int line) {
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [&](const std::string& d) {
    if (d.empty()) throw InputError(line, "bad coefficient '" + s + "'");
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError(line, "bad coefficient '" + s + "'");
  };
  digits(num);
  digits(den);
  F n = integer_scalar<F>(fd, num, line);
  F d = integer_scalar<F>(fd, den, line);
  if (is_zero(d)) throw InputError(line, "coefficient '" + s + "' has a zero denominator in " + fd.name());
  return n / d;
}

// Parses `c*name + c*name - name ...` or `0` into coordinates over `names`.
template <class F>
Vec<F> parse_sum(const FieldDescriptor& fd, const std::string& text, const std::vector<std::string>& names, int line) {
  Vec<F> v = Vec<F>::Constant(static_cast<Index>(names.size()), ScalarOps<F>::make(fd, 0));
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError(line, "missing right-hand side");
  if (s == "0") return v;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw InputError(line, "expected '+' or '-' in '" + text + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw InputError(line, "empty term in '" + text + "'");
    F coef = ScalarOps<F>::make(fd, 1);
    std::string name = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coef = parse_coefficient<F>(fd, term.substr(0, star), line);
      name = term.substr(star + 1);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError(line, "unknown basis name '" + name + "'");
    if (neg) coef = -coef;
    v(it - names.begin()) += coef;
  }
  return v;
}

std::vector<std::string> declared_basis(const Line& l, const char* what) {
  std::vector<std::string> names(l.words.begin() + 1, l.words.end());
  if (names.empty()) throw InputError(l.number, std::string("empty ") + what + " basis");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw InputError(l.number, "bad basis name '" + n + "'");
    if (!seen.insert(n).second) throw InputError(l.number, "duplicate basis name '" + n + "'");
  }
  return names;
}

template <class F>
std::string format_sum(const Vec<F>& v, const std::vector<std::string>& names) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    std::string c = ScalarOps<F>::str(v(i));
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += (c == "1" ? "" : c + "*") + names[i];
  }
  return out.empty() ? "0" : out;
}

void expect_once(std::map<std::string, int>& seen, const Line& l) {
  auto [it, fresh] = seen.emplace(l.words[0], l.number);
  if (!fresh)
    throw InputError(l.number, "duplicate '" + l.words[0] + "' declaration (first on line " +
                                   std::to_string(it->second) + ")");
}

}  // namespace

FieldDescriptor peek_field(const std::string& text) {
  for (const Line& l : lines_of(text))
    if (l.words[0] == "field") {
      if (l.words.size() != 2) throw InputError(l.number, "expected 'field Q' or 'field F<p>'");
      try {
        return parse_field(l.words[1]);
      } catch (const std::invalid_argument& e) {
        throw InputError(l.number, e.what());
      }
    }
  throw InputError(0, "missing 'field' declaration");
}

std::string peek_module_ring(const std::string& text) {
  for (const Line& l : lines_of(text))
    if (l.words[0] == "module") {
      if (l.words.size() != 4 || l.words[2] != "over") throw InputError(l.number, "expected 'module <name> over <algebra>'");
      return l.words[3];
    }
  throw InputError(0, "missing 'module' declaration");
}

template <class F>
AlgebraPtr<F> parse_algebra(const std::string& text) {
  auto a = std::make_shared<Algebra<F>>();
  a->field = peek_field(text);
  std::map<std::string, int> seen;
  std::string unit;
  int unit_line = 0;
  std::map<std::pair<Index, Index>, int> pairs;
  std::vector<std::pair<Line, std::string>> mults;
  for (const Line& l : lines_of(text)) {
    const std::string& kw = l.words[0];
    if (kw == "algebra") {
      expect_once(seen, l);
      if (l.words.size() != 2 || !is_identifier(l.words[1])) throw InputError(l.number, "expected 'algebra <name>'");
      a->name = l.words[1];
    } else if (kw == "field") {
      expect_once(seen, l);
    } else if (kw == "basis") {
      expect_once(seen, l);
      a->basis = declared_basis(l, "algebra");
    } else if (kw == "unit") {
      expect_once(seen, l);
      if (l.words.size() != 2) throw InputError(l.number, "expected 'unit <name>'");
      unit = l.words[1];
      unit_line = l.number;
    } else if (kw == "mult") {
      mults.emplace_back(l, l.rest);
    } else {
      throw InputError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  for (const char* k : {"algebra", "field", "basis", "unit"})
    if (!seen.count(k)) throw InputError(0, std::string("missing '") + k + "' declaration");
  a->unit = a->index_of(unit);
  if (a->unit < 0) throw InputError(unit_line, "unit '" + unit + "' is not a basis name");
  Index n = a->dim();
  const FieldDescriptor& fd = a->field;
  a->mult.assign(static_cast<std::size_t>(n), zeros<F>(fd, n, n));
  for (Index i = 0; i < n; ++i) {
    a->mult[i].col(a->unit) = identity<F>(fd, n).col(i);
    a->mult[a->unit].col(i) = identity<F>(fd, n).col(i);
  }
  for (const auto& [l, rest] : mults) {
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) throw InputError(l.number, "expected 'mult a*b = <sum>'");
    std::string lhs;
    for (char c : rest.substr(0, eq))
      if (!std::isspace(static_cast<unsigned char>(c))) lhs += c;
    std::size_t star = lhs.find('*');
    if (star == std::string::npos) throw InputError(l.number, "expected 'a*b' on the left of '='");
    std::string x = lhs.substr(0, star), y = lhs.substr(star + 1);
    Index i = a->index_of(x), j = a->index_of(y);
    if (i < 0) throw InputError(l.number, "unknown basis name '" + x + "'");
    if (j < 0) throw InputError(l.number, "unknown basis name '" + y + "'");
    if (i == a->unit || j == a->unit) throw InputError(l.number, "products with the unit are implied");
    auto key = std::minmax(i, j);
    auto [it, fresh] = pairs.emplace(key, l.number);
    if (!fresh)
      throw InputError(l.number, "duplicate product " + x + "*" + y + " (first on line " + std::to_string(it->second) + ")");
    Vec<F> v = parse_sum<F>(fd, rest.substr(eq + 1), a->basis, l.number);
    a->mult[i].col(j) = v;
    a->mult[j].col(i) = v;
  }
  for (Index i : a->nonunit())
    for (Index j : a->nonunit())
      if (i <= j && !pairs.count({i, j}))
        throw InputError(0, "missing product 'mult " + a->basis[i] + "*" + a->basis[j] + "'");
  a->finalize();
  Verdict v = validate_algebra(*a);
  if (!v.ok) throw ValidationFailure("algebra " + a->name + ": " + v.detail);
  return a;
}

template <class F>
Module<F> parse_module(const std::string& text, const AlgebraPtr<F>& ring) {
  Module<F> m;
  m.ring = ring;
  std::map<std::string, int> seen;
  std::vector<Line> acts;
  for (const Line& l : lines_of(text)) {
    const std::string& kw = l.words[0];
    if (kw == "module") {
      expect_once(seen, l);
      if (l.words.size() != 4 || l.words[2] != "over" || !is_identifier(l.words[1]))
        throw InputError(l.number, "expected 'module <name> over <algebra>'");
      if (l.words[3] != ring->name)
        throw InputError(l.number, "module is over '" + l.words[3] + "' but the algebra is '" + ring->name + "'");
      m.name = l.words[1];
    } else if (kw == "basis") {
      expect_once(seen, l);
      m.basis = declared_basis(l, "module");
    } else if (kw == "act") {
      acts.push_back(l);
    } else {
      throw InputError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  for (const char* k : {"module", "basis"})
    if (!seen.count(k)) throw InputError(0, std::string("missing '") + k + "' declaration");
  const FieldDescriptor& fd = ring->field;
  m.dim = static_cast<Index>(m.basis.size());
  m.act.assign(static_cast<std::size_t>(ring->dim()), zeros<F>(fd, m.dim, m.dim));
  m.act[ring->unit] = identity<F>(fd, m.dim);
  std::map<std::pair<Index, Index>, int> given;
  for (const Line& l : acts) {
    std::size_t colon = l.rest.find(':');
    std::size_t arrow = l.rest.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw InputError(l.number, "expected 'act <algebra basis>: <module basis> -> <sum>'");
    std::string b = trim(l.rest.substr(0, colon));
    std::string x = trim(l.rest.substr(colon + 1, arrow - colon - 1));
    Index bi = ring->index_of(b);
    if (bi < 0) throw InputError(l.number, "unknown algebra basis name '" + b + "'");
    if (bi == ring->unit) throw InputError(l.number, "the unit acts as the identity and may not be given");
    auto xi = std::find(m.basis.begin(), m.basis.end(), x);
    if (xi == m.basis.end()) throw InputError(l.number, "unknown module basis name '" + x + "'");
    Index col = xi - m.basis.begin();
    auto [it, fresh] = given.emplace(std::make_pair(bi, col), l.number);
    if (!fresh)
      throw InputError(l.number, "duplicate action " + b + " on " + x + " (first on line " + std::to_string(it->second) + ")");
    m.act[bi].col(col) = parse_sum<F>(fd, l.rest.substr(arrow + 2), m.basis, l.number);
  }
  Verdict v = validate_module(m);
  if (!v.ok) throw ValidationFailure("module " + m.name + ": " + v.detail);
  // Recognize the standard free module so the fast paths apply.
  if (m.dim % ring->dim() == 0 && m.dim > 0) {
    Module<F> f = free_module(ring, m.dim / ring->dim());
    if (f.act == m.act) m.free_rank = f.free_rank;
  }
  return m;
}

template <class F>
std::string serialize_algebra(const Algebra<F>& a) {
  std::ostringstream out;
  out << "algebra " << a.name << "\n";
  out << "field " << a.field.name() << "\n";
  out << "basis";
  for (const auto& b : a.basis) out << " " << b;
  out << "\nunit " << a.basis[a.unit] << "\n";
  std::vector<Index> nu = a.nonunit();
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = i; j < nu.size(); ++j) {
      Vec<F> v = a.mult[nu[i]].col(nu[j]);
      out << "mult " << a.basis[nu[i]] << "*" << a.basis[nu[j]] << " = " << format_sum<F>(v, a.basis) << "\n";
    }
  return out.str();
}

template <class F>
std::string serialize_module(const Module<F>& m) {
  const Algebra<F>& r = *m.ring;
  std::vector<std::string> names = m.basis;
  if (static_cast<Index>(names.size()) != m.dim) {
    names.clear();
    for (Index i = 0; i < m.dim; ++i) names.push_back("m" + std::to_string(i));
  }
  std::ostringstream out;
  out << "module " << (m.name.empty() ? "M" : m.name) << " over " << r.name << "\n";
  out << "basis";
  for (const auto& b : names) out << " " << b;
  out << "\n";
  for (Index b : r.nonunit())
    for (Index j = 0; j < m.dim; ++j) {
      Vec<F> v = m.act[b].col(j);
      out << "act " << r.basis[b] << ": " << names[j] << " -> " << format_sum<F>(v, names) << "\n";
    }
  return out.str();
}

#define TATE_INSTANTIATE(F)                                                   \
  template AlgebraPtr<F> parse_algebra(const std::string&);                   \
  template Module<F> parse_module(const std::string&, const AlgebraPtr<F>&);  \
  template std::string serialize_algebra(const Algebra<F>&);                  \
  template std::string serialize_module(const Module<F>&);

TATE_INSTANTIATE(Zp)
TATE_INSTANTIATE(Rational)

}  // namespace tate

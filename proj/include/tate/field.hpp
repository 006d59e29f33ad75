#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Boost 1.74 probes Eigen matrices for a byte-container const_iterator, which
// Eigen 3.4 declares as void; that is a hard error under C++20.
namespace tate::detail {
template <class D>
void eigen_probe(const Eigen::EigenBase<D>&);
}  // namespace tate::detail

namespace boost::multiprecision::detail {
template <class C>
  requires requires(const C& c) { tate::detail::eigen_probe(c); }
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace tate {

// Element of F_p for a prime p < 2^32 chosen at runtime.  A zero modulus marks
// an integer literal (Eigen builds Scalar(0) and Scalar(1) without a field);
// literals take the modulus of whatever they are combined with.
class Zp {
 public:
  Zp() = default;
  Zp(int v) : v_(static_cast<std::uint32_t>(v)) {}

  static Zp in(std::uint32_t p, long long v) {
    Zp z;
    z.p_ = p;
    z.v_ = static_cast<std::uint32_t>(reduce(v, p));
    return z;
  }

  std::uint32_t modulus() const { return p_; }
  std::int64_t raw() const { return p_ ? static_cast<std::int64_t>(v_) : literal(); }
  std::uint64_t value_mod(std::uint32_t p) const {
    return p_ == p ? v_ : static_cast<std::uint64_t>(reduce(literal(), p));
  }
  bool is_zero() const { return v_ == 0; }

  Zp operator-() const {
    if (!p_) return Zp(-literal());
    return from(v_ ? p_ - v_ : 0, p_);
  }
  friend Zp operator+(const Zp& a, const Zp& b) {
    std::uint32_t q = a.p_ ? a.p_ : b.p_;
    if (!q) return Zp(a.literal() + b.literal());
    std::uint64_t s = a.value_mod(q) + b.value_mod(q);
    return from(s >= q ? s - q : s, q);
  }
  friend Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }
  friend Zp operator*(const Zp& a, const Zp& b) {
    std::uint32_t q = a.p_ ? a.p_ : b.p_;
    if (!q) return Zp(a.literal() * b.literal());
    return from(a.value_mod(q) * b.value_mod(q) % q, q);
  }
  friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }

  Zp inverse() const {
    if (!p_) {
      if (literal() == 1 || literal() == -1) return *this;
      throw std::domain_error("inverse of an integer literal outside a field");
    }
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    std::int64_t t = 0, nt = 1, r = p_, nr = static_cast<std::int64_t>(v_);
    while (nr) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return in(p_, t);
  }

  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }

  friend bool operator==(const Zp& a, const Zp& b) {
    std::uint32_t q = a.p_ ? a.p_ : b.p_;
    if (!q) return a.v_ == b.v_;
    return a.value_mod(q) == b.value_mod(q);
  }
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.raw(); }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    if (!p) return v;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  static Zp from(std::uint64_t v, std::uint32_t p) {
    Zp z;
    z.v_ = static_cast<std::uint32_t>(v);
    z.p_ = p;
    return z;
  }
  std::int32_t literal() const { return static_cast<std::int32_t>(v_); }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

struct FieldDescriptor {
  std::uint32_t p = 0;  // 0 means the rationals

  bool rational() const { return p == 0; }
  std::string name() const { return p ? "F" + std::to_string(p) : "Q"; }
  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) { return a.p == b.p; }
};

bool is_prime(std::uint64_t n);
FieldDescriptor parse_field(const std::string& s);

template <class F>
struct ScalarOps;

template <>
struct ScalarOps<Zp> {
  static Zp make(const FieldDescriptor& f, long long v) { return Zp::in(f.p, v); }
  static Zp make(const FieldDescriptor& f, long long num, long long den) {
    return make(f, num) / make(f, den);
  }
  static bool is_zero(const Zp& a) { return a.is_zero(); }
  static std::string str(const Zp& a) { return std::to_string(a.raw()); }
};

template <>
struct ScalarOps<Rational> {
  static Rational make(const FieldDescriptor&, long long v) { return Rational(v); }
  static Rational make(const FieldDescriptor&, long long num, long long den) {
    return Rational(num) / Rational(den);
  }
  static bool is_zero(const Rational& a) { return a == 0; }
  static std::string str(const Rational& a) { return a.str(); }
};

template <class F>
bool is_zero(const F& a) {
  return ScalarOps<F>::is_zero(a);
}

}  // namespace tate

namespace Eigen {
template <>
struct NumTraits<tate::Zp> : GenericNumTraits<tate::Zp> {
  typedef tate::Zp Real;
  typedef tate::Zp NonInteger;
  typedef tate::Zp Nested;
  typedef tate::Zp Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#ifndef LPA_RING_HPP
#define LPA_RING_HPP

// Coefficient rings. A ring is a small policy object; elements are plain
// values of `value_type`. Integers and rationals are stateless, the integers
// modulo n carry their modulus.

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpa/errors.hpp"

namespace lpa {

template <class R>
concept Ring = std::equality_comparable<R> && requires(const R r, const typename R::value_type a,
                                                       std::int64_t n, const std::string s) {
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_integer(n) } -> std::same_as<typename R::value_type>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.sub(a, a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, a) } -> std::same_as<bool>;
  { r.format(a) } -> std::same_as<std::string>;
  { r.parse(s) } -> std::same_as<typename R::value_type>;
  { r.name() } -> std::same_as<std::string>;
};

class IntegerRing {
 public:
  using value_type = boost::multiprecision::cpp_int;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(std::int64_t n) const { return n; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& s) const {
    try {
      return value_type(s);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + s + "'");
    }
  }
  std::string name() const { return "z"; }

  bool operator==(const IntegerRing&) const = default;
};

class RationalRing {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(std::int64_t n) const { return n; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type div(const value_type& a, const value_type& b) const {
    if (b.is_zero()) throw ContractError("division by zero");
    return a / b;
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& s) const {
    try {
      return value_type(s);
    } catch (const std::exception&) {
      throw InputError("not a rational: '" + s + "'");
    }
  }
  std::string name() const { return "q"; }

  bool operator==(const RationalRing&) const = default;
};

class ModularRing {
 public:
  using value_type = std::uint64_t;

  explicit ModularRing(std::uint64_t modulus = 2) : modulus_(modulus) {
    if (modulus < 2) throw InputError("modulus must be at least 2");
  }

  std::uint64_t modulus() const { return modulus_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(std::int64_t n) const {
    const auto m = static_cast<__int128>(modulus_);
    __int128 r = static_cast<__int128>(n) % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) + b) % modulus_);
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % modulus_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string format(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& s) const {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw InputError("trailing characters");
      return from_integer(v);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + s + "'");
    }
  }
  std::string name() const { return "zmod:" + std::to_string(modulus_); }

  bool operator==(const ModularRing&) const = default;

 private:
  std::uint64_t modulus_;
};

static_assert(Ring<IntegerRing>);
static_assert(Ring<RationalRing>);
static_assert(Ring<ModularRing>);

}  // namespace lpa

#endif  // LPA_RING_HPP

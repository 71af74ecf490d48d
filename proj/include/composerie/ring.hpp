#pragma once

// Commutative rings with identity used as the codomain of every count.
//
// A ring is described by a small descriptor object (IntegerRing, ModularRing)
// that knows how to produce 0, 1 and the image of an integer. Elements carry
// their own +, -, * and ==. Only division-free operations are exposed.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace composerie {

// Expression templates are off so `auto` in generic code always holds a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Residue class modulo a runtime modulus. The stored value is always
/// canonical, 0 <= value < modulus. Mixing moduli is a logic error and throws.
class ModInt {
public:
  ModInt() = default;

  ModInt(std::uint64_t value, std::uint64_t modulus)
      : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    check_same(a, b);
    std::uint64_t s = a.value_ + b.value_;
    // Both operands are < modulus <= 2^63, so the sum cannot wrap.
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }

  friend ModInt operator-(const ModInt& a) {
    return raw(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
  }

  friend ModInt operator-(const ModInt& a, const ModInt& b) { return a + (-b); }

  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    check_same(a, b);
    auto p = static_cast<unsigned __int128>(a.value_) * b.value_;
    return raw(static_cast<std::uint64_t>(p % a.modulus_), a.modulus_);
  }

  ModInt& operator+=(const ModInt& b) { return *this = *this + b; }
  ModInt& operator*=(const ModInt& b) { return *this = *this * b; }

  friend bool operator==(const ModInt&, const ModInt&) = default;

private:
  static ModInt raw(std::uint64_t v, std::uint64_t m) {
    ModInt r;
    r.value_ = v;
    r.modulus_ = m;
    return r;
  }

  static void check_same(const ModInt& a, const ModInt& b) {
    if (a.modulus_ != b.modulus_) {
      throw std::invalid_argument("ModInt: operands live in different rings (mod " +
                                  std::to_string(a.modulus_) + " vs mod " +
                                  std::to_string(b.modulus_) + ")");
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 1;
};

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const ModInt& x) { return std::to_string(x.value()); }

/// The ring of integers, arbitrary precision.
struct IntegerRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const BigInt& x) const { return x; }
  std::string name() const { return "int"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// Z/pZ for 2 <= p <= 2^63.
class ModularRing {
public:
  using value_type = ModInt;

  explicit ModularRing(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modular ring requires modulus >= 2");
    if (modulus > (std::uint64_t{1} << 63)) {
      throw std::invalid_argument("modular ring requires modulus <= 2^63");
    }
  }

  std::uint64_t modulus() const noexcept { return modulus_; }

  value_type zero() const { return {0, modulus_}; }
  value_type one() const { return {1, modulus_}; }

  value_type from_integer(const BigInt& x) const {
    BigInt r = x % modulus_;
    if (r < 0) r += modulus_;
    return {r.convert_to<std::uint64_t>(), modulus_};
  }

  std::string name() const { return "mod:" + std::to_string(modulus_); }

  friend bool operator==(const ModularRing&, const ModularRing&) = default;

private:
  std::uint64_t modulus_;
};

template <typename R>
concept CommutativeRing =
    std::equality_comparable<R> &&
    requires(const R& ring, const typename R::value_type& a, const BigInt& z) {
      { ring.zero() } -> std::same_as<typename R::value_type>;
      { ring.one() } -> std::same_as<typename R::value_type>;
      { ring.from_integer(z) } -> std::same_as<typename R::value_type>;
      { ring.name() } -> std::convertible_to<std::string>;
      { a + a } -> std::same_as<typename R::value_type>;
      { a * a } -> std::same_as<typename R::value_type>;
      { -a } -> std::same_as<typename R::value_type>;
      { a == a } -> std::convertible_to<bool>;
    };

static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<ModularRing>);

/// Canonical reduction Z -> Z/pZ. This is a ring homomorphism.
inline ModInt ring_hom_mod(const BigInt& x, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("ring_hom_mod: modulus must be >= 2");
  return ModularRing(p).from_integer(x);
}

}  // namespace composerie

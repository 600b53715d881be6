#pragma once

// Sparse polynomials in the four statistic markers t (cycles), u (fixed
// points), x (excedances) and y (inversions) with exact integer
// coefficients. The size variable z is never stored here; series keep one
// polynomial per power of z.
//
// The coefficient type is a template parameter. The std::int64_t instance
// detects overflow on every operation and throws OverflowError; BigInt is
// unbounded.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "permcycle/errors.hpp"

namespace permcycle {

using BigInt = boost::multiprecision::cpp_int;

enum class Marker : std::uint8_t { t = 0, u = 1, x = 2, y = 3 };

inline constexpr std::array<Marker, 4> all_markers{Marker::t, Marker::u, Marker::x, Marker::y};

inline char marker_name(Marker m) {
  constexpr char names[] = {'t', 'u', 'x', 'y'};
  return names[static_cast<int>(m)];
}

/// Subset of the four markers.
class MarkerSet {
 public:
  constexpr MarkerSet() = default;
  constexpr MarkerSet(std::initializer_list<Marker> markers) {
    for (Marker m : markers) bits_ |= bit(m);
  }
  static constexpr MarkerSet all() { return MarkerSet{Marker::t, Marker::u, Marker::x, Marker::y}; }

  constexpr bool has(Marker m) const { return (bits_ & bit(m)) != 0; }
  constexpr MarkerSet complement() const {
    MarkerSet out;
    out.bits_ = static_cast<std::uint8_t>(~bits_ & 0x0f);
    return out;
  }
  constexpr MarkerSet with(Marker m) const {
    MarkerSet out = *this;
    out.bits_ |= bit(m);
    return out;
  }
  constexpr bool empty() const { return bits_ == 0; }

  friend constexpr bool operator==(MarkerSet, MarkerSet) = default;

 private:
  static constexpr std::uint8_t bit(Marker m) { return static_cast<std::uint8_t>(1u << static_cast<int>(m)); }
  std::uint8_t bits_ = 0;
};

/// Exponent vector (e_t, e_u, e_x, e_y).
using Exponents = std::array<std::uint16_t, 4>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_neg(const BigInt& a) { return -a; }

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < r.size(); ++i) {
    const unsigned s = unsigned{a[i]} + unsigned{b[i]};
    if (s > std::numeric_limits<std::uint16_t>::max()) throw OverflowError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

}  // namespace detail

template <class Coeff>
class BasicMultiPoly {
 public:
  using coefficient_type = Coeff;
  using term_map = std::map<Exponents, Coeff>;

  BasicMultiPoly() = default;

  BasicMultiPoly(const Coeff& c) {  // NOLINT(google-explicit-constructor): constants promote
    add_term(Exponents{}, c);
  }

  // Integer literals would otherwise be ambiguous for BigInt coefficients.
  BasicMultiPoly(int c) : BasicMultiPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static BasicMultiPoly monomial(const Coeff& c, const Exponents& e) {
    BasicMultiPoly p;
    p.add_term(e, c);
    return p;
  }

  static BasicMultiPoly marker(Marker m, std::uint16_t power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(m)] = power;
    return monomial(Coeff(1), e);
  }

  /// Adds c * monomial(e), dropping the entry if it cancels to zero.
  void add_term(const Exponents& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  int degree_in(Marker m) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, int{e[static_cast<std::size_t>(m)]});
    return d;
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_neg(c));
    return *this;
  }

  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }

  friend BasicMultiPoly operator-(const BasicMultiPoly& a) {
    BasicMultiPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, detail::checked_neg(c));
    return r;
  }

  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    BasicMultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(detail::add_exponents(ea, eb), detail::checked_mul(ca, cb));
    return r;
  }

  BasicMultiPoly& operator*=(const BasicMultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicMultiPoly&, const BasicMultiPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const Coeff magnitude = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool constant = e == Exponents{};
      bool wrote = false;
      if (magnitude != 1 || constant) {
        os << magnitude;
        wrote = true;
      }
      for (Marker m : all_markers) {
        const auto power = e[static_cast<std::size_t>(m)];
        if (power == 0) continue;
        if (wrote) os << '*';
        os << marker_name(m);
        if (power > 1) os << '^' << power;
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  term_map terms_;
};

using MultiPoly = BasicMultiPoly<std::int64_t>;
using BigMultiPoly = BasicMultiPoly<BigInt>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicMultiPoly<Coeff>& p) {
  return os << p.to_string();
}

/// Sets every marker in `erased` to 1, summing coefficients that collide.
template <class Coeff>
BasicMultiPoly<Coeff> specialize(const BasicMultiPoly<Coeff>& p, MarkerSet erased) {
  BasicMultiPoly<Coeff> r;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    for (Marker m : all_markers)
      if (erased.has(m)) kept[static_cast<std::size_t>(m)] = 0;
    r.add_term(kept, c);
  }
  return r;
}

/// Sum of all coefficients (every marker set to 1).
template <class Coeff>
Coeff total(const BasicMultiPoly<Coeff>& p) {
  Coeff s(0);
  for (const auto& [e, c] : p.terms()) s = detail::checked_add(s, c);
  return s;
}

template <class To, class From>
BasicMultiPoly<To> convert(const BasicMultiPoly<From>& p) {
  BasicMultiPoly<To> r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, To(c));
  return r;
}

}  // namespace permcycle

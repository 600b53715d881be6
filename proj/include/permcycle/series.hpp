#pragma once

// Rational generating functions in z whose z-coefficients are polynomials in
// the statistic markers, their power-series expansion, and the two cycle
// recurrences.
//
// Built-ins (all sums over n >= 1):
//   A(t,z)          Av(312,4321) by cycles
//   B(t,x,y,z)      Av(312,4321) by cycles, excedances, inversions
//   C(t,u,z)        Av(312,4321) by cycles, fixed points
//   D(t,u,x,y,z)    involutions in Av(312,4321), all four statistics
//   F(t,z)          Av(321,4123) by cycles
//   G(t,u,x,y,z)    Av(321,4123), all four statistics
//   H(t,u,x,y,z)    involutions in Av(321,4123), all four statistics

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permcycle/errors.hpp"
#include "permcycle/multipoly.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/patterns.hpp"

namespace permcycle {

inline constexpr int default_expansion_cap = 64;

enum class GfName { A, B, C, D, F, G, H };

inline constexpr std::array<GfName, 7> all_gf_names{GfName::A, GfName::B, GfName::C, GfName::D,
                                                    GfName::F, GfName::G, GfName::H};

inline char gf_letter(GfName g) {
  constexpr char letters[] = {'A', 'B', 'C', 'D', 'F', 'G', 'H'};
  return letters[static_cast<int>(g)];
}

inline std::optional<GfName> parse_gf_name(std::string_view s) {
  for (GfName g : all_gf_names)
    if (s.size() == 1 && s[0] == gf_letter(g)) return g;
  return std::nullopt;
}

/// Markers that actually occur in the generating function.
inline MarkerSet gf_markers(GfName g) {
  switch (g) {
    case GfName::A:
    case GfName::F:
      return {Marker::t};
    case GfName::B:
      return {Marker::t, Marker::x, Marker::y};
    case GfName::C:
      return {Marker::t, Marker::u};
    default:
      return MarkerSet::all();
  }
}

/// The class a built-in counts.
inline ClassId gf_class(GfName g) {
  switch (g) {
    case GfName::F:
    case GfName::G:
    case GfName::H:
      return ClassId::class321_4123;
    default:
      return ClassId::class312_4321;
  }
}

inline bool gf_counts_involutions(GfName g) { return g == GfName::D || g == GfName::H; }

template <class Coeff>
struct BasicRationalGF {
  using poly_type = BasicMultiPoly<Coeff>;

  std::vector<poly_type> numerator;    // entry i: coefficient of z^i
  std::vector<poly_type> denominator;  // entry 0 is the constant 1

  BasicRationalGF() = default;

  /// Normalizes a -1 constant term to 1; any other constant term is
  /// rejected since expansion divides by it.
  BasicRationalGF(std::vector<poly_type> num, std::vector<poly_type> den)
      : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.empty()) throw PreconditionError("empty denominator");
    if (denominator[0] == poly_type(-1)) {
      for (auto& p : numerator) p = -p;
      for (auto& p : denominator) p = -p;
    }
    if (denominator[0] != poly_type(1)) throw PreconditionError("denominator must have constant term 1");
  }
};

template <class Coeff>
struct BasicSeriesPrefix {
  std::vector<BasicMultiPoly<Coeff>> coeffs;  // entry n: coefficient of z^n

  int max_n() const { return static_cast<int>(coeffs.size()) - 1; }
};

using RationalGF = BasicRationalGF<std::int64_t>;
using SeriesPrefix = BasicSeriesPrefix<std::int64_t>;
using BigSeriesPrefix = BasicSeriesPrefix<BigInt>;

inline RationalGF builtin_gf(GfName name) {
  const MultiPoly t = MultiPoly::marker(Marker::t);
  const MultiPoly u = MultiPoly::marker(Marker::u);
  const MultiPoly x = MultiPoly::marker(Marker::x);
  const MultiPoly y = MultiPoly::marker(Marker::y);
  const MultiPoly one(1);
  const MultiPoly zero;
  const MultiPoly xy = x * y;
  const MultiPoly y2 = y * y;
  const MultiPoly y3 = y2 * y;
  const MultiPoly y4 = y2 * y2;
  const MultiPoly x2 = x * x;

  switch (name) {
    case GfName::A:
      // tz(1-z^2) / (1 - (1+t)(z+z^2) + tz^3)
      return {{zero, t, zero, -t}, {one, -(one + t), -(one + t), t}};
    case GfName::B:
      // tz(1-x^2y^4z^2) / (1 - z(xy+t) - xy^3z^2(t+xy) - x^2y^4z^3(y-t-xy))
      return {{zero, t, zero, -(t * x2 * y4)},
              {one, -(xy + t), -(x * y3 * (t + xy)), -(x2 * y4 * (y - t - xy))}};
    case GfName::C:
      // (tuz + tz^2(1-u) + tuz^3(t-tu-1) + t^2z^5(1-u)^2)
      //   / (1 - z(1+tu) - z^2(1+t) + tuz^3(1+tu-t) + tz^4(u-1) - t^2z^5(1-u)^2)
      return {{zero, t * u, t * (one - u), t * u * (t - t * u - one), zero, t * t * (one - u) * (one - u)},
              {one, -(one + t * u), -(one + t), t * u * (one + t * u - t), t * (u - one),
               -(t * t * (one - u) * (one - u))}};
    case GfName::D: {
      // N / (1 - N) with N = tuz + txyz^2 + t^2uxy^3z^3
      const MultiPoly n1 = t * u, n2 = t * xy, n3 = t * t * u * x * y3;
      return {{zero, n1, n2, n3}, {one, -n1, -n2, -n3}};
    }
    case GfName::F:
      // tz(1-z^2) / (1 - z(1+t) - 2z^2 + z^3)
      return {{zero, t, zero, -t}, {one, -(one + t), MultiPoly(-2), one}};
    case GfName::G: {
      // tz(u + xyz(1-u) + xy^2z^2(1-uxy^2-u) + x^2y^4z^3(xy-t)(u-1))
      //   / (1 - z(xy+tu) + z^2 g2 + z^3 g3 + z^4 g4)
      const MultiPoly g2 = xy * (t * (u - one) - y - x * y3);
      const MultiPoly g3 = x * y2 * (u * t - t + x * y2 * (u * t + xy - t));
      const MultiPoly g4 = t * x2 * y4 * (xy - t) * (one - u);
      return {{zero, t * u, t * xy * (one - u), t * x * y2 * (one - u * x * y2 - u), t * x2 * y4 * (xy - t) * (u - one)},
              {one, -(xy + t * u), g2, g3, g4}};
    }
    case GfName::H: {
      // N / (1 - N) with N = tuz + txyz^2 + t^2x^2y^4z^4
      const MultiPoly n1 = t * u, n2 = t * xy, n4 = t * t * x2 * y4;
      return {{zero, n1, n2, zero, n4}, {one, -n1, -n2, zero, -n4}};
    }
  }
  throw UnknownGeneratingFunction("unknown generating function");
}

inline RationalGF builtin_gf(std::string_view name) {
  const auto g = parse_gf_name(name);
  if (!g) throw UnknownGeneratingFunction("unknown generating function: " + std::string(name));
  return builtin_gf(*g);
}

/// Coefficients of z^0..z^max_n of num/den via
///   c_n = num_n - sum_{i>=1} den_i c_{n-i}.
template <class Coeff>
BasicSeriesPrefix<Coeff> expand(const BasicRationalGF<Coeff>& gf, int max_n, int cap = default_expansion_cap) {
  if (max_n < 0) throw PreconditionError("negative expansion order");
  if (max_n > cap)
    throw ResourceLimitError("expansion order " + std::to_string(max_n) + " exceeds the cap " + std::to_string(cap));
  BasicSeriesPrefix<Coeff> out;
  out.coeffs.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    BasicMultiPoly<Coeff> c = un < gf.numerator.size() ? gf.numerator[un] : BasicMultiPoly<Coeff>{};
    for (std::size_t i = 1; i < gf.denominator.size() && i <= un; ++i) {
      if (gf.denominator[i].is_zero()) continue;
      c -= gf.denominator[i] * out.coeffs[un - i];
    }
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

/// Expansion that starts with checked 64-bit coefficients and switches to
/// arbitrary precision if any coefficient overflows.
inline BigSeriesPrefix expand_exact(GfName name, int max_n, int cap = default_expansion_cap) {
  const RationalGF gf = builtin_gf(name);
  try {
    const SeriesPrefix narrow = expand(gf, max_n, cap);
    BigSeriesPrefix out;
    for (const auto& c : narrow.coeffs) out.coeffs.push_back(convert<BigInt>(c));
    return out;
  } catch (const OverflowError&) {
    BasicRationalGF<BigInt> wide;
    for (const auto& p : gf.numerator) wide.numerator.push_back(convert<BigInt>(p));
    for (const auto& p : gf.denominator) wide.denominator.push_back(convert<BigInt>(p));
    return expand(wide, max_n, cap);
  }
}

/// Table indexed [n][k]: number of size-n permutations with k cycles.
using CycleTable = std::vector<std::vector<std::int64_t>>;

/// Coefficients of a polynomial in t (other markers erased), indexed by
/// the power of t.
inline std::vector<std::int64_t> t_row(const MultiPoly& p) {
  const MultiPoly only_t = specialize(p, MarkerSet{Marker::t}.complement());
  std::vector<std::int64_t> row(static_cast<std::size_t>(only_t.degree_in(Marker::t)) + 1, 0);
  for (const auto& [e, c] : only_t.terms()) row[e[0]] = c;
  return row;
}

namespace detail {

// a(n, k) with out-of-range entries read as zero.
inline std::int64_t at(const CycleTable& table, int n, int k) {
  if (n < 0 || k < 0) return 0;
  const auto& row = table[static_cast<std::size_t>(n)];
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : 0;
}

template <class Step>
CycleTable cycle_recurrence(ClassId c, int max_n, Step step) {
  if (max_n < 1) throw PreconditionError("recurrence needs N >= 1");
  CycleTable table(static_cast<std::size_t>(max_n) + 1);
  // Rows 1..3 come from exhaustive enumeration.
  for (int n = 1; n <= std::min(3, max_n); ++n) {
    auto row = t_row(distribution(c, n));
    row.resize(static_cast<std::size_t>(n) + 1, 0);
    table[static_cast<std::size_t>(n)] = std::move(row);
  }
  for (int n = 4; n <= max_n; ++n) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = step(table, n, k);
    table[static_cast<std::size_t>(n)] = std::move(row);
  }
  return table;
}

}  // namespace detail

/// a_n(k) = a_{n-1}(k) + a_{n-1}(k-1) + a_{n-2}(k-1) + a_{n-2}(k) - a_{n-3}(k-1)
inline CycleTable recurrence_a(int max_n) {
  return detail::cycle_recurrence(ClassId::class312_4321, max_n, [](const CycleTable& a, int n, int k) {
    using detail::at;
    using detail::checked_add;
    using detail::checked_sub;
    std::int64_t v = checked_add(at(a, n - 1, k), at(a, n - 1, k - 1));
    v = checked_add(v, at(a, n - 2, k - 1));
    v = checked_add(v, at(a, n - 2, k));
    return checked_sub(v, at(a, n - 3, k - 1));
  });
}

/// f_n(k) = f_{n-1}(k) + f_{n-1}(k-1) + 2 f_{n-2}(k) - f_{n-3}(k)
inline CycleTable recurrence_f(int max_n) {
  return detail::cycle_recurrence(ClassId::class321_4123, max_n, [](const CycleTable& f, int n, int k) {
    using detail::at;
    using detail::checked_add;
    using detail::checked_mul;
    using detail::checked_sub;
    std::int64_t v = checked_add(at(f, n - 1, k), at(f, n - 1, k - 1));
    v = checked_add(v, checked_mul(2, at(f, n - 2, k)));
    return checked_sub(v, at(f, n - 3, k));
  });
}

/// Number of cyclic class members for n = 1..max_n, read off the t^1
/// coefficients of A or F.
inline std::vector<std::int64_t> cyclic_sequence(ClassId c, int max_n) {
  if (max_n < 1) throw PreconditionError("cyclic_sequence needs N >= 1");
  const auto series = expand(builtin_gf(c == ClassId::class312_4321 ? GfName::A : GfName::F), max_n);
  std::vector<std::int64_t> out;
  for (int n = 1; n <= max_n; ++n) {
    Exponents e{};
    e[0] = 1;
    out.push_back(series.coeffs[static_cast<std::size_t>(n)].coefficient(e));
  }
  return out;
}

/// Row totals (all markers set to 1) of a built-in for n = 1..max_n.
inline std::vector<std::int64_t> series_totals(GfName g, int max_n) {
  const auto series = expand(builtin_gf(g), max_n);
  std::vector<std::int64_t> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(total(series.coeffs[static_cast<std::size_t>(n)]));
  return out;
}

}  // namespace permcycle

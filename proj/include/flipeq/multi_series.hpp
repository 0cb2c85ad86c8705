#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flipeq/exact_int.hpp"

namespace flipeq {

// Degrees in (x, y, z). Variables a series does not use keep exponent 0.
struct exponent {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const exponent&, const exponent&) = default;
};

struct series_term {
  exponent e;
  ExactInt c;
  friend bool operator==(const series_term&, const series_term&) = default;
};

// Truncated formal power series with exact integer coefficients.
//
// Sparse normal form: terms sorted by exponent, no zero coefficient, no term
// with x-degree above `order`. Truncation is by x-degree only. Every series
// taken from the tables keeps y- and z-degrees <= the x-degree, but
// intermediates of the functional equations (y * S^2, (1-y) * M) legitimately
// exceed that bound, so it is a checked property (degrees_bounded_by_x) of
// final series, not a storage restriction.
class multi_series {
 public:
  multi_series(int order, int nvars) : order_(order), nvars_(nvars) {
    if (order < 0) throw usage_error("multi_series: negative order");
    if (nvars < 1 || nvars > 3) throw usage_error("multi_series: nvars must be 1, 2 or 3");
  }

  static multi_series constant(int order, int nvars, ExactInt value) {
    multi_series s(order, nvars);
    if (value != 0) s.terms_.push_back({exponent{}, std::move(value)});
    return s;
  }

  static multi_series monomial(int order, int nvars, exponent e, ExactInt value) {
    multi_series s(order, nvars);
    if (e.i < 0 || e.j < 0 || e.k < 0) throw usage_error("monomial: negative exponent");
    if ((nvars < 2 && e.j != 0) || (nvars < 3 && e.k != 0)) {
      throw usage_error("monomial: exponent on an unused variable");
    }
    if (value != 0 && e.i <= order) s.terms_.push_back({e, std::move(value)});
    return s;
  }

  // Normalizes: sorts, merges equal exponents, drops zeros and x-degree > order.
  static multi_series from_terms(int order, int nvars, std::vector<series_term> raw) {
    multi_series s(order, nvars);
    std::sort(raw.begin(), raw.end(),
              [](const series_term& a, const series_term& b) { return a.e < b.e; });
    for (auto& t : raw) {
      if (t.e.i > order || t.c == 0) continue;
      if (!s.terms_.empty() && s.terms_.back().e == t.e) {
        s.terms_.back().c += t.c;
        if (s.terms_.back().c == 0) s.terms_.pop_back();
      } else {
        s.terms_.push_back(std::move(t));
      }
    }
    return s;
  }

  int order() const { return order_; }
  int nvars() const { return nvars_; }
  const std::vector<series_term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Stored coefficient or 0. Asking beyond the truncation order is an error:
  // that coefficient is unknown, not zero.
  ExactInt coefficient(int i, int j = 0, int k = 0) const {
    if (i > order_) throw usage_error("coefficient: degree beyond truncation order");
    exponent e{i, j, k};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const series_term& t, const exponent& x) { return t.e < x; });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
  }

  // j <= i and k <= i on every term; holds for all series of the tables.
  bool degrees_bounded_by_x() const {
    for (const auto& t : terms_) {
      if (t.e.j > t.e.i || t.e.k > t.e.i) return false;
    }
    return true;
  }

  // Equality compares normal-form terms and truncation order.
  friend bool operator==(const multi_series& a, const multi_series& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  int order_;
  int nvars_;
  std::vector<series_term> terms_;  // sorted by exponent, nonzero coefficients

  friend multi_series add(const multi_series&, const multi_series&);
  friend multi_series mul(const multi_series&, const multi_series&);
};

inline void require_compatible(const multi_series& a, const multi_series& b, const char* op) {
  if (a.order() != b.order()) throw usage_error(std::string(op) + ": truncation order mismatch");
  if (a.nvars() != b.nvars()) throw usage_error(std::string(op) + ": variable count mismatch");
}

inline multi_series add(const multi_series& a, const multi_series& b) {
  require_compatible(a, b, "add");
  multi_series out(a.order(), a.nvars());
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->e < ib->e)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->e < ia->e) {
      out.terms_.push_back(*ib++);
    } else {
      ExactInt c = ia->c + ib->c;
      if (c != 0) out.terms_.push_back({ia->e, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline multi_series scale_by_int(const multi_series& a, const ExactInt& v) {
  multi_series out(a.order(), a.nvars());
  if (v == 0) return out;
  std::vector<series_term> ts = a.terms();
  for (auto& t : ts) t.c *= v;
  return multi_series::from_terms(a.order(), a.nvars(), std::move(ts));
}

inline multi_series sub(const multi_series& a, const multi_series& b) {
  return add(a, scale_by_int(b, -1));
}

namespace detail {
inline std::uint64_t pack_exponent(const exponent& e) {
  // 21 bits per degree; orders in use are far below that.
  return (std::uint64_t(e.i) << 42) | (std::uint64_t(e.j) << 21) | std::uint64_t(e.k);
}
inline exponent unpack_exponent(std::uint64_t p) {
  constexpr std::uint64_t mask = (1u << 21) - 1;
  return exponent{int(p >> 42), int((p >> 21) & mask), int(p & mask)};
}
}  // namespace detail

// Exact Cauchy product, all terms of x-degree > order discarded.
inline multi_series mul(const multi_series& a, const multi_series& b) {
  require_compatible(a, b, "mul");
  const int order = a.order();
  std::unordered_map<std::uint64_t, ExactInt> acc;
  acc.reserve(64);
  for (const auto& ta : a.terms()) {
    // b's terms are sorted with x-degree as the leading key.
    for (const auto& tb : b.terms()) {
      if (ta.e.i + tb.e.i > order) break;
      acc[detail::pack_exponent(
          exponent{ta.e.i + tb.e.i, ta.e.j + tb.e.j, ta.e.k + tb.e.k})] += ta.c * tb.c;
    }
  }
  std::vector<std::pair<std::uint64_t, ExactInt>> flat(
      std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
  std::sort(flat.begin(), flat.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  multi_series out(order, a.nvars());
  std::vector<series_term> ts;
  ts.reserve(flat.size());
  for (auto& [key, c] : flat) {
    if (c != 0) ts.push_back({detail::unpack_exponent(key), std::move(c)});
  }
  out = multi_series::from_terms(order, a.nvars(), std::move(ts));
  return out;
}

// Exact division by 2 of every coefficient; any odd coefficient aborts.
inline multi_series halve(const multi_series& a) {
  std::vector<series_term> ts = a.terms();
  for (auto& t : ts) {
    if (t.c % 2 != 0) {
      throw integrity_error("halve: odd coefficient at x^" + std::to_string(t.e.i) + " y^" +
                            std::to_string(t.e.j) + " z^" + std::to_string(t.e.k) + ": " +
                            t.c.str());
    }
    t.c /= 2;
  }
  return multi_series::from_terms(a.order(), a.nvars(), std::move(ts));
}

// a(x^2, y^2, z^2): every exponent doubles, terms with 2i > order drop.
inline multi_series substitute_squares(const multi_series& a) {
  std::vector<series_term> ts;
  ts.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    if (2 * t.e.i > a.order()) break;  // terms sorted by x-degree first
    ts.push_back({exponent{2 * t.e.i, 2 * t.e.j, 2 * t.e.k}, t.c});
  }
  return multi_series::from_terms(a.order(), a.nvars(), std::move(ts));
}

// Multiply by x^i y^j z^k, dropping terms past the truncation order.
inline multi_series scale_by_monomial(const multi_series& a, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw usage_error("scale_by_monomial: negative exponent");
  std::vector<series_term> ts;
  ts.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    if (t.e.i + i > a.order()) break;
    ts.push_back({exponent{t.e.i + i, t.e.j + j, t.e.k + k}, t.c});
  }
  return multi_series::from_terms(a.order(), a.nvars(), std::move(ts));
}

// Exchange the y and z exponent slots.
inline multi_series swap_yz(const multi_series& a) {
  std::vector<series_term> ts = a.terms();
  for (auto& t : ts) std::swap(t.e.j, t.e.k);
  return multi_series::from_terms(a.order(), a.nvars(), std::move(ts));
}

inline multi_series operator+(const multi_series& a, const multi_series& b) { return add(a, b); }
inline multi_series operator-(const multi_series& a, const multi_series& b) { return sub(a, b); }
inline multi_series operator*(const multi_series& a, const multi_series& b) { return mul(a, b); }

}  // namespace flipeq

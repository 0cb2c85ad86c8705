#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flipeq/exact_int.hpp"
#include "flipeq/multi_series.hpp"
#include "flipeq/recurrences.hpp"

namespace flipeq {

// The five functional equations. Each has a unique series solution analytic
// at the origin with constant term 1; the iteration map fixes one further
// coefficient per step, so truncated fixed-point iteration always lands on
// the right branch without any square roots.
//
//   F_gfe0: F = 1 + x F^2                                   (1 variable)
//   G_gfe:  G = 1 + (x/2) (G^2 + G(x^2))                    (1 variable)
//   L_gen1: L = 1 + (x y / 2) L^2 + x (1 - y/2) L(x^2,y^2)  (2 variables)
//   M_gen2: M = 1 + x (1 + y) (M^2 + M(x^2,y^2)) / 2        (2 variables)
//   S_gen3: S = 1 + (x (1+z) / 2) ((2-y) S(x^2,y^2,z^2) + y S^2)
enum class equation_id { F_gfe0, G_gfe, L_gen1, M_gen2, S_gen3 };

constexpr int arity(equation_id eq) {
  switch (eq) {
    case equation_id::F_gfe0:
    case equation_id::G_gfe:
      return 1;
    case equation_id::L_gen1:
    case equation_id::M_gen2:
      return 2;
    case equation_id::S_gen3:
      return 3;
  }
  return 0;
}

constexpr const char* equation_name(equation_id eq) {
  switch (eq) {
    case equation_id::F_gfe0: return "F_gfe0";
    case equation_id::G_gfe: return "G_gfe";
    case equation_id::L_gen1: return "L_gen1";
    case equation_id::M_gen2: return "M_gen2";
    case equation_id::S_gen3: return "S_gen3";
  }
  return "?";
}

inline std::optional<equation_id> parse_equation(std::string_view name) {
  for (equation_id eq : {equation_id::F_gfe0, equation_id::G_gfe, equation_id::L_gen1,
                         equation_id::M_gen2, equation_id::S_gen3}) {
    if (name == equation_name(eq)) return eq;
  }
  return std::nullopt;
}

// One application of the iteration map. Halvings are grouped so they are
// exact for every integer-coefficient argument: a^2 +- a is always even, and
// the cross terms of a square carry a factor 2.
inline multi_series apply_equation_map(equation_id eq, const multi_series& s) {
  const multi_series one = multi_series::constant(s.order(), s.nvars(), 1);
  switch (eq) {
    case equation_id::F_gfe0: {
      return one + scale_by_monomial(s * s, 1, 0, 0);
    }
    case equation_id::G_gfe: {
      multi_series h = halve(s * s + substitute_squares(s));
      return one + scale_by_monomial(h, 1, 0, 0);
    }
    case equation_id::L_gen1: {
      multi_series sq = substitute_squares(s);
      multi_series h = halve(s * s - sq);
      return one + scale_by_monomial(h, 1, 1, 0) + scale_by_monomial(sq, 1, 0, 0);
    }
    case equation_id::M_gen2: {
      multi_series h = halve(s * s + substitute_squares(s));
      return one + scale_by_monomial(h, 1, 0, 0) + scale_by_monomial(h, 1, 1, 0);
    }
    case equation_id::S_gen3: {
      multi_series sq = substitute_squares(s);
      multi_series h = halve(s * s - sq);
      return one + scale_by_monomial(sq, 1, 0, 0) + scale_by_monomial(sq, 1, 0, 1) +
             scale_by_monomial(h, 1, 1, 0) + scale_by_monomial(h, 1, 1, 1);
    }
  }
  throw usage_error("apply_equation_map: unknown equation");
}

// Unique solution with constant term 1, truncated at `order`. Each iteration
// fixes at least one more x-degree, so convergence within order+2 rounds is
// guaranteed for a correctly transcribed equation.
inline multi_series solve(equation_id eq, int order) {
  if (order < 0) throw usage_error("solve: negative order");
  multi_series s = multi_series::constant(order, arity(eq), 1);
  for (int round = 0; round <= order + 1; ++round) {
    multi_series next = apply_equation_map(eq, s);
    if (next == s) return s;
    s = std::move(next);
  }
  throw integrity_error(std::string("solve: no fixed point for ") + equation_name(eq) +
                        " within order+2 iterations");
}

// Left side minus right side of the equation's displayed form; the zero
// series iff `s` solves it to its truncation order.
inline multi_series residual(equation_id eq, const multi_series& s) {
  if (eq == equation_id::F_gfe0) {
    // x F^2 = F - 1
    const multi_series one = multi_series::constant(s.order(), s.nvars(), 1);
    return scale_by_monomial(s * s, 1, 0, 0) - s + one;
  }
  return s - apply_equation_map(eq, s);
}

// Residual of the product-form rearrangement of the trivariate equation:
//   x (y - 2) (1 + z) S(x^2,y^2,z^2) = 2 (1 - S) + x y (1 + z) S^2
inline multi_series product_form_residual(const multi_series& s) {
  if (s.nvars() != 3) throw usage_error("product_form_residual: needs a 3-variable series");
  const multi_series one = multi_series::constant(s.order(), s.nvars(), 1);
  multi_series a = substitute_squares(s);
  multi_series b = s * s;
  multi_series lhs = scale_by_monomial(a, 1, 1, 0) + scale_by_monomial(a, 1, 1, 1) -
                     scale_by_int(scale_by_monomial(a, 1, 0, 0), 2) -
                     scale_by_int(scale_by_monomial(a, 1, 0, 1), 2);
  multi_series rhs = scale_by_int(one - s, 2) + scale_by_monomial(b, 1, 1, 0) +
                     scale_by_monomial(b, 1, 1, 1);
  return lhs - rhs;
}

enum class var_axis { y = 1, z = 2 };

// Substitute an integer value (0, 1 or 2 -- the only ones that occur) for a
// variable and collect. Exponent-zero terms survive substitution of 0, which
// is exactly the 0^0 = 1 convention. The variable's slot stays in place with
// exponent 0 everywhere.
inline multi_series specialize(const multi_series& s, var_axis axis, int value) {
  if (value < 0 || value > 2) throw usage_error("specialize: value must be 0, 1 or 2");
  const int needed = axis == var_axis::y ? 2 : 3;
  if (s.nvars() < needed) throw usage_error("specialize: variable not present in series");
  std::vector<series_term> ts;
  ts.reserve(s.terms().size());
  for (const auto& t : s.terms()) {
    const int e = axis == var_axis::y ? t.e.j : t.e.k;
    if (value == 0 && e > 0) continue;
    ExactInt c = t.c;
    if (value == 2) c <<= e;
    exponent ne = t.e;
    (axis == var_axis::y ? ne.j : ne.k) = 0;
    ts.push_back({ne, std::move(c)});
  }
  return multi_series::from_terms(s.order(), s.nvars(), std::move(ts));
}

struct check_result {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing coefficient when not passed
};

struct verify_report {
  std::vector<check_result> checks;
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

namespace detail {
inline std::string first_nonzero_term(const multi_series& r) {
  if (r.is_zero()) return {};
  const series_term& t = r.terms().front();
  return "first failing coefficient at x^" + std::to_string(t.e.i) + " y^" +
         std::to_string(t.e.j) + " z^" + std::to_string(t.e.k) + ": " + t.c.str();
}

inline void check_zero(verify_report& report, std::string name, const multi_series& r) {
  report.checks.push_back({std::move(name), r.is_zero(), first_nonzero_term(r)});
}
}  // namespace detail

// Even/odd split of the one-variable system: H carries the even-index
// counts, I the odd-index ones. Checks, to truncation order:
//   H = 1 + x I H
//   2 I = G + x I^2 + H^2
//   G = H(x^2) + x I(x^2)
inline verify_report verify_parity_system_G(int order) {
  if (order < 0) throw usage_error("verify_parity_system_G: negative order");
  wedderburn_table b(2 * order + 1);
  std::vector<series_term> ht, it;
  for (int n = 0; n <= order; ++n) {
    ht.push_back({exponent{n, 0, 0}, b.at(2 * n)});
    it.push_back({exponent{n, 0, 0}, b.at(2 * n + 1)});
  }
  const multi_series h = multi_series::from_terms(order, 1, std::move(ht));
  const multi_series i = multi_series::from_terms(order, 1, std::move(it));
  const multi_series g = solve(equation_id::G_gfe, order);
  const multi_series one = multi_series::constant(order, 1, 1);

  verify_report report;
  detail::check_zero(report, "even part closes: H = 1 + x I H",
                     h - one - scale_by_monomial(i * h, 1, 0, 0));
  detail::check_zero(report, "odd part closes: 2 I = G + x I^2 + H^2",
                     scale_by_int(i, 2) - g - scale_by_monomial(i * i, 1, 0, 0) - h * h);
  detail::check_zero(report, "parity assembly: G = H(x^2) + x I(x^2)",
                     g - substitute_squares(h) -
                         scale_by_monomial(substitute_squares(i), 1, 0, 0));
  return report;
}

namespace detail {
// Parity-split series of a two-index table: entry(n, k) placed at x^n y^k.
template <typename Table, typename Pick>
multi_series parity_split(const Table& table, int order, Pick pick) {
  std::vector<series_term> ts;
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) ts.push_back({exponent{n, k, 0}, pick(table, n, k)});
  }
  return multi_series::from_terms(order, 2, std::move(ts));
}
}  // namespace detail

// The four parity quarters of the class-size table K_{n,l} against the
// solved two-variable series L. P0/P1 split the even-n rows by parity of l,
// Q/R the odd-n rows. All five displayed identities are residual-checked.
inline verify_report verify_bivariate_system_L(int order) {
  if (order < 0) throw usage_error("verify_bivariate_system_L: negative order");
  k2_table k(2 * order + 1);
  auto p0 = detail::parity_split(k, order, [](const k2_table& t, int n, int l) {
    return t.at(2 * n, 2 * l);
  });
  auto p1 = detail::parity_split(k, order, [](const k2_table& t, int n, int l) {
    return t.at(2 * n, 2 * l + 1);
  });
  auto q = detail::parity_split(k, order, [](const k2_table& t, int n, int l) {
    return t.at(2 * n + 1, 2 * l);
  });
  auto r = detail::parity_split(k, order, [](const k2_table& t, int n, int l) {
    return t.at(2 * n + 1, 2 * l + 1);
  });
  const multi_series l = solve(equation_id::L_gen1, order);
  const multi_series one = multi_series::constant(order, 2, 1);

  verify_report report;
  detail::check_zero(report, "odd rows, even split: Q = L + y P0 P1 + x y Q R",
                     q - l - scale_by_monomial(p0 * p1, 0, 1, 0) -
                         scale_by_monomial(q * r, 1, 1, 0));
  detail::check_zero(report, "odd rows, odd split: 2 R = -L + x (Q^2 + y R^2) + P0^2 + y P1^2",
                     scale_by_int(r, 2) + l - scale_by_monomial(q * q, 1, 0, 0) -
                         scale_by_monomial(r * r, 1, 1, 0) - p0 * p0 -
                         scale_by_monomial(p1 * p1, 0, 1, 0));
  detail::check_zero(report, "even rows, even split: P0 = 1 + x y (R P0 + Q P1)",
                     p0 - one - scale_by_monomial(r * p0 + q * p1, 1, 1, 0));
  detail::check_zero(report, "even rows, odd split: P1 = x P0 Q + x y P1 R",
                     p1 - scale_by_monomial(p0 * q, 1, 0, 0) -
                         scale_by_monomial(p1 * r, 1, 1, 0));
  detail::check_zero(report,
                     "assembly: L = P0(x^2,y^2) + y P1(x^2,y^2) + x Q(x^2,y^2) + x y R(x^2,y^2)",
                     l - substitute_squares(p0) -
                         scale_by_monomial(substitute_squares(p1), 0, 1, 0) -
                         scale_by_monomial(substitute_squares(q), 1, 0, 0) -
                         scale_by_monomial(substitute_squares(r), 1, 1, 0));
  return report;
}

// The parity quarters of the color table B_{n,k} against the solved
// two-variable series M, plus the reductions back to the one-variable
// split (H, I, G) at y = 0.
inline verify_report verify_color_system_M(int order) {
  if (order < 0) throw usage_error("verify_color_system_M: negative order");
  bcolor_table b(2 * order + 1);
  wedderburn_table w(2 * order + 1);
  auto p0 = detail::parity_split(b, order, [](const bcolor_table& t, int n, int k) {
    return t.at(2 * n, 2 * k);
  });
  auto p1 = detail::parity_split(b, order, [](const bcolor_table& t, int n, int k) {
    return t.at(2 * n, 2 * k + 1);
  });
  auto q = detail::parity_split(b, order, [](const bcolor_table& t, int n, int k) {
    return t.at(2 * n + 1, 2 * k);
  });
  auto r = detail::parity_split(b, order, [](const bcolor_table& t, int n, int k) {
    return t.at(2 * n + 1, 2 * k + 1);
  });
  const multi_series m = solve(equation_id::M_gen2, order);
  const multi_series m0 = specialize(m, var_axis::y, 0);
  const multi_series p00 = specialize(p0, var_axis::y, 0);
  const multi_series q0 = specialize(q, var_axis::y, 0);

  auto sq_terms = [&](const multi_series& s) {
    // P0^2 + y P1^2 + x Q^2 + x y R^2, the shared square block; s is M or 0.
    return p0 * p0 + scale_by_monomial(p1 * p1, 0, 1, 0) + scale_by_monomial(q * q, 1, 0, 0) +
           scale_by_monomial(r * r, 1, 1, 0) + s;
  };

  verify_report report;
  detail::check_zero(report,
                     "even rows, even split: P0 = x P0 Q + x y P1 Q - x P0(x,0) Q(x,0) + x y P0 R "
                     "+ x y P1 R + P0(x,0)",
                     p0 - scale_by_monomial(p0 * q, 1, 0, 0) -
                         scale_by_monomial(p1 * q, 1, 1, 0) +
                         scale_by_monomial(p00 * q0, 1, 0, 0) -
                         scale_by_monomial(p0 * r, 1, 1, 0) -
                         scale_by_monomial(p1 * r, 1, 1, 0) - p00);
  detail::check_zero(report, "even rows, odd split: P1 = x P0 Q + x P1 Q + x P0 R + x y P1 R",
                     p1 - scale_by_monomial(p0 * q, 1, 0, 0) -
                         scale_by_monomial(p1 * q, 1, 0, 0) -
                         scale_by_monomial(p0 * r, 1, 0, 0) -
                         scale_by_monomial(p1 * r, 1, 1, 0));
  detail::check_zero(
      report,
      "odd rows, even split: 2 Q = 2 y P0 P1 + 2 x y Q R + 2 Q(x,0) + M - M(x,0) + P0^2 - "
      "P0(x,0)^2 + y P1^2 + x Q^2 - x Q(x,0)^2 + x y R^2",
      scale_by_int(q, 2) - scale_by_int(scale_by_monomial(p0 * p1, 0, 1, 0), 2) -
          scale_by_int(scale_by_monomial(q * r, 1, 1, 0), 2) - scale_by_int(q0, 2) -
          sq_terms(m - m0) + p00 * p00 + scale_by_monomial(q0 * q0, 1, 0, 0));
  detail::check_zero(report,
                     "odd rows, odd split: 2 R = 2 P0 P1 + 2 x Q R + P0^2 + y P1^2 + x Q^2 + x y "
                     "R^2 + M",
                     scale_by_int(r, 2) - scale_by_int(p0 * p1, 2) -
                         scale_by_int(scale_by_monomial(q * r, 1, 0, 0), 2) - sq_terms(m));
  detail::check_zero(report, "cross-term identity: Q - R = (y - 1) (P0 P1 + x Q R)",
                     q - r -
                         (scale_by_monomial(p0 * p1 + scale_by_monomial(q * r, 1, 0, 0), 0, 1, 0) -
                          (p0 * p1 + scale_by_monomial(q * r, 1, 0, 0))));
  {
    multi_series sq = sq_terms(multi_series(order, 2));
    multi_series lhs = m - scale_by_monomial(m, 0, 1, 0);
    multi_series rhs = scale_by_int(q - scale_by_monomial(r, 0, 1, 0), 2) -
                       (sq - scale_by_monomial(sq, 0, 1, 0));
    detail::check_zero(report,
                       "collected identity: (1-y) M = 2 (Q - y R) - (1-y) (P0^2 + y P1^2 + x Q^2 "
                       "+ x y R^2)",
                       lhs - rhs);
  }
  detail::check_zero(report,
                     "assembly: M = P0(x^2,y^2) + y P1(x^2,y^2) + x Q(x^2,y^2) + x y R(x^2,y^2)",
                     m - substitute_squares(p0) -
                         scale_by_monomial(substitute_squares(p1), 0, 1, 0) -
                         scale_by_monomial(substitute_squares(q), 1, 0, 0) -
                         scale_by_monomial(substitute_squares(r), 1, 1, 0));

  // Reductions at y = 0 back to the one-variable split series.
  std::vector<series_term> ht, it, gt;
  for (int n = 0; n <= order; ++n) {
    ht.push_back({exponent{n, 0, 0}, w.at(2 * n)});
    it.push_back({exponent{n, 0, 0}, w.at(2 * n + 1)});
    gt.push_back({exponent{n, 0, 0}, w.at(n)});
  }
  detail::check_zero(report, "even split at y=0 is the even-index series H",
                     p00 - multi_series::from_terms(order, 2, std::move(ht)));
  detail::check_zero(report, "odd split at y=0 is the odd-index series I",
                     q0 - multi_series::from_terms(order, 2, std::move(it)));
  detail::check_zero(report, "M at y=0 is the one-variable series G",
                     m0 - multi_series::from_terms(order, 2, std::move(gt)));
  return report;
}

}  // namespace flipeq

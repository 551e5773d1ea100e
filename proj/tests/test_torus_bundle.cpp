#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <optional>
#include <vector>

#include "ratgenus/errors.hpp"
#include "ratgenus/torus_bundle.hpp"

using namespace ratgenus;

namespace {

// Independent oracle: smallest n >= 1 such that n*(1,0) = x*(a-1,c) + y*(b,d-1)
// for integers x, y, found by brute force over a window large enough for the
// matrices in these sweeps. Returns nullopt when the search space is exhausted.
std::optional<std::int64_t> order_by_search(const UnimodularMatrix& A,
                                            std::int64_t n_max = 64,
                                            std::int64_t xy_max = 400) {
  const std::int64_t a = A.alpha - 1, b = A.beta, c = A.gamma,
                     d = A.delta - 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t x = -xy_max; x <= xy_max; ++x) {
      if (c == 0 && d == 0) {
        // any y works for the second row; check first row solvability
        if (b != 0) {
          if ((n - a * x) % b == 0) return n;
        } else if (a * x == n) {
          return n;
        }
        continue;
      }
      for (std::int64_t y = -xy_max; y <= xy_max; ++y) {
        if (a * x + b * y == n && c * x + d * y == 0) return n;
      }
    }
  }
  return std::nullopt;
}

std::vector<UnimodularMatrix> sl2_with_entries_up_to(std::int64_t bound) {
  std::vector<UnimodularMatrix> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c) {
        // a*d - b*c = 1  =>  d determined when a != 0
        if (a != 0) {
          if ((1 + b * c) % a != 0) continue;
          const std::int64_t d = (1 + b * c) / a;
          if (std::llabs(d) <= bound) out.emplace_back(a, b, c, d);
        } else if (b * c == -1) {
          for (std::int64_t d = -bound; d <= bound; ++d)
            out.emplace_back(a, b, c, d);
        }
      }
  return out;
}

}  // namespace

TEST_CASE("knot_order on parabolic normal forms") {
  for (std::int64_t p = 1; p <= 100; ++p)
    CHECK(knot_order(UnimodularMatrix(1, p, 0, 1)) == p);
}

TEST_CASE("knot_order matches the Diophantine oracle for trace != 2") {
  CHECK(knot_order(UnimodularMatrix(2, 1, 1, 1)) == 1);
  CHECK(knot_order(UnimodularMatrix(-1, 0, 0, -1)) == 2);
  for (const auto& A : sl2_with_entries_up_to(4)) {
    if (A.trace() == 2 || A.is_identity()) continue;
    const auto expected = order_by_search(A);
    REQUIRE(expected.has_value());
    CHECK(knot_order(A) == expected);
  }
  CHECK_THROWS_AS(knot_order(UnimodularMatrix(1, 0, 0, 1)), IdentityMonodromy);
}

TEST_CASE("parabolic_p normal forms and the conjugation oracle") {
  CHECK(parabolic_p(UnimodularMatrix(1, 5, 0, 1)) == 5);
  CHECK(parabolic_p(UnimodularMatrix(1, 0, 1, 1)) == 1);
  CHECK_THROWS_AS(parabolic_p(UnimodularMatrix(2, 1, 1, 1)), NotParabolic);

  // Exhaustive conjugation sweep validating the gcd formula: conjugating the
  // normal form by any matrix with determinant +-1 preserves p.
  const UnimodularMatrix P(1, 5, 0, 1);
  int checked = 0;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c)
        for (std::int64_t d = -3; d <= 3; ++d) {
          const std::int64_t det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          // B * P * B^{-1} computed entry-wise; B^{-1} = adj(B)/det.
          const std::int64_t e = a * P.alpha + b * P.gamma;
          const std::int64_t f = a * P.beta + b * P.delta;
          const std::int64_t g = c * P.alpha + d * P.gamma;
          const std::int64_t h = c * P.beta + d * P.delta;
          const UnimodularMatrix conj((e * d - f * c) / det,
                                      (-e * b + f * a) / det,
                                      (g * d - h * c) / det,
                                      (-g * b + h * a) / det);
          CHECK(parabolic_p(conj) == 5);
          ++checked;
        }
  CHECK(checked > 100);
}

TEST_CASE("fiber curve genus") {
  CHECK(fiber_curve_genus(UnimodularMatrix(1, 3, 0, 1))
            .is_exactly(Rational(1, 6)));
  CHECK(fiber_curve_genus(UnimodularMatrix(-1, 7, 0, -1))
            .is_exactly(Rational(0)));
  CHECK(fiber_curve_genus(UnimodularMatrix(2, 1, 1, 1))
            .is_exactly(Rational(1, 2)));
  CHECK_THROWS_AS(fiber_curve_genus(UnimodularMatrix(1, 0, 0, 1)),
                  IdentityMonodromy);
}

TEST_CASE("fiber curve genus depends only on gamma and trace when trace != 2") {
  for (std::int64_t tr = -6; tr <= 6; ++tr) {
    if (tr == 2) continue;
    for (std::int64_t gamma = -6; gamma <= 6; ++gamma) {
      if (gamma == 0) continue;
      std::optional<GenusValue> first;
      for (std::int64_t alpha = -20; alpha <= 20; ++alpha) {
        const std::int64_t delta = tr - alpha;
        if ((alpha * delta - 1) % gamma != 0) continue;
        const std::int64_t beta = (alpha * delta - 1) / gamma;
        const UnimodularMatrix A(alpha, beta, gamma, delta);
        const GenusValue v = fiber_curve_genus(A);
        if (!first)
          first = v;
        else
          CHECK(v == *first);
      }
    }
  }
}

TEST_CASE("horizontal solution examples") {
  for (std::int64_t p = 1; p <= 12; ++p) {
    const HorizontalData h = horizontal_solution(UnimodularMatrix(1, p, 0, 1));
    CHECK(h.ell0 == 0);
    CHECK(h.m == 1);
    CHECK(h.ell == p);
  }
  HorizontalData h = horizontal_solution(UnimodularMatrix(2, 1, 1, 1));
  CHECK(h.ell0 == 0);
  CHECK(h.m == 1);
  CHECK(h.ell1 == 1);
  CHECK(h.ell == 1);

  h = horizontal_solution(UnimodularMatrix(3, 1, 2, 1));
  CHECK(h.ell0 == 0);
  CHECK(h.m == 1);
  CHECK(h.ell == 1);

  CHECK_THROWS_AS(horizontal_solution(UnimodularMatrix(-1, 4, 0, -1)),
                  VerticalCase);
}

TEST_CASE("horizontal bound is sharp across the sweep") {
  for (const auto& A : sl2_with_entries_up_to(10)) {
    if (A.trace() == 2 || A.gamma == 0) continue;
    const HorizontalData h = horizontal_solution(A);
    REQUIRE(h.ell != 0);
    const Rational bound(h.m, 2 * std::llabs(h.ell));
    CHECK(fiber_curve_genus(A).is_exactly(bound));
  }
}

TEST_CASE("small-trace gap") {
  CHECK(small_trace_gap_holds(UnimodularMatrix(0, -1, 1, 0)));
  CHECK(fiber_curve_genus(UnimodularMatrix(0, -1, 1, 0))
            .is_exactly(Rational(1, 4)));
  CHECK(small_trace_gap_holds(UnimodularMatrix(-1, 1, 0, -1)));
  CHECK_THROWS_AS(small_trace_gap_holds(UnimodularMatrix(1, 1, 0, 1)),
                  PreconditionViolated);
}

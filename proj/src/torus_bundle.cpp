#include "ratgenus/torus_bundle.hpp"

#include <cstdlib>
#include <numeric>

#include "ratgenus/errors.hpp"

namespace ratgenus {

namespace {

// Is n*(1,0) in the lattice spanned by the columns of A - I?
bool multiple_in_image(const UnimodularMatrix& A, std::int64_t n) {
  const std::int64_t a = A.alpha - 1, b = A.beta;
  const std::int64_t c = A.gamma, d = A.delta - 1;
  const std::int64_t det = a * d - b * c;
  if (det != 0) {
    // Cramer: x = (n*d - 0*b)/det, y = (a*0 - c*n)/det must be integers.
    return (n * d) % det == 0 && (n * c) % det == 0;
  }
  // Rank <= 1: columns (a,c) and (b,d) are proportional. Need
  // x*(a,c) + y*(b,d) = (n,0) for some integers x, y.
  if (a == 0 && b == 0 && c == 0 && d == 0) return n == 0;
  // Second coordinate: x*c + y*d = 0; first: x*a + y*b = n.
  const std::int64_t g2 = std::gcd(std::llabs(c), std::llabs(d));
  if (g2 == 0) {
    // c = d = 0: any x, y; need a*x + b*y = n.
    const std::int64_t g1 = std::gcd(std::llabs(a), std::llabs(b));
    return g1 != 0 && n % g1 == 0;
  }
  // Solutions of x*c + y*d = 0 are t*(d/g2, -c/g2).
  const std::int64_t value = a * (d / g2) - b * (c / g2);
  return value != 0 && n % value == 0;
}

}  // namespace

std::optional<std::int64_t> knot_order(const UnimodularMatrix& A) {
  if (A.is_identity())
    throw IdentityMonodromy("knot_order: identity monodromy");
  if (A.trace() == 2) {
    // The distinguished finite-order class (first in the normalized basis).
    return parabolic_p(A);
  }
  const std::int64_t group_order = std::llabs(2 - A.trace());
  for (std::int64_t n = 1; n <= group_order; ++n) {
    if (multiple_in_image(A, n)) return n;
  }
  // Unreachable: the class order divides |det(A - I)|.
  return std::nullopt;
}

std::int64_t parabolic_p(const UnimodularMatrix& A) {
  if (A.trace() != 2 || A.is_identity())
    throw NotParabolic("parabolic_p: matrix is not a non-trivial parabolic");
  std::int64_t g = std::gcd(std::llabs(A.alpha - 1), std::llabs(A.beta));
  g = std::gcd(g, std::llabs(A.gamma));
  g = std::gcd(g, std::llabs(A.delta - 1));
  return g;
}

GenusValue fiber_curve_genus(const UnimodularMatrix& A) {
  if (A.is_identity())
    throw IdentityMonodromy("fiber_curve_genus: identity monodromy");
  if (A.trace() == 2)
    return GenusValue::exact(Rational(1, 2 * parabolic_p(A)));
  return GenusValue::exact(
      Rational(std::llabs(A.gamma), 2 * std::llabs(A.trace() - 2)));
}

HorizontalData horizontal_solution(const UnimodularMatrix& A) {
  if (A.is_identity())
    throw IdentityMonodromy("horizontal_solution: identity monodromy");
  if (A.gamma == 0 && A.trace() == -2)
    throw VerticalCase(
        "horizontal_solution: annulus branch (gamma = 0, trace = -2)");

  HorizontalData out;
  if (A.gamma == 0) {
    // Then delta = 1 and the constraint is vacuous.
    out.m = 1;
    out.ell0 = 0;
  } else {
    const std::int64_t g =
        std::gcd(std::llabs(A.gamma), std::llabs(A.delta - 1));
    out.m = std::llabs(A.gamma) / g;
    out.ell0 = -((A.delta - 1) * out.m) / A.gamma;
  }
  out.ell1 = A.alpha * out.ell0 + A.beta * out.m;
  out.ell = out.ell1 - out.ell0;

  if (A.gamma * out.ell0 + (A.delta - 1) * out.m != 0)
    throw InternalBoundViolation("horizontal_solution: equation not satisfied");
  if (A.trace() != 2 && A.gamma != 0) {
    // m/ell = gamma/(trace - 2), cross-multiplied to stay exact.
    if (out.m * (A.trace() - 2) != A.gamma * out.ell)
      throw InternalBoundViolation(
          "horizontal_solution: slope identity violated");
  }
  return out;
}

bool small_trace_gap_holds(const UnimodularMatrix& A) {
  const std::int64_t t = A.trace();
  if (!(t == -2 || std::llabs(t) <= 1))
    throw PreconditionViolated(
        "small_trace_gap_holds: trace outside {-2,-1,0,1}");
  const GenusValue v = fiber_curve_genus(A);
  return v.is_exactly(Rational(0)) || v.certainly_ge(Rational(1, 8));
}

}  // namespace ratgenus

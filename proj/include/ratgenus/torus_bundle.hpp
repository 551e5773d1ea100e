#ifndef RATGENUS_TORUS_BUNDLE_HPP
#define RATGENUS_TORUS_BUNDLE_HPP

#include <cstdint>
#include <optional>

#include "ratgenus/genus_value.hpp"
#include "ratgenus/unimodular.hpp"

namespace ratgenus {

// Order of the fiber-curve class in the first homology of the mapping torus.
// For trace != 2 this is the least n >= 1 such that n*(1,0) lies in the image
// lattice of (A - I); the order divides |det(A - I)| = |trace - 2|...|, so a
// bounded search suffices. For trace = 2 the distinguished finite-order class
// has order p, the parabolic invariant; the caller's basis convention puts
// that class first. Returns nullopt for "infinite order", which the above
// conventions never produce.
std::optional<std::int64_t> knot_order(const UnimodularMatrix& A);

// The p >= 1 such that a trace-2 matrix is conjugate in GL(2,Z) to
// [[1, p], [0, 1]]; computed as the gcd of the entries of A - I, which is a
// conjugation invariant.
std::int64_t parabolic_p(const UnimodularMatrix& A);

// Rational genus of an essential curve in the fiber, for a monodromy written
// in a basis whose first member is the curve class:
//   trace == 2: exactly 1/(2p);
//   trace != 2: exactly |gamma| / (2 |trace - 2|).
GenusValue fiber_curve_genus(const UnimodularMatrix& A);

// Solution of the horizontal-surface equations: gamma*ell0 + (delta-1)*m = 0
// with minimal m >= 1, ell1 = alpha*ell0 + beta*m, ell = ell1 - ell0.
struct HorizontalData {
  std::int64_t ell0 = 0;
  std::int64_t ell1 = 0;
  std::int64_t m = 1;
  std::int64_t ell = 0;
};

// Throws VerticalCase when gamma = 0 and trace = -2 (the annulus branch where
// the genus vanishes). For trace != 2, gamma != 0 the result satisfies
// m/ell = gamma/(trace-2) exactly and the bound m/(2|ell|) is sharp.
HorizontalData horizontal_solution(const UnimodularMatrix& A);

// For trace = -2 or |trace| <= 1, the fiber-curve genus is either 0 or at
// least 1/8. Returns whether that gap holds (it always does; exercised as a
// sweep property).
bool small_trace_gap_holds(const UnimodularMatrix& A);

}  // namespace ratgenus

#endif  // RATGENUS_TORUS_BUNDLE_HPP

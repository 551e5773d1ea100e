#ifndef RATGENUS_GENUS_CALCULUS_HPP
#define RATGENUS_GENUS_CALCULUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ratgenus/genus_value.hpp"

namespace ratgenus {

// Rational genus of a knot in a homology sphere from its Seifert genus:
// 0 for the unknot, g - 1/2 otherwise.
GenusValue genus_from_seifert(std::int64_t g);

// Rational genus of the core of the surgery solid torus after m/n surgery on
// a knot in a homology sphere: the base value divided by m. Exactness is
// preserved.
GenusValue surgery_genus(const GenusValue& base, std::int64_t m);

// Connected-sum formula. Selects among the three value cases plus the
// triviality-propagation case by the statuses of the summands; refuses to
// guess when a status is Unknown.
std::pair<GenusValue, TrivialityStatus> connect_sum_genus(
    const GenusValue& v1, const TrivialityStatus& t1, const GenusValue& v2,
    const TrivialityStatus& t2);

// Lower bound for a satellite with the given winding number about a companion
// whose exterior has incompressible boundary: winding times the companion's
// lower bound. The upper endpoint is unbounded.
GenusValue satellite_lower(const GenusValue& base_lower, std::int64_t winding);

// Strict lower bound 1/12 for a non-trivial cable of a non-trivial cable of a
// knot that is not m-trivial for any m.
GenusValue double_cable_lower();

// Upper bound for the (p,q)-cable of the core of a surgery solid torus,
// built from a planar surface glued to a Seifert surface of the companion:
// (eta_s0 + (q-1)/2) / (q k).
GenusValue cable_construction_upper(const Rational& eta_s0, std::int64_t q,
                              std::int64_t k);

// Horizontal surface in a Seifert fiber space with boundary: branched
// covering of the base of degree k, exceptional multiplicities q_i.
struct SeifertHorizontalData {
  Rational chi_base;                        // Euler characteristic of the base
  std::vector<std::int64_t> multiplicities; // all >= 2
  std::int64_t degree = 1;                  // k >= 1
};

// chi(F) = k (chi(B) - sum(1 - 1/q_i)). Whenever the result is negative it
// must be at most -k/6; a violation raises InternalBoundViolation.
Rational horizontal_euler(const SeifertHorizontalData& d);

// Covering-degree arithmetic for a knot in a vertical torus: fiber class
// alpha*a + beta*b, horizontal-piece boundary classes ell_i*a + m*b_i.
struct VerticalTorusData {
  std::int64_t alpha = 0;
  std::int64_t beta = 1;  // |beta| >= 1; beta = 0 is the ordinary-fiber branch
  std::int64_t ell0 = 0;
  std::int64_t ell1 = 0;
  std::int64_t m = 1;  // >= 1
};

struct VerticalTorusChecks {
  std::int64_t k0 = 0;  // |beta*ell0 - alpha*m|
  std::int64_t k1 = 0;  // |beta*ell1 - alpha*m|
  std::int64_t p = 0;   // |ell1 - ell0|
  bool degree_sum_dominates = false;  // k0 + k1 >= p
};

VerticalTorusChecks vertical_torus_check(const VerticalTorusData& d);

// The vertical-half identity s*k0 = m*p for a prescribed component count s.
bool vertical_torus_identity_holds(const VerticalTorusData& d, std::int64_t s);

}  // namespace ratgenus

#endif  // RATGENUS_GENUS_CALCULUS_HPP

#ifndef RATGENUS_HYPERBOLIC_HPP
#define RATGENUS_HYPERBOLIC_HPP

#include <cstdint>
#include <string>

#include "ratgenus/cert_interval.hpp"
#include "ratgenus/genus_value.hpp"

namespace ratgenus {

// Published constants this certifier consumes (imported values, not
// re-derived): tube-packing coefficient 3.3957, minimal Margulis tube radius
// 0.531, minimal core length 0.162286, minimal cusp area 3.35, and the
// normalized meridian-length threshold 7.515.
CertInterval tube_packing_coefficient(
    mpfr_prec_t prec = CertInterval::kDefaultPrecision);
CertInterval margulis_tube_radius(
    mpfr_prec_t prec = CertInterval::kDefaultPrecision);
CertInterval margulis_core_length(
    mpfr_prec_t prec = CertInterval::kDefaultPrecision);
CertInterval min_cusp_area(mpfr_prec_t prec = CertInterval::kDefaultPrecision);
CertInterval normalized_meridian_threshold(
    mpfr_prec_t prec = CertInterval::kDefaultPrecision);

// Tube geometry of a short geodesic: core length, tube radius, cone angle.
struct TubeParams {
  CertInterval core_length;  // > 0
  CertInterval radius;       // > 0
  CertInterval cone_angle;   // in (0, 2*pi]

  TubeParams(CertInterval l, CertInterval r, CertInterval theta);
};

// h(R) = 3.3957 tanh(R) / cosh(2R).
CertInterval h_of_R(const CertInterval& R);

struct HMaximum {
  CertInterval radius;  // bracket certified to contain the maximizer
  CertInterval value;   // enclosure of the maximum value
};

// Certified maximization of h on (0, 3]: the derivative numerator changes
// sign exactly once (verified by subdivided interval evaluation), and a
// golden-section refinement with certified comparisons narrows the bracket.
// Deterministic for a fixed precision.
HMaximum maximize_h(mpfr_prec_t prec = CertInterval::kDefaultPrecision);

// Enclosure of max h / (2 pi); contains 0.162286.
CertInterval min_core_length(mpfr_prec_t prec = CertInterval::kDefaultPrecision);

// l sinh(R) R / (R + 1): the area lower bound per boundary wrap of a wrapped
// surface around a tube of core length l and radius R.
CertInterval wrapping_area_product(const CertInterval& l,
                                   const CertInterval& R);

// The same divided by 4 pi: a certified lower bound for the rational genus of
// a knot whose complement supports such a tube.
CertInterval wrapping_genus_lower(const CertInterval& l, const CertInterval& R);

// Maximal cusp data: torus area, Euclidean lengths of the meridian and the
// boundary slope, and their geometric intersection number.
struct CuspData {
  CertInterval area;          // > 0
  CertInterval len_meridian;  // > 0
  CertInterval len_slope;
  std::int64_t delta = 1;  // >= 1

  CertInterval normalized_meridian() const {
    return len_meridian / area.sqrt();
  }
};

// sqrt(A) / (12 * normalized meridian length), a lower bound for |chi(S)|/2p;
// monotone increasing in the area.
CertInterval cusp_chain_bound(const CuspData& d);
CertInterval cusp_bound_from_normalized(const CertInterval& area,
                                        const CertInterval& normalized_len);

// scl lower bounds transfer to the rational genus unchanged.
GenusValue genus_lower_from_scl(const Rational& scl_lower);

// Structured certificate for a strict inequality claim checked under
// worst-case (outward) rounding.
struct InequalityCertificate {
  enum class Verdict { Certified, Inconclusive };
  std::string claim;
  std::string interval_lo;
  std::string interval_hi;
  std::string rounding_mode;  // always "outward"
  Verdict verdict = Verdict::Inconclusive;

  bool certified() const { return verdict == Verdict::Certified; }
};

InequalityCertificate certify_exceeds(const CertInterval& value,
                                      const Rational& threshold,
                                      const std::string& claim);

}  // namespace ratgenus

#endif  // RATGENUS_HYPERBOLIC_HPP

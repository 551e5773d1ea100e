#include "ratgenus/hyperbolic.hpp"

#include <stdexcept>

#include "ratgenus/errors.hpp"

namespace ratgenus {

CertInterval tube_packing_coefficient(mpfr_prec_t prec) {
  return CertInterval::from_decimal("3.3957", prec);
}
CertInterval margulis_tube_radius(mpfr_prec_t prec) {
  return CertInterval::from_decimal("0.531", prec);
}
CertInterval margulis_core_length(mpfr_prec_t prec) {
  return CertInterval::from_decimal("0.162286", prec);
}
CertInterval min_cusp_area(mpfr_prec_t prec) {
  return CertInterval::from_decimal("3.35", prec);
}
CertInterval normalized_meridian_threshold(mpfr_prec_t prec) {
  return CertInterval::from_decimal("7.515", prec);
}

TubeParams::TubeParams(CertInterval l, CertInterval r, CertInterval theta)
    : core_length(std::move(l)), radius(std::move(r)),
      cone_angle(std::move(theta)) {
  if (!core_length.certainly_gt(Rational(0)))
    throw std::invalid_argument("TubeParams: core length must be positive");
  if (!radius.certainly_gt(Rational(0)))
    throw std::invalid_argument("TubeParams: radius must be positive");
  const CertInterval two_pi =
      CertInterval::pi(cone_angle.precision()) * CertInterval::from_int(2);
  if (!cone_angle.certainly_gt(Rational(0)) ||
      cone_angle.lo_double() > two_pi.hi_double())
    throw std::invalid_argument("TubeParams: cone angle outside (0, 2*pi]");
}

CertInterval h_of_R(const CertInterval& R) {
  if (!R.certainly_gt(Rational(0)))
    throw std::invalid_argument("h_of_R: R must be positive");
  const CertInterval two = CertInterval::from_int(2, R.precision());
  return tube_packing_coefficient(R.precision()) * R.tanh() /
         (two * R).cosh();
}

namespace {

// Sign of h'(R): after clearing positive factors, h'(R) has the sign of
// D(R) = cosh(2R) - sinh(2R)^2 = 1 + c - c^2 with c = cosh(2R).
CertInterval derivative_numerator(const CertInterval& R) {
  const CertInterval two = CertInterval::from_int(2, R.precision());
  const CertInterval c = (two * R).cosh();
  return CertInterval::from_int(1, R.precision()) + c - c * c;
}

enum class Sign { Positive, Negative, Straddles };

Sign interval_sign(const CertInterval& v) {
  if (v.certainly_gt(Rational(0))) return Sign::Positive;
  if (v.certainly_lt(Rational(0))) return Sign::Negative;
  return Sign::Straddles;
}

}  // namespace

HMaximum maximize_h(mpfr_prec_t prec) {
  // Step 1: certify the increasing-then-decreasing shape of h on [eps, 3] by
  // evaluating the derivative numerator on a subdivision. Exactly one
  // straddling run is allowed, with positives before and negatives after.
  const double eps = 1.0 / 64;
  const int pieces = 512;
  double bracket_lo = 0, bracket_hi = 0;
  int state = 0;  // 0 = positive run, 1 = straddling run, 2 = negative run
  for (int i = 0; i < pieces; ++i) {
    const double a = eps + (3.0 - eps) * i / pieces;
    const double b = eps + (3.0 - eps) * (i + 1) / pieces;
    const Sign s =
        interval_sign(derivative_numerator(CertInterval::from_endpoints(a, b, prec)));
    switch (s) {
      case Sign::Positive:
        if (state != 0)
          throw InternalBoundViolation("maximize_h: sign pattern not unimodal");
        break;
      case Sign::Straddles:
        if (state == 2)
          throw InternalBoundViolation("maximize_h: sign pattern not unimodal");
        if (state == 0) bracket_lo = a;
        bracket_hi = b;
        state = 1;
        break;
      case Sign::Negative:
        if (state == 0)
          throw InternalBoundViolation("maximize_h: no straddle before decay");
        state = 2;
        break;
    }
  }
  if (state != 2)
    throw InternalBoundViolation("maximize_h: derivative never went negative");

  // h is below h(1/2) on (0, eps]: h(R) <= 3.3957 tanh(eps) there.
  const CertInterval head_bound =
      tube_packing_coefficient(prec) *
      CertInterval::from_endpoints(eps, eps, prec).tanh();
  const CertInterval h_half = h_of_R(CertInterval::from_decimal("0.5", prec));
  if (!head_bound.certainly_below(h_half))
    throw InternalBoundViolation("maximize_h: head segment not dominated");

  // Step 2: golden-section refinement with certified comparisons inside the
  // bracket. The maximizer remains inside [a, b] throughout.
  const double inv_phi = 0.6180339887498949;
  double a = bracket_lo, b = bracket_hi;
  const double target_width = 1e-5;
  while (b - a > target_width) {
    const double c = b - (b - a) * inv_phi;
    const double d = a + (b - a) * inv_phi;
    const CertInterval hc = h_of_R(CertInterval::from_endpoints(c, c, prec));
    const CertInterval hd = h_of_R(CertInterval::from_endpoints(d, d, prec));
    if (hc.certainly_below(hd))
      a = c;
    else if (hd.certainly_below(hc))
      b = d;
    else
      break;  // enclosures overlap; bracket is already extremely tight
  }

  HMaximum out;
  out.radius = CertInterval::from_endpoints(a, b, prec);
  // Upper bound: range evaluation over the bracket. Lower bound: the best
  // point evaluation among the endpoints and midpoint.
  const CertInterval range = h_of_R(out.radius);
  const CertInterval at_mid =
      h_of_R(CertInterval::from_endpoints((a + b) / 2, (a + b) / 2, prec));
  const CertInterval at_a = h_of_R(CertInterval::from_endpoints(a, a, prec));
  const CertInterval at_b = h_of_R(CertInterval::from_endpoints(b, b, prec));
  double best_lo = at_mid.lo_double();
  if (at_a.lo_double() > best_lo) best_lo = at_a.lo_double();
  if (at_b.lo_double() > best_lo) best_lo = at_b.lo_double();
  out.value = CertInterval::from_endpoints(best_lo, range.hi_double(), prec);
  return out;
}

CertInterval min_core_length(mpfr_prec_t prec) {
  const HMaximum m = maximize_h(prec);
  const CertInterval two_pi =
      CertInterval::from_int(2, prec) * CertInterval::pi(prec);
  return m.value / two_pi;
}

CertInterval wrapping_area_product(const CertInterval& l,
                                   const CertInterval& R) {
  const CertInterval one = CertInterval::from_int(1, R.precision());
  return l * R.sinh() * R / (R + one);
}

CertInterval wrapping_genus_lower(const CertInterval& l,
                                  const CertInterval& R) {
  const CertInterval four_pi =
      CertInterval::from_int(4, R.precision()) * CertInterval::pi(R.precision());
  return wrapping_area_product(l, R) / four_pi;
}

CertInterval cusp_chain_bound(const CuspData& d) {
  if (!d.area.certainly_gt(Rational(0)))
    throw std::invalid_argument("cusp_chain_bound: area must be positive");
  if (d.delta < 1)
    throw std::invalid_argument("cusp_chain_bound: delta must be >= 1");
  return cusp_bound_from_normalized(d.area, d.normalized_meridian());
}

CertInterval cusp_bound_from_normalized(const CertInterval& area,
                                        const CertInterval& normalized_len) {
  const CertInterval twelve = CertInterval::from_int(12, area.precision());
  return area.sqrt() / (twelve * normalized_len);
}

GenusValue genus_lower_from_scl(const Rational& scl_lower) {
  if (scl_lower < Rational(0))
    throw std::invalid_argument("genus_lower_from_scl: negative bound");
  return GenusValue::at_least(scl_lower);
}

InequalityCertificate certify_exceeds(const CertInterval& value,
                                      const Rational& threshold,
                                      const std::string& claim) {
  InequalityCertificate cert;
  cert.claim = claim;
  cert.interval_lo = value.lo_string();
  cert.interval_hi = value.hi_string();
  cert.rounding_mode = "outward";
  cert.verdict = value.certainly_gt(threshold)
                     ? InequalityCertificate::Verdict::Certified
                     : InequalityCertificate::Verdict::Inconclusive;
  return cert;
}

}  // namespace ratgenus

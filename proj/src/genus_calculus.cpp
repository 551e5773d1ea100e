#include "ratgenus/genus_calculus.hpp"

#include <cstdlib>

#include "ratgenus/errors.hpp"

namespace ratgenus {

GenusValue genus_from_seifert(std::int64_t g) {
  if (g < 0) throw std::invalid_argument("genus_from_seifert: negative genus");
  if (g == 0) return GenusValue::exact(Rational(0));
  return GenusValue::exact(Rational(g) - Rational(1, 2));
}

GenusValue surgery_genus(const GenusValue& base, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("surgery_genus: m must be positive");
  return iv_scale(base, Rational(1, m));
}

std::pair<GenusValue, TrivialityStatus> connect_sum_genus(
    const GenusValue& v1, const TrivialityStatus& t1, const GenusValue& v2,
    const TrivialityStatus& t2) {
  if (t1.is_unknown() || t2.is_unknown())
    throw UnknownTriviality(
        "connect_sum_genus: cannot select a formula case with an Unknown "
        "summand status");

  // Summing with a knot that bounds a disk changes nothing; triviality of the
  // other side carries over.
  const bool left_trivial = t1.is_p_trivial() && t1.p() == 1;
  const bool right_trivial = t2.is_p_trivial() && t2.p() == 1;
  if (left_trivial || right_trivial) {
    const GenusValue& v = left_trivial ? v2 : v1;
    const TrivialityStatus& t = left_trivial ? t2 : t1;
    if (t.is_p_trivial())
      return {GenusValue::exact(Rational(0)), TrivialityStatus::p_trivial(t.p())};
    return {v, TrivialityStatus::not_p_trivial()};
  }

  if (t1.is_not_p_trivial() && t2.is_not_p_trivial()) {
    return {iv_add(v1, v2, Rational(1, 2)), TrivialityStatus::not_p_trivial()};
  }

  if (t1.is_p_trivial() && t2.is_p_trivial()) {
    const std::int64_t p1 = t1.p();
    const std::int64_t p2 = t2.p();
    const Rational value =
        Rational(1, 2) - Rational(p1 + p2) / Rational(2 * p1 * p2);
    // Value zero happens exactly for p1 = p2 = 2; that knot realizes its norm
    // by an annulus, which certifies neither a disk nor its absence here.
    if (value.is_zero())
      return {GenusValue::exact(value), TrivialityStatus::unknown()};
    return {GenusValue::exact(value), TrivialityStatus::not_p_trivial()};
  }

  // Exactly one side is p-trivial with p >= 2.
  const GenusValue& other = t1.is_p_trivial() ? v2 : v1;
  const std::int64_t p = t1.is_p_trivial() ? t1.p() : t2.p();
  const Rational shift = Rational(1, 2) - Rational(1, 2 * p);
  return {iv_add(other, GenusValue::exact(Rational(0)), shift),
          TrivialityStatus::not_p_trivial()};
}

GenusValue satellite_lower(const GenusValue& base_lower, std::int64_t winding) {
  if (winding < 1)
    throw std::invalid_argument("satellite_lower: winding must be positive");
  return GenusValue::at_least(base_lower.lo() * Rational(winding),
                              base_lower.lo_strict());
}

GenusValue double_cable_lower() {
  return GenusValue::at_least(Rational(1, 12), /*strict=*/true);
}

GenusValue cable_construction_upper(const Rational& eta_s0, std::int64_t q,
                              std::int64_t k) {
  if (eta_s0 < Rational(0))
    throw std::invalid_argument("cable_construction_upper: eta must be non-negative");
  if (q < 2) throw std::invalid_argument("cable_construction_upper: q must be >= 2");
  if (k < 1) throw std::invalid_argument("cable_construction_upper: k must be >= 1");
  const Rational hi = (eta_s0 + Rational(q - 1, 2)) / Rational(q * k);
  return GenusValue::at_most(hi);
}

Rational horizontal_euler(const SeifertHorizontalData& d) {
  if (d.degree < 1)
    throw std::invalid_argument("horizontal_euler: degree must be >= 1");
  Rational cone_defect(0);
  for (std::int64_t q : d.multiplicities) {
    if (q < 2)
      throw std::invalid_argument(
          "horizontal_euler: multiplicities must be >= 2");
    cone_defect = cone_defect + (Rational(1) - Rational(1, q));
  }
  const Rational chi = Rational(d.degree) * (d.chi_base - cone_defect);
  if (chi < Rational(0) && chi > Rational(-d.degree, 6))
    throw InternalBoundViolation(
        "horizontal_euler: negative chi(F) above -k/6, formula transcription "
        "bug");
  return chi;
}

VerticalTorusChecks vertical_torus_check(const VerticalTorusData& d) {
  if (d.beta == 0)
    throw PreconditionViolated(
        "vertical_torus_check: beta = 0 is the ordinary-fiber branch");
  if (d.m < 1)
    throw std::invalid_argument("vertical_torus_check: m must be >= 1");
  VerticalTorusChecks out;
  out.k0 = std::llabs(d.beta * d.ell0 - d.alpha * d.m);
  out.k1 = std::llabs(d.beta * d.ell1 - d.alpha * d.m);
  out.p = std::llabs(d.ell1 - d.ell0);
  out.degree_sum_dominates = out.k0 + out.k1 >= out.p;
  return out;
}

bool vertical_torus_identity_holds(const VerticalTorusData& d,
                                   std::int64_t s) {
  const VerticalTorusChecks c = vertical_torus_check(d);
  if (s < 1 || (c.p != 0 && (d.m * c.p) % s != 0)) return false;
  return s * c.k0 == d.m * c.p;
}

}  // namespace ratgenus

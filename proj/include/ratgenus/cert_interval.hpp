#ifndef RATGENUS_CERT_INTERVAL_HPP
#define RATGENUS_CERT_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

#include "ratgenus/rational.hpp"

namespace ratgenus {

// Directed-rounded real interval: every operation returns an enclosure of the
// exact result. Endpoints are MPFR binary floats; the working precision is a
// per-value property (at least 64 fractional bits, default 128), never global
// state, so parallel sweeps with different settings do not interfere.
class CertInterval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  CertInterval() : CertInterval(kDefaultPrecision) {}
  explicit CertInterval(mpfr_prec_t prec);
  CertInterval(const CertInterval& o);
  CertInterval(CertInterval&& o) noexcept;
  CertInterval& operator=(const CertInterval& o);
  CertInterval& operator=(CertInterval&& o) noexcept;
  ~CertInterval();

  // Exact integer point.
  static CertInterval from_int(long v, mpfr_prec_t prec = kDefaultPrecision);
  // Decimal literal converted outward (the literal need not be binary-exact).
  static CertInterval from_decimal(std::string_view text,
                                   mpfr_prec_t prec = kDefaultPrecision);
  static CertInterval from_rational(const Rational& r,
                                    mpfr_prec_t prec = kDefaultPrecision);
  static CertInterval from_endpoints(double lo, double hi,
                                     mpfr_prec_t prec = kDefaultPrecision);
  static CertInterval pi(mpfr_prec_t prec = kDefaultPrecision);
  // Smallest interval containing both arguments.
  static CertInterval hull(const CertInterval& a, const CertInterval& b);

  mpfr_prec_t precision() const { return prec_; }
  double lo_double() const;   // rounded down
  double hi_double() const;   // rounded up
  double mid_double() const;
  double width_double() const;  // rounded up
  CertInterval midpoint() const;

  bool contains(double x) const;
  bool contains(const Rational& r) const;
  bool contains(const CertInterval& inner) const;
  // Entirely above / below a rational, with outward rounding already folded
  // into the endpoints: these are certified comparisons.
  bool certainly_gt(const Rational& r) const;
  bool certainly_lt(const Rational& r) const;
  bool certainly_ge(const Rational& r) const;
  bool certainly_le(const Rational& r) const;
  // Certified interval comparison: every point of *this is below every point
  // of the other interval.
  bool certainly_below(const CertInterval& o) const;

  // Agreement with a published decimal at its printed precision: the whole
  // interval lies within half a unit in the last printed place.
  bool matches_decimal(std::string_view text) const;

  CertInterval operator+(const CertInterval& o) const;
  CertInterval operator-(const CertInterval& o) const;
  CertInterval operator*(const CertInterval& o) const;
  CertInterval operator/(const CertInterval& o) const;
  CertInterval operator-() const;

  CertInterval sqrt() const;
  CertInterval sinh() const;
  CertInterval cosh() const;
  CertInterval tanh() const;

  // Identical endpoints bit for bit (used by reproducibility tests).
  bool identical(const CertInterval& o) const;

  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  std::string str(int digits = 12) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace ratgenus

#endif  // RATGENUS_CERT_INTERVAL_HPP

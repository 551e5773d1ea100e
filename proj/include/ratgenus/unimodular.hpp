#ifndef RATGENUS_UNIMODULAR_HPP
#define RATGENUS_UNIMODULAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratgenus {

// An element of SL(2,Z), written [[alpha, beta], [gamma, delta]]. Torus-bundle
// monodromies are expressed in an ordered basis of the fiber homology whose
// first member is the knot class.
struct UnimodularMatrix {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 1;

  UnimodularMatrix() = default;
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d)
      : alpha(a), beta(b), gamma(c), delta(d) {
    if (a * d - b * c != 1)
      throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
  }

  std::int64_t trace() const { return alpha + delta; }
  bool is_identity() const {
    return alpha == 1 && beta == 0 && gamma == 0 && delta == 1;
  }

  UnimodularMatrix operator*(const UnimodularMatrix& o) const {
    return UnimodularMatrix(alpha * o.alpha + beta * o.gamma,
                            alpha * o.beta + beta * o.delta,
                            gamma * o.alpha + delta * o.gamma,
                            gamma * o.beta + delta * o.delta);
  }
  UnimodularMatrix inverse() const {
    return UnimodularMatrix(delta, -beta, -gamma, alpha);
  }

  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
           a.delta == b.delta;
  }
  friend bool operator!=(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return !(a == b);
  }

  std::string str() const {
    return "[" + std::to_string(alpha) + " " + std::to_string(beta) + "; " +
           std::to_string(gamma) + " " + std::to_string(delta) + "]";
  }
};

}  // namespace ratgenus

#endif  // RATGENUS_UNIMODULAR_HPP

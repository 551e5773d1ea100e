#ifndef RATGENUS_CLASSIFIER_HPP
#define RATGENUS_CLASSIFIER_HPP

#include <cstdint>
#include <set>
#include <string>

#include "ratgenus/eval.hpp"
#include "ratgenus/genus_value.hpp"
#include "ratgenus/knot_spec.hpp"
#include "ratgenus/unimodular.hpp"

namespace ratgenus {

// Geometric class of the ambient manifold, as far as the decision procedure
// needs it.
struct ManifoldClass {
  enum class Kind {
    Reducible,
    LensSpace,
    Hyperbolic,
    SmallSFS,   // atoroidal Seifert fibered over S^2, three exceptional fibers
    Toroidal,
    TorusBundle,
  };

  Kind kind = Kind::Hyperbolic;
  std::int64_t lens_p = 0;  // LensSpace only; >= 1
  std::int64_t lens_q = 0;
  UnimodularMatrix monodromy;  // TorusBundle only

  static ManifoldClass reducible() { return {Kind::Reducible, 0, 0, {}}; }
  static ManifoldClass lens_space(std::int64_t p, std::int64_t q);
  static ManifoldClass hyperbolic() { return {Kind::Hyperbolic, 0, 0, {}}; }
  static ManifoldClass small_sfs() { return {Kind::SmallSFS, 0, 0, {}}; }
  static ManifoldClass toroidal() { return {Kind::Toroidal, 0, 0, {}}; }
  static ManifoldClass torus_bundle(const UnimodularMatrix& A);

  std::string str() const;
};

// The structural positions a low-norm knot can occupy, pooled across the
// per-class alternative lists.
enum class StructuralForm {
  Trivial,
  HeegaardTorusCurve,
  KleinBottleCurveL4k,
  MargulisCoreCable,
  ExceptionalFiberCable,
  PrismRP2Fiber,
  JSJBoundaryCurve,
  OrdinaryFiber,
  MoebiusBundleFiber,
  AnosovFiberCurve,
  IrreducibleSummand,
  RP3RP3Sum,
};

std::string form_name(StructuralForm f);

// The alternative list the decision procedure offers for knots below the
// class threshold; admissible(c, f) is total over all pairs.
const std::set<StructuralForm>& alternative_forms(ManifoldClass::Kind kind);
bool admissible(ManifoldClass::Kind kind, StructuralForm f);

// The threshold each class's decision procedure uses. The hyperbolic-type
// classes accept a configurable threshold (default 1/402); the reducible and
// lens-space classes have their own fixed constants.
Rational class_threshold(ManifoldClass::Kind kind,
                         const Rational& hyperbolic_threshold = Rational(1,
                                                                         402));

struct ClassifyResult {
  std::set<StructuralForm> forms;
  // The value interval straddles the threshold: the union list applies but
  // neither branch is settled.
  bool indeterminate = false;
};

// Decision procedure: a value at or above the threshold forces nothing; a
// value certifiably below it restricts the knot to the class's alternative
// list.
ClassifyResult classify(const ManifoldClass& mc, const GenusValue& v,
                        const Rational& threshold);

// The vanishing alternatives consistent with a norm-zero construction.
enum class VanishingForm { BoundsDisk, LensCore, MoebiusSeifertFiber };

std::set<VanishingForm> vanishing_classify(const KnotSpec& spec);

}  // namespace ratgenus

#endif  // RATGENUS_CLASSIFIER_HPP

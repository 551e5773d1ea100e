#include "ratgenus/classifier.hpp"

#include "ratgenus/errors.hpp"

namespace ratgenus {

ManifoldClass ManifoldClass::lens_space(std::int64_t p, std::int64_t q) {
  if (p < 1)
    throw std::invalid_argument("ManifoldClass: lens parameter p must be >= 1");
  ManifoldClass mc;
  mc.kind = Kind::LensSpace;
  mc.lens_p = p;
  mc.lens_q = q;
  return mc;
}

ManifoldClass ManifoldClass::torus_bundle(const UnimodularMatrix& A) {
  ManifoldClass mc;
  mc.kind = Kind::TorusBundle;
  mc.monodromy = A;
  return mc;
}

std::string ManifoldClass::str() const {
  switch (kind) {
    case Kind::Reducible:
      return "reducible";
    case Kind::LensSpace:
      return "lens(" + std::to_string(lens_p) + "," + std::to_string(lens_q) +
             ")";
    case Kind::Hyperbolic:
      return "hyperbolic";
    case Kind::SmallSFS:
      return "small-sfs";
    case Kind::Toroidal:
      return "toroidal";
    case Kind::TorusBundle:
      return "torus-bundle" + monodromy.str();
  }
  return "?";
}

std::string form_name(StructuralForm f) {
  switch (f) {
    case StructuralForm::Trivial:
      return "trivial";
    case StructuralForm::HeegaardTorusCurve:
      return "heegaard-torus-curve";
    case StructuralForm::KleinBottleCurveL4k:
      return "klein-bottle-curve-L4k";
    case StructuralForm::MargulisCoreCable:
      return "margulis-core-cable";
    case StructuralForm::ExceptionalFiberCable:
      return "exceptional-fiber-cable";
    case StructuralForm::PrismRP2Fiber:
      return "prism-rp2-fiber";
    case StructuralForm::JSJBoundaryCurve:
      return "jsj-boundary-curve";
    case StructuralForm::OrdinaryFiber:
      return "ordinary-fiber";
    case StructuralForm::MoebiusBundleFiber:
      return "moebius-bundle-fiber";
    case StructuralForm::AnosovFiberCurve:
      return "anosov-fiber-curve";
    case StructuralForm::IrreducibleSummand:
      return "irreducible-summand";
    case StructuralForm::RP3RP3Sum:
      return "rp3-rp3-sum";
  }
  return "?";
}

const std::set<StructuralForm>& alternative_forms(ManifoldClass::Kind kind) {
  // One list per manifold class: the positions a knot below the threshold
  // must occupy.
  static const std::set<StructuralForm> reducible = {
      StructuralForm::IrreducibleSummand, StructuralForm::RP3RP3Sum};
  static const std::set<StructuralForm> lens = {
      StructuralForm::HeegaardTorusCurve, StructuralForm::KleinBottleCurveL4k};
  static const std::set<StructuralForm> hyperbolic = {
      StructuralForm::Trivial, StructuralForm::MargulisCoreCable};
  static const std::set<StructuralForm> small_sfs = {
      StructuralForm::Trivial, StructuralForm::ExceptionalFiberCable,
      StructuralForm::PrismRP2Fiber};
  static const std::set<StructuralForm> toroidal = {
      StructuralForm::Trivial,          StructuralForm::MargulisCoreCable,
      StructuralForm::JSJBoundaryCurve, StructuralForm::OrdinaryFiber,
      StructuralForm::ExceptionalFiberCable,
      StructuralForm::MoebiusBundleFiber,
      StructuralForm::AnosovFiberCurve};
  static const std::set<StructuralForm> torus_bundle = {
      StructuralForm::Trivial, StructuralForm::OrdinaryFiber,
      StructuralForm::MoebiusBundleFiber, StructuralForm::AnosovFiberCurve};
  switch (kind) {
    case ManifoldClass::Kind::Reducible:
      return reducible;
    case ManifoldClass::Kind::LensSpace:
      return lens;
    case ManifoldClass::Kind::Hyperbolic:
      return hyperbolic;
    case ManifoldClass::Kind::SmallSFS:
      return small_sfs;
    case ManifoldClass::Kind::Toroidal:
      return toroidal;
    case ManifoldClass::Kind::TorusBundle:
      return torus_bundle;
  }
  return hyperbolic;
}

bool admissible(ManifoldClass::Kind kind, StructuralForm f) {
  return alternative_forms(kind).count(f) > 0;
}

Rational class_threshold(ManifoldClass::Kind kind,
                         const Rational& hyperbolic_threshold) {
  switch (kind) {
    case ManifoldClass::Kind::Reducible:
      return Rational(1, 12);
    case ManifoldClass::Kind::LensSpace:
      return Rational(1, 24);
    default:
      return hyperbolic_threshold;
  }
}

ClassifyResult classify(const ManifoldClass& mc, const GenusValue& v,
                        const Rational& threshold) {
  ClassifyResult out;
  if (v.certainly_ge(threshold)) return out;  // no structural constraint
  out.forms = alternative_forms(mc.kind);
  if (!v.certainly_lt(threshold)) out.indeterminate = true;
  return out;
}

std::set<VanishingForm> vanishing_classify(const KnotSpec& spec) {
  const GenusResult r = eval_spec(spec);
  if (!r.value.is_exactly(Rational(0)))
    throw NonzeroGenus("vanishing_classify: value is not exactly zero");

  if (r.triviality.is_p_trivial()) {
    if (r.triviality.p() == 1) return {VanishingForm::BoundsDisk};
    return {VanishingForm::LensCore};
  }
  // Norm zero without a disk: annulus case, a fiber over a Moebius-band
  // orbifold.
  return {VanishingForm::MoebiusSeifertFiber};
}

}  // namespace ratgenus

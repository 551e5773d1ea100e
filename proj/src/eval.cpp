#include "ratgenus/eval.hpp"

#include <numeric>

#include "ratgenus/errors.hpp"
#include "ratgenus/genus_calculus.hpp"
#include "ratgenus/torus_bundle.hpp"

namespace ratgenus {

using namespace spec_node;

bool is_homology_sphere_knot(const KnotSpec& spec) {
  if (spec.as<Unknot>() || spec.as<SeedKnot>() || spec.as<TorusKnot>())
    return true;
  if (const auto* s = spec.as<Surgery>())
    return s->m == 1 && is_homology_sphere_knot(*s->base);
  if (const auto* c = spec.as<ConnectSum>())
    return is_homology_sphere_knot(*c->left) &&
           is_homology_sphere_knot(*c->right);
  if (const auto* c = spec.as<Cable>()) return is_homology_sphere_knot(*c->base);
  if (const auto* s = spec.as<Satellite>())
    return is_homology_sphere_knot(*s->base);
  return false;  // torus-bundle fibers
}

namespace {

std::optional<std::int64_t> image_order(std::optional<std::int64_t> base_order,
                                        std::int64_t multiple) {
  // Order of multiple*[K] when [K] has the given order.
  if (!base_order) return std::nullopt;
  return *base_order / std::gcd(*base_order, multiple);
}

GenusResult eval_node(const KnotSpec& spec);

// Whether the knot exterior certifiably has incompressible boundary: true for
// knots that are not p-trivial for any p, and preserved by taking cables
// (the cable exterior is the base exterior glued to a cable space).
bool exterior_incompressible(const KnotSpec& spec) {
  if (const auto* c = spec.as<Cable>()) return exterior_incompressible(*c->base);
  return eval_node(spec).triviality.is_not_p_trivial();
}

GenusResult eval_cable(const Cable& c) {
  GenusResult base = eval_node(*c.base);
  if (c.q == 1) return base;  // a cable of slope p/1 is isotopic to the core

  GenusResult out;
  out.value = GenusValue::unconstrained();
  out.triviality = TrivialityStatus::unknown();
  out.order = image_order(base.order, c.q);
  if (exterior_incompressible(*c.base))
    out.value = iv_refine(out.value, satellite_lower(base.value, c.q));
  // Non-trivial cable of a non-trivial cable of a never-trivial knot.
  if (const auto* inner = c.base->as<Cable>()) {
    if (inner->q >= 2 && eval_node(*inner->base).triviality.is_not_p_trivial())
      out.value = iv_refine(out.value, double_cable_lower());
  }
  return out;
}

GenusResult eval_node(const KnotSpec& spec) {
  GenusResult out;

  if (spec.as<Unknot>()) {
    out.value = GenusValue::exact(Rational(0));
    out.triviality = TrivialityStatus::p_trivial(1);
    out.order = 1;
    return out;
  }

  if (const auto* s = spec.as<SeedKnot>()) {
    out.value = genus_from_seifert(s->genus);
    out.triviality = s->genus == 0 ? TrivialityStatus::p_trivial(1)
                                   : TrivialityStatus::not_p_trivial();
    out.order = 1;
    return out;
  }

  if (const auto* t = spec.as<TorusKnot>()) {
    // Seifert genus of the (u,v) torus knot: (u-1)(v-1)/2, a classical fact
    // not re-derived here.
    const std::int64_t g = (t->u - 1) * (t->v - 1) / 2;
    out.value = genus_from_seifert(g);
    out.triviality = TrivialityStatus::not_p_trivial();
    out.order = 1;
    return out;
  }

  if (const auto* s = spec.as<Surgery>()) {
    if (!is_homology_sphere_knot(*s->base))
      throw UnsupportedComposition(
          "eval_spec: surgery base does not live in a homology sphere; no "
          "formula applies");
    GenusResult base = eval_node(*s->base);
    out.value = surgery_genus(base.value, s->m);
    out.order = s->m;
    if (base.triviality.is_p_trivial() && base.triviality.p() == 1) {
      // Core of a genus-1 Heegaard splitting of the resulting lens space.
      out.triviality = TrivialityStatus::p_trivial(s->m);
    } else if (base.triviality.is_not_p_trivial()) {
      // The base exterior has incompressible boundary, and surgery does not
      // change the knot exterior.
      out.triviality = TrivialityStatus::not_p_trivial();
    } else {
      out.triviality = TrivialityStatus::unknown();
    }
    return out;
  }

  if (const auto* c = spec.as<ConnectSum>()) {
    GenusResult l = eval_node(*c->left);
    GenusResult r = eval_node(*c->right);
    auto [value, status] =
        connect_sum_genus(l.value, l.triviality, r.value, r.triviality);
    out.value = value;
    out.triviality = status;
    if (l.order && r.order) out.order = std::lcm(*l.order, *r.order);
    return out;
  }

  if (const auto* c = spec.as<Cable>()) return eval_cable(*c);

  if (const auto* s = spec.as<Satellite>()) {
    GenusResult base = eval_node(*s->base);
    out.order = image_order(base.order, s->winding);
    out.triviality = TrivialityStatus::unknown();
    if (base.triviality.is_not_p_trivial())
      out.value = satellite_lower(base.value, s->winding);
    else
      out.value = GenusValue::unconstrained();
    return out;
  }

  if (const auto* t = spec.as<TorusBundleFiber>()) {
    out.value = fiber_curve_genus(t->monodromy);
    out.order = knot_order(t->monodromy);
    out.triviality = TrivialityStatus::unknown();
    return out;
  }

  throw UnsupportedComposition("eval_spec: unhandled node kind");
}

}  // namespace

GenusResult eval_spec(const KnotSpec& spec) {
  GenusResult result = eval_node(spec);
  // A p-trivial knot has vanishing norm; anything else is a bug.
  if (result.triviality.is_p_trivial() &&
      !result.value.is_exactly(Rational(0)))
    throw InternalBoundViolation(
        "eval_spec: p-trivial result with non-zero value");
  return result;
}

}  // namespace ratgenus

#ifndef RATGENUS_KNOT_SPEC_HPP
#define RATGENUS_KNOT_SPEC_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <variant>

#include "ratgenus/unimodular.hpp"

namespace ratgenus {

class KnotSpec;
using KnotSpecPtr = std::shared_ptr<const KnotSpec>;

// Which ambient homology sphere a seed knot lives in. Only the fact that the
// ambient is a homology sphere enters the formulas; the tag is kept for
// reporting.
enum class HomologySphereTag { S3, Other };

namespace spec_node {

struct Unknot {};

// A knot in a homology sphere of known Seifert genus. The hyperbolic flag is
// carried for the catalog constructions that need a hyperbolic seed.
struct SeedKnot {
  std::int64_t genus = 0;
  HomologySphereTag ambient = HomologySphereTag::S3;
  bool hyperbolic = false;
};

struct TorusKnot {
  std::int64_t u = 2;
  std::int64_t v = 3;
};

// Core of the surgery solid torus after m/n surgery on the base knot.
struct Surgery {
  KnotSpecPtr base;
  std::int64_t m = 1;  // > 0
  std::int64_t n = 0;  // coprime to m
};

struct ConnectSum {
  KnotSpecPtr left;
  KnotSpecPtr right;
};

// (p,q)-cable: a curve on the boundary of a tubular neighborhood of the base,
// homologous to q times the core.
struct Cable {
  KnotSpecPtr base;
  std::int64_t p = 1;
  std::int64_t q = 1;  // >= 1, coprime to p
};

struct Satellite {
  KnotSpecPtr base;
  std::int64_t winding = 1;  // > 0
};

// Essential curve in the fiber of the torus bundle with the given monodromy,
// expressed in a fiber-homology basis whose first member is the curve class.
struct TorusBundleFiber {
  UnimodularMatrix monodromy;
};

using Node = std::variant<Unknot, SeedKnot, TorusKnot, Surgery, ConnectSum,
                          Cable, Satellite, TorusBundleFiber>;

}  // namespace spec_node

// Abstract syntax tree of knot constructions. Nodes are immutable and shared;
// factory functions validate the structural invariants.
class KnotSpec {
 public:
  static KnotSpecPtr unknot() {
    return wrap(spec_node::Unknot{});
  }

  static KnotSpecPtr seed_knot(std::int64_t genus,
                               HomologySphereTag ambient = HomologySphereTag::S3,
                               bool hyperbolic = false) {
    if (genus < 0)
      throw std::invalid_argument("seed_knot: genus must be non-negative");
    return wrap(spec_node::SeedKnot{genus, ambient, hyperbolic});
  }

  static KnotSpecPtr torus_knot(std::int64_t u, std::int64_t v) {
    if (u <= 1 || v <= 1)
      throw std::invalid_argument("torus_knot: parameters must exceed 1");
    if (std::gcd(u, v) != 1)
      throw std::invalid_argument("torus_knot: parameters must be coprime");
    return wrap(spec_node::TorusKnot{u, v});
  }

  static KnotSpecPtr surgery(KnotSpecPtr base, std::int64_t m, std::int64_t n) {
    if (!base) throw std::invalid_argument("surgery: null base");
    if (m <= 0) throw std::invalid_argument("surgery: m must be positive");
    if (std::gcd(m, n < 0 ? -n : n) != 1)
      throw std::invalid_argument("surgery: m and n must be coprime");
    return wrap(spec_node::Surgery{std::move(base), m, n});
  }

  static KnotSpecPtr connect_sum(KnotSpecPtr left, KnotSpecPtr right) {
    if (!left || !right) throw std::invalid_argument("connect_sum: null side");
    return wrap(spec_node::ConnectSum{std::move(left), std::move(right)});
  }

  static KnotSpecPtr cable(KnotSpecPtr base, std::int64_t p, std::int64_t q) {
    if (!base) throw std::invalid_argument("cable: null base");
    if (q < 1) throw std::invalid_argument("cable: q must be at least 1");
    if (std::gcd(p < 0 ? -p : p, q) != 1)
      throw std::invalid_argument("cable: p and q must be coprime");
    return wrap(spec_node::Cable{std::move(base), p, q});
  }

  static KnotSpecPtr satellite(KnotSpecPtr base, std::int64_t winding) {
    if (!base) throw std::invalid_argument("satellite: null base");
    if (winding < 1)
      throw std::invalid_argument("satellite: winding must be positive");
    return wrap(spec_node::Satellite{std::move(base), winding});
  }

  static KnotSpecPtr torus_bundle_fiber(const UnimodularMatrix& monodromy) {
    if (monodromy.is_identity())
      throw std::invalid_argument(
          "torus_bundle_fiber: identity monodromy is excluded");
    return wrap(spec_node::TorusBundleFiber{monodromy});
  }

  const spec_node::Node& node() const { return node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  bool equals(const KnotSpec& other) const;

 private:
  explicit KnotSpec(spec_node::Node node) : node_(std::move(node)) {}
  static KnotSpecPtr wrap(spec_node::Node node) {
    return KnotSpecPtr(new KnotSpec(std::move(node)));
  }

  spec_node::Node node_;
};

inline bool specs_equal(const KnotSpecPtr& a, const KnotSpecPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

inline bool KnotSpec::equals(const KnotSpec& other) const {
  using namespace spec_node;
  if (node_.index() != other.node_.index()) return false;
  if (as<Unknot>()) return true;
  if (const auto* s = as<SeedKnot>()) {
    const auto* o = other.as<SeedKnot>();
    return s->genus == o->genus && s->ambient == o->ambient &&
           s->hyperbolic == o->hyperbolic;
  }
  if (const auto* t = as<TorusKnot>()) {
    const auto* o = other.as<TorusKnot>();
    return t->u == o->u && t->v == o->v;
  }
  if (const auto* s = as<Surgery>()) {
    const auto* o = other.as<Surgery>();
    return s->m == o->m && s->n == o->n && specs_equal(s->base, o->base);
  }
  if (const auto* c = as<ConnectSum>()) {
    const auto* o = other.as<ConnectSum>();
    return specs_equal(c->left, o->left) && specs_equal(c->right, o->right);
  }
  if (const auto* c = as<Cable>()) {
    const auto* o = other.as<Cable>();
    return c->p == o->p && c->q == o->q && specs_equal(c->base, o->base);
  }
  if (const auto* s = as<Satellite>()) {
    const auto* o = other.as<Satellite>();
    return s->winding == o->winding && specs_equal(s->base, o->base);
  }
  if (const auto* t = as<TorusBundleFiber>()) {
    const auto* o = other.as<TorusBundleFiber>();
    return t->monodromy == o->monodromy;
  }
  return false;
}

// Structural test used by the surgery rule: does this construction live in a
// homology sphere? Surgery with m = 1 and cables/satellites preserve the
// ambient manifold; surgery with m > 1 does not.
bool is_homology_sphere_knot(const KnotSpec& spec);

}  // namespace ratgenus

#endif  // RATGENUS_KNOT_SPEC_HPP

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratgenus/errors.hpp"
#include "ratgenus/eval.hpp"
#include "ratgenus/genus_value.hpp"
#include "ratgenus/rational.hpp"

using namespace ratgenus;

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(9, 2) * Rational(1, 19) == Rational(9, 38));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(1, 12) < Rational(1, 4));
  CHECK(Rational(5) / Rational(10) == Rational(1, 2));
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("iv_scale multiplies endpoints and keeps strictness") {
  CHECK(iv_scale(GenusValue::exact(Rational(1, 2)), Rational(1, 19)) ==
        GenusValue::exact(Rational(1, 38)));
  CHECK(iv_scale(GenusValue::at_least(Rational(1, 402)), Rational(2)) ==
        GenusValue::at_least(Rational(1, 201)));
  CHECK(iv_scale(GenusValue::exact(Rational(9, 2)), Rational(1, 19)) ==
        GenusValue::exact(Rational(9, 38)));
  const GenusValue strict =
      iv_scale(GenusValue::at_least(Rational(1, 12), true), Rational(2));
  CHECK(strict.lo_strict());
  CHECK(strict.lo() == Rational(1, 6));
  CHECK_THROWS_AS(iv_scale(GenusValue::exact(Rational(1)), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("iv_add sums endpoints with shift") {
  const GenusValue h = GenusValue::exact(Rational(1, 2));
  CHECK(iv_add(h, h, Rational(1, 2)) == GenusValue::exact(Rational(3, 2)));
  const GenusValue z = GenusValue::exact(Rational(0));
  CHECK(iv_add(z, z, Rational(0)) == z);
  CHECK(iv_add(GenusValue::at_least(Rational(1, 12)), z, Rational(1, 4)) ==
        GenusValue::at_least(Rational(1, 3)));
  // strictness propagates from either addend
  const GenusValue s = GenusValue::at_least(Rational(1, 12), true);
  CHECK(iv_add(s, z, Rational(0)).lo_strict());
}

TEST_CASE("iv_refine intersects and detects contradictions") {
  CHECK(iv_refine(GenusValue::at_most(Rational(1, 4)),
                  GenusValue::at_least(Rational(1, 12))) ==
        GenusValue::bounds(Rational(1, 12), Rational(1, 4)));
  const GenusValue e = GenusValue::exact(Rational(9, 38));
  CHECK(iv_refine(e, GenusValue::at_least(Rational(0))) == e);
  CHECK_THROWS_AS(iv_refine(GenusValue::at_most(Rational(1, 24), true),
                            GenusValue::at_least(Rational(1, 12), true)),
                  EmptyIntersection);
  // touching endpoints with a strict side are empty too
  CHECK_THROWS_AS(iv_refine(GenusValue::at_most(Rational(1, 12)),
                            GenusValue::at_least(Rational(1, 12), true)),
                  EmptyIntersection);
  CHECK_NOTHROW(iv_refine(GenusValue::at_most(Rational(1, 12)),
                          GenusValue::at_least(Rational(1, 12))));
}

TEST_CASE("iv_refine is idempotent and commutative on random intervals") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(0, 12), den(1, 12), flag(0, 1);
  auto random_interval = [&]() {
    Rational lo(num(rng), den(rng));
    if (flag(rng)) return GenusValue::at_least(lo, flag(rng) != 0);
    Rational hi = lo + Rational(num(rng), den(rng));
    bool strict = hi != lo && flag(rng) != 0;
    return GenusValue::bounds(lo, hi, hi != lo && flag(rng) != 0, strict);
  };
  for (int i = 0; i < 500; ++i) {
    GenusValue a = random_interval();
    GenusValue b = random_interval();
    CHECK(iv_refine(a, a) == a);
    bool ab_ok = true, ba_ok = true;
    GenusValue ab = a, ba = b;
    try {
      ab = iv_refine(a, b);
    } catch (const EmptyIntersection&) {
      ab_ok = false;
    }
    try {
      ba = iv_refine(b, a);
    } catch (const EmptyIntersection&) {
      ba_ok = false;
    }
    CHECK(ab_ok == ba_ok);
    if (ab_ok) CHECK(ab == ba);
  }
}

TEST_CASE("eval: unknot and seeds") {
  GenusResult r = eval_spec(KnotSpec::unknot());
  CHECK(r.value.is_exactly(Rational(0)));
  CHECK(r.triviality == TrivialityStatus::p_trivial(1));
  CHECK(r.order == 1);

  r = eval_spec(KnotSpec::seed_knot(5, HomologySphereTag::S3, true));
  CHECK(r.value.is_exactly(Rational(9, 2)));
  CHECK(r.triviality.is_not_p_trivial());
}

TEST_CASE("eval: surgery on a genus-5 seed gives 9/38 with order 19") {
  const auto spec =
      KnotSpec::surgery(KnotSpec::seed_knot(5, HomologySphereTag::S3, true),
                        19, 1);
  const GenusResult r = eval_spec(spec);
  CHECK(r.value.is_exactly(Rational(9, 38)));
  CHECK(r.triviality.is_not_p_trivial());
  CHECK(r.order == 19);
}

TEST_CASE("eval: sum of two lens-core knots has vanishing norm, order 2") {
  const auto rp = KnotSpec::surgery(KnotSpec::unknot(), 2, 1);
  const GenusResult r = eval_spec(KnotSpec::connect_sum(rp, rp));
  CHECK(r.value.is_exactly(Rational(0)));
  CHECK(r.order == 2);
}

TEST_CASE("eval: surgery needs a homology-sphere base") {
  const auto lens_core = KnotSpec::surgery(KnotSpec::unknot(), 5, 2);
  CHECK_THROWS_AS(eval_spec(KnotSpec::surgery(lens_core, 3, 1)),
                  UnsupportedComposition);
  // m = 1 surgery keeps a homology sphere, so stacking is fine
  const auto once = KnotSpec::surgery(KnotSpec::seed_knot(2), 1, 3);
  CHECK_NOTHROW(eval_spec(KnotSpec::surgery(once, 7, 1)));
}

TEST_CASE("eval: cables and satellites") {
  const auto seed = KnotSpec::seed_knot(1);
  // trivial cable is the core itself
  GenusResult r = eval_spec(KnotSpec::cable(seed, 5, 1));
  CHECK(r.value.is_exactly(Rational(1, 2)));

  r = eval_spec(KnotSpec::cable(seed, 3, 2));
  CHECK(r.value.lo() == Rational(1));
  CHECK_FALSE(r.value.bounded());
  CHECK(r.triviality.is_unknown());

  // double cable picks up the strict 1/12 bound as well
  r = eval_spec(KnotSpec::cable(KnotSpec::cable(seed, 3, 2), 7, 3));
  CHECK(r.value.lo() == Rational(3));  // 3 * (2 * 1/2) beats 1/12
  r = eval_spec(
      KnotSpec::cable(KnotSpec::cable(KnotSpec::seed_knot(1), 3, 2), 7, 3));
  CHECK(r.value.certainly_gt(Rational(1, 12)));

  r = eval_spec(KnotSpec::satellite(seed, 4));
  CHECK(r.value.lo() == Rational(2));
  CHECK_FALSE(r.value.bounded());
  // satellite of a trivial companion certifies nothing
  r = eval_spec(KnotSpec::satellite(KnotSpec::unknot(), 4));
  CHECK(r.value == GenusValue::unconstrained());
}

TEST_CASE("eval: deterministic and non-negative") {
  const auto spec = KnotSpec::connect_sum(
      KnotSpec::surgery(KnotSpec::torus_knot(2, 3), 7, 1),
      KnotSpec::seed_knot(1));
  const GenusResult a = eval_spec(spec);
  const GenusResult b = eval_spec(spec);
  CHECK(a.value == b.value);
  CHECK(a.triviality == b.triviality);
  CHECK(a.value.lo() >= Rational(0));
}

TEST_CASE("spec invariants are validated at construction") {
  CHECK_THROWS_AS(KnotSpec::torus_knot(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(KnotSpec::torus_knot(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(KnotSpec::surgery(KnotSpec::unknot(), 4, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(KnotSpec::surgery(KnotSpec::unknot(), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(KnotSpec::cable(KnotSpec::unknot(), 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(KnotSpec::satellite(KnotSpec::unknot(), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      KnotSpec::torus_bundle_fiber(UnimodularMatrix(1, 0, 0, 1)),
      std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMatrix(2, 0, 0, 1), std::invalid_argument);
}

#ifndef RATGENUS_CATALOG_HPP
#define RATGENUS_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ratgenus/classifier.hpp"

namespace ratgenus {

// The eight example families of arbitrarily-small-norm knots, keyed A..H:
//   A: surgery on a hyperbolic knot (hyperbolic ambient, tube-core knot)
//   B: surgery on a torus knot landing in a lens space (Heegaard-torus knot)
//   C: surgery on a torus knot landing in a small Seifert space
//   D: cable of the core of surgery on a hyperbolic knot
//   E: cable of the core of surgery on a torus knot (Seifert ambient)
//   F: surgery on a connected sum (toroidal ambient, JSJ-torus knot)
//   G: fiber curve in a parabolic torus bundle (circle-bundle fiber)
//   H: fiber curve in an Anosov torus bundle
enum class CatalogCase { A, B, C, D, E, F, G, H };

std::string case_name(CatalogCase c);

struct CatalogEntry {
  CatalogCase case_id = CatalogCase::A;
  KnotSpecPtr spec;
  GenusValue expected;        // exact value, or an upper bound for D/E
  bool expected_exact = true; // false: the family only proves an upper bound
  StructuralForm claimed_form = StructuralForm::Trivial;
  ManifoldClass manifold;
  std::string params;

  std::string jsonl() const;  // one-line structured record
};

// Parameters for generate_case; each case reads the fields it needs.
struct CaseParams {
  std::int64_t genus = 1;   // seed genus (A, D); first summand genus (F)
  std::int64_t genus2 = 1;  // second summand genus (F)
  std::int64_t u = 2;       // torus-knot parameters (B, C, E)
  std::int64_t v = 3;
  std::int64_t m = 1;       // surgery numerator (A, B, C, F); fiber twist (G)
  std::int64_t n = 1;       // surgery denominator (A, B, C)
  std::int64_t p = 2;       // cable parameters (D, E)
  std::int64_t q = 3;
  std::int64_t k = 1;       // cable scale (D, E)
  UnimodularMatrix base = UnimodularMatrix(2, 1, 1, 1);  // seed monodromy (H)
  std::int64_t twist = 1;                                // twist count (H)
};

// Builds one catalog entry; throws ParameterConstraintViolated when the
// case's arithmetic side conditions fail (e.g. |m - n u v| != 1 for B).
CatalogEntry generate_case(CatalogCase c, const CaseParams& params);

struct ConsistencyVerdict {
  bool pass = false;
  std::vector<std::string> diagnostics;
};

// Closes the loop between the construction formulas and the evaluator: the
// evaluated value must equal an exact expectation (or be compatible with a
// bound expectation), and entries certifiably below their class threshold
// must claim a form on the class's alternative list. The threshold argument
// is the hyperbolic-type threshold; reducible and lens classes use their own
// constants.
ConsistencyVerdict consistency_check(const CatalogEntry& e,
                                     const Rational& threshold);

// Full parameter sweep across the eight families.
struct SweepLimits {
  std::int64_t max_m = 100;
  std::int64_t max_k = 50;
  std::int64_t max_twist = 50;
};
std::vector<CatalogEntry> catalog_sweep(const SweepLimits& limits);

struct CatalogSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // diagnostics of failing entries
};

CatalogSummary run_catalog(const std::vector<CatalogEntry>& entries,
                           const Rational& threshold, int jobs = 1);

}  // namespace ratgenus

#endif  // RATGENUS_CATALOG_HPP

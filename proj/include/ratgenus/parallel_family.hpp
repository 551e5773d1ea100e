#ifndef RATGENUS_PARALLEL_FAMILY_HPP
#define RATGENUS_PARALLEL_FAMILY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratgenus/rational.hpp"

namespace ratgenus {

// A family of parallel interior edges with coherently oriented vertices:
// edge t (0-based) joins end labels (start + t) mod n and (k - start - t)
// mod n for a fixed pairing constant k.
struct ParallelFamily {
  int n = 1;      // index count; labels live in Z/n
  int k = 0;      // pairing constant
  int start = 0;  // label at position 0
  int size = 1;   // number of edges

  int left_label(int t) const;   // (start + t) mod n
  int right_label(int t) const;  // (k - start - t) mod n
};

// Multiset of unordered end-label pairs of the family, keyed as (min, max).
std::map<std::pair<int, int>, int> family_label_spectrum(
    const ParallelFamily& f);

// The label-incidence claims for a family of m*n + 1 edges: every label is
// incident to at least 2m family edges (counting an edge twice when both of
// its ends carry the label), and some label is incident to at least 2m + 1.
struct LabelSpectrumCheck {
  bool every_label_at_least_2m = false;
  bool some_label_exceeds = false;
  int witness_label = -1;
};
LabelSpectrumCheck check_label_spectrum(const ParallelFamily& f, int m);

// Position of an adjacent pair of edges whose four end labels are {i, i+1}
// with 2i + 1 = k mod n: the length-two cycle pattern that obstructs large
// parallel families. Requires n even (same-sign vertices).
std::optional<int> find_s_cycle(const ParallelFamily& f);

// Position t such that edges t-1 .. t+2 exist and the middle pair (t, t+1)
// is an s-cycle.
std::optional<int> find_extended_s_cycle(const ParallelFamily& f);

// Lower bounds for the reduced-graph edge count from parallelism caps: if no
// family of interior edges exceeds cap_interior and no family of boundary
// edges exceeds cap_boundary, then the reduced edge count is at least
// p*n / max(2*cap_interior, cap_boundary), and the genus bound follows by
// dividing by 6p. Missing caps are excluded from the max.
struct ReducedEdgeBound {
  Rational e_bar_lower;
  Rational genus_lower;  // e_bar_lower / (6p)
};
ReducedEdgeBound reduced_edge_bound(std::int64_t p, std::int64_t n,
                                    std::optional<Rational> cap_interior,
                                    std::optional<Rational> cap_boundary);

// Tabular record of one exhaustive-verification run, exported by the sweep
// drivers.
struct SweepRecord {
  std::string lemma;
  std::string parameters;
  bool verdict = false;
  std::string witness;
};

// Exhaustive sweeps used by the verification suites. Each returns one record
// per checked configuration (or per failure, for the compact variants).
std::vector<SweepRecord> sweep_label_spectrum(int max_n, int max_m);
std::vector<SweepRecord> sweep_s_cycle_thresholds(int max_even_n);

}  // namespace ratgenus

#endif  // RATGENUS_PARALLEL_FAMILY_HPP

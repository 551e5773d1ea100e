#ifndef RATGENUS_FAT_GRAPH_HPP
#define RATGENUS_FAT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ratgenus/rational.hpp"

namespace ratgenus {

// Labeled intersection graph of a p-Seifert surface with another surface,
// stored combinatorially: each vertex carries its cyclic sequence of
// edge-endpoint labels, and edges attach to (vertex, slot) positions. Boundary
// edges run from a vertex slot to a position on a boundary circle of the
// ambient surface. Labels are 0-based internally and 1-based in reports.
struct FatGraph {
  struct End {
    int vertex = 0;
    int slot = 0;
    friend bool operator==(const End&, const End&) = default;
  };
  struct BoundaryEnd {
    int circle = 0;
    int position = 0;
    friend bool operator==(const BoundaryEnd&, const BoundaryEnd&) = default;
  };
  struct InteriorEdge {
    End a, b;
  };
  struct BoundaryEdge {
    End a;
    BoundaryEnd b;
  };

  int genus = 0;            // of the capped-off surface carrying the graph
  int boundary_circles = 0; // boundary components of that surface
  int n = 1;                // index count (labels 0..n-1)
  int r = 1;                // label repetitions per vertex
  std::vector<std::vector<int>> vertex_labels;  // one sequence per vertex
  std::vector<InteriorEdge> interior;
  std::vector<BoundaryEdge> boundary;

  int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
  std::int64_t p() const {
    return static_cast<std::int64_t>(vertex_count()) * r;
  }
};

// Validates the fat-graph invariants: every vertex sees the labels
// 0,...,n-1 repeated r times in cyclic order, every slot carries exactly one
// edge endpoint, boundary positions are consistent, the edge count satisfies
// 2 e_i + e_boundary = p n, and the embedding traced from the cyclic data has
// the declared Euler characteristic. Returns the list of violations (empty
// means the graph checks out).
std::vector<std::string> count_check_diagnostics(const FatGraph& g);
bool check_counts(const FatGraph& g);

// A graph all of whose complementary regions are bigons. First kind: sphere,
// two vertices, all interior edges parallel. Second kind: disk, one vertex,
// parallel boundary edges.
enum class BeachballKind { First, Second };

struct ReduceOutcome {
  struct Reduced {
    FatGraph graph;  // one representative edge per parallel family
    std::vector<int> family_sizes;
  };
  std::variant<Reduced, BeachballKind> result;

  bool is_beachball() const {
    return std::holds_alternative<BeachballKind>(result);
  }
  BeachballKind beachball() const { return std::get<BeachballKind>(result); }
  const Reduced& reduced() const { return std::get<Reduced>(result); }
};

// Collapses all bigon regions, iterating until none remain, and reports the
// multiplicity of each parallel family. Requires the graph to be monogon-free
// (MonogonPresent otherwise). Detects the two beachball degenerations instead
// of collapsing them to nothing.
ReduceOutcome reduce(const FatGraph& g);

// Counts of a reduced (monogon- and bigon-free) graph together with the Euler
// characteristic of the surface carrying it.
struct ReducedCounts {
  std::int64_t v_bar = 0;
  std::int64_t e_bar = 0;
  std::int64_t f_bar = 0;
  std::int64_t chi_surface = 0;

  ReducedCounts(std::int64_t v, std::int64_t e, std::int64_t f,
                std::int64_t chi);
};

// e_bar / 3, a certified lower bound for -chi(F) where F is the punctured
// surface: chi(F) = chi_surface - v_bar <= f_bar - e_bar and 2 e_bar >= 3
// f_bar combine into 3 chi(F) <= -e_bar. Inputs violating the chain are
// rejected at construction.
Rational euler_edge_lower(const ReducedCounts& c);

}  // namespace ratgenus

#endif  // RATGENUS_FAT_GRAPH_HPP

#include "ratgenus/fat_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ratgenus/errors.hpp"

namespace ratgenus {

namespace {

// Dart-based view of the capped graph: every boundary circle that carries
// edge endpoints is capped with a disk around a virtual vertex, so boundary
// edges become interior edges to virtual vertices and face tracing works on a
// closed surface. Interior edge k owns darts 2k and 2k+1; boundary edge j
// owns darts 2*e_i + 2j (real end) and 2*e_i + 2j + 1 (virtual end).
struct DartStructure {
  int dart_count = 0;
  std::vector<int> next_at_vertex;  // sigma
  std::vector<int> prev_at_vertex;  // sigma^{-1}
  std::vector<int> edge_of_dart;    // interior edges first, then boundary
  int real_vertices = 0;
  int virtual_vertices = 0;
  bool valid = true;
  std::vector<std::string> problems;
};

int alpha(int dart) { return dart ^ 1; }

DartStructure build_darts(const FatGraph& g) {
  DartStructure ds;
  const int q = g.vertex_count();
  const int ei = static_cast<int>(g.interior.size());
  const int eb = static_cast<int>(g.boundary.size());
  ds.dart_count = 2 * ei + 2 * eb;
  ds.real_vertices = q;
  ds.edge_of_dart.resize(ds.dart_count);
  for (int k = 0; k < ei; ++k)
    ds.edge_of_dart[2 * k] = ds.edge_of_dart[2 * k + 1] = k;
  for (int j = 0; j < eb; ++j)
    ds.edge_of_dart[2 * ei + 2 * j] = ds.edge_of_dart[2 * ei + 2 * j + 1] =
        ei + j;

  // slot occupancy per real vertex
  std::vector<std::vector<int>> slot_dart(q);
  for (int v = 0; v < q; ++v)
    slot_dart[v].assign(g.vertex_labels[v].size(), -1);

  auto place = [&](const FatGraph::End& end, int dart) {
    if (end.vertex < 0 || end.vertex >= q) {
      ds.problems.push_back("edge endpoint at non-existent vertex " +
                            std::to_string(end.vertex));
      ds.valid = false;
      return;
    }
    auto& slots = slot_dart[end.vertex];
    if (end.slot < 0 || end.slot >= static_cast<int>(slots.size())) {
      ds.problems.push_back("slot out of range at vertex " +
                            std::to_string(end.vertex));
      ds.valid = false;
      return;
    }
    if (slots[end.slot] != -1) {
      ds.problems.push_back("slot used twice at vertex " +
                            std::to_string(end.vertex) + ", slot " +
                            std::to_string(end.slot));
      ds.valid = false;
      return;
    }
    slots[end.slot] = dart;
  };

  for (int k = 0; k < ei; ++k) {
    place(g.interior[k].a, 2 * k);
    place(g.interior[k].b, 2 * k + 1);
  }
  for (int j = 0; j < eb; ++j) place(g.boundary[j].a, 2 * ei + 2 * j);

  for (int v = 0; v < q; ++v)
    for (size_t s = 0; s < slot_dart[v].size(); ++s)
      if (slot_dart[v][s] == -1) {
        ds.problems.push_back("unused slot at vertex " + std::to_string(v) +
                              ", slot " + std::to_string(s));
        ds.valid = false;
      }

  // boundary circles: collect endpoints per circle, sorted by position
  std::map<int, std::vector<std::pair<int, int>>> circle_ends;  // pos -> dart
  for (int j = 0; j < eb; ++j) {
    const auto& be = g.boundary[j];
    if (be.b.circle < 0 || be.b.circle >= g.boundary_circles) {
      ds.problems.push_back("boundary edge on non-existent circle " +
                            std::to_string(be.b.circle));
      ds.valid = false;
      continue;
    }
    circle_ends[be.b.circle].push_back({be.b.position, 2 * ei + 2 * j + 1});
  }
  for (auto& [circle, ends] : circle_ends) {
    std::sort(ends.begin(), ends.end());
    for (size_t i = 0; i + 1 < ends.size(); ++i)
      if (ends[i].first == ends[i + 1].first) {
        ds.problems.push_back("duplicate boundary position on circle " +
                              std::to_string(circle));
        ds.valid = false;
      }
  }
  ds.virtual_vertices = static_cast<int>(circle_ends.size());
  if (!ds.valid) return ds;

  // rotations
  ds.next_at_vertex.assign(ds.dart_count, -1);
  ds.prev_at_vertex.assign(ds.dart_count, -1);
  auto close_cycle = [&](const std::vector<int>& darts) {
    const int m = static_cast<int>(darts.size());
    for (int i = 0; i < m; ++i) {
      ds.next_at_vertex[darts[i]] = darts[(i + 1) % m];
      ds.prev_at_vertex[darts[i]] = darts[(i + m - 1) % m];
    }
  };
  for (int v = 0; v < q; ++v) close_cycle(slot_dart[v]);
  // The cap sees the circle from the far side, so its rotation is reversed.
  for (auto& [circle, ends] : circle_ends) {
    std::vector<int> darts;
    for (auto it = ends.rbegin(); it != ends.rend(); ++it)
      darts.push_back(it->second);
    close_cycle(darts);
  }
  return ds;
}

// Orbits of dart -> prev(alpha(dart)): one orbit per face of the capped
// surface; the orbit length is the number of edge sides on the face.
std::vector<std::vector<int>> trace_faces(const DartStructure& ds) {
  std::vector<std::vector<int>> faces;
  std::vector<bool> seen(ds.dart_count, false);
  for (int d0 = 0; d0 < ds.dart_count; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = true;
      orbit.push_back(d);
      d = ds.prev_at_vertex[alpha(d)];
    } while (d != d0);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::string> count_check_diagnostics(const FatGraph& g) {
  std::vector<std::string> problems;
  if (g.n < 1) problems.push_back("index count n must be positive");
  if (g.r < 1) problems.push_back("repetition count r must be positive");
  if (g.vertex_count() < 1) problems.push_back("graph needs a vertex");
  if (g.genus < 0) problems.push_back("negative genus");
  if (g.boundary_circles < 0) problems.push_back("negative boundary count");
  if (!problems.empty()) return problems;

  // label sequences: 0..n-1 repeated r times, up to cyclic rotation
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& labels = g.vertex_labels[v];
    if (static_cast<std::int64_t>(labels.size()) !=
        static_cast<std::int64_t>(g.n) * g.r) {
      problems.push_back("vertex " + std::to_string(v) +
                         " has wrong label count");
      continue;
    }
    for (size_t i = 0; i < labels.size(); ++i) {
      const int here = labels[i];
      const int next = labels[(i + 1) % labels.size()];
      if (here < 0 || here >= g.n || (here + 1) % g.n != next) {
        problems.push_back("vertex " + std::to_string(v) +
                           " label sequence is not cyclic 0..n-1 x r");
        break;
      }
    }
  }

  const std::int64_t lhs = 2 * static_cast<std::int64_t>(g.interior.size()) +
                           static_cast<std::int64_t>(g.boundary.size());
  if (lhs != g.p() * g.n)
    problems.push_back("edge-endpoint count violated: 2*" +
                       std::to_string(g.interior.size()) + " + " +
                       std::to_string(g.boundary.size()) +
                       " != p*n = " + std::to_string(g.p() * g.n));

  DartStructure ds = build_darts(g);
  problems.insert(problems.end(), ds.problems.begin(), ds.problems.end());
  if (!ds.valid) return problems;

  if (ds.dart_count > 0) {
    const auto faces = trace_faces(ds);
    // Capping every circle that carries endpoints; circles without endpoints
    // cap invisibly and shift chi by one each.
    const int used = ds.virtual_vertices;
    const int free_circles = g.boundary_circles - used;
    const std::int64_t v_total = ds.real_vertices + used;
    const std::int64_t e_total =
        static_cast<std::int64_t>(g.interior.size()) + g.boundary.size();
    const std::int64_t chi =
        v_total - e_total + static_cast<std::int64_t>(faces.size());
    if (chi != 2 - 2 * static_cast<std::int64_t>(g.genus) - free_circles)
      problems.push_back(
          "cyclic orders do not embed in the declared surface (traced chi " +
          std::to_string(chi) + ")");
  }
  return problems;
}

bool check_counts(const FatGraph& g) {
  return count_check_diagnostics(g).empty();
}

ReducedCounts::ReducedCounts(std::int64_t v, std::int64_t e, std::int64_t f,
                             std::int64_t chi)
    : v_bar(v), e_bar(e), f_bar(f), chi_surface(chi) {
  if (v < 0 || e < 0 || f < 0)
    throw std::invalid_argument("ReducedCounts: negative count");
  if (2 * e < 3 * f)
    throw std::invalid_argument(
        "ReducedCounts: 2 e_bar >= 3 f_bar fails; graph has monogon or bigon "
        "faces");
  if (chi - v > f - e)
    throw std::invalid_argument(
        "ReducedCounts: Euler relation chi - v <= f - e fails");
}

Rational euler_edge_lower(const ReducedCounts& c) {
  const Rational bound(c.e_bar, 3);
  // chain: chi(F) = chi_surface - v_bar <= f_bar - e_bar <= -e_bar/3
  const Rational chi_f = Rational(c.chi_surface) - Rational(c.v_bar);
  if (Rational(-1) * chi_f < bound)
    throw InternalBoundViolation(
        "euler_edge_lower: -chi(F) >= e_bar/3 chain failed");
  return bound;
}

ReduceOutcome reduce(const FatGraph& g) {
  {
    const auto problems = count_check_diagnostics(g);
    if (!problems.empty())
      throw std::invalid_argument("reduce: invalid fat graph: " + problems[0]);
  }

  // Working copy; edge weights accumulate family multiplicities.
  FatGraph cur = g;
  const size_t total_edges = g.interior.size() + g.boundary.size();
  std::vector<int> weight(total_edges, 1);

  for (;;) {
    DartStructure ds = build_darts(cur);
    const auto faces = trace_faces(ds);
    const int ei = static_cast<int>(cur.interior.size());
    const int e_all = ei + static_cast<int>(cur.boundary.size());

    bool all_bigons = !faces.empty();
    bool any_bigon = false;
    DisjointSets families(e_all);
    for (const auto& face : faces) {
      if (face.size() == 1)
        throw MonogonPresent("reduce: graph has a monogon face");
      if (face.size() == 2) {
        const int e1 = ds.edge_of_dart[face[0]];
        const int e2 = ds.edge_of_dart[face[1]];
        families.unite(e1, e2);
        any_bigon = true;
      } else {
        all_bigons = false;
      }
    }

    if (all_bigons) {
      // Sphere with two vertices after capping: a beachball. The second kind
      // has the cap vertex standing in for the disk boundary.
      if (ds.real_vertices == 2 && cur.boundary.empty())
        return ReduceOutcome{BeachballKind::First};
      if (ds.real_vertices == 1 && !cur.boundary.empty())
        return ReduceOutcome{BeachballKind::Second};
      throw Error("reduce: all-bigon graph with unexpected vertex counts");
    }

    if (!any_bigon) {
      ReduceOutcome::Reduced out;
      out.graph = cur;
      for (int e = 0; e < e_all; ++e) out.family_sizes.push_back(weight[e]);
      std::sort(out.family_sizes.rbegin(), out.family_sizes.rend());
      return ReduceOutcome{std::move(out)};
    }

    // Collapse: keep the lowest-index edge of each family, fold weights into
    // it, and rebuild the graph without the deleted edges.
    std::vector<int> keeper(e_all, -1);
    std::vector<int> new_weight;
    std::vector<bool> keep(e_all, false);
    int kept = 0;
    for (int e = 0; e < e_all; ++e) {
      const int root = families.find(e);
      if (keeper[root] == -1) {
        keeper[root] = e;
        keep[e] = true;
        ++kept;
      }
    }
    if (kept == e_all)
      throw Error("reduce: bigon between the two sides of a single edge");
    std::vector<int> folded(e_all, 0);
    for (int e = 0; e < e_all; ++e) folded[keeper[families.find(e)]] += weight[e];

    FatGraph next;
    next.genus = cur.genus;
    next.boundary_circles = cur.boundary_circles;
    next.n = cur.n;
    next.r = cur.r;
    next.vertex_labels.resize(cur.vertex_count());

    // surviving slots per vertex, in original cyclic order
    std::vector<std::vector<std::pair<int, int>>> survivors(
        cur.vertex_count());  // slot -> (new slot assigned later)
    auto surviving = [&](const FatGraph::End& end, int edge) {
      if (keep[edge]) survivors[end.vertex].push_back({end.slot, edge});
    };
    for (int k = 0; k < ei; ++k) {
      surviving(cur.interior[k].a, k);
      surviving(cur.interior[k].b, k);
    }
    for (size_t j = 0; j < cur.boundary.size(); ++j)
      surviving(cur.boundary[j].a, ei + static_cast<int>(j));

    std::vector<std::map<int, int>> slot_remap(cur.vertex_count());
    for (int v = 0; v < cur.vertex_count(); ++v) {
      std::sort(survivors[v].begin(), survivors[v].end());
      for (const auto& [slot, edge] : survivors[v]) {
        const int new_slot = static_cast<int>(next.vertex_labels[v].size());
        next.vertex_labels[v].push_back(cur.vertex_labels[v][slot]);
        slot_remap[v][slot] = new_slot;
      }
    }

    new_weight.clear();
    auto remap = [&](const FatGraph::End& end) {
      return FatGraph::End{end.vertex, slot_remap[end.vertex].at(end.slot)};
    };
    for (int k = 0; k < ei; ++k)
      if (keep[k]) {
        next.interior.push_back(
            {remap(cur.interior[k].a), remap(cur.interior[k].b)});
        new_weight.push_back(folded[k]);
      }
    for (size_t j = 0; j < cur.boundary.size(); ++j)
      if (keep[ei + static_cast<int>(j)]) {
        next.boundary.push_back(
            {remap(cur.boundary[j].a), cur.boundary[j].b});
        new_weight.push_back(folded[ei + static_cast<int>(j)]);
      }

    cur = std::move(next);
    weight = std::move(new_weight);
  }
}

}  // namespace ratgenus

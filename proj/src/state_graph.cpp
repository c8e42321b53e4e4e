#include "montebound/state_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace montebound {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

}  // namespace

HGraph resolve(const PlanarDiagram& pd, const StateAssignment& state) {
  if (state.choices.size() != pd.crossings.size())
    throw Error(Errc::internal, "state does not cover the crossings");
  int n = pd.crossing_count();
  UnionFind uf(4 * n);
  auto node = [](int c, int s) { return 4 * c + s; };
  for (int c = 0; c < n; ++c) {
    int o = pd.crossings[c].over_slot;
    if (state.choices[c] == Resolution::A) {
      uf.unite(node(c, o), node(c, (o + 3) & 3));
      uf.unite(node(c, (o + 1) & 3), node(c, (o + 2) & 3));
    } else {
      uf.unite(node(c, o), node(c, (o + 1) & 3));
      uf.unite(node(c, (o + 2) & 3), node(c, (o + 3) & 3));
    }
  }
  int loops = 0;
  for (const Arc& a : pd.arcs) {
    if (a.is_loop()) {
      ++loops;
      continue;
    }
    uf.unite(node(a.cr[0], a.slot[0]), node(a.cr[1], a.slot[1]));
  }
  std::vector<int> circle_id(4 * n, -1);
  int circles = 0;
  for (int x = 0; x < 4 * n; ++x) {
    int r = uf.find(x);
    if (circle_id[r] < 0) circle_id[r] = circles++;
    circle_id[x] = circle_id[r];
  }
  HGraph h;
  h.circles = circles + loops;
  h.segments.resize(n);
  for (int c = 0; c < n; ++c) {
    int o = pd.crossings[c].over_slot;
    int other = state.choices[c] == Resolution::A ? (o + 1) & 3 : (o + 2) & 3;
    h.segments[c].circle[0] = circle_id[node(c, o)];
    h.segments[c].circle[1] = circle_id[node(c, other)];
  }
  return h;
}

StateMultigraph collapse(const HGraph& h) {
  StateMultigraph g;
  g.vertices = h.circles;
  g.edges.reserve(h.segments.size());
  for (const HGraph::Segment& s : h.segments) g.edges.emplace_back(s.circle[0], s.circle[1]);
  return g;
}

ReducedStateGraph reduce(const StateMultigraph& g) {
  ReducedStateGraph r;
  r.vertices = g.vertices;
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(g.edges.size());
  for (auto [a, b] : g.edges) sorted.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  r.edges = std::move(sorted);
  r.lost_edges = g.edge_count() - r.edge_count();
  return r;
}

int component_count(int vertices, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(vertices);
  for (auto [a, b] : edges) uf.unite(a, b);
  int n = 0;
  for (int v = 0; v < vertices; ++v)
    if (uf.find(v) == v) ++n;
  return n;
}

int chi_minus(int vertices, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(vertices);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<int> v_of(vertices, 0), e_of(vertices, 0);
  for (int v = 0; v < vertices; ++v) ++v_of[uf.find(v)];
  for (auto [a, b] : edges) ++e_of[uf.find(a)];
  int total = 0;
  for (int v = 0; v < vertices; ++v)
    if (uf.find(v) == v) total += std::max(e_of[v] - v_of[v], 0);
  return total;
}

int chi_minus(const StateMultigraph& g) { return chi_minus(g.vertices, g.edges); }
int chi_minus(const ReducedStateGraph& g) { return chi_minus(g.vertices, g.edges); }

int chi_total(int vertices, int edges) { return vertices - edges; }

bool is_adequate(const StateMultigraph& g) {
  for (auto [a, b] : g.edges)
    if (a == b) return false;
  return true;
}

namespace {

// Band layout shared by the structural graph and the loop classifier: the
// same tangle/band/crossing-id schedule assemble() follows, derived from the
// continued fractions alone.
struct Band {
  int tangle = 0;
  int band_index = 0;  // i in a_i
  std::int64_t entry = 0;
  bool vertical = false;
  bool a_short = false;  // A-resolution keeps the band parallel
  int first_crossing = 0;
  int count = 0;
};

std::vector<Band> band_layout(const ReducedSpec& spec) {
  std::vector<Band> bands;
  int crossing = 0;
  for (std::size_t t = 0; t < spec.cfs.size(); ++t) {
    const ContinuedFraction& cf = spec.cfs[t];
    std::size_t n = cf.size();
    bool a1_vertical = (n % 2 == 0);
    for (std::size_t j = 1; j <= n; ++j) {
      std::int64_t a = cf[n - j];
      if (a == 0) continue;
      Band band;
      band.tangle = static_cast<int>(t);
      band.band_index = static_cast<int>(j);
      band.entry = a;
      band.vertical = (j % 2 == 0) != a1_vertical;
      band.a_short = (a > 0) == band.vertical;  // positive vertical / negative horizontal
      band.first_crossing = crossing;
      band.count = static_cast<int>(a < 0 ? -a : a);
      crossing += band.count;
      bands.push_back(band);
    }
  }
  return bands;
}

}  // namespace

StructuralHGraph structural_h_graph(const ReducedSpec& spec) {
  if (!spec.is_reduced()) throw Error(Errc::not_reduced, "structural graph needs a reduced spec");
  std::size_t r = spec.slopes.size();
  if (r < 2) throw Error(Errc::too_few_tangles, "structural graph needs at least two tangles");

  StructuralHGraph out;
  auto new_circle = [&](StructuralTag tag) {
    out.tags.push_back(tag);
    return out.graph.circles++;
  };

  // Boundary classes.  With positive tangles present there is one merged
  // circle per run between consecutive positive tangles (it absorbs the
  // east/west sides of the positives and both sides of the negatives in the
  // run); an all-negative diagram instead has a north chain and a south chain.
  int positives = spec.positive_count();
  std::vector<int> s0_ref(r, -1);   // S0 side: west (positive) / south (negative)
  std::vector<int> far_ref(r, -1);  // east (positive) / north (negative)
  if (positives > 0) {
    std::vector<std::size_t> pos_idx;
    for (std::size_t t = 0; t < r; ++t)
      if (spec.signs[t] > 0) pos_idx.push_back(t);
    for (std::size_t k = 0; k < pos_idx.size(); ++k) {
      std::size_t from = pos_idx[k];
      std::size_t to = pos_idx[(k + 1) % pos_idx.size()];
      StructuralTag tag;
      tag.kind = StructuralTag::Kind::Gap;
      tag.tangle = static_cast<int>(from);
      tag.run_length = static_cast<int>((to + r - from - 1) % r);
      tag.wraps = to <= from;
      int gap = new_circle(tag);
      far_ref[from] = gap;
      for (std::size_t step = (from + 1) % r; step != to; step = (step + 1) % r) {
        s0_ref[step] = gap;
        far_ref[step] = gap;
      }
      s0_ref[to] = gap;
    }
  } else {
    StructuralTag north;
    north.kind = StructuralTag::Kind::NorthChain;
    int north_id = new_circle(north);
    StructuralTag south;
    south.kind = StructuralTag::Kind::SouthChain;
    int south_id = new_circle(south);
    for (std::size_t t = 0; t < r; ++t) {
      far_ref[t] = north_id;
      s0_ref[t] = south_id;
    }
  }

  std::vector<Band> bands = band_layout(spec);
  out.graph.segments.resize(bands.empty() ? 0 : bands.back().first_crossing + bands.back().count);

  // per tangle: level circle of each resolution-long band, created in band order
  std::map<std::pair<int, int>, int> level;  // (tangle, band_index) -> circle
  for (const Band& band : bands) {
    if (band.a_short) continue;
    if (band.band_index == 1) {
      level[{band.tangle, 1}] = s0_ref[band.tangle];
    } else {
      StructuralTag tag;
      tag.kind = StructuralTag::Kind::Level;
      tag.tangle = band.tangle;
      tag.band = band.band_index;
      level[{band.tangle, band.band_index}] = new_circle(tag);
    }
  }

  // attach point of a band: the level circle of the next long band above it,
  // or the far boundary
  auto attach = [&](const Band& band) {
    for (const Band& other : bands) {
      if (other.tangle == band.tangle && !other.a_short && other.band_index > band.band_index)
        return level[{other.tangle, other.band_index}];
    }
    return far_ref[band.tangle];
  };

  for (const Band& band : bands) {
    if (band.a_short) {
      int a = s0_ref[band.tangle];
      int b = attach(band);
      for (int j = 0; j < band.count; ++j) {
        out.graph.segments[band.first_crossing + j].circle[0] = a;
        out.graph.segments[band.first_crossing + j].circle[1] = b;
      }
    } else {
      int prev = level[{band.tangle, band.band_index}];
      for (int j = 0; j < band.count; ++j) {
        int cur;
        if (j + 1 == band.count) {
          cur = attach(band);
        } else {
          StructuralTag tag;
          tag.kind = StructuralTag::Kind::Interior;
          tag.tangle = band.tangle;
          tag.band = band.band_index;
          tag.index = j + 1;
          cur = new_circle(tag);
        }
        out.graph.segments[band.first_crossing + j].circle[0] = prev;
        out.graph.segments[band.first_crossing + j].circle[1] = cur;
        prev = cur;
      }
    }
  }
  return out;
}

namespace {

bool iso_search(const HGraph& a, const HGraph& b, std::size_t i, std::vector<int>& fwd, std::vector<int>& bwd) {
  if (i == a.segments.size()) return true;
  int x = a.segments[i].circle[0], y = a.segments[i].circle[1];
  for (int flip = 0; flip < 2; ++flip) {
    int u = flip ? b.segments[i].circle[1] : b.segments[i].circle[0];
    int v = flip ? b.segments[i].circle[0] : b.segments[i].circle[1];
    if ((x == y) != (u == v)) continue;
    auto admissible = [&](int from, int to) { return fwd[from] == to || (fwd[from] == -1 && bwd[to] == -1); };
    if (!admissible(x, u)) continue;
    std::vector<int> fwd_save = fwd, bwd_save = bwd;
    fwd[x] = u;
    bwd[u] = x;
    if (admissible(y, v)) {
      fwd[y] = v;
      bwd[v] = y;
      if (iso_search(a, b, i + 1, fwd, bwd)) return true;
    }
    fwd = fwd_save;
    bwd = bwd_save;
    if (x == y) break;  // the flip is the same branch for loops
  }
  return false;
}

}  // namespace

// Segments are matched crossing by crossing, so the bijection is forced up to
// per-segment endpoint swaps; plain backtracking settles those.
bool h_graphs_isomorphic(const HGraph& a, const HGraph& b) {
  if (a.circles != b.circles || a.segments.size() != b.segments.size()) return false;
  std::vector<int> fwd(a.circles, -1), bwd(b.circles, -1);
  return iso_search(a, b, 0, fwd, bwd);
}

int q_half(const ReducedSpec& spec) {
  int n = 0;
  for (const Slope& q : spec.slopes) {
    Slope abs = q.num < 0 ? -q : q;
    if (!(abs < Slope(1, 2)) && abs < Slope(1, 1)) ++n;
  }
  return n;
}

namespace {

TwoEdgeLoopReport classify_side(const StateMultigraph& g, const ReducedSpec& spec) {
  TwoEdgeLoopReport report;
  std::vector<Band> bands = band_layout(spec);
  if (static_cast<int>(g.edges.size()) != (bands.empty() ? 0 : bands.back().first_crossing + bands.back().count))
    throw Error(Errc::internal, "multigraph does not match the spec's crossing count");
  std::vector<int> band_of(g.edges.size(), -1);
  for (std::size_t bi = 0; bi < bands.size(); ++bi)
    for (int j = 0; j < bands[bi].count; ++j) band_of[bands[bi].first_crossing + j] = static_cast<int>(bi);

  std::map<std::pair<int, int>, std::vector<int>> families;
  for (std::size_t c = 0; c < g.edges.size(); ++c) {
    auto [x, y] = g.edges[c];
    families[{std::min(x, y), std::max(x, y)}].push_back(static_cast<int>(c));
  }
  int two_positive_budget = spec.positive_count() == 2 ? 1 : 0;
  for (auto& [key, crossings] : families) {
    if (crossings.size() < 2) continue;
    TwoEdgeLoopReport::Family fam;
    fam.circle_a = key.first;
    fam.circle_b = key.second;
    fam.multiplicity = static_cast<int>(crossings.size());
    fam.crossings = crossings;
    std::map<int, int> per_band;
    for (int c : crossings) ++per_band[band_of[c]];
    std::vector<int> tangles;
    for (auto [bi, m] : per_band) {
      const Band& band = bands[bi];
      if (std::find(tangles.begin(), tangles.end(), band.tangle) == tangles.end()) tangles.push_back(band.tangle);
      if (band.a_short) {
        fam.type_i += m - 1;
      } else if (m > 1) {
        // a long band folding back on itself is the north-south loop of a
        // half-integer negative tangle
        fam.type_ii += m - 1;
      }
    }
    int joins = static_cast<int>(per_band.size()) - 1;
    if (joins > 0) {
      if (tangles.size() == 1) {
        fam.type_ii += joins;
      } else if (tangles.size() == 2 && two_positive_budget) {
        fam.type_iii += joins;
        two_positive_budget = 0;
      } else {
        fam.other += joins;
      }
    }
    report.type_i += fam.type_i;
    report.type_ii += fam.type_ii;
    report.type_iii += fam.type_iii;
    report.other += fam.other;
    report.families.push_back(std::move(fam));
  }
  report.lost_edges = reduce(g).lost_edges;
  return report;
}

}  // namespace

TwoEdgeLoopReport classify_two_edge_loops(const StateMultigraph& g, const ReducedSpec& spec) {
  if (!spec.is_reduced()) throw Error(Errc::not_reduced, "loop classification needs a reduced spec");
  TwoEdgeLoopReport report = classify_side(g, spec);

  MontesinosSpec mirrored;
  mirrored.slopes = spec.slopes;
  ReducedSpec m = validate(mirror(mirrored));
  StructuralHGraph mirror_graph = structural_h_graph(m);
  report.lost_edges_mirror = reduce(collapse(mirror_graph.graph)).lost_edges;

  int c = 0;
  for (const ContinuedFraction& cf : spec.cfs) c += cf_crossing_count(cf);
  int t = static_cast<int>(band_layout(spec).size());
  report.accounting_ok = report.lost_edges + report.lost_edges_mirror <= c - t + q_half(spec) + 2;
  return report;
}

}  // namespace montebound

#include "montebound/diagram.hpp"

#include <algorithm>
#include <cstdio>
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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Loose strand end during construction: the crossing slot the strand reaches,
// or (-1, corner) when it still runs straight to another boundary corner.
using Port = std::pair<int, int>;

class Builder {
public:
  explicit Builder(PlanarDiagram& pd) : pd_(pd) {}

  int new_crossing(int sign, int region) {
    Crossing c;
    c.sign = sign;
    c.over_slot = sign > 0 ? 0 : 1;
    c.twist_region = region;
    pd_.crossings.push_back(c);
    return static_cast<int>(pd_.crossings.size()) - 1;
  }

  void add_arc(int c0, int s0, int c1, int s1) {
    Arc a;
    a.cr[0] = c0;
    a.slot[0] = s0;
    a.cr[1] = c1;
    a.slot[1] = s1;
    int id = static_cast<int>(pd_.arcs.size());
    pd_.arcs.push_back(a);
    pd_.crossings[c0].arc[s0] = id;
    pd_.crossings[c1].arc[s1] = id;
  }

  // Bind a loose end to a crossing slot.  When the port still points at a
  // peer corner, that corner's strand now ends here instead.
  void bind(std::array<Port, 4>& ports, int corner, int crossing, int slot, int new_crossing_of_port, int new_slot_of_port) {
    Port p = ports[corner];
    if (p.first >= 0) {
      add_arc(p.first, p.second, crossing, slot);
    } else {
      ports[p.second] = {crossing, slot};
    }
    ports[corner] = {new_crossing_of_port, new_slot_of_port};
  }

  // Vertical band of |entry| crossings inserted at the north between the NW
  // and NE strands; crossings are stacked bottom to top.
  void vertical_band(std::array<Port, 4>& ports, std::int64_t entry, int region) {
    int k = static_cast<int>(entry < 0 ? -entry : entry);
    int sign = entry < 0 ? -1 : 1;
    int first = new_crossing(sign, region);
    bind(ports, kNW, first, 0, -1, -1);
    bind(ports, kNE, first, 1, -1, -1);
    int prev = first;
    for (int j = 1; j < k; ++j) {
      int c = new_crossing(sign, region);
      add_arc(prev, 3, c, 0);
      add_arc(prev, 2, c, 1);
      prev = c;
    }
    ports[kNW] = {prev, 3};
    ports[kNE] = {prev, 2};
  }

  // Horizontal band at the east (positive tangles); crossings grow eastward.
  void east_band(std::array<Port, 4>& ports, std::int64_t entry, int region) {
    int k = static_cast<int>(entry < 0 ? -entry : entry);
    int sign = entry < 0 ? -1 : 1;
    int first = new_crossing(sign, region);
    bind(ports, kNE, first, 3, -1, -1);
    bind(ports, kSE, first, 0, -1, -1);
    int prev = first;
    for (int j = 1; j < k; ++j) {
      int c = new_crossing(sign, region);
      add_arc(prev, 2, c, 3);
      add_arc(prev, 1, c, 0);
      prev = c;
    }
    ports[kNE] = {prev, 2};
    ports[kSE] = {prev, 1};
  }

  // Horizontal band at the west (negative tangles); crossings grow westward.
  void west_band(std::array<Port, 4>& ports, std::int64_t entry, int region) {
    int k = static_cast<int>(entry < 0 ? -entry : entry);
    int sign = entry < 0 ? -1 : 1;
    int first = new_crossing(sign, region);
    bind(ports, kNW, first, 2, -1, -1);
    bind(ports, kSW, first, 1, -1, -1);
    int prev = first;
    for (int j = 1; j < k; ++j) {
      int c = new_crossing(sign, region);
      add_arc(prev, 3, c, 2);
      add_arc(prev, 0, c, 1);
      prev = c;
    }
    ports[kNW] = {prev, 3};
    ports[kSW] = {prev, 0};
  }

private:
  PlanarDiagram& pd_;
};

// Emits one admissible tangle into the shared diagram and returns its ports.
std::array<Port, 4> emit_tangle(PlanarDiagram& pd, const ContinuedFraction& cf, int sign, int tangle_index) {
  if (!cf_is_canonical(cf)) throw Error(Errc::non_canonical_cf, "tangle fraction is not in canonical form");
  for (std::int64_t a : cf) {
    if ((a > 0 && sign < 0) || (a < 0 && sign > 0))
      throw Error(Errc::non_canonical_cf, "tangle fraction sign disagrees with the tangle sign");
  }
  Builder b(pd);
  std::size_t n = cf.size();
  std::array<Port, 4> ports;
  // bands alternate upward from a_1; a_n is horizontal by convention, so a_1
  // is vertical exactly when n is even, and the starting arcs are the
  // infinity tangle in that case and the zero tangle otherwise
  bool a1_vertical = (n % 2 == 0);
  if (a1_vertical) {
    ports[kNW] = {-1, kSW};
    ports[kSW] = {-1, kNW};
    ports[kNE] = {-1, kSE};
    ports[kSE] = {-1, kNE};
  } else {
    ports[kNW] = {-1, kNE};
    ports[kNE] = {-1, kNW};
    ports[kSW] = {-1, kSE};
    ports[kSE] = {-1, kSW};
  }
  int start = pd.crossing_count();
  for (std::size_t j = 1; j <= n; ++j) {
    std::int64_t a = cf[n - j];  // cf lists a_n first
    if (a == 0) continue;
    bool vertical = (j % 2 == 0) != a1_vertical;
    TwistRegion region;
    region.tangle = tangle_index;
    region.vertical = vertical;
    region.entry = a;
    region.first_crossing = pd.crossing_count();
    region.count = static_cast<int>(a < 0 ? -a : a);
    int region_id = static_cast<int>(pd.regions.size());
    pd.regions.push_back(region);
    if (vertical) {
      b.vertical_band(ports, a, region_id);
    } else if (sign > 0) {
      b.east_band(ports, a, region_id);
    } else {
      b.west_band(ports, a, region_id);
    }
  }
  pd.tangle_crossings.emplace_back(start, pd.crossing_count());
  return ports;
}

}  // namespace

TangleFragment build_admissible_tangle(const ContinuedFraction& cf, int sign) {
  TangleFragment f;
  f.sign = sign;
  f.ports = emit_tangle(f.pd, cf, sign, 0);
  return f;
}

PlanarDiagram assemble(const ReducedSpec& spec) {
  std::size_t r = spec.slopes.size();
  if (r < 2) throw Error(Errc::too_few_tangles, "assembly needs at least two tangles");
  PlanarDiagram pd;
  std::vector<std::array<Port, 4>> ports;
  ports.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    ports.push_back(emit_tangle(pd, spec.cfs[i], spec.signs[i], static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t next = (i + 1) % r;
    Port ne = ports[i][kNE];
    Port se = ports[i][kSE];
    Port nw = ports[next][kNW];
    Port sw = ports[next][kSW];
    if (ne.first < 0 || se.first < 0 || nw.first < 0 || sw.first < 0)
      throw Error(Errc::internal, "tangle with no crossings in assembly");
    Arc north;
    north.cr[0] = ne.first;
    north.slot[0] = ne.second;
    north.cr[1] = nw.first;
    north.slot[1] = nw.second;
    int north_id = static_cast<int>(pd.arcs.size());
    pd.arcs.push_back(north);
    pd.crossings[ne.first].arc[ne.second] = north_id;
    pd.crossings[nw.first].arc[nw.second] = north_id;
    if (next == 0) {
      pd.trace_start_arc = north_id;
      pd.trace_start_end = 1;  // heading into tangle 0
    }
    Arc south;
    south.cr[0] = se.first;
    south.slot[0] = se.second;
    south.cr[1] = sw.first;
    south.slot[1] = sw.second;
    int south_id = static_cast<int>(pd.arcs.size());
    pd.arcs.push_back(south);
    pd.crossings[se.first].arc[se.second] = south_id;
    pd.crossings[sw.first].arc[sw.second] = south_id;
  }
  pd.check_valid();
  return pd;
}

void PlanarDiagram::check_valid() const {
  int loops = 0;
  std::vector<int> cover(crossings.size() * 4, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.is_loop()) {
      ++loops;
      continue;
    }
    for (int e = 0; e < 2; ++e) {
      if (a.cr[e] < 0 || a.cr[e] >= static_cast<int>(crossings.size()) || a.slot[e] < 0 || a.slot[e] > 3)
        throw Error(Errc::internal, "arc endpoint out of range");
      if (crossings[a.cr[e]].arc[a.slot[e]] != static_cast<int>(i))
        throw Error(Errc::internal, "arc table and crossing slots disagree");
      ++cover[a.cr[e] * 4 + a.slot[e]];
    }
  }
  for (int c : cover)
    if (c != 1) throw Error(Errc::internal, "crossing slot not covered by exactly one arc");
  if (!crossings.empty()) {
    if (loops) throw Error(Errc::internal, "free loop in a diagram with crossings");
    UnionFind uf(static_cast<int>(crossings.size()));
    for (const Arc& a : arcs) uf.unite(a.cr[0], a.cr[1]);
    int root = uf.find(0);
    for (std::size_t c = 1; c < crossings.size(); ++c)
      if (uf.find(static_cast<int>(c)) != root) throw Error(Errc::internal, "diagram is not connected");
  } else if (loops > 1) {
    throw Error(Errc::internal, "diagram is not connected");
  }
}

namespace {

// strand tracing: enter an arc end, cross straight through, leave on the arc
// at the opposite slot
struct Tracer {
  const PlanarDiagram& pd;
  std::vector<bool> arc_seen;
  // slot the under-strand entered at, per crossing; filled during tracing
  std::vector<int> under_entry;

  explicit Tracer(const PlanarDiagram& pd_)
      : pd(pd_), arc_seen(pd_.arcs.size(), false), under_entry(pd_.crossings.size(), -1) {}

  // walks the component containing arc `start` (entering at end `end`),
  // returns the arcs visited in traversal order
  std::vector<int> walk(int start, int end) {
    std::vector<int> order;
    int arc = start;
    int head = end;
    do {
      arc_seen[arc] = true;
      order.push_back(arc);
      int c = pd.arcs[arc].cr[head];
      int s = pd.arcs[arc].slot[head];
      int out = (s + 2) & 3;
      const Crossing& x = pd.crossings[c];
      if (s != x.over_slot && s != ((x.over_slot + 2) & 3)) under_entry[c] = s;
      int next_arc = x.arc[out];
      const Arc& na = pd.arcs[next_arc];
      int next_head = (na.cr[0] == c && na.slot[0] == out) ? 1 : 0;
      arc = next_arc;
      head = next_head;
    } while (!(arc == start && head == end));
    return order;
  }
};

}  // namespace

int count_components(const PlanarDiagram& pd) {
  int components = 0;
  Tracer tracer(pd);
  for (std::size_t i = 0; i < pd.arcs.size(); ++i) {
    if (pd.arcs[i].is_loop()) {
      ++components;
      continue;
    }
    if (tracer.arc_seen[i]) continue;
    ++components;
    tracer.walk(static_cast<int>(i), 0);
  }
  return components;
}

int twist_number(const PlanarDiagram& pd) { return static_cast<int>(pd.regions.size()); }

int redetect_twist_regions(const PlanarDiagram& pd) {
  if (pd.crossings.empty()) return 0;
  UnionFind uf(pd.crossing_count());
  for (std::size_t i = 0; i < pd.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < pd.arcs.size(); ++j) {
      const Arc& a = pd.arcs[i];
      const Arc& b = pd.arcs[j];
      if (a.is_loop() || b.is_loop()) continue;
      bool same_pair = (a.cr[0] == b.cr[0] && a.cr[1] == b.cr[1]) || (a.cr[0] == b.cr[1] && a.cr[1] == b.cr[0]);
      if (same_pair && a.cr[0] != a.cr[1]) uf.unite(a.cr[0], a.cr[1]);
    }
  }
  int regions = 0;
  for (int c = 0; c < pd.crossing_count(); ++c)
    if (uf.find(c) == c) ++regions;
  return regions;
}

bool is_prime_bruteforce(const PlanarDiagram& pd) {
  if (pd.crossings.size() <= 1) return true;
  int n = pd.crossing_count();
  std::vector<int> real_arcs;
  for (std::size_t i = 0; i < pd.arcs.size(); ++i)
    if (!pd.arcs[i].is_loop()) real_arcs.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < real_arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < real_arcs.size(); ++j) {
      UnionFind uf(n);
      int parts = n;
      for (int a : real_arcs) {
        if (a == real_arcs[i] || a == real_arcs[j]) continue;
        if (uf.unite(pd.arcs[a].cr[0], pd.arcs[a].cr[1])) --parts;
      }
      if (parts > 1) return false;
    }
  }
  return true;
}

Slope slope_recovery_oracle(const TangleFragment& fragment) {
  const auto& bands = fragment.pd.regions;
  if (bands.empty()) return Slope(0, 1);
  Slope x = bands.front().vertical ? Slope::infinity() : Slope(0, 1);
  for (const TwistRegion& band : bands) {
    Slope a(band.entry, 1);
    if (band.vertical) {
      x = (x.reciprocal() + a).reciprocal();
    } else {
      x = x + a;
    }
  }
  return x;
}

std::string pd_text(const PlanarDiagram& pd, const std::vector<std::string>& header_comments) {
  // renumber arcs in traversal order, components after the first starting at
  // the lowest-id unvisited arc
  std::vector<int> arc_number(pd.arcs.size(), 0);
  Tracer tracer(pd);
  int next = 1;
  auto number_component = [&](int start, int end) {
    for (int a : tracer.walk(start, end)) arc_number[a] = next++;
  };
  if (!pd.arcs.empty() && !pd.arcs[pd.trace_start_arc].is_loop())
    number_component(pd.trace_start_arc, pd.trace_start_end);
  for (std::size_t i = 0; i < pd.arcs.size(); ++i) {
    if (pd.arcs[i].is_loop()) {
      arc_number[i] = next++;
      continue;
    }
    if (!tracer.arc_seen[i]) number_component(static_cast<int>(i), 0);
  }

  std::string out;
  for (const std::string& line : header_comments) out += "# " + line + "\n";
  char buf[96];
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    int s0 = tracer.under_entry[c];
    if (s0 < 0) throw Error(Errc::internal, "crossing never traversed");
    const auto& arcs = pd.crossings[c].arc;
    std::snprintf(buf, sizeof buf, "X[%d,%d,%d,%d]\n", arc_number[arcs[s0]], arc_number[arcs[(s0 + 1) & 3]],
                  arc_number[arcs[(s0 + 2) & 3]], arc_number[arcs[(s0 + 3) & 3]]);
    out += buf;
  }
  return out;
}

}  // namespace montebound

#ifndef MONTEBOUND_STATE_GRAPH_HPP
#define MONTEBOUND_STATE_GRAPH_HPP

#include <vector>

#include "montebound/diagram.hpp"
#include "montebound/montesinos.hpp"

namespace montebound {

enum class Resolution : unsigned char { A, B };

// One resolution choice per crossing, indexed by crossing id.
struct StateAssignment {
  std::vector<Resolution> choices;

  static StateAssignment all_a(const PlanarDiagram& pd) {
    return {std::vector<Resolution>(pd.crossings.size(), Resolution::A)};
  }
  static StateAssignment all_b(const PlanarDiagram& pd) {
    return {std::vector<Resolution>(pd.crossings.size(), Resolution::B)};
  }
};

// State circles plus one segment per crossing.  Segments are indexed by the
// crossing they replace; endpoint order is not meaningful.
struct HGraph {
  int circles = 0;
  struct Segment {
    int circle[2] = {-1, -1};
  };
  std::vector<Segment> segments;
};

// Circles shrunk to vertices, one edge per crossing.
struct StateMultigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // indexed by crossing id

  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct ReducedStateGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // one per incident vertex pair
  int lost_edges = 0;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Smooths each crossing according to the state.  With half-edges (e0,e1,e2,e3)
// counterclockwise and the over-strand entering at e0, the A-resolution pairs
// (e0,e3)(e1,e2) and the B-resolution pairs (e0,e1)(e2,e3).  The orientation
// of this convention is pinned by the trefoil state-circle counts and by the
// structural templates below.
HGraph resolve(const PlanarDiagram& pd, const StateAssignment& state);

StateMultigraph collapse(const HGraph& h);

ReducedStateGraph reduce(const StateMultigraph& g);

// sum over connected components of max(-chi, 0), chi = v - e
int chi_minus(int vertices, const std::vector<std::pair<int, int>>& edges);
int chi_minus(const StateMultigraph& g);
int chi_minus(const ReducedStateGraph& g);
// plain Euler characteristic v - e (summed over components)
int chi_total(int vertices, int edges);
int component_count(int vertices, const std::vector<std::pair<int, int>>& edges);

// no 1-edge loops
bool is_adequate(const StateMultigraph& g);

// Tags describing where a circle of the structural all-A graph lives; the SVG
// renderer keys its layout off these.
struct StructuralTag {
  enum class Kind { Gap, NorthChain, SouthChain, Level, Interior };
  Kind kind = Kind::Interior;
  int tangle = -1;    // owning tangle (Level/Interior), or the positive tangle a gap starts after
  int band = -1;      // band index whose string owns the circle
  int index = -1;     // position along the string, 1-based, for Interior
  int run_length = 0; // Gap: number of negative tangles enclosed
  bool wraps = false; // Gap: run passes the cyclic wrap-around
};

struct StructuralHGraph {
  HGraph graph;
  std::vector<StructuralTag> tags;  // per circle id
};

// All-A state graph assembled directly from the per-tangle band templates
// (boundary circles, strings of circles along the resolution-long bands,
// parallel segment families along the short ones) without smoothing any
// crossings.  Independent cross-check for resolve(assemble(spec), all-A).
StructuralHGraph structural_h_graph(const ReducedSpec& spec);

// True when a circle bijection exists matching segment endpoints crossing by
// crossing.
bool h_graphs_isomorphic(const HGraph& a, const HGraph& b);

// number of tangles whose slope has |q| in [1/2, 1)
int q_half(const ReducedSpec& spec);

// Partition of the parallel-edge families of the all-A multigraph:
//   (i)   families inside a single twist region whose A-resolution is short,
//   (ii)  the north-south loop of a negative tangle with |q| in [1/2, 1),
//   (iii) the east-west loop across the two positive tangles (exactly-two-
//         positive diagrams only).
// Also evaluates the loss accounting against the mirror image (the B side):
//   (e_A - e'_A) + (e_B - e'_B) <= c(D) - t(D) + Q_1/2(D) + 2.
struct TwoEdgeLoopReport {
  struct Family {
    int circle_a = 0;
    int circle_b = 0;
    int multiplicity = 0;
    std::vector<int> crossings;
    int type_i = 0;
    int type_ii = 0;
    int type_iii = 0;
    int other = 0;
  };
  std::vector<Family> families;
  int lost_edges = 0;  // e_A - e'_A
  int type_i = 0;
  int type_ii = 0;
  int type_iii = 0;
  int other = 0;
  int lost_edges_mirror = 0;  // e_B - e'_B via the mirrored diagram
  bool accounting_ok = false;
};

TwoEdgeLoopReport classify_two_edge_loops(const StateMultigraph& g, const ReducedSpec& spec);

}  // namespace montebound

#endif

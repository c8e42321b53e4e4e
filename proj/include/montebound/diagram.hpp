#ifndef MONTEBOUND_DIAGRAM_HPP
#define MONTEBOUND_DIAGRAM_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "montebound/montesinos.hpp"
#include "montebound/rational.hpp"

namespace montebound {

// Crossing slots are listed counterclockwise in the tangle frame:
//   0 = SW, 1 = SE, 2 = NE, 3 = NW.
// The over-strand occupies over_slot and (over_slot + 2) % 4.  Positive
// crossings carry the over-strand on the SW-NE diagonal (over_slot = 0),
// negative crossings on the SE-NW diagonal (over_slot = 1).
struct Crossing {
  std::array<int, 4> arc{-1, -1, -1, -1};  // arc id incident to each slot
  int over_slot = 0;
  int sign = 1;
  int twist_region = -1;
};

// An arc joins two crossing slots.  cr[0] == kLoop marks a crossing-free
// closed component (only the 0-crossing unknot fixture uses this).
struct Arc {
  static constexpr int kLoop = -2;
  int cr[2] = {-1, -1};
  int slot[2] = {-1, -1};

  bool is_loop() const { return cr[0] == kLoop; }
};

// One twist region per nonzero continued-fraction entry, recorded at
// construction time.  `entry` keeps the signed crossing count, `vertical`
// the band direction, and [first_crossing, first_crossing + count) the ids.
struct TwistRegion {
  int tangle = 0;
  bool vertical = true;
  std::int64_t entry = 0;
  int first_crossing = 0;
  int count = 0;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::vector<TwistRegion> regions;
  std::vector<std::pair<int, int>> tangle_crossings;  // half-open id ranges
  // arc, end and direction where strand tracing starts (the closure arc that
  // enters tangle 0 at its NW corner); keeps PD output byte-reproducible
  int trace_start_arc = 0;
  int trace_start_end = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  void check_valid() const;  // 4-valent double cover + connectivity
};

// Admissible tangle diagram for a canonical sign-uniform continued fraction:
// vertical bands at the north, horizontal bands at the east (positive) or the
// west (negative).  Ports give, per corner, the crossing slot the boundary
// strand reaches.
struct TangleFragment {
  PlanarDiagram pd;
  // corner order NW, NE, SW, SE; each entry (crossing, slot), or (-1, peer)
  // when the corner is wired straight to corner `peer` without crossings
  std::array<std::pair<int, int>, 4> ports;
  int sign = 1;
};

enum Corner { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

TangleFragment build_admissible_tangle(const ContinuedFraction& cf, int sign);

// Cyclic sum: NE_i/SE_i joined to NW_{i+1}/SW_{i+1} by crossing-free arcs,
// wrapping around at the last tangle (the numerator closure).
PlanarDiagram assemble(const ReducedSpec& spec);

// Cycles of the strand-tracing permutation (arcs followed straight through
// each crossing).
int count_components(const PlanarDiagram& pd);

int twist_number(const PlanarDiagram& pd);

// Test oracle: rediscovers twist regions as maximal chains of crossings glued
// along bigons.  Agrees with the construction count on assembled diagrams
// with three or more tangles.
int redetect_twist_regions(const PlanarDiagram& pd);

// Exhaustive primeness check: for every pair of arcs, cutting both must leave
// the diagram graph connected (an even-degree graph has no bridges, so any
// disconnecting pair splits off a side with crossings on it).  Crossing-free
// diagrams are prime by convention.
bool is_prime_bruteforce(const PlanarDiagram& pd);

// Recomputes the fragment slope by replaying the recorded bands as
// x -> x + a (horizontal) and x -> 1/(1/x + a) (vertical), starting from the
// infinite slope when the first band is vertical and from 0 otherwise.
Slope slope_recovery_oracle(const TangleFragment& fragment);

// PD code text: header comments, then one crossing per line X[a,b,c,d] with
// arc ids counterclockwise from the incoming under-strand.  Arcs are numbered
// from 1 in strand-traversal order starting at the NW stub of tangle 0.
std::string pd_text(const PlanarDiagram& pd, const std::vector<std::string>& header_comments);

}  // namespace montebound

#endif

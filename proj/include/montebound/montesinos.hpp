#ifndef MONTEBOUND_MONTESINOS_HPP
#define MONTEBOUND_MONTESINOS_HPP

#include <string>
#include <vector>

#include "montebound/rational.hpp"

namespace montebound {

enum class LinkClass {
  AllPositive,
  AllNegative,
  PPM,        // exactly (+,+,-) up to rotation
  PMM,        // exactly (+,-,-) up to rotation
  PMPM,       // (+,-,+,-) up to rotation
  PPMM,       // (+,+,-,-) up to rotation
  AtLeast3Pos,
  AtLeast3Neg,
  TwoTangle,
  OneTangle,
};

const char* link_class_name(LinkClass c);

// Ordered cyclic list of tangle slopes.  Slopes may be arbitrary rationals
// until validate() rejects infinities and integers.
struct MontesinosSpec {
  std::vector<Slope> slopes;
};

// A validated spec together with the derived per-tangle data.  Produced by
// validate() (slopes untouched) or normalize() (slopes in reduced form).
struct ReducedSpec {
  std::vector<Slope> slopes;
  std::vector<ContinuedFraction> cfs;  // canonical expansion per tangle
  std::vector<int> signs;              // +1 / -1 per tangle
  LinkClass link_class = LinkClass::OneTangle;

  int positive_count() const;
  int negative_count() const;
  // Def 2.4: all slopes share a sign, or every |q_i| lies in (0,1).
  bool is_reduced() const;
};

// Grammar shared with the CLI: comma-separated rational tokens "p/q" with an
// optional leading '-'; whitespace ignored.  "p" alone means the integer p and
// "p/0" the infinite slope (both rejected later by validate).
MontesinosSpec parse_spec(const std::string& text);
std::string format_slopes(const std::vector<Slope>& slopes);

// Rejects infinite and integer slopes, computes signs, canonical continued
// fractions and the link class.  Does not move integer parts around.
ReducedSpec validate(const MontesinosSpec& spec);

// Integer-transfer moves until the spec is reduced, then the ++-- -> +-+-
// rewrite when it applies.  Preserves the total slope and each slope mod 1.
// Requires at least three tangles.
ReducedSpec normalize(const MontesinosSpec& spec);

// Subtract 1 from the second slope of the (+,+,-,-) rotation and add 1 to the
// third; the result is a +-+- diagram of the same link.  Requires class PPMM
// with all |q_i| < 1.
ReducedSpec rewrite_ppmm_to_pmpm(const ReducedSpec& spec);

MontesinosSpec mirror(const MontesinosSpec& spec);

// (sum of slopes, lexicographically least rotation/reflection of the mod-1
// residues).  Specs related by integer transfers share this value.
struct CanonicalInvariant {
  Slope total;
  std::vector<Slope> residues;

  bool operator==(const CanonicalInvariant& o) const {
    return total == o.total && residues == o.residues;
  }
};

CanonicalInvariant canonical_invariant(const MontesinosSpec& spec);

enum class Hyperbolicity { Hyperbolic, ExcludedPretzel, Assumed };

const char* hyperbolicity_name(Hyperbolicity h);

// Links with two or more positive and two or more negative tangles are
// hyperbolic unless they are the (2,-2,2,-2) pretzel; everywhere else
// hyperbolicity is an assumption, not a verdict.
Hyperbolicity hyperbolicity_gate(const ReducedSpec& spec);

}  // namespace montebound

#endif

#include "montebound/montesinos.hpp"

#include <algorithm>
#include <cctype>

namespace montebound {

const char* link_class_name(LinkClass c) {
  switch (c) {
    case LinkClass::AllPositive: return "AllPositive";
    case LinkClass::AllNegative: return "AllNegative";
    case LinkClass::PPM: return "PPM";
    case LinkClass::PMM: return "PMM";
    case LinkClass::PMPM: return "PMPM";
    case LinkClass::PPMM: return "PPMM";
    case LinkClass::AtLeast3Pos: return "AtLeast3Pos";
    case LinkClass::AtLeast3Neg: return "AtLeast3Neg";
    case LinkClass::TwoTangle: return "TwoTangle";
    case LinkClass::OneTangle: return "OneTangle";
  }
  return "Unknown";
}

const char* hyperbolicity_name(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::Hyperbolic: return "Hyperbolic";
    case Hyperbolicity::ExcludedPretzel: return "ExcludedPretzel";
    case Hyperbolicity::Assumed: return "Assumed";
  }
  return "Unknown";
}

int ReducedSpec::positive_count() const {
  int n = 0;
  for (int s : signs) n += (s > 0);
  return n;
}

int ReducedSpec::negative_count() const {
  return static_cast<int>(signs.size()) - positive_count();
}

bool ReducedSpec::is_reduced() const {
  bool same_sign = positive_count() == 0 || negative_count() == 0;
  bool all_fractional = true;
  for (const Slope& q : slopes) {
    if (!(Slope(-1, 1) < q && q < Slope(1, 1)) || q.num == 0) all_fractional = false;
  }
  return same_sign || all_fractional;
}

MontesinosSpec parse_spec(const std::string& text) {
  MontesinosSpec spec;
  std::string token;
  int position = 0;
  auto flush = [&](bool final) {
    if (token.empty()) {
      throw Error(Errc::parse_error, final && position == 0 ? "empty slope list"
                                                            : "empty slope token at position " + std::to_string(position),
                  position);
    }
    std::size_t slash = token.find('/');
    std::string ns = slash == std::string::npos ? token : token.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : token.substr(slash + 1);
    auto is_int = [](const std::string& s) {
      if (s.empty()) return false;
      std::size_t i = s[0] == '-' ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      return true;
    };
    if (!is_int(ns) || !is_int(ds)) {
      throw Error(Errc::parse_error, "bad slope token '" + token + "' at position " + std::to_string(position), position);
    }
    try {
      spec.slopes.emplace_back(std::stoll(ns), std::stoll(ds));
    } catch (const std::out_of_range&) {
      throw Error(Errc::parse_error, "slope token '" + token + "' out of range at position " + std::to_string(position),
                  position);
    }
    token.clear();
    ++position;
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush(false);
    } else {
      token.push_back(ch);
    }
  }
  flush(true);
  return spec;
}

std::string format_slopes(const std::vector<Slope>& slopes) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ",";
    out += slopes[i].str();
  }
  return out;
}

namespace {

LinkClass classify(const std::vector<int>& signs) {
  int r = static_cast<int>(signs.size());
  if (r == 1) return LinkClass::OneTangle;
  if (r == 2) return LinkClass::TwoTangle;
  int pos = 0;
  for (int s : signs) pos += (s > 0);
  int neg = r - pos;
  if (neg == 0) return LinkClass::AllPositive;
  if (pos == 0) return LinkClass::AllNegative;
  if (r == 3) return pos == 2 ? LinkClass::PPM : LinkClass::PMM;
  if (r == 4 && pos == 2) {
    bool alternating = true;
    for (int i = 0; i < 4; ++i)
      if (signs[i] == signs[(i + 1) % 4]) alternating = false;
    return alternating ? LinkClass::PMPM : LinkClass::PPMM;
  }
  return pos >= 3 ? LinkClass::AtLeast3Pos : LinkClass::AtLeast3Neg;
}

ReducedSpec finish(std::vector<Slope> slopes) {
  ReducedSpec out;
  out.slopes = std::move(slopes);
  for (const Slope& q : out.slopes) {
    out.signs.push_back(q.num > 0 ? 1 : -1);
    out.cfs.push_back(slope_to_canonical_cf(q));
  }
  out.link_class = classify(out.signs);
  return out;
}

}  // namespace

ReducedSpec validate(const MontesinosSpec& spec) {
  if (spec.slopes.empty()) throw Error(Errc::too_few_tangles, "a Montesinos spec needs at least one tangle");
  for (std::size_t i = 0; i < spec.slopes.size(); ++i) {
    if (spec.slopes[i].is_infinite())
      throw Error(Errc::infinite_slope, "InfiniteSlope at position " + std::to_string(i), static_cast<int>(i));
    if (spec.slopes[i].is_integer())
      throw Error(Errc::integer_slope, "IntegerSlope at position " + std::to_string(i), static_cast<int>(i));
  }
  return finish(spec.slopes);
}

ReducedSpec normalize(const MontesinosSpec& spec) {
  ReducedSpec validated = validate(spec);
  if (spec.slopes.size() < 3)
    throw Error(Errc::too_few_tangles, "normalize needs at least three tangles");

  std::vector<Slope> q = validated.slopes;
  auto reduced = [&] {
    bool pos = false, neg = false, fractional = true;
    for (const Slope& s : q) {
      (s.num > 0 ? pos : neg) = true;
      if (!(Slope(-1, 1) < s && s < Slope(1, 1))) fractional = false;
    }
    return !(pos && neg) || fractional;
  };
  // Move +1 from the largest slope to the smallest until Def 2.4 holds.  The
  // moves keep every slope non-integer, so the schedule cannot get stuck.
  while (!reduced()) {
    std::size_t hi = 0, lo = 0;
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (q[hi] < q[i]) hi = i;
      if (q[i] < q[lo]) lo = i;
    }
    if (hi == lo) throw Error(Errc::unnormalizable, "no transfer move available");
    q[hi] = q[hi] - Slope(1, 1);
    q[lo] = q[lo] + Slope(1, 1);
  }

  ReducedSpec out = finish(std::move(q));
  if (out.link_class == LinkClass::PPMM) out = rewrite_ppmm_to_pmpm(out);
  return out;
}

ReducedSpec rewrite_ppmm_to_pmpm(const ReducedSpec& spec) {
  if (spec.link_class != LinkClass::PPMM)
    throw Error(Errc::wrong_class, "rewrite applies to ++-- specs only");
  for (const Slope& s : spec.slopes) {
    if (!(Slope(-1, 1) < s && s < Slope(1, 1)))
      throw Error(Errc::not_reduced, "rewrite needs all |q_i| < 1");
  }
  // locate the rotation reading (+,+,-,-) and shift the second +'s integer
  // part onto the first -.
  for (int k = 0; k < 4; ++k) {
    auto sgn = [&](int i) { return spec.signs[(k + i) % 4]; };
    if (sgn(0) > 0 && sgn(1) > 0 && sgn(2) < 0 && sgn(3) < 0) {
      std::vector<Slope> q = spec.slopes;
      q[(k + 1) % 4] = q[(k + 1) % 4] - Slope(1, 1);
      q[(k + 2) % 4] = q[(k + 2) % 4] + Slope(1, 1);
      return finish(std::move(q));
    }
  }
  throw Error(Errc::internal, "PPMM class without a ++-- rotation");
}

MontesinosSpec mirror(const MontesinosSpec& spec) {
  MontesinosSpec out;
  out.slopes.reserve(spec.slopes.size());
  for (const Slope& s : spec.slopes) out.slopes.push_back(-s);
  return out;
}

CanonicalInvariant canonical_invariant(const MontesinosSpec& spec) {
  if (spec.slopes.size() < 3)
    throw Error(Errc::too_few_tangles, "canonical invariant needs at least three tangles");
  CanonicalInvariant inv;
  inv.total = Slope(0, 1);
  std::vector<Slope> residues;
  for (const Slope& s : spec.slopes) {
    if (s.is_infinite()) throw Error(Errc::infinite_slope, "infinite slope has no residue");
    inv.total = inv.total + s;
    residues.push_back(s.mod_one());
  }
  std::size_t n = residues.size();
  std::vector<Slope> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::vector<Slope> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = reflect ? (shift + n - i) % n : (shift + i) % n;
        cand[i] = residues[src];
      }
      if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
        best = std::move(cand);
    }
  }
  inv.residues = std::move(best);
  return inv;
}

Hyperbolicity hyperbolicity_gate(const ReducedSpec& spec) {
  if (spec.positive_count() < 2 || spec.negative_count() < 2) return Hyperbolicity::Assumed;
  static const CanonicalInvariant pretzel =
      canonical_invariant({{Slope(1, 2), Slope(-1, 2), Slope(1, 2), Slope(-1, 2)}});
  MontesinosSpec plain;
  plain.slopes = spec.slopes;
  if (canonical_invariant(plain) == pretzel) return Hyperbolicity::ExcludedPretzel;
  return Hyperbolicity::Hyperbolic;
}

}  // namespace montebound

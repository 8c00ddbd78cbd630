#pragma once

// Hyperelliptic layer: involution compatibility with twisted data, double
// cover checks against the quotient tree, and signature bookkeeping.

#include <optional>
#include <vector>

#include "logtwist/stablegraph.hpp"
#include "logtwist/twist.hpp"

namespace logtwist {

/// Hyperelliptic signature: orders at the n1 fixed (Weierstrass) markings
/// and at the n2 conjugate pairs. Every fixed point is marked, so zero
/// entries are allowed in `fixed`.
struct HypSignature {
  std::vector<int> fixed;  // each in 2 * Z_{>=0}
  std::vector<int> pairs;  // each in Z_{>0}, shared by both points of a pair
};

/// Orders of the pushed-forward quadratic differential on the quotient line:
/// `fixed` carries the fixed-point entries, `paired` the doubled pair entries.
struct QuadraticSignature {
  std::vector<int> fixed;
  std::vector<int> paired;

  std::vector<int> entries() const;
};

/// Throws std::invalid_argument on an odd or negative fixed entry, or a
/// nonpositive pair entry.
void check_well_formed(const HypSignature& mu);
/// n1 - 4 == sum(fixed) + 2 * sum(pairs).
bool check_nonempty(const HypSignature& mu);
/// (n1 - 2) / 2 when n1 is even and at least 2.
std::optional<int> hyperelliptic_genus(const HypSignature& mu);

/// The signature map (mu_1, c) -> (mu_1, 2c), without the non-emptiness gate.
QuadraticSignature quadratic_image(const HypSignature& mu);
/// n1 - 4 == sum(fixed) + sum(paired) on a pushed-forward signature.
bool quadratic_nonempty(const QuadraticSignature& q);
/// quadratic_image, rejecting empty strata (std::invalid_argument).
QuadraticSignature quadratic_pushforward(const HypSignature& mu);

struct EdgeOrbitSplit {
  std::vector<std::size_t> fixed;    // edges with iota(l) = l
  std::vector<std::size_t> swapped;  // edges with iota(l) != l
};

EdgeOrbitSplit edge_orbit_split(const StableGraph& g, const GraphInvolution& iota);

/// Degeneracy flags, marking orders and edge contact data (order and
/// direction) are preserved by iota. Assumes check_involution holds.
bool check_involution_compat(const WeightedGraph& w, const GraphInvolution& iota);

/// Necessary conditions for iota to be the involution of an admissible double
/// cover of a tree of rational curves. Reports the first failing component.
std::optional<Diagnostic> quotient_cover_check(const StableGraph& g, const GraphInvolution& iota);

}  // namespace logtwist

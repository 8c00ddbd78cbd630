#pragma once

// Spin parity for even signatures on curves whose components are all
// rational.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "logtwist/minmonoid.hpp"
#include "logtwist/twist.hpp"

namespace logtwist {

/// Raised for inputs outside the regime where parity can be certified.
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool check_even_signature(const Signature& mu);

struct OrbifoldLift {
  /// Per edge: 1 for even contact, 2 for odd contact (e_l -> 2 e~_l).
  std::vector<int> multiplier;
  std::vector<std::size_t> even_edges;
  std::vector<std::size_t> odd_edges;
  /// Per edge: exponents of the local coordinate map (x, y) -> (x^a, y^b).
  std::vector<std::array<int, 2>> local_exponents;
};

OrbifoldLift orbifold_lift_map(const WeightedGraph& w);

/// Refinement making every degenerate vertex symbol divisible by 2.
RefinedMonoid divisibility_base_change(const WeightedGraph& w);

struct SpinDegrees {
  /// Per vertex: point label -> coefficient of the spin divisor. Labels
  /// match induced_orders.
  std::vector<std::map<std::string, long>> divisor;
  std::vector<long> degree;
};

/// Half the marking orders, +c/2 and -c/2 on outgoing and incoming even
/// half-edges, 0 on unoriented ones; at odd-contact half-edges the branch is
/// detached and the coefficient is (c-1)/2 outgoing, -(c+1)/2 incoming.
/// Throws std::invalid_argument on an odd signature or a nonzero residual.
SpinDegrees spin_degrees(const WeightedGraph& w);

struct SpinNode {
  std::array<std::size_t, 2> component{};
  int sign = 1;
};

/// Nodal curve with rational components, spin degree per component, and
/// gluing signs at the nodes that stay attached.
struct SpinCurve {
  std::vector<long> degree;
  std::vector<int> genus;  // must be all zero
  std::vector<SpinNode> nodes;
};

/// Affine coordinates of the two branch points of every node.
using Placement = std::vector<std::array<Integer, 2>>;

/// Branch points numbered 0, 1, 2, ... on each component in node order.
/// Often a special position, where h0 is larger than at a general one.
Placement default_placement(const SpinCurve& c);
/// Distinct pseudo-random integers in [-2^20, 2^20] per component,
/// reproducible from `seed`.
Placement random_placement(const SpinCurve& c, std::uint64_t seed);

struct H0Result {
  long h0 = 0;
  bool odd = false;
};

/// Dimension of the space of tuples of polynomials (degree <= d_v on
/// component v) with p_a(x) = s * p_b(y) at every node. Throws
/// UnsupportedRegime on a positive-genus component.
H0Result h0_parity(const SpinCurve& c, const Placement& placement);
/// h0 at a general placement.
H0Result h0_parity(const SpinCurve& c);

/// The curve left after detaching odd-contact nodes; `signs` lists one sign
/// per even-contact edge in edge order.
SpinCurve spin_curve(const WeightedGraph& w, const SpinDegrees& d, const std::vector<int>& signs);
/// Connected pieces, each with components renumbered in ascending order.
std::vector<SpinCurve> connected_pieces(const SpinCurve& c);

struct SpinInput {
  WeightedGraph weighted;
  std::vector<int> signs;
};

struct SpinReport {
  bool odd = false;
  long h0 = 0;
  std::vector<long> piece_h0;
  Integer refinement_index = 1;
  SpinDegrees degrees;
  OrbifoldLift lift;
};

/// Full pipeline. With `base_change` false the divisibility refinement is
/// skipped; it does not affect the divisor data.
SpinReport spin_parity(const SpinInput& input, bool base_change = true);

}  // namespace logtwist

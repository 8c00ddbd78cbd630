#pragma once

// Minimal monoids of weighted graphs and their hyperelliptic quotients.
//
// Symbols are ordered vertices first (e_v for v = 0..|V|-1), then edges
// (e_l for l = 0..|E|-1). Images live in the ambient lattice of `monoid`.

#include <optional>
#include <string>
#include <vector>

#include "logtwist/intlat.hpp"
#include "logtwist/twist.hpp"

namespace logtwist {

struct MinimalMonoid {
  AffineMonoid monoid;
  std::vector<std::string> symbols;
  std::vector<IntVector> images;
  std::size_t num_vertices = 0;

  std::size_t rank() const { return monoid.ambient().rank(); }
  const IntVector& vertex_image(std::size_t v) const { return images.at(v); }
  const IntVector& edge_image(std::size_t l) const { return images.at(num_vertices + l); }
  /// Index of a symbol name, if present.
  std::optional<std::size_t> symbol_index(const std::string& name) const;
  const IntVector& image(const std::string& symbol) const;
};

/// Symbol names e_<vertex name> and e_<edge name>.
std::vector<std::string> symbol_names(const StableGraph& g);

/// Saturation of the images of e_v, e_l inside the torsion-free quotient of
/// the free group on them by e_v ~ 0 (v nondegenerate) and
/// e_source + c_l e_l ~ e_target (l oriented). Total on any shape-valid input.
MinimalMonoid minimal_monoid(const WeightedGraph& w);

/// Quotient of the group of M(G) by e_l = e_iota(l) over swapped edges, then
/// torsion-free part and saturation of the image of M(G).
MinimalMonoid hyperelliptic_monoid_quotient(const WeightedGraph& w, const GraphInvolution& iota);

/// Coequalizer of the identity and the automorphism induced by iota: quotient
/// of the group by the image of (id - phi), torsion-free part, saturation of
/// the image of M(G).
MinimalMonoid hyperelliptic_monoid_coequalizer(const WeightedGraph& w, const GraphInvolution& iota);

/// The automorphism of the group of M(G) sending e_s to e_iota(s), as a
/// matrix acting on ambient coordinates. Throws if iota does not induce one.
IntMatrix involution_automorphism(const MinimalMonoid& m, const StableGraph& g, const GraphInvolution& iota);

/// True iff e_s -> e_s extends to mutually inverse lattice isomorphisms that
/// identify the two Hilbert bases.
bool monoids_equal(const MinimalMonoid& a, const MinimalMonoid& b);

/// y with 2y = x and y in the monoid, if any.
std::optional<IntVector> halve(const MinimalMonoid& m, const IntVector& x);
std::optional<IntVector> halve(const MinimalMonoid& m, const std::string& symbol);

struct RefinedMonoid {
  MinimalMonoid monoid;
  Integer index = 1;
};

/// Smallest refinement of the ambient lattice (index a power of 2) in which
/// every target symbol's image is divisible by 2 in the saturated monoid.
/// Targets are processed in the given order, one half-vector at a time.
RefinedMonoid refine_for_halving(const MinimalMonoid& m, const std::vector<std::string>& targets);

}  // namespace logtwist

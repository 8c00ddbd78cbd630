#include "logtwist/minmonoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "logtwist/hyper.hpp"

namespace logtwist {

namespace {

// h * a for any rational a with g * a = target.
IntVector column_solve(const IntMatrix& g, const IntVector& target, const IntMatrix& h) {
  auto a = solve_left(g.transposed(), target);
  if (!a) throw std::logic_error("image matrix does not have full row rank");
  std::vector<Rational> out(h.rows(), Rational(0));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out[i] += h(i, j) * (*a)[j];
  IntVector result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].get_den() != 1) throw std::logic_error("lattice map is not integral");
    result[i] = out[i].get_num();
  }
  return result;
}

// The linear map X with X * g = h, where g (r x N) has full row rank r.
// Throws std::logic_error if X is not integral.
IntMatrix transfer_matrix(const IntMatrix& g, const IntMatrix& h) {
  const std::size_t r = g.rows();
  IntMatrix x(h.rows(), r);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, Integer(0));
    e[i] = 1;
    const IntVector col = column_solve(g, e, h);
    for (std::size_t k = 0; k < col.size(); ++k) x(k, i) = col[k];
  }
  return x;
}

// Moves images and monoid generators into the coordinates in which the image
// matrix is in Hermite normal form, then saturates.
MinimalMonoid assemble(std::vector<std::string> symbols, std::size_t num_vertices, std::size_t r,
                       const std::vector<IntVector>& images, const std::vector<IntVector>& monoid_generators,
                       bool label_generators) {
  MinimalMonoid m;
  m.symbols = std::move(symbols);
  m.num_vertices = num_vertices;
  if (r == 0) {
    m.images.assign(m.symbols.size(), IntVector{});
    m.monoid = saturate(std::vector<IntVector>{}, Lattice::standard(0));
    return m;
  }
  const IntMatrix g = IntMatrix::from_columns(images, r);
  const IntMatrix h = hermite_normal_form(g);
  if (h.rows() != r) throw std::logic_error("images do not span the ambient group");
  const IntMatrix w = transfer_matrix(g, h);
  for (std::size_t c = 0; c < h.cols(); ++c) m.images.push_back(h.col(c));
  std::vector<IntVector> gens;
  for (const auto& x : monoid_generators) gens.push_back(w.apply(x));
  m.monoid = saturate(gens, Lattice::standard(r));
  if (label_generators) m.monoid.set_labels(m.symbols);
  return m;
}

std::vector<std::size_t> symbol_involution(const StableGraph& g, const GraphInvolution& iota) {
  std::vector<std::size_t> s(g.num_vertices() + g.num_edges());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) s[v] = iota.vertex_map[v];
  for (std::size_t l = 0; l < g.num_edges(); ++l) s[g.num_vertices() + l] = g.num_vertices() + iota.edge_image(l);
  return s;
}

void require_compatible(const WeightedGraph& w, const GraphInvolution& iota) {
  if (auto d = involution_diagnostic(w.graph, iota)) throw std::invalid_argument("invalid involution: " + d->message);
  if (!check_involution_compat(w, iota))
    throw std::invalid_argument("involution is not compatible with the weighted graph");
}

std::vector<IntVector> project_all(const IntMatrix& proj, const std::vector<IntVector>& xs) {
  std::vector<IntVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(proj.apply(x));
  return out;
}

}  // namespace

std::optional<std::size_t> MinimalMonoid::symbol_index(const std::string& name) const {
  const auto it = std::find(symbols.begin(), symbols.end(), name);
  if (it == symbols.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols.begin());
}

const IntVector& MinimalMonoid::image(const std::string& symbol) const {
  const auto i = symbol_index(symbol);
  if (!i) throw std::out_of_range("unknown symbol " + symbol);
  return images[*i];
}

std::vector<std::string> symbol_names(const StableGraph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out.push_back("e_" + g.vertex_name(v));
  for (std::size_t l = 0; l < g.num_edges(); ++l) out.push_back("e_" + g.edge_name(l));
  return out;
}

MinimalMonoid minimal_monoid(const WeightedGraph& w) {
  const StableGraph& g = w.graph;
  check_shape(g, w.structure);
  const std::size_t nv = g.num_vertices();
  const std::size_t n = nv + g.num_edges();

  std::vector<IntVector> relations;
  for (std::size_t v = 0; v < nv; ++v) {
    if (w.structure.degenerate[v]) continue;
    IntVector r(n, Integer(0));
    r[v] = 1;
    relations.push_back(std::move(r));
  }
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    const auto& e = w.structure.edges[l];
    if (e.orientation == Orientation::none) continue;
    IntVector r(n, Integer(0));
    r[edge_source(g, w.structure, l)] += 1;
    r[nv + l] += e.contact;
    r[edge_target(g, w.structure, l)] -= 1;
    relations.push_back(std::move(r));
  }
  const auto q = torsion_free_quotient(n, IntMatrix::from_rows(relations, n));
  std::vector<IntVector> images;
  for (std::size_t s = 0; s < n; ++s) images.push_back(q.proj.col(s));
  return assemble(symbol_names(g), nv, q.target.rank(), images, images, true);
}

MinimalMonoid hyperelliptic_monoid_quotient(const WeightedGraph& w, const GraphInvolution& iota) {
  require_compatible(w, iota);
  const MinimalMonoid base = minimal_monoid(w);
  const std::size_t r = base.rank();
  const EdgeOrbitSplit split = edge_orbit_split(w.graph, iota);
  std::vector<IntVector> relations;
  for (auto l : split.swapped) {
    const IntVector& a = base.edge_image(l);
    const IntVector& b = base.edge_image(iota.edge_image(l));
    IntVector d(r);
    for (std::size_t i = 0; i < r; ++i) d[i] = a[i] - b[i];
    relations.push_back(std::move(d));
  }
  const auto q = torsion_free_quotient(r, IntMatrix::from_rows(relations, r));
  return assemble(base.symbols, base.num_vertices, q.target.rank(), project_all(q.proj, base.images),
                  project_all(q.proj, base.monoid.hilbert_basis()), false);
}

IntMatrix involution_automorphism(const MinimalMonoid& m, const StableGraph& g, const GraphInvolution& iota) {
  const std::size_t r = m.rank();
  if (r == 0) return IntMatrix(0, 0);
  const auto s = symbol_involution(g, iota);
  std::vector<IntVector> moved;
  for (std::size_t i = 0; i < s.size(); ++i) moved.push_back(m.images[s[i]]);
  const IntMatrix src = IntMatrix::from_columns(m.images, r);
  const IntMatrix dst = IntMatrix::from_columns(moved, r);
  IntMatrix phi;
  try {
    phi = transfer_matrix(src, dst);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("involution does not induce a lattice automorphism");
  }
  if (phi * src != dst) throw std::invalid_argument("involution does not induce a lattice automorphism");
  const Integer det = determinant(phi);
  if (det != 1 && det != -1) throw std::invalid_argument("involution does not induce a lattice automorphism");
  std::vector<IntVector> hb = project_all(phi, m.monoid.hilbert_basis());
  std::sort(hb.begin(), hb.end());
  if (hb != m.monoid.hilbert_basis()) throw std::invalid_argument("involution does not preserve the monoid");
  return phi;
}

MinimalMonoid hyperelliptic_monoid_coequalizer(const WeightedGraph& w, const GraphInvolution& iota) {
  require_compatible(w, iota);
  const MinimalMonoid base = minimal_monoid(w);
  const std::size_t r = base.rank();
  const IntMatrix phi = involution_automorphism(base, w.graph, iota);
  std::vector<IntVector> relations;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector d(r);
    for (std::size_t k = 0; k < r; ++k) d[k] = Integer(k == i ? 1 : 0) - phi(k, i);
    if (!is_zero(d)) relations.push_back(std::move(d));
  }
  const auto q = torsion_free_quotient(r, IntMatrix::from_rows(relations, r));
  return assemble(base.symbols, base.num_vertices, q.target.rank(), project_all(q.proj, base.images),
                  project_all(q.proj, base.monoid.hilbert_basis()), false);
}

bool monoids_equal(const MinimalMonoid& a, const MinimalMonoid& b) {
  if (a.symbols != b.symbols || a.images.size() != b.images.size()) return false;
  if (a.rank() != b.rank()) return false;
  const std::size_t r = a.rank();
  if (r == 0) return a.monoid.hilbert_basis().empty() && b.monoid.hilbert_basis().empty();
  const IntMatrix ga = IntMatrix::from_columns(a.images, r);
  const IntMatrix gb = IntMatrix::from_columns(b.images, r);
  if (rank(ga) != r || rank(gb) != r) return false;
  IntMatrix t;
  try {
    t = transfer_matrix(ga, gb);
  } catch (const std::logic_error&) {
    return false;
  }
  if (t * ga != gb) return false;
  const Integer det = determinant(t);
  if (det != 1 && det != -1) return false;
  std::vector<IntVector> mapped = project_all(t, a.monoid.hilbert_basis());
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.monoid.hilbert_basis();
}

std::optional<IntVector> halve(const MinimalMonoid& m, const IntVector& x) {
  IntVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!mpz_even_p(x[i].get_mpz_t())) return std::nullopt;
    y[i] = x[i] / 2;
  }
  if (!contains(m.monoid, y)) return std::nullopt;
  return y;
}

std::optional<IntVector> halve(const MinimalMonoid& m, const std::string& symbol) {
  return halve(m, m.image(symbol));
}

RefinedMonoid refine_for_halving(const MinimalMonoid& m, const std::vector<std::string>& targets) {
  RefinedMonoid out{m, 1};
  for (const auto& t : targets) {
    MinimalMonoid& cur = out.monoid;
    const IntVector x = cur.image(t);
    if (halve(cur, x)) continue;
    const std::size_t r = cur.rank();
    // Adjoin x/2; work in doubled coordinates so everything stays integral.
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r, Integer(0));
      e[i] = 2;
      gens.push_back(std::move(e));
    }
    gens.push_back(x);
    const Lattice finer = Lattice::spanned_by(gens, r);
    Integer det = determinant(finer.basis());
    if (det < 0) det = -det;
    Integer full = 1;
    for (std::size_t i = 0; i < r; ++i) full *= 2;
    const Integer step = full / det;

    auto recoordinate = [&](const IntVector& y) {
      IntVector doubled(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) doubled[i] = 2 * y[i];
      auto c = finer.coordinates(doubled);
      if (!c) throw std::logic_error("refined lattice does not contain the old lattice");
      return *c;
    };
    MinimalMonoid next;
    next.symbols = cur.symbols;
    next.num_vertices = cur.num_vertices;
    for (const auto& y : cur.images) next.images.push_back(recoordinate(y));
    std::vector<IntVector> hb;
    for (const auto& y : cur.monoid.hilbert_basis()) hb.push_back(recoordinate(y));
    next.monoid = saturate(hb, Lattice::standard(r));
    out.monoid = std::move(next);
    out.index *= step;
  }
  return out;
}

}  // namespace logtwist

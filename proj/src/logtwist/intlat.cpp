#include "logtwist/intlat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace logtwist {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix out(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c);
  return out;
}

// Reduces `m` to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Integer(v[i] * l);
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Inverse of a nonsingular square matrix over Q.
RationalMatrix rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  RationalMatrix m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
    m[r][n + r] = 1;
  }
  const auto pivots = row_reduce(m, n);
  if (pivots.size() != n) throw std::invalid_argument("matrix is singular");
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

}  // namespace

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntVector IntMatrix::apply_left(const IntVector& x) const {
  if (x.size() != rows_) throw std::invalid_argument("apply_left: dimension mismatch");
  IntVector y(cols_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) y[c] += x[r] * (*this)(r, c);
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank(const IntMatrix& a) {
  auto m = to_rational(a);
  return row_reduce(m, a.cols()).size();
}

std::size_t rank_mod_p(const IntMatrix& a, const Integer& p) {
  std::vector<IntVector> m(a.rows(), IntVector(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Integer x;
      mpz_fdiv_r(x.get_mpz_t(), a(r, c).get_mpz_t(), p.get_mpz_t());
      m[r][c] = x;
    }
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), m[row][col].get_mpz_t(), p.get_mpz_t());
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Integer f = m[r][col] * inv;
      for (std::size_t c = col; c < a.cols(); ++c) {
        m[r][c] -= f * m[row][c];
        mpz_fdiv_r(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), p.get_mpz_t());
      }
    }
    ++row;
  }
  return row;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  auto m = to_rational(a);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return Integer(det);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const auto inv = rational_inverse(a);
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (inv[r][c].get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      out(r, c) = inv[r][c].get_num();
    }
  return out;
}

std::optional<std::vector<Rational>> solve_left(const IntMatrix& basis, const IntVector& x) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  if (x.size() != n) throw std::invalid_argument("solve_left: dimension mismatch");
  // Columns of the augmented system are basis rows; the last column is x.
  RationalMatrix m(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[j][i] = basis(i, j);
    m[j][k] = x[j];
  }
  const auto pivots = row_reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = m[r][k];
  return c;
}

// ---------------------------------------------------------------------------
// Normal forms

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = f.S;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Integer v = abs_of(S(i, j));
          if (pi == m || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return f;
      S.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        const Integer q = floor_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        const Integer q = floor_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      S.add_row_multiple(t, bad, 1);
      f.U.add_row_multiple(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  std::size_t cur = 0;
  for (std::size_t j = 0; j < h.cols() && cur < m; ++j) {
    for (;;) {
      std::size_t sel = m;
      Integer best;
      for (std::size_t r = cur; r < m; ++r) {
        if (h(r, j) == 0) continue;
        Integer v = abs_of(h(r, j));
        if (sel == m || v < best) {
          best = v;
          sel = r;
        }
      }
      if (sel == m) break;
      h.swap_rows(cur, sel);
      bool done = true;
      for (std::size_t r = cur + 1; r < m; ++r) {
        if (h(r, j) == 0) continue;
        h.add_row_multiple(r, cur, -floor_div(h(r, j), h(cur, j)));
        if (h(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(cur, j) == 0) continue;
    if (h(cur, j) < 0) h.negate_row(cur);
    for (std::size_t r = 0; r < cur; ++r) h.add_row_multiple(r, cur, -floor_div(h(r, j), h(cur, j)));
    ++cur;
  }
  IntMatrix out(cur, h.cols());
  for (std::size_t r = 0; r < cur; ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = h(r, c);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::standard(std::size_t n) {
  Lattice l;
  l.dim_ = n;
  l.basis_ = IntMatrix::identity(n);
  return l;
}

Lattice Lattice::spanned_by(std::span<const IntVector> generators, std::size_t dim) {
  Lattice l;
  l.dim_ = dim;
  l.basis_ = generators.empty() ? IntMatrix(0, dim)
                                : hermite_normal_form(IntMatrix::from_rows(generators, dim));
  return l;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("lattice coordinates: dimension mismatch");
  if (rank() == 0) {
    if (!is_zero(x)) return std::nullopt;
    return IntVector{};
  }
  auto c = solve_left(basis_, x);
  if (!c) return std::nullopt;
  IntVector out(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i].get_den() != 1) return std::nullopt;
    out[i] = (*c)[i].get_num();
  }
  // solve_left sets free variables to zero; a basis has none, but verify.
  if (basis_.apply_left(out) != x) return std::nullopt;
  return out;
}

IntVector Lattice::from_coordinates(const IntVector& c) const {
  if (rank() == 0) return IntVector(dim_, Integer(0));
  return basis_.apply_left(c);
}

TorsionFreeQuotient torsion_free_quotient(std::size_t rank, const IntMatrix& relations) {
  TorsionFreeQuotient q;
  if (relations.rows() == 0) {
    q.target = Lattice::standard(rank);
    q.proj = IntMatrix::identity(rank);
    q.section = IntMatrix::identity(rank);
    return q;
  }
  if (relations.cols() != rank) throw std::invalid_argument("relations have the wrong width");
  const SmithForm snf = smith_normal_form(relations);
  std::size_t k = 0;
  while (k < std::min(snf.S.rows(), snf.S.cols()) && snf.S(k, k) != 0) ++k;
  const IntMatrix v_inv = unimodular_inverse(snf.V);
  const std::size_t r = rank - k;
  q.target = Lattice::standard(r);
  q.proj = IntMatrix(r, rank);
  q.section = IntMatrix(rank, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      q.proj(i, j) = snf.V(j, k + i);
      q.section(j, i) = v_inv(k + i, j);
    }
  return q;
}

// ---------------------------------------------------------------------------
// Cones

std::vector<IntVector> cone_facets(std::span<const IntVector> generators, std::size_t dim) {
  // Pick a maximal independent subset B; x = B*lambda_B + sum_j mu_j h_j.
  std::vector<std::size_t> basis_idx;
  std::vector<std::size_t> rest_idx;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      chosen.push_back(generators[i]);
      if (rank(IntMatrix::from_rows(chosen, dim)) == chosen.size()) {
        basis_idx.push_back(i);
      } else {
        chosen.pop_back();
        rest_idx.push_back(i);
      }
    }
  }
  if (basis_idx.size() != dim) throw std::invalid_argument("cone_facets: cone is not full-dimensional");
  if (dim == 0) return {};

  std::vector<IntVector> bcols;
  for (auto i : basis_idx) bcols.push_back(generators[i]);
  const auto binv = rational_inverse(IntMatrix::from_columns(bcols, dim));

  // Inequalities a . (x, mu) >= 0 with a history of original rows.
  struct Row {
    IntVector a;
    std::vector<bool> history;
  };
  const std::size_t nvars = dim + rest_idx.size();
  const std::size_t norig = nvars;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < dim; ++i) {  // lambda_B,i >= 0
    std::vector<Rational> a(nvars, Rational(0));
    for (std::size_t c = 0; c < dim; ++c) a[c] = binv[i][c];
    for (std::size_t j = 0; j < rest_idx.size(); ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < dim; ++c) s += binv[i][c] * generators[rest_idx[j]][c];
      a[dim + j] = -s;
    }
    Row row{primitive(a), std::vector<bool>(norig, false)};
    row.history[rows.size()] = true;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < rest_idx.size(); ++j) {  // mu_j >= 0
    IntVector a(nvars, Integer(0));
    a[dim + j] = 1;
    Row row{a, std::vector<bool>(norig, false)};
    row.history[rows.size()] = true;
    rows.push_back(std::move(row));
  }

  // Eliminate the mu variables, pruning with Chernikov's rule.
  std::size_t eliminated = 0;
  for (std::size_t var = nvars; var-- > dim;) {
    ++eliminated;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[var] > 0) pos.push_back(std::move(r));
      else if (r.a[var] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        std::vector<bool> h(norig);
        std::size_t count = 0;
        for (std::size_t i = 0; i < norig; ++i) {
          h[i] = p.history[i] || n.history[i];
          count += h[i] ? 1 : 0;
        }
        if (count > eliminated + 1) continue;
        const Integer alpha = p.a[var];
        const Integer beta = -n.a[var];
        IntVector a(nvars);
        for (std::size_t c = 0; c < nvars; ++c) a[c] = beta * p.a[c] + alpha * n.a[c];
        next.push_back({primitive(std::move(a)), std::move(h)});
      }
    // Drop exact duplicates and trivial rows.
    std::vector<Row> dedup;
    std::set<IntVector> seen;
    for (auto& r : next) {
      if (is_zero(r.a)) continue;
      if (seen.insert(r.a).second) dedup.push_back(std::move(r));
    }
    rows = std::move(dedup);
  }

  // Keep genuine facets: tight generators span a hyperplane.
  std::set<IntVector> facets;
  for (const auto& r : rows) {
    IntVector a(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(dim));
    a = primitive(std::move(a));
    if (is_zero(a)) continue;
    std::vector<IntVector> tight;
    bool valid = true;
    for (const auto& g : generators) {
      const Integer d = dot(a, g);
      if (d < 0) valid = false;
      if (d == 0) tight.push_back(g);
    }
    if (!valid) throw std::logic_error("cone_facets: elimination produced an invalid inequality");
    const std::size_t tight_rank = tight.empty() ? 0 : rank(IntMatrix::from_rows(tight, dim));
    if (tight_rank + 1 == dim) facets.insert(std::move(a));
  }
  return {facets.begin(), facets.end()};
}

namespace {

// Lattice points of Z^k in the half-open parallelepiped spanned by the
// columns of `b` (nonsingular k x k).
std::vector<IntVector> parallelepiped_points(const IntMatrix& b) {
  const std::size_t k = b.rows();
  const SmithForm snf = smith_normal_form(b);
  const IntMatrix u_inv = unimodular_inverse(snf.U);
  const auto b_inv = rational_inverse(b);
  std::vector<IntVector> out;
  IntVector digits(k, Integer(0));
  for (;;) {
    IntVector y = u_inv.apply(digits);
    IntVector floors(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational lambda = 0;
      for (std::size_t j = 0; j < k; ++j) lambda += b_inv[i][j] * y[j];
      floors[i] = floor_of(lambda);
    }
    const IntVector shift = b.apply(floors);
    for (std::size_t i = 0; i < k; ++i) y[i] -= shift[i];
    out.push_back(std::move(y));
    // Mixed-radix increment over prod [0, s_i).
    std::size_t i = 0;
    while (i < k) {
      digits[i] += 1;
      if (digits[i] < snf.S(i, i)) break;
      digits[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

bool in_cone(const std::vector<IntVector>& facets, const IntVector& x) {
  return std::all_of(facets.begin(), facets.end(), [&](const IntVector& f) { return dot(f, x) >= 0; });
}

// Hilbert basis of the pointed full-dimensional cone generated by `gens` in Z^k.
std::vector<IntVector> pointed_hilbert_basis(const std::vector<IntVector>& gens,
                                             const std::vector<IntVector>& facets, std::size_t k) {
  std::set<IntVector> candidates(gens.begin(), gens.end());
  // Every k-subset of independent generators contributes its parallelepiped.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const std::size_t n = gens.size();
  if (k > 0 && n >= k) {
    for (;;) {
      std::vector<IntVector> cols;
      for (auto i : idx) cols.push_back(gens[i]);
      const IntMatrix b = IntMatrix::from_columns(cols, k);
      if (determinant(b) != 0)
        for (auto& p : parallelepiped_points(b))
          if (!is_zero(p)) candidates.insert(std::move(p));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& s : candidates) {
      if (s == x) continue;
      IntVector d(k);
      for (std::size_t i = 0; i < k; ++i) d[i] = x[i] - s[i];
      if (in_cone(facets, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

// Generating set of the saturation of a full-dimensional cone in Z^k that
// may contain lines.
std::vector<IntVector> span_generators(const std::vector<IntVector>& gens, std::size_t k,
                                       const std::vector<IntVector>& facets, bool& sharp) {
  if (k == 0) {
    sharp = true;
    return {};
  }
  const std::size_t frank = facets.empty() ? 0 : rank(IntMatrix::from_rows(facets, k));
  sharp = frank == k;
  if (sharp) return pointed_hilbert_basis(gens, facets, k);

  // Lineality lattice = integer kernel of the facet matrix.
  std::vector<IntVector> lineality;
  if (facets.empty()) {
    for (std::size_t i = 0; i < k; ++i) lineality.push_back(IntMatrix::identity(k).row(i));
  } else {
    const SmithForm snf = smith_normal_form(IntMatrix::from_rows(facets, k));
    for (std::size_t j = frank; j < k; ++j) lineality.push_back(snf.V.col(j));
  }
  const auto q = torsion_free_quotient(k, IntMatrix::from_rows(lineality, k));
  std::vector<IntVector> qgens;
  for (const auto& g : gens) {
    auto y = q.proj.apply(g);
    if (!is_zero(y)) qgens.push_back(std::move(y));
  }
  std::vector<IntVector> out;
  for (const auto& l : lineality) {
    out.push_back(l);
    IntVector neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    out.push_back(std::move(neg));
  }
  if (!qgens.empty()) {
    const AffineMonoid quotient = saturate(qgens, q.target);
    for (const auto& h : quotient.hilbert_basis()) out.push_back(q.section.apply(h));
  }
  return out;
}

}  // namespace

std::optional<IntVector> AffineMonoid::span_coordinates(const IntVector& x) const {
  auto c = ambient_.coordinates(x);
  if (!c) return std::nullopt;
  if (c->empty()) return IntVector{};
  IntVector t = span_transform_.apply_left(*c);
  for (std::size_t i = span_rank_; i < t.size(); ++i)
    if (t[i] != 0) return std::nullopt;
  t.resize(span_rank_);
  return t;
}

AffineMonoid saturate(std::span<const IntVector> generators, const Lattice& ambient) {
  AffineMonoid m;
  m.ambient_ = ambient;
  m.generators_.assign(generators.begin(), generators.end());
  const std::size_t r = ambient.rank();

  std::vector<IntVector> coords;
  for (const auto& g : generators) {
    if (g.size() != ambient.dim()) throw std::invalid_argument("saturate: generator has the wrong dimension");
    auto c = ambient.coordinates(g);
    if (!c) throw std::invalid_argument("saturate: generator " + to_string(g) + " is not in the ambient lattice");
    if (!is_zero(*c)) coords.push_back(std::move(*c));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  if (coords.empty()) {
    m.span_rank_ = 0;
    m.span_transform_ = IntMatrix::identity(r);
    return m;
  }

  // Restrict to the saturated sublattice spanned by the generators.
  const SmithForm snf = smith_normal_form(IntMatrix::from_rows(coords, r));
  std::size_t k = 0;
  while (k < std::min(snf.S.rows(), snf.S.cols()) && snf.S(k, k) != 0) ++k;
  m.span_rank_ = k;
  m.span_transform_ = snf.V;
  const IntMatrix v_inv = unimodular_inverse(snf.V);

  std::vector<IntVector> local;
  for (const auto& c : coords) {
    IntVector d = snf.V.apply_left(c);
    d.resize(k);
    local.push_back(std::move(d));
  }
  m.facets_ = cone_facets(local, k);
  std::vector<IntVector> basis_local = span_generators(local, k, m.facets_, m.sharp_);

  for (const auto& d : basis_local) {
    IntVector c(r, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < r; ++j) c[j] += d[i] * v_inv(i, j);
    m.hilbert_basis_.push_back(ambient.from_coordinates(c));
  }
  std::sort(m.hilbert_basis_.begin(), m.hilbert_basis_.end());
  return m;
}

bool is_sharp(const AffineMonoid& m) { return m.sharp(); }

bool contains(const AffineMonoid& m, const IntVector& x) {
  if (x.size() != m.ambient().dim())
    throw std::invalid_argument("contains: expected a vector of length " + std::to_string(m.ambient().dim()));
  const auto d = m.span_coordinates(x);
  if (!d) return false;
  return in_cone(m.facets(), *d);
}

}  // namespace logtwist

#pragma once

// Exact integer lattices and affine monoids.
//
// Everything here runs over GMP integers and rationals; there is no floating
// point anywhere in this module. Vectors are row vectors unless a function
// says otherwise, and matrices act on column vectors through IntMatrix::apply.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace logtwist {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stacks `rows` (each of length `cols`) into a matrix.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  /// Uses `cols` as the columns of a `rows`-row matrix.
  static IntMatrix from_columns(std::span<const IntVector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transposed() const;

  /// M * x for a column vector x.
  IntVector apply(const IntVector& x) const;
  /// x * M for a row vector x.
  IntVector apply_left(const IntVector& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::size_t rank(const IntMatrix& a);
/// Rank of `a` reduced modulo the prime `p`.
std::size_t rank_mod_p(const IntMatrix& a, const Integer& p);
Integer determinant(const IntMatrix& a);
/// Inverse of a square matrix with determinant +-1. Throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Rational c with c * basis = x (basis given by rows), if one exists.
std::optional<std::vector<Rational>> solve_left(const IntMatrix& basis, const IntVector& x);

struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

/// U * A * V = S with U, V unimodular and S diagonal, s1 | s2 | ..., all s_i >= 0.
/// The reduction order is fixed, so identical input gives identical output.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank(a) rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// A lattice inside Z^dim, given by a basis (rows of `basis`).
class Lattice {
 public:
  Lattice() = default;
  /// Z^n with its standard basis.
  static Lattice standard(std::size_t n);
  /// The lattice spanned by `generators`, stored with its Hermite basis.
  static Lattice spanned_by(std::span<const IntVector> generators, std::size_t dim);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t dim() const { return dim_; }
  const IntMatrix& basis() const { return basis_; }

  /// Integer coordinates of x with respect to the basis, if x lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& x) const;
  IntVector from_coordinates(const IntVector& c) const;
  bool contains(const IntVector& x) const { return coordinates(x).has_value(); }

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
};

/// Torsion-free part of Z^rank / rowspan(relations).
struct TorsionFreeQuotient {
  Lattice target;
  /// (target rank) x rank; maps Z^rank onto the quotient, proj * r = 0 for every relation r.
  IntMatrix proj;
  /// rank x (target rank); proj * section = identity.
  IntMatrix section;
};

TorsionFreeQuotient torsion_free_quotient(std::size_t rank, const IntMatrix& relations);

/// Saturated affine monoid cone(generators) ∩ ambient.
class AffineMonoid {
 public:
  const Lattice& ambient() const { return ambient_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  /// Minimal generating set, sorted lexicographically. For a non-sharp
  /// monoid this is a generating set (lineality basis with negatives plus
  /// lifts of the pointed quotient's Hilbert basis) and is not unique.
  const std::vector<IntVector>& hilbert_basis() const { return hilbert_basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Rank of the group generated by the monoid.
  std::size_t rank() const { return span_rank_; }
  bool sharp() const { return sharp_; }
  /// Facet normals of the cone, in coordinates of the span lattice.
  const std::vector<IntVector>& facets() const { return facets_; }

  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  bool operator==(const AffineMonoid& other) const {
    return ambient_ == other.ambient_ && hilbert_basis_ == other.hilbert_basis_;
  }

 private:
  friend AffineMonoid saturate(std::span<const IntVector> generators, const Lattice& ambient);
  friend bool contains(const AffineMonoid& m, const IntVector& x);

  /// Coordinates of an ambient vector in the span lattice, if it lies in the span.
  std::optional<IntVector> span_coordinates(const IntVector& x) const;

  Lattice ambient_;
  std::vector<IntVector> generators_;
  std::vector<IntVector> hilbert_basis_;
  std::vector<std::string> labels_;
  std::size_t span_rank_ = 0;
  bool sharp_ = true;
  // ambient coordinates c lie in the span iff (c * span_transform_)[k..] == 0;
  // the first k entries are then span coordinates.
  IntMatrix span_transform_;
  std::vector<IntVector> facets_;
};

/// Saturation of the monoid generated by `generators` inside `ambient`.
/// Throws std::invalid_argument if a generator is not in `ambient`.
AffineMonoid saturate(std::span<const IntVector> generators, const Lattice& ambient);
bool is_sharp(const AffineMonoid& m);
/// Membership in the saturated monoid. Throws std::invalid_argument on a
/// dimension mismatch.
bool contains(const AffineMonoid& m, const IntVector& x);

/// Facet normals (primitive, inward) of the full-dimensional cone generated
/// by `generators` in Q^dim, computed by Fourier–Motzkin elimination.
std::vector<IntVector> cone_facets(std::span<const IntVector> generators, std::size_t dim);

}  // namespace logtwist

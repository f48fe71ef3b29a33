/*
   Copyright 2026 The rlak authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RLAK_ORE_HPP
#define RLAK_ORE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlak/field.hpp"

namespace rlak {

enum class Side { left, right };

/// Twisted polynomial in one variable t over F_{p^k}, commutation rule
/// t*c = c^p*t.  Coefficients are stored on the left of the powers of t
/// (f = sum c_i t^i), so t^i*c = c^(p^i)*t^i when normalizing products.
/// Units of the ring are the nonzero constants.  Immutable value type.
class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(const FiniteField& field, std::vector<uint64_t> packed_coeffs);

  static OrePoly zero(const FiniteField& f) { return OrePoly(f, {}); }
  static OrePoly one(const FiniteField& f) { return OrePoly(f, {f.one()}); }
  static OrePoly t(const FiniteField& f) {
    return OrePoly(f, {f.zero(), f.one()});
  }
  static OrePoly constant(const FieldElement& c) {
    return OrePoly(c.field(), {c.bits()});
  }
  static OrePoly monomial(const FieldElement& c, int exp);

  const FiniteField& field() const;
  /// deg 0-poly = -1 (stands in for -infinity).
  int degree() const { return (int)coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  FieldElement coeff(int i) const;
  FieldElement leading() const { return coeff(degree()); }

  OrePoly operator+(const OrePoly& o) const;
  OrePoly operator-(const OrePoly& o) const;
  OrePoly operator-() const;
  OrePoly operator*(const OrePoly& o) const;
  bool operator==(const OrePoly& o) const;
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

  /// Left multiplication by a constant: c*f.
  OrePoly scale_left(const FieldElement& c) const;
  /// Right multiplication by a constant: f*c (twists through the powers).
  OrePoly scale_right(const FieldElement& c) const;

  struct DivResult {
    OrePoly quotient;
    OrePoly remainder;
  };

  /// Euclidean division: side == right gives f = q*g + r, side == left gives
  /// f = g*q + r, deg r < deg g in both cases.  The left side needs the
  /// inverse Frobenius on leading coefficients, which is where perfectness
  /// of the base field is consumed.
  static DivResult divide(const OrePoly& f, const OrePoly& g, Side side);

  /// `c0 + c1*t + c2*t^2` with field-element literals; zero prints "0".
  std::string str() const;
  static OrePoly parse(const FiniteField& f, std::string_view text);

 private:
  const FiniteField* field_ = nullptr;
  std::vector<uint64_t> coeffs_;  // packed, trailing entry nonzero
};

/// One elementary row/column operation on a matrix over the twisted
/// polynomial ring.  Row operations multiply on the left, column operations
/// on the right; scale multipliers are restricted to nonzero constants (the
/// units of the ring).
struct ElementaryOp {
  enum class Axis { row, col };
  enum class Kind { add_multiple, swap, scale };

  Axis axis = Axis::row;
  Kind kind = Kind::swap;
  int target = 0;
  int source = -1;       // add_multiple / swap partner
  OrePoly multiplier;    // add_multiple: any poly; scale: nonzero constant
  Side mul_side = Side::left;

  ElementaryOp inverted() const;
  std::string str() const;
};

/// Dense matrix over the twisted polynomial ring with a replayable log of
/// every elementary operation applied to it.
class OreMatrix {
 public:
  OreMatrix(const FiniteField& field, int rows, int cols);
  OreMatrix(const FiniteField& field,
            std::vector<std::vector<OrePoly>> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FiniteField& field() const { return *field_; }

  const OrePoly& at(int i, int j) const { return entries_[i * cols_ + j]; }
  void set(int i, int j, OrePoly v);

  const std::vector<ElementaryOp>& log() const { return log_; }

  /// Applies the operation and records it in the log.
  void apply(const ElementaryOp& op);

  bool operator==(const OreMatrix& o) const;

  bool is_diagonal() const;

 private:
  const FiniteField* field_;
  int rows_, cols_;
  std::vector<OrePoly> entries_;
  std::vector<ElementaryOp> log_;
};

struct DiagonalizeResult {
  OreMatrix diagonal;
  std::vector<ElementaryOp> row_ops;
  std::vector<ElementaryOp> col_ops;
  int rank = 0;  // number of nonzero diagonal entries, leading positions
};

/// Reduces M to diagonal-rectangular form by elementary row and column
/// operations: pick a nonzero entry of minimal degree (ties by smallest
/// (row, col)), move it to the pivot position, clear its column by row
/// operations (right division remainders) and its row by column operations
/// (left division), re-selecting the pivot whenever a smaller-degree
/// remainder shows up, then recurse on the trailing submatrix.  Diagonal
/// entries are normalized to monic by unit row scalings.  Replaying the
/// returned row ops and then the column ops on M reproduces the result
/// exactly.  No divisibility chain among the diagonal entries is promised.
DiagonalizeResult diagonalize(const OreMatrix& M);

/// Replays row ops then column ops on a copy of M (the two groups commute).
OreMatrix replay(const OreMatrix& M, const std::vector<ElementaryOp>& row_ops,
                 const std::vector<ElementaryOp>& col_ops);

}  // namespace rlak

#endif  // RLAK_ORE_HPP

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

#include "rlak/ore.hpp"

#include <algorithm>
#include <cctype>

namespace rlak {

namespace {

void check_same_field(const FiniteField& a, const FiniteField& b) {
  if (&a != &b && !a.same(b))
    fail("FieldMismatch", "twisted polynomials over different fields");
}

}  // namespace

OrePoly::OrePoly(const FiniteField& field, std::vector<uint64_t> packed_coeffs)
    : field_(&field), coeffs_(std::move(packed_coeffs)) {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back()))
    coeffs_.pop_back();
}

const FiniteField& OrePoly::field() const {
  if (!field_) fail("Internal", "use of empty OrePoly");
  return *field_;
}

OrePoly OrePoly::monomial(const FieldElement& c, int exp) {
  std::vector<uint64_t> v(exp + 1, 0);
  v[exp] = c.bits();
  return OrePoly(c.field(), std::move(v));
}

FieldElement OrePoly::coeff(int i) const {
  if (i < 0 || i >= (int)coeffs_.size()) return FieldElement(field(), 0);
  return FieldElement(field(), coeffs_[i]);
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  check_same_field(field(), o.field());
  std::vector<uint64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    uint64_t a = i < coeffs_.size() ? coeffs_[i] : 0;
    uint64_t b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    v[i] = field_->add(a, b);
  }
  return OrePoly(*field_, std::move(v));
}

OrePoly OrePoly::operator-() const {
  std::vector<uint64_t> v(coeffs_);
  for (auto& c : v) c = field_->neg(c);
  return OrePoly(field(), std::move(v));
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::operator*(const OrePoly& o) const {
  check_same_field(field(), o.field());
  if (is_zero() || o.is_zero()) return zero(*field_);
  std::vector<uint64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_->is_zero(coeffs_[i])) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (field_->is_zero(o.coeffs_[j])) continue;
      // (a t^i)(b t^j) = a b^(p^i) t^(i+j)
      uint64_t tw = field_->frobenius(o.coeffs_[j], (int64_t)i);
      v[i + j] = field_->add(v[i + j], field_->mul(coeffs_[i], tw));
    }
  }
  return OrePoly(*field_, std::move(v));
}

bool OrePoly::operator==(const OrePoly& o) const {
  if (!field_ || !o.field_) return coeffs_ == o.coeffs_;
  return field_->same(*o.field_) && coeffs_ == o.coeffs_;
}

OrePoly OrePoly::scale_left(const FieldElement& c) const {
  check_same_field(field(), c.field());
  std::vector<uint64_t> v(coeffs_);
  for (auto& x : v) x = field_->mul(c.bits(), x);
  return OrePoly(*field_, std::move(v));
}

OrePoly OrePoly::scale_right(const FieldElement& c) const {
  check_same_field(field(), c.field());
  std::vector<uint64_t> v(coeffs_);
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = field_->mul(v[i], field_->frobenius(c.bits(), (int64_t)i));
  return OrePoly(*field_, std::move(v));
}

OrePoly::DivResult OrePoly::divide(const OrePoly& f, const OrePoly& g,
                                   Side side) {
  check_same_field(f.field(), g.field());
  if (g.is_zero()) fail("DivisionByZero", "division by the zero polynomial");
  const FiniteField& F = f.field();
  OrePoly q = zero(F);
  OrePoly r = f;
  int m = g.degree();
  uint64_t glead = g.coeffs_.back();
  while (!r.is_zero() && r.degree() >= m) {
    int d = r.degree() - m;
    uint64_t rl = r.coeffs_.back();
    FieldElement qc(F, 0);
    if (side == Side::right) {
      // f = q*g + r: leading of (c t^d)*g is c * glead^(p^d)
      qc = FieldElement(F, F.div(rl, F.frobenius(glead, d)));
    } else {
      // f = g*q + r: leading of g*(c t^d) is glead * c^(p^m)
      qc = FieldElement(F, F.frobenius(F.div(rl, glead), -(int64_t)m));
    }
    OrePoly term = monomial(qc, d);
    q = q + term;
    r = (side == Side::right) ? r - term * g : r - g * term;
  }
  return {q, r};
}

std::string OrePoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (field_->is_zero(coeffs_[i])) continue;
    if (!s.empty()) s += " + ";
    bool is_one = coeffs_[i] == field_->one();
    if (i == 0) {
      s += field_->element_literal(coeffs_[i]);
    } else {
      if (!is_one) s += field_->element_literal(coeffs_[i]) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

OrePoly OrePoly::parse(const FiniteField& f, std::string_view text) {
  // terms separated by + / binary -, each `lit`, `lit*t^k`, `t^k`, `t`
  std::vector<uint64_t> coeffs;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail("ParseError", "empty polynomial");
  bool negate = false;
  if (text[pos] == '-') {
    negate = true;
    ++pos;
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) fail("ParseError", "dangling operator");
    // coefficient part
    uint64_t c = f.one();
    bool have_coeff = false;
    if (text[pos] == '[') {
      size_t close = text.find(']', pos);
      if (close == std::string_view::npos)
        fail("ParseError", "unterminated '[' at position " +
                               std::to_string(pos));
      c = f.parse_element(text.substr(pos, close - pos + 1));
      pos = close + 1;
      have_coeff = true;
    } else if (std::isdigit((unsigned char)text[pos])) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      c = f.from_int(std::stoll(std::string(text.substr(start, pos - start))));
      have_coeff = true;
    }
    skip_ws();
    int exp = 0;
    bool have_t = false;
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && text[pos] == 't') {
      have_t = true;
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
          ++pos;
        if (start == pos) fail("ParseError", "missing exponent");
        exp = std::stoi(std::string(text.substr(start, pos - start)));
      }
    }
    if (!have_coeff && !have_t)
      fail("ParseError",
           "expected term at position " + std::to_string(pos));
    if (negate) c = f.neg(c);
    if ((int)coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] = f.add(coeffs[exp], c);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == '+') {
      negate = false;
      ++pos;
    } else if (text[pos] == '-') {
      negate = true;
      ++pos;
    } else {
      fail("ParseError",
           "unexpected character at position " + std::to_string(pos));
    }
  }
  return OrePoly(f, std::move(coeffs));
}

// ---- ElementaryOp ----------------------------------------------------------

ElementaryOp ElementaryOp::inverted() const {
  ElementaryOp inv = *this;
  switch (kind) {
    case Kind::swap:
      break;
    case Kind::add_multiple:
      inv.multiplier = -multiplier;
      break;
    case Kind::scale:
      inv.multiplier =
          OrePoly::constant(multiplier.coeff(0).inverse());
      break;
  }
  return inv;
}

std::string ElementaryOp::str() const {
  std::string axis_name = axis == Axis::row ? "row" : "col";
  switch (kind) {
    case Kind::swap:
      return axis_name + "_swap(" + std::to_string(target) + "," +
             std::to_string(source) + ")";
    case Kind::scale:
      return axis_name + "_scale(" + std::to_string(target) + "; " +
             multiplier.str() + ")";
    case Kind::add_multiple:
      if (axis == Axis::row)
        return "row_add(" + std::to_string(target) + " += [" +
               multiplier.str() + "]*row " + std::to_string(source) + ")";
      return "col_add(" + std::to_string(target) + " += col " +
             std::to_string(source) + "*[" + multiplier.str() + "])";
  }
  return "";
}

// ---- OreMatrix ------------------------------------------------------------

OreMatrix::OreMatrix(const FiniteField& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) fail("BadInput", "matrix must be nonempty");
  entries_.assign((size_t)rows * cols, OrePoly::zero(field));
}

OreMatrix::OreMatrix(const FiniteField& field,
                     std::vector<std::vector<OrePoly>> rows)
    : field_(&field) {
  rows_ = (int)rows.size();
  if (rows_ == 0) fail("BadInput", "matrix must be nonempty");
  cols_ = (int)rows[0].size();
  if (cols_ == 0) fail("BadInput", "matrix must be nonempty");
  for (auto& r : rows) {
    if ((int)r.size() != cols_) fail("BadInput", "ragged matrix rows");
    for (auto& e : r) {
      check_same_field(field, e.field());
      entries_.push_back(std::move(e));
    }
  }
}

void OreMatrix::set(int i, int j, OrePoly v) {
  check_same_field(*field_, v.field());
  entries_[i * cols_ + j] = std::move(v);
}

bool OreMatrix::operator==(const OreMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool OreMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

void OreMatrix::apply(const ElementaryOp& op) {
  auto check_index = [&](int v, int bound) {
    if (v < 0 || v >= bound) fail("BadInput", "operation index out of range");
  };
  if (op.axis == ElementaryOp::Axis::row) {
    check_index(op.target, rows_);
    switch (op.kind) {
      case ElementaryOp::Kind::swap:
        check_index(op.source, rows_);
        for (int j = 0; j < cols_; ++j)
          std::swap(entries_[op.target * cols_ + j],
                    entries_[op.source * cols_ + j]);
        break;
      case ElementaryOp::Kind::add_multiple:
        check_index(op.source, rows_);
        if (op.mul_side != Side::left)
          fail("BadInput", "row operations multiply on the left");
        for (int j = 0; j < cols_; ++j)
          entries_[op.target * cols_ + j] =
              entries_[op.target * cols_ + j] +
              op.multiplier * entries_[op.source * cols_ + j];
        break;
      case ElementaryOp::Kind::scale: {
        if (!op.multiplier.is_constant() || op.multiplier.is_zero())
          fail("BadInput", "scale multiplier must be a nonzero constant");
        FieldElement c = op.multiplier.coeff(0);
        for (int j = 0; j < cols_; ++j)
          entries_[op.target * cols_ + j] =
              entries_[op.target * cols_ + j].scale_left(c);
        break;
      }
    }
  } else {
    check_index(op.target, cols_);
    switch (op.kind) {
      case ElementaryOp::Kind::swap:
        check_index(op.source, cols_);
        for (int i = 0; i < rows_; ++i)
          std::swap(entries_[i * cols_ + op.target],
                    entries_[i * cols_ + op.source]);
        break;
      case ElementaryOp::Kind::add_multiple:
        check_index(op.source, cols_);
        if (op.mul_side != Side::right)
          fail("BadInput", "column operations multiply on the right");
        for (int i = 0; i < rows_; ++i)
          entries_[i * cols_ + op.target] =
              entries_[i * cols_ + op.target] +
              entries_[i * cols_ + op.source] * op.multiplier;
        break;
      case ElementaryOp::Kind::scale: {
        if (!op.multiplier.is_constant() || op.multiplier.is_zero())
          fail("BadInput", "scale multiplier must be a nonzero constant");
        FieldElement c = op.multiplier.coeff(0);
        for (int i = 0; i < rows_; ++i)
          entries_[i * cols_ + op.target] =
              entries_[i * cols_ + op.target].scale_right(c);
        break;
      }
    }
  }
  log_.push_back(op);
}

// ---- diagonalization --------------------------------------------------------

namespace {

// smallest-degree nonzero entry in the trailing submatrix, ties by (row, col)
bool select_pivot(const OreMatrix& M, int pos, int& pi, int& pj) {
  int best = -1;
  for (int i = pos; i < M.rows(); ++i) {
    for (int j = pos; j < M.cols(); ++j) {
      const OrePoly& e = M.at(i, j);
      if (e.is_zero()) continue;
      if (best < 0 || e.degree() < best) {
        best = e.degree();
        pi = i;
        pj = j;
      }
    }
  }
  return best >= 0;
}

}  // namespace

DiagonalizeResult diagonalize(const OreMatrix& M) {
  OreMatrix W(M.field(), M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) W.set(i, j, M.at(i, j));

  const FiniteField& F = M.field();
  int limit = std::min(M.rows(), M.cols());
  int pos = 0;
  while (pos < limit) {
    int pi = 0, pj = 0;
    if (!select_pivot(W, pos, pi, pj)) break;
    bool settled = false;
    while (!settled) {
      if (pi != pos)
        W.apply({ElementaryOp::Axis::row, ElementaryOp::Kind::swap, pos, pi,
                 OrePoly::zero(F), Side::left});
      if (pj != pos)
        W.apply({ElementaryOp::Axis::col, ElementaryOp::Kind::swap, pos, pj,
                 OrePoly::zero(F), Side::right});
      const OrePoly& pivot = W.at(pos, pos);
      settled = true;
      // clear the pivot column with row operations (right division)
      for (int i = pos + 1; i < M.rows(); ++i) {
        if (W.at(i, pos).is_zero()) continue;
        auto d = OrePoly::divide(W.at(i, pos), pivot, Side::right);
        if (!d.quotient.is_zero())
          W.apply({ElementaryOp::Axis::row, ElementaryOp::Kind::add_multiple,
                   i, pos, -d.quotient, Side::left});
        if (!W.at(i, pos).is_zero()) {
          // remainder of smaller degree: make it the next pivot
          settled = false;
        }
      }
      // clear the pivot row with column operations (left division); the
      // pivot column stays zero below pos, so these cannot disturb it
      for (int j = pos + 1; j < M.cols(); ++j) {
        if (W.at(pos, j).is_zero()) continue;
        auto d = OrePoly::divide(W.at(pos, j), pivot, Side::left);
        if (!d.quotient.is_zero())
          W.apply({ElementaryOp::Axis::col, ElementaryOp::Kind::add_multiple,
                   j, pos, -d.quotient, Side::right});
        if (!W.at(pos, j).is_zero()) settled = false;
      }
      if (!settled) select_pivot(W, pos, pi, pj);
    }
    // normalize the pivot to monic (units are the nonzero constants)
    if (!W.at(pos, pos).leading().is_one()) {
      OrePoly c = OrePoly::constant(W.at(pos, pos).leading().inverse());
      W.apply({ElementaryOp::Axis::row, ElementaryOp::Kind::scale, pos, -1, c,
               Side::left});
    }
    ++pos;
  }

  DiagonalizeResult res{std::move(W), {}, {}, pos};
  for (const auto& op : res.diagonal.log()) {
    if (op.axis == ElementaryOp::Axis::row)
      res.row_ops.push_back(op);
    else
      res.col_ops.push_back(op);
  }
  return res;
}

OreMatrix replay(const OreMatrix& M, const std::vector<ElementaryOp>& row_ops,
                 const std::vector<ElementaryOp>& col_ops) {
  OreMatrix W(M.field(), M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) W.set(i, j, M.at(i, j));
  for (const auto& op : row_ops) W.apply(op);
  for (const auto& op : col_ops) W.apply(op);
  return W;
}

}  // namespace rlak

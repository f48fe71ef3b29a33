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

#ifndef RLAK_FIELD_HPP
#define RLAK_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rlak/errors.hpp"

namespace rlak {

/// Exact arithmetic in a perfect finite field F_{p^k}, p^k <= 2^16.
///
/// Elements are coordinate vectors of length k over F_p in the power basis of
/// the modulus root, packed into a single uint64_t (each coordinate uses
/// bit_width(p-1) bits).  The packed form is what the linear-algebra kernels
/// operate on; FieldElement wraps one packed value together with its owner.
///
/// The field is immutable after construction and safe to share across
/// threads.
class FiniteField {
 public:
  /// Builds F_{p^k} with the given monic irreducible modulus
  /// (coefficients constant-term first, length k+1).  Primality of p and
  /// irreducibility of the modulus are checked eagerly.
  static std::shared_ptr<const FiniteField> make(uint32_t p, uint32_t k,
                                                 std::vector<uint32_t> modulus);

  /// The prime field F_p (modulus x).
  static std::shared_ptr<const FiniteField> prime(uint32_t p);

  /// Builds F_{p^k} with the lexicographically smallest monic irreducible
  /// modulus of degree k.
  static std::shared_ptr<const FiniteField> extension(uint32_t p, uint32_t k);

  /// Parses a field literal: `gf(q)` or `gf(q; c0,c1,...,ck)` with q = p^k.
  static std::shared_ptr<const FiniteField> parse(std::string_view literal);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint64_t size() const { return size_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  /// Canonical literal, re-parseable: `gf(2)`, `gf(4; 1,1,1)`, ...
  std::string literal() const;

  bool same(const FiniteField& other) const;

  // ---- packed-element arithmetic -----------------------------------------

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }
  bool is_zero(uint64_t a) const { return a == 0; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t s = digit(a, i) + digit(b, i);
      if (s >= p_) s -= p_;
      r |= s << (i * shift_);
    }
    return r;
  }

  uint64_t neg(uint64_t a) const {
    uint64_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t d = digit(a, i);
      if (d != 0) d = p_ - d;
      r |= d << (i * shift_);
    }
    return r;
  }

  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const;

  /// e^(p^n) for any signed n; n < 0 goes through the inverse Frobenius,
  /// which is total because the field is perfect (x -> x^(p^(k-1)) since
  /// x^(p^k) = x).
  uint64_t frobenius(uint64_t a, int64_t n) const;

  /// Scalar multiple c*a with c an F_p residue.
  uint64_t scalar_mul(uint32_t c, uint64_t a) const;

  // ---- conversions --------------------------------------------------------

  uint64_t from_coeffs(const std::vector<uint32_t>& coeffs) const;
  std::vector<uint32_t> to_coeffs(uint64_t a) const;
  /// Image of an integer under Z -> F_p subset F_{p^k}.
  uint64_t from_int(int64_t n) const;
  /// Enumerates all p^k elements; index digits base p give the coordinates.
  uint64_t element_at(uint64_t index) const;
  uint64_t index_of(uint64_t a) const;

  /// Bracketed coordinate-vector literal, `[1,1]` for 1+a; prime fields
  /// print the bare residue.
  std::string element_literal(uint64_t a) const;
  /// Parses `[c0,c1,...]` or a bare integer.
  uint64_t parse_element(std::string_view text) const;

 private:
  FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  uint64_t digit(uint64_t a, uint32_t i) const {
    return (a >> (i * shift_)) & mask_;
  }

  uint32_t p_ = 0;
  uint32_t k_ = 0;
  uint32_t shift_ = 0;  // bits per packed coordinate
  uint64_t mask_ = 0;
  uint64_t size_ = 0;
  std::vector<uint32_t> modulus_;
  // reduction_[j] = packed representation of a^(k+j) mod modulus, j < k-1
  std::vector<uint64_t> reduction_;
  // frob_[j] = packed representation of (a^j)^p, j < k
  std::vector<uint64_t> frob_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// A field element bound to its owning field.  Cross-field arithmetic is
/// rejected (FieldMismatch); two structurally identical fields interoperate.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField& field, uint64_t bits)
      : field_(&field), bits_(bits) {}

  static FieldElement zero(const FiniteField& f) { return {f, f.zero()}; }
  static FieldElement one(const FiniteField& f) { return {f, f.one()}; }

  const FiniteField& field() const {
    if (!field_) fail("Internal", "use of empty FieldElement");
    return *field_;
  }
  uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return field_ && bits_ == field_->one(); }

  FieldElement operator+(const FieldElement& o) const {
    return {common(o), field().add(bits_, o.bits_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {common(o), field().sub(bits_, o.bits_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    return {common(o), field().mul(bits_, o.bits_)};
  }
  FieldElement operator/(const FieldElement& o) const {
    return {common(o), field().div(bits_, o.bits_)};
  }
  FieldElement operator-() const { return {field(), field().neg(bits_)}; }

  FieldElement inverse() const { return {field(), field().inv(bits_)}; }
  FieldElement frobenius(int64_t n) const {
    return {field(), field().frobenius(bits_, n)};
  }

  bool operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && bits_ == o.bits_;
    return field_->same(*o.field_) && bits_ == o.bits_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const { return field().element_literal(bits_); }

 private:
  const FiniteField& common(const FieldElement& o) const {
    const FiniteField& f = field();
    if (field_ != o.field_ && !f.same(o.field()))
      fail("FieldMismatch", "operands belong to different fields (" +
                                f.literal() + " vs " + o.field().literal() +
                                ")");
    return f;
  }

  const FiniteField* field_ = nullptr;
  uint64_t bits_ = 0;
};

}  // namespace rlak

#endif  // RLAK_FIELD_HPP

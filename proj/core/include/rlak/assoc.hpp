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

#ifndef RLAK_ASSOC_HPP
#define RLAK_ASSOC_HPP

#include <cstdint>
#include <map>
#include <string>

#include "rlak/field.hpp"

namespace rlak {

/// Word over the generator alphabet; byte i is a letter index.
using Word = std::string;

/// Graded-lexicographic word order: shorter first, then lexicographic.
/// Expansions of canonical basis elements are triangular with respect to
/// this order (the leading monomial of [w]^(p^e) is w repeated p^e times).
struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free associative algebra on r letters, truncated at total
/// degree N (monomials longer than N are dropped; the truncation is an
/// algebra quotient, so intermediate truncation is exact).
class AssocPoly {
 public:
  using Terms = std::map<Word, uint64_t, GradedLexLess>;

  AssocPoly() = default;
  AssocPoly(const FiniteField& field, int trunc)
      : field_(&field), trunc_(trunc) {}

  static AssocPoly letter(const FiniteField& f, int trunc, int index) {
    AssocPoly p(f, trunc);
    p.add_term(Word(1, (char)index), f.one());
    return p;
  }

  const FiniteField& field() const;
  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Word& w, uint64_t c);

  AssocPoly operator+(const AssocPoly& o) const;
  AssocPoly operator-(const AssocPoly& o) const;
  AssocPoly operator*(const AssocPoly& o) const;
  AssocPoly scaled(uint64_t c) const;

  void add_scaled(const AssocPoly& o, uint64_t c);

  static AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    return a * b - b * a;
  }

  /// n-th associative power, n >= 1.
  AssocPoly power(uint64_t n) const;

 private:
  void check_compatible(const AssocPoly& o) const;

  const FiniteField* field_ = nullptr;
  int trunc_ = 0;
  Terms terms_;
};

}  // namespace rlak

#endif  // RLAK_ASSOC_HPP

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

#include "rlak/assoc.hpp"

namespace rlak {

const FiniteField& AssocPoly::field() const {
  if (!field_) fail("Internal", "use of empty AssocPoly");
  return *field_;
}

void AssocPoly::check_compatible(const AssocPoly& o) const {
  if (!field_ || !o.field_)
    fail("Internal", "use of empty AssocPoly");
  if (field_ != o.field_ && !field_->same(*o.field_))
    fail("FieldMismatch", "associative polynomials over different fields");
  if (trunc_ != o.trunc_)
    fail("Internal", "associative polynomials with different truncations");
}

void AssocPoly::add_term(const Word& w, uint64_t c) {
  if (c == 0 || (int)w.size() > trunc_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

AssocPoly AssocPoly::operator+(const AssocPoly& o) const {
  check_compatible(o);
  AssocPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

AssocPoly AssocPoly::operator-(const AssocPoly& o) const {
  check_compatible(o);
  AssocPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, field_->neg(c));
  return r;
}

void AssocPoly::add_scaled(const AssocPoly& o, uint64_t c) {
  check_compatible(o);
  if (c == 0) return;
  for (const auto& [w, cw] : o.terms_) add_term(w, field_->mul(c, cw));
}

AssocPoly AssocPoly::scaled(uint64_t c) const {
  AssocPoly r(field(), trunc_);
  if (c == 0) return r;
  for (const auto& [w, cw] : terms_) r.add_term(w, field_->mul(c, cw));
  return r;
}

AssocPoly AssocPoly::operator*(const AssocPoly& o) const {
  check_compatible(o);
  AssocPoly r(field(), trunc_);
  for (const auto& [wa, ca] : terms_) {
    size_t budget = (size_t)trunc_ - wa.size();
    for (const auto& [wb, cb] : o.terms_) {
      if (wb.size() > budget) break;  // graded order: rest is longer
      r.add_term(wa + wb, field_->mul(ca, cb));
    }
  }
  return r;
}

AssocPoly AssocPoly::power(uint64_t n) const {
  AssocPoly acc = *this;
  for (uint64_t i = 1; i < n; ++i) acc = acc * *this;
  return acc;
}

}  // namespace rlak

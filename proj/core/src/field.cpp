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

#include "rlak/field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace rlak {
namespace {

constexpr uint64_t kMaxFieldSize = 1u << 16;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense F_p[x] polynomials as coefficient vectors (constant term first),
// used only for modulus validation and inversion; not performance relevant.
using PolyFp = std::vector<uint32_t>;

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp poly_mod(PolyFp a, const PolyFp& m, uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    // m is monic
    uint64_t lead = a.back();
    size_t off = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t v = a[off + i] + (uint64_t)(p - (lead * m[i]) % p);
      a[off + i] = (uint32_t)(v % p);
    }
    trim(a);
  }
  return a;
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
  return r;
}

bool is_irreducible(const PolyFp& m, uint32_t p) {
  uint32_t k = (uint32_t)m.size() - 1;
  if (k == 1) return true;
  // trial division by every monic polynomial of degree 1..k/2
  for (uint32_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      PolyFp div(d + 1, 0);
      uint64_t v = idx;
      for (uint32_t i = 0; i < d; ++i) {
        div[i] = (uint32_t)(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  // extended Euclid over Z
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail("DivisionByZero", "residue not invertible");
  return (uint32_t)((t % p + p) % p);
}

// extended Euclid in F_p[x]: returns u with u*a == gcd (mod m), gcd monic
PolyFp poly_inv_mod(const PolyFp& a, const PolyFp& m, uint32_t p) {
  PolyFp r0 = m, r1 = poly_mod(a, m, p);
  PolyFp s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    PolyFp q;
    PolyFp rem = r0;
    trim(rem);
    uint32_t lead_inv = inv_mod_p(r1.back(), p);
    if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint32_t c = (uint32_t)(((uint64_t)rem.back() * lead_inv) % p);
      size_t off = rem.size() - r1.size();
      q[off] = c;
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t v = rem[off + i] + (uint64_t)(p - ((uint64_t)c * r1[i]) % p);
        rem[off + i] = (uint32_t)(v % p);
      }
      trim(rem);
    }
    PolyFp qs = poly_mul(q, s1, p);
    PolyFp ns(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < ns.size(); ++i) {
      uint64_t v = (i < s0.size() ? s0[i] : 0) + (uint64_t)p -
                   (i < qs.size() ? qs[i] : 0);
      ns[i] = (uint32_t)(v % p);
    }
    trim(ns);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = ns;
  }
  if (r0.size() != 1) fail("DivisionByZero", "element not invertible");
  uint32_t c = inv_mod_p(r0[0], p);
  for (auto& x : s0) x = (uint32_t)(((uint64_t)x * c) % p);
  return poly_mod(s0, m, p);
}

}  // namespace

FiniteField::FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  shift_ = std::max(1, std::bit_width(p_ - 1));
  mask_ = (shift_ >= 64) ? ~0ull : ((1ull << shift_) - 1);
  size_ = 1;
  for (uint32_t i = 0; i < k_; ++i) size_ *= p_;
  // reduction rows for a^(k+j), j = 0..k-2
  PolyFp cur(modulus_.begin(), modulus_.end() - 1);  // a^k = -lower part
  for (auto& c : cur) c = c == 0 ? 0 : p_ - c;
  for (uint32_t j = 0; j + 1 < k_; ++j) {
    uint64_t packed = 0;
    for (uint32_t i = 0; i < k_; ++i)
      packed |= (uint64_t)(i < cur.size() ? cur[i] : 0) << (i * shift_);
    reduction_.push_back(packed);
    // multiply by a
    PolyFp next(k_ + 1, 0);
    for (uint32_t i = 0; i < k_; ++i) next[i + 1] = i < cur.size() ? cur[i] : 0;
    uint32_t overflow = next[k_];
    next.resize(k_);
    if (overflow) {
      for (uint32_t i = 0; i < k_; ++i) {
        uint64_t sub = ((uint64_t)overflow * modulus_[i]) % p_;
        next[i] = (uint32_t)((next[i] + p_ - sub) % p_);
      }
    }
    cur = next;
  }
  // frobenius images of basis powers
  frob_.resize(k_);
  frob_[0] = one();
  if (k_ > 1) {
    // a^p mod modulus by repeated squaring over F_p[x]
    PolyFp base = {0, 1};
    PolyFp acc = {1};
    PolyFp mod(modulus_.begin(), modulus_.end());
    uint32_t e = p_;
    while (e) {
      if (e & 1) acc = poly_mod(poly_mul(acc, base, p_), mod, p_);
      base = poly_mod(poly_mul(base, base, p_), mod, p_);
      e >>= 1;
    }
    PolyFp ap = acc;  // a^p
    PolyFp cur_pow = {1};
    for (uint32_t j = 1; j < k_; ++j) {
      cur_pow = poly_mod(poly_mul(cur_pow, ap, p_), mod, p_);
      uint64_t packed = 0;
      for (uint32_t i = 0; i < k_ && i < cur_pow.size(); ++i)
        packed |= (uint64_t)cur_pow[i] << (i * shift_);
      frob_[j] = packed;
    }
  }
}

std::shared_ptr<const FiniteField> FiniteField::make(
    uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) fail("BadInput", "characteristic must be prime");
  if (k < 1) fail("BadInput", "extension degree must be >= 1");
  if (modulus.size() != k + 1)
    fail("BadInput", "modulus must have k+1 coefficients");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) fail("BadInput", "modulus must be monic");
  uint64_t size = 1;
  for (uint32_t i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxFieldSize) fail("BadInput", "field size exceeds 2^16");
  }
  PolyFp m(modulus.begin(), modulus.end());
  if (!is_irreducible(m, p)) fail("BadInput", "modulus is not irreducible");
  return std::shared_ptr<const FiniteField>(
      new FiniteField(p, k, std::move(modulus)));
}

std::shared_ptr<const FiniteField> FiniteField::prime(uint32_t p) {
  return make(p, 1, {0, 1});
}

std::shared_ptr<const FiniteField> FiniteField::extension(uint32_t p,
                                                          uint32_t k) {
  if (k == 1) return prime(p);
  if (!is_prime(p)) fail("BadInput", "characteristic must be prime");
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxFieldSize) fail("BadInput", "field size exceeds 2^16");
  }
  for (uint64_t idx = 0; idx < count; ++idx) {
    PolyFp m(k + 1, 0);
    uint64_t v = idx;
    for (uint32_t i = 0; i < k; ++i) {
      m[i] = (uint32_t)(v % p);
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p))
      return make(p, k, std::vector<uint32_t>(m.begin(), m.end()));
  }
  fail("Internal", "no irreducible modulus found");
}

uint64_t FiniteField::mul(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return (digit(a, 0) * digit(b, 0)) % p_;
  // schoolbook product, coefficients of a^0..a^(2k-2)
  uint64_t prod[31] = {0};
  for (uint32_t i = 0; i < k_; ++i) {
    uint64_t ai = digit(a, i);
    if (!ai) continue;
    for (uint32_t j = 0; j < k_; ++j) {
      uint64_t bj = digit(b, j);
      if (!bj) continue;
      prod[i + j] = (prod[i + j] + ai * bj) % p_;
    }
  }
  uint64_t r = 0;
  for (uint32_t i = 0; i < k_; ++i) r |= prod[i] << (i * shift_);
  for (uint32_t j = 0; j + 1 < k_; ++j) {
    uint64_t c = prod[k_ + j];
    if (c) r = add(r, scalar_mul((uint32_t)c, reduction_[j]));
  }
  return r;
}

uint64_t FiniteField::scalar_mul(uint32_t c, uint64_t a) const {
  c %= p_;
  if (c == 0 || a == 0) return 0;
  if (c == 1) return a;
  uint64_t r = 0;
  for (uint32_t i = 0; i < k_; ++i)
    r |= ((digit(a, i) * c) % p_) << (i * shift_);
  return r;
}

uint64_t FiniteField::inv(uint64_t a) const {
  if (a == 0) fail("DivisionByZero", "division by zero in " + literal());
  if (k_ == 1) return inv_mod_p((uint32_t)digit(a, 0), p_);
  PolyFp pa(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) pa[i] = (uint32_t)digit(a, i);
  PolyFp m(modulus_.begin(), modulus_.end());
  PolyFp r = poly_inv_mod(pa, m, p_);
  uint64_t out = 0;
  for (uint32_t i = 0; i < r.size(); ++i) out |= (uint64_t)r[i] << (i * shift_);
  return out;
}

uint64_t FiniteField::div(uint64_t a, uint64_t b) const {
  return mul(a, inv(b));
}

uint64_t FiniteField::frobenius(uint64_t a, int64_t n) const {
  if (k_ == 1 || a == 0) return a;
  uint32_t m = (uint32_t)(((n % k_) + k_) % k_);
  uint64_t r = a;
  for (uint32_t step = 0; step < m; ++step) {
    uint64_t next = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t c = digit(r, i);
      if (c) next = add(next, scalar_mul((uint32_t)c, frob_[i]));
    }
    r = next;
  }
  return r;
}

bool FiniteField::same(const FiniteField& o) const {
  return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
}

uint64_t FiniteField::from_coeffs(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != k_)
    fail("BadInput", "expected " + std::to_string(k_) + " coefficients");
  uint64_t r = 0;
  for (uint32_t i = 0; i < k_; ++i)
    r |= (uint64_t)(coeffs[i] % p_) << (i * shift_);
  return r;
}

std::vector<uint32_t> FiniteField::to_coeffs(uint64_t a) const {
  std::vector<uint32_t> c(k_);
  for (uint32_t i = 0; i < k_; ++i) c[i] = (uint32_t)digit(a, i);
  return c;
}

uint64_t FiniteField::from_int(int64_t n) const {
  int64_t r = n % (int64_t)p_;
  if (r < 0) r += p_;
  return (uint64_t)r;
}

uint64_t FiniteField::element_at(uint64_t index) const {
  uint64_t r = 0;
  for (uint32_t i = 0; i < k_; ++i) {
    r |= (index % p_) << (i * shift_);
    index /= p_;
  }
  return r;
}

uint64_t FiniteField::index_of(uint64_t a) const {
  uint64_t idx = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    idx += digit(a, i) * mult;
    mult *= p_;
  }
  return idx;
}

std::string FiniteField::element_literal(uint64_t a) const {
  if (k_ == 1) return std::to_string(digit(a, 0));
  std::string s = "[";
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(digit(a, i));
  }
  return s + "]";
}

uint64_t FiniteField::parse_element(std::string_view text) const {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail("ParseError", "empty field element");
  text = text.substr(b, e - b + 1);
  if (text.front() == '[') {
    if (text.back() != ']') fail("ParseError", "unterminated element literal");
    std::string body(text.substr(1, text.size() - 2));
    std::vector<uint32_t> coeffs;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        long long v = std::stoll(tok);
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        coeffs.push_back((uint32_t)r);
      } catch (const std::exception&) {
        fail("ParseError", "bad coefficient '" + tok + "'");
      }
    }
    if (coeffs.size() != k_)
      fail("ParseError", "element literal needs " + std::to_string(k_) +
                             " coefficients, got " +
                             std::to_string(coeffs.size()));
    return from_coeffs(coeffs);
  }
  try {
    size_t used = 0;
    long long v = std::stoll(std::string(text), &used);
    if (used != text.size()) fail("ParseError", "trailing characters");
    return from_int(v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail("ParseError", "bad field element '" + std::string(text) + "'");
  }
}

std::string FiniteField::literal() const {
  std::string s = "gf(" + std::to_string(size_);
  if (k_ > 1) {
    s += "; ";
    for (uint32_t i = 0; i <= k_; ++i) {
      if (i) s += ",";
      s += std::to_string(modulus_[i]);
    }
  }
  return s + ")";
}

std::shared_ptr<const FiniteField> FiniteField::parse(
    std::string_view literal) {
  std::string t;
  for (char c : literal)
    if (!std::isspace((unsigned char)c)) t += c;
  if (t.substr(0, 3) != "gf(" || t.back() != ')')
    fail("ParseError", "field literal must look like gf(q) or gf(q; c0,..,ck)");
  std::string body = t.substr(3, t.size() - 4);
  std::string qs = body;
  std::string mods;
  size_t semi = body.find(';');
  if (semi != std::string::npos) {
    qs = body.substr(0, semi);
    mods = body.substr(semi + 1);
  }
  uint64_t q = 0;
  try {
    q = std::stoull(qs);
  } catch (const std::exception&) {
    fail("ParseError", "bad field size '" + qs + "'");
  }
  if (q < 2 || q > kMaxFieldSize) fail("BadInput", "field size out of range");
  // factor q = p^k
  uint32_t p = 0;
  uint32_t k = 0;
  for (uint32_t d = 2; (uint64_t)d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    p = (uint32_t)q;
    k = 1;
  } else {
    uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) fail("BadInput", "field size must be a prime power");
  }
  if (mods.empty()) return extension(p, k);
  std::vector<uint32_t> coeffs;
  std::stringstream ss(mods);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      long long v = std::stoll(tok);
      long long r = v % (long long)p;
      if (r < 0) r += p;
      coeffs.push_back((uint32_t)r);
    } catch (const std::exception&) {
      fail("ParseError", "bad modulus coefficient '" + tok + "'");
    }
  }
  return make(p, k, std::move(coeffs));
}

}  // namespace rlak

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

#include "rlak/witt.hpp"

#include <algorithm>

#include "rlak/errors.hpp"

namespace rlak {
namespace {

int moebius(int64_t n) {
  int result = 1;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

int64_t ipow(int64_t b, int64_t e) {
  int64_t r = 1;
  while (e-- > 0) {
    if (b != 0 && r > (int64_t)4e18 / (b > 0 ? b : -b))
      fail("ResourceBound", "integer overflow in power computation");
    r *= b;
  }
  return r;
}

using Series = std::vector<int64_t>;  // coefficients 0..N

Series mul_mod(const Series& a, const Series& b, int64_t N) {
  Series r(N + 1, 0);
  for (int64_t i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int64_t j = 0; i + j <= N; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series pow_mod(Series base, int64_t e, int64_t N) {
  Series r(N + 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, N);
    base = mul_mod(base, base, N);
    e >>= 1;
  }
  return r;
}

}  // namespace

int64_t witt_number(int64_t r, int64_t m) {
  if (m < 1) fail("BadInput", "Witt number needs m >= 1");
  int64_t sum = 0;
  for (int64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    sum += moebius(d) * ipow(r, m / d);
  }
  return sum / m;
}

std::vector<int64_t> graded_dims(int64_t r, int64_t p, int64_t N) {
  if (r < 1 || N < 1) fail("BadInput", "graded_dims needs r >= 1, N >= 1");
  std::vector<int64_t> witt(N + 1, 0);
  for (int64_t m = 1; m <= N; ++m) witt[m] = witt_number(r, m);
  std::vector<int64_t> a(N, 0);
  for (int64_t d = 1; d <= N; ++d) {
    for (int64_t pe = 1; pe <= d; pe *= p) {
      if (d % pe == 0) a[d - 1] += witt[d / pe];
      if (pe > d / p) break;
    }
  }
  return a;
}

std::vector<int64_t> series_dims(const std::vector<int64_t>& count_by_weight,
                                 int64_t p, int64_t N) {
  if (N < 1) fail("BadInput", "series_dims needs N >= 1");
  Series g(N + 1, 0);
  for (size_t w = 0; w < count_by_weight.size() && (int64_t)w <= N; ++w)
    g[w] = count_by_weight[w];
  if (g[0] != 0) fail("BadInput", "generators must have positive weight");
  // target T = 1/(1-g): T_d = sum_j g_j T_{d-j}
  Series target(N + 1, 0);
  target[0] = 1;
  for (int64_t d = 1; d <= N; ++d)
    for (int64_t j = 1; j <= d; ++j) target[d] += g[j] * target[d - j];
  // peel off one factor per degree; the factor ((1-x^(pd))/(1-x^d))^(b_d)
  // contributes b_d at x^d and nothing below
  Series prod(N + 1, 0);
  prod[0] = 1;
  std::vector<int64_t> dims(N, 0);
  for (int64_t d = 1; d <= N; ++d) {
    int64_t b = target[d] - prod[d];
    if (b < 0)
      fail("Internal", "series oracle produced a negative dimension");
    dims[d - 1] = b;
    if (b == 0) continue;
    Series factor(N + 1, 0);
    for (int64_t i = 0; i * d <= N && i < p; ++i) factor[i * d] = 1;
    prod = mul_mod(prod, pow_mod(factor, b, N), N);
  }
  if (prod != target)
    fail("Internal", "series oracle failed its consistency replay");
  return dims;
}

std::vector<int64_t> series_dims_rank(int64_t r, int64_t p, int64_t N) {
  return series_dims({0, r}, p, N);
}

void for_each_lyndon_word(int r, int L,
                          const std::function<void(const std::string&)>& fn) {
  if (r < 1 || L < 1) fail("BadInput", "need r >= 1 and L >= 1");
  // Duval's enumeration in lexicographic order
  std::string w(1, '\0');
  while (true) {
    fn(w);
    // extend w cyclically to length L, then strip trailing maximal letters
    std::string t = w;
    t.reserve(L);
    while ((int)t.size() < L) t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == (char)(r - 1)) t.pop_back();
    if (t.empty()) return;
    ++t.back();
    w = std::move(t);
  }
}

std::vector<int64_t> lyndon_counts_by_enumeration(int r, int L) {
  std::vector<int64_t> counts(L + 1, 0);
  for_each_lyndon_word(r, L,
                       [&](const std::string& w) { ++counts[w.size()]; });
  return counts;
}

std::vector<int64_t> basis_counts_by_enumeration(int r, int64_t p, int N) {
  std::vector<int64_t> counts(N, 0);
  for_each_lyndon_word(r, N, [&](const std::string& w) {
    int64_t weight = (int64_t)w.size();
    while (weight <= N) {
      ++counts[weight - 1];
      if (weight > N / p) break;
      weight *= p;
    }
  });
  return counts;
}

}  // namespace rlak

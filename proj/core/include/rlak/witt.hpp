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

#ifndef RLAK_WITT_HPP
#define RLAK_WITT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rlak {

/// Number of Lyndon words of length m over an r-letter alphabet:
/// W_r(m) = (1/m) sum_{d | m} mu(d) r^(m/d).
int64_t witt_number(int64_t r, int64_t m);

/// Graded dimensions a_1..a_N of the free restricted Lie algebra of rank r
/// in characteristic p, weight of [w]^{[p^e]} being p^e*|w|:
/// a_d = sum over p^e | d of W_r(d / p^e).
std::vector<int64_t> graded_dims(int64_t r, int64_t p, int64_t N);

/// Independent series oracle.  Solves for the dims b_1..b_N from
///   prod_{d<=N} ((1-x^(p d))/(1-x^d))^(b_d)  ==  1/(1 - g(x))  (mod x^(N+1))
/// where g(x) = sum_w count_by_weight[w] x^w is the generating function of a
/// weighted generator multiset.  This encodes the restricted PBW monomial
/// count against the free associative algebra on the same generators.
/// count_by_weight[0] must be 0.  The solved series is re-multiplied and
/// compared against 1/(1-g) as a consistency check.
std::vector<int64_t> series_dims(const std::vector<int64_t>& count_by_weight,
                                 int64_t p, int64_t N);

/// series_dims for r generators of weight one.
std::vector<int64_t> series_dims_rank(int64_t r, int64_t p, int64_t N);

/// Counts Lyndon words over an r-letter alphabet by length 1..L using
/// Duval's enumeration (the same enumeration the basis builder walks), as an
/// oracle independent of the Moebius-sum formula.
std::vector<int64_t> lyndon_counts_by_enumeration(int r, int L);

/// Visits every Lyndon word of length <= L over letters 0..r-1 in
/// lexicographic order.
void for_each_lyndon_word(int r, int L,
                          const std::function<void(const std::string&)>& fn);

/// Basis counts by weight 1..N obtained by enumerating (word, pexp) pairs.
std::vector<int64_t> basis_counts_by_enumeration(int r, int64_t p, int N);

}  // namespace rlak

#endif  // RLAK_WITT_HPP

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

#ifndef RLAK_EXPR_HPP
#define RLAK_EXPR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rlak/field.hpp"

namespace rlak {

/// Symbolic restricted-Lie expression over named generators.  Grammar
/// (whitespace-separated S-expressions, the bit-exact interchange format):
///
///   elem := GENNAME
///         | "(br" elem elem ")"        bracket [a, b]
///         | "(pp" elem INT ")"         p-power iterate a^{[p^n]}, n >= 1
///         | "(sc" FIELDLIT elem ")"    scalar multiple
///         | "(sum" elem+ ")"
///
/// FIELDLIT is the bracketed coefficient vector of the field module (a bare
/// integer is also accepted).  Trees are immutable and shared.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { gen, br, pp, sc, sum };

  Kind kind = Kind::gen;
  std::string name;             // gen
  ExprPtr a, b;                 // br: both; pp/sc: a
  int ppow = 0;                 // pp
  std::vector<int64_t> coeff;   // sc: literal digits, reduced at evaluation
  std::vector<ExprPtr> items;   // sum
};

ExprPtr make_gen(std::string name);
ExprPtr make_br(ExprPtr a, ExprPtr b);
ExprPtr make_pp(ExprPtr a, int n);
/// Scalar node; collapses (sc 1 e) to e.  A zero scalar is kept as written.
ExprPtr make_sc(std::vector<int64_t> coeff, ExprPtr a);
ExprPtr make_sc(const FieldElement& c, ExprPtr a);
/// Sum node; flattens nested sums, collapses singletons.
ExprPtr make_sum(std::vector<ExprPtr> items);

/// Parses the grammar above; ParseError carries a character position.
ExprPtr parse_expr_text(std::string_view text);
std::string format_expr_tree(const ExprPtr& e);

/// Replaces generator leaves by the mapped trees (names absent from the map
/// are kept).
ExprPtr substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& map);

/// Upper bound on the weight of the value: gen -> 1, br -> sum, pp -> p^n
/// times inner, sc -> inner, sum -> max.
int64_t expr_weight_bound(const ExprPtr& e, int64_t p);

/// Generator names mentioned by the tree.
std::vector<std::string> expr_generators(const ExprPtr& e);

/// True if e is a p-polynomial in the given generators: a sum of scalar
/// multiples of generators and their p-power iterates.
bool is_p_polynomial(const ExprPtr& e);

}  // namespace rlak

#endif  // RLAK_EXPR_HPP

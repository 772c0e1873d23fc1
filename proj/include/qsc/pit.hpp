// Copyright 2026 The qsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSC_PIT_HPP_
#define QSC_PIT_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsc/bigrational.hpp"
#include "qsc/formula.hpp"
#include "qsc/verdict.hpp"

namespace qsc {

// Degree contributions per variable.  The bound for a variable is the sum of
// its contributions; it must never be below the true degree of the numerator
// of lhs - rhs once denominators are cleared.
class BoundLedger {
 public:
  void add(Var v, const std::string& factor, long degree);
  long degree_bound(Var v) const;
  const std::map<std::string, long>& contributions(Var v) const;
  nlohmann::json to_json() const;

 private:
  std::map<Var, std::map<std::string, long>> c_;
};

// Fills a ledger for the identity lhs = rhs in the listed variables.  Each
// side is read through its factor structure: polynomial atoms are keyed up to
// unit monomials so that a factor cancelled between numerator and
// denominator (telescoping Pochhammer ratios, shared prefactors) is not
// counted, and sums are bounded over their least common keyed denominator.
BoundLedger identity_bounds(const Expr& lhs, const Expr& rhs, const std::vector<Var>& vars);

// Cruder bound: every displayed factor contributes its full degree and
// nothing cancels.  Always at least identity_bounds; used to cross-check it.
BoundLedger literal_bounds(const Expr& lhs, const Expr& rhs, const std::vector<Var>& vars);

struct GridSpec {
  std::string variable;
  std::size_t required_points = 0;
  std::vector<BigRational> exclusions;
  // Extra syntactic condition (for example "a*b = 1" with a fixed); may be empty.
  std::function<bool(const BigRational&)> excluded;
  BigRational start = 2;
  BigRational stride = 1;
};

// Deterministic: start, start + stride, ... minus exclusions.  Throws
// GridExhausted after 10 * required_points candidates.
std::vector<BigRational> generate_grid(const GridSpec& spec);

using PointBuilder = std::function<std::pair<RationalFunc, RationalFunc>(const BigRational&)>;

// Passes iff lhs and rhs are canonically equal at every grid point.  On
// failure the witness names the smallest offending point and the difference.
Verdict verify_on_grid(const PointBuilder& builder, std::vector<BigRational> grid);

// One swept variable of a nested grid.
struct GridVar {
  Var var = Var::kA;
  BigRational start = 2;
  BigRational stride = 1;
  std::vector<BigRational> exclusions;
};

// Check run at a fully bound point; nullopt on success, a witness on failure.
// Throwing IdenticallyZeroDenominator or PoleAtPoint marks the point as a
// pole: it is skipped and the grid extended.
using PointCheck = std::function<std::optional<nlohmann::json>(const Binding&)>;

struct NestedGrid {
  Binding fixed;               // the symbolic variable and any substitutions
  std::vector<GridVar> vars;   // outermost first
  std::vector<long> bounds;    // degree bound per swept variable
  std::vector<MPoly> pole_atoms;
  long margin = 0;
  // Points per variable, replacing bound + 1 + margin (sampled runs).
  std::optional<long> points_override;
};

Verdict run_nested(const NestedGrid& grid, const PointCheck& check);

// Exact equality of lhs and rhs as rational functions of the symbolic
// variable, by cross multiplication of unreduced fractions.
PointCheck equality_check(const Expr& lhs, const Expr& rhs);

// lhs = rhs for every value of the swept variables: bounds from
// identity_bounds, poles from the denominator atoms of both sides.
Verdict verify_identity(const Expr& lhs, const Expr& rhs, const Binding& fixed,
                        const std::vector<GridVar>& vars, long margin,
                        std::optional<long> points_override = std::nullopt);

}  // namespace qsc

#endif  // QSC_PIT_HPP_

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqg/constructions.hpp"
#include "uqg/genus.hpp"

namespace uqg {

using Rational = boost::multiprecision::cpp_rational;

enum class FormulaId { P4_1, P4_2, P4_3, P4_4, P4_5, P4_6, P4_7, P4_8, P4_10, P4_12, P4_14, P5_1, P5_2, P5_3, P5_4, R5_6 };

std::string formula_name(FormulaId id);
FormulaId parse_formula(const std::string& name);
std::vector<FormulaId> all_formulas();

/// Named integer parameters: q, pk, qbar, d, m, n, commuting, central, sg,
/// delta, case, r1, r2, r3. Flags are 0 or 1.
using Params = std::map<std::string, int64_t>;

struct HypothesisCheck {
    std::string name;
    bool ok;
};

struct Evaluation {
    FormulaId id;
    std::string branch;
    std::string printed;
    Rational value;
    std::vector<HypothesisCheck> trace;

    bool integral() const { return denominator(value) == 1; }
    std::string value_string() const;
    std::string to_json() const;
};

/// Raised with the name of the first failing precondition; the trace lists
/// every check made up to that point.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& what, std::vector<HypothesisCheck> trace);
    const std::vector<HypothesisCheck>& trace() const noexcept { return trace_; }

private:
    std::vector<HypothesisCheck> trace_;
};

/// The printed closed form, evaluated exactly. Integrality is not assumed.
Evaluation eval_formula(FormulaId id, const Params& params);

/// Labels and printed forms of every branch of a formula, in table order.
std::vector<std::pair<std::string, std::string>> formula_branches(FormulaId id);

/// Generators realizing the hypothesis group, when a recipe exists.
std::optional<GeneratorSet> formula_recipe(FormulaId id, const Params& params);

struct Crosscheck {
    Evaluation formula;
    GenusReport engine;
    bool match;

    std::string to_json() const;
};

Crosscheck crosscheck(FormulaId id, const Params& params, const GeneratorSet& gens);

}  // namespace uqg

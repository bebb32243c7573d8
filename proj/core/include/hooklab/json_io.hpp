#pragma once

#include <nlohmann/json.hpp>

#include "hooklab/brackets.hpp"
#include "hooklab/chowla_selberg.hpp"
#include "hooklab/modeval.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/qseries.hpp"
#include "hooklab/rational.hpp"

namespace hooklab::json {

using nlohmann::json;

// ["num", "den"] in lowest terms, positive denominator.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// [4, 3, 1]
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// Sorted ascending with multiplicity: [2, 4, 4, 6]
json to_json(const HookMultiset& m);

// {"q_offset": [..], "order": N, "coeffs": [[..], ...]}
json to_json(const RationalSeries& s);
RationalSeries series_from_json(const json& j);

json to_json(const BracketReport& r);

// {"re": "...", "im": "...", "prec_bits": n, "err_log2": e}; the decimal
// strings carry enough digits to recover the binary midpoint exactly.
json to_json(const HighPrecisionComplex& z);
HighPrecisionComplex complex_from_json(const json& j);

// {"point", "check", "t", "residual_log2", "budget_log2", "pass"}
json to_json(const CheckResult& c);

// {"tau", "D", "t", "combination", "psi_over_eta", "ratio", "probe",
//  "residual_log2", "pass", ...}
json to_json(const CsReport& r);

}  // namespace hooklab::json

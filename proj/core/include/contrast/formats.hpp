#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "contrast/enchained.hpp"
#include "contrast/greyscale.hpp"
#include "contrast/rational.hpp"
#include "contrast/rmacg.hpp"
#include "contrast/solver.hpp"

namespace contrast {

// Carried as "schema_version" by every JSON document below.
inline constexpr int kSchemaVersion = 1;

// {"k", "values", "cardinality", optional "strata" and "stratum_min_step"}.
std::string fk_json(const EnchainedSet& set);

// {"<key>": ["p/q", ...]} where key is "contrast" or "gradation".
std::string vector_json(std::string_view key, const std::vector<Rational>& tones);

// {"vector", "witness", "value_set", "nodes", "chromatic_number"}.
std::string macg_json(const MacgResult& result, int chromatic_number);

// {"vector", "witness", "method", "vc_partition", "nodes"}.
std::string rmacg_json(const RmacgResult& result);

// {"passed", "scope", "violations": [{"condition", "vertex"?, "edge"?, "detail"}]}.
std::string verification_json(const VerificationReport& report);

// "{a, b, c}".
std::string format_set(const std::vector<Rational>& values);

// Candidate tone file for the solver: either an F_k JSON export or plain
// rationals separated by whitespace or commas, '#' starting a comment. Returns
// the values sorted and deduplicated. Throws Error(kMalformedInput).
std::vector<Rational> parse_value_set(std::istream& in);

}  // namespace contrast

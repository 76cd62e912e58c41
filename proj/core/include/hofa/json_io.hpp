#pragma once

#include <string>

#include <json.hpp>

#include "hofa/decompose.hpp"
#include "hofa/kernel.hpp"

namespace hofa {

using json = nlohmann::json;

// Wire formats. Functions and kernels carry their group; value tables are
// [re, im] pairs in element-index order (kernels row-major).

json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const json& j, std::int64_t size_cap = 10'000'000);

json function_to_json(const GroupFunction& f);
GroupFunction function_from_json(const json& j, std::int64_t size_cap = 10'000'000);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j, std::int64_t size_cap = 10'000'000);

/// {"p": 5, "n": 1, "coeffs": {"2": 1}} means P = x^2; for n > 1 the key is
/// the comma-joined exponent vector, e.g. "1,2".
json phase_to_json(const PolynomialPhase& phi);
PolynomialPhase phase_from_json(const json& j);

json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const json& j, std::int64_t size_cap = 10'000'000);

json term_to_json(const FiniteAbelianGroup& g, const DecompositionTerm& term);
json decomposition_to_json(const DecompositionResult& r);

/// Canonical serialization: object keys sorted, every finite double printed
/// with 17 significant digits, no whitespace. Identical values produce
/// identical bytes, which is what the determinism contract compares.
std::string canonical_dump(const json& j);

}  // namespace hofa

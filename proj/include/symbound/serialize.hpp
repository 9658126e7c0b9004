#pragma once

#include <json.hpp>

#include "symbound/bounds.hpp"
#include "symbound/groups.hpp"
#include "symbound/symfunc.hpp"

namespace symbound {

// Field order in emitted objects is fixed (it doubles as the CSV/markdown
// column order), so everything below builds ordered_json.
using Json = nlohmann::ordered_json;

// {n, degree, terms: [[partition, coeff-as-decimal-string], ...]} with terms
// in the canonical partition order.
Json sympoly_json(const SymPoly& p);

// {n, k, gamma, delta, bound, argmin_i, trivial}; big integers as decimal
// strings.
Json bound_report_json(const BoundReport& r);

// {irrep_dims, multiplicities, summand_count}.
Json decomposition_json(const Decomposition& d, const CharTable& table);

// {entry, n, seed, trials, holds}.
Json correspondence_batch_json(const std::string& entry, unsigned n, std::uint64_t seed,
                               unsigned trials, bool holds);

}  // namespace symbound

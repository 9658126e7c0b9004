#include "symbound/serialize.hpp"

namespace symbound {

Json sympoly_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) {
    Json parts = Json::array();
    for (unsigned v : key.parts()) parts.push_back(v);
    terms.push_back(Json::array({parts, decimal(c)}));
  }
  Json j;
  j["n"] = p.num_vars();
  j["degree"] = p.degree();
  j["terms"] = terms;
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["gamma"] = r.gamma;
  j["delta"] = decimal(r.delta);
  j["bound"] = decimal(r.bound);
  j["argmin_i"] = r.argmin_i;
  j["trivial"] = r.trivial;
  return j;
}

Json decomposition_json(const Decomposition& d, const CharTable& table) {
  Json dims = Json::array();
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i)
    dims.push_back(table.irrep_dim(i));
  Json mults = Json::array();
  for (unsigned long m : d.multiplicities) mults.push_back(m);
  Json j;
  j["irrep_dims"] = dims;
  j["multiplicities"] = mults;
  j["summand_count"] = d.summand_count();
  return j;
}

Json correspondence_batch_json(const std::string& entry, unsigned n, std::uint64_t seed,
                               unsigned trials, bool holds) {
  Json j;
  j["entry"] = entry;
  j["n"] = n;
  j["seed"] = seed;
  j["trials"] = trials;
  j["holds"] = holds;
  return j;
}

}  // namespace symbound

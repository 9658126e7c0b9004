// Command-line front end: bound tables, identity verification runs, group
// decompositions and asymptotics sweeps, with JSON/CSV/markdown output.
//
// Exit codes: 0 success (all checks hold), 1 falsified mathematical check,
// 2 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "symbound/bounds.hpp"
#include "symbound/groups.hpp"
#include "symbound/numeric.hpp"
#include "symbound/sampling.hpp"
#include "symbound/satake.hpp"
#include "symbound/serialize.hpp"
#include "symbound/symfunc.hpp"

namespace {

using symbound::Json;

struct OutputConfig {
  std::string format;  // "json", "csv", "md" or "" (command default)
  std::string path;    // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputConfig* out, std::uint64_t* seed) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_option("--output", out->path, "Write the report to a file instead of stdout");
  cmd->add_option("--seed", *seed, "Sampler seed (ignored by deterministic commands)");
}

void write_out(const OutputConfig& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out.path);
  f << text;
}

std::string scalar_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string rows_to_csv(const std::vector<Json>& rows) {
  if (rows.empty()) return "";
  std::string s;
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    if (!first) s += ",";
    s += key;
    first = false;
  }
  s += "\n";
  for (const Json& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      if (!first) s += ",";
      s += scalar_to_string(value);
      first = false;
    }
    s += "\n";
  }
  return s;
}

std::string rows_to_markdown(const std::vector<Json>& rows) {
  if (rows.empty()) return "";
  std::vector<std::string> headers;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    headers.push_back(key);
  }
  std::vector<std::vector<std::string>> cells;
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      line.push_back(scalar_to_string(value));
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::string s = "|";
  for (std::size_t c = 0; c < headers.size(); ++c) s += " " + pad(headers[c], width[c]) + " |";
  s += "\n|";
  for (std::size_t c = 0; c < headers.size(); ++c) s += std::string(width[c] + 2, '-') + "|";
  s += "\n";
  for (const auto& line : cells) {
    s += "|";
    for (std::size_t c = 0; c < line.size(); ++c) s += " " + pad(line[c], width[c]) + " |";
    s += "\n";
  }
  return s;
}

enum class JsonStyle { kBareObject, kEnvelope };

// Emits a single-object report (bare JSON object) or a row table wrapped in
// {command, [seed,] results}.
void emit_rows(const OutputConfig& out, const std::string& command, const std::vector<Json>& rows,
               JsonStyle style, std::optional<std::uint64_t> seed = std::nullopt) {
  const std::string format = out.format.empty() ? "json" : out.format;
  if (format == "csv") {
    write_out(out, rows_to_csv(rows));
  } else if (format == "md") {
    write_out(out, rows_to_markdown(rows));
  } else if (style == JsonStyle::kBareObject) {
    write_out(out, rows.front().dump() + "\n");
  } else {
    Json j;
    j["command"] = command;
    if (seed) j["seed"] = *seed;
    j["results"] = rows;
    write_out(out, j.dump() + "\n");
  }
}

symbound::Rat pole_free_parameter(symbound::RationalSampler& sampler,
                                  const symbound::SatakeClass& a, unsigned k,
                                  symbound::LFactorIdentityReport& report) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    symbound::Rat t = sampler.evaluation_parameter();
    try {
      report = symbound::lfactor_identity_check(a, k, t);
      return t;
    } catch (const symbound::pole_error&) {
    }
  }
  throw std::runtime_error("no pole-free evaluation parameter found");
}

unsigned resolve_sweep_k(const std::string& mode, unsigned n) {
  if (mode == "quadratic") return n * n + n;
  if (mode == "cubic") return n * n * n;
  const int v = std::stoi(mode);
  if (v < 0) throw std::invalid_argument("sweep: k must be nonnegative");
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbound: exact symmetric-function identities and isobaric summand bounds"};
  app.require_subcommand(1);

  // bound / delta
  unsigned n = 0, k = 0, gamma = 1;
  std::uint64_t seed = symbound::kDefaultSeed;
  OutputConfig bound_out, delta_out;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Summand-degree bound report");
  bound_cmd->add_option("--n", n, "Degree n >= 2")->required();
  bound_cmd->add_option("--k", k, "Symmetric power k >= n+1")->required();
  bound_cmd->add_option("--gamma", gamma, "Relaxation parameter, 1 <= gamma <= k-n")->required();
  add_output_options(bound_cmd, &bound_out, &seed);

  CLI::App* delta_cmd = app.add_subcommand("delta", "Minimal summand degree only");
  delta_cmd->add_option("--n", n, "Degree n >= 2")->required();
  delta_cmd->add_option("--k", k, "Symmetric power k >= n+1")->required();
  delta_cmd->add_option("--gamma", gamma, "Relaxation parameter, 1 <= gamma <= k-n")->required();
  add_output_options(delta_cmd, &delta_out, &seed);

  // sweep
  unsigned n_min = 5, n_max = 12;
  std::string k_mode = "cubic";
  OutputConfig sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Bound reports across a range of degrees");
  sweep_cmd->add_option("--n-min", n_min, "Smallest degree")->required();
  sweep_cmd->add_option("--n-max", n_max, "Largest degree")->required();
  sweep_cmd->add_option("--k", k_mode,
                        "k as integer literal, 'quadratic' (n^2+n) or 'cubic' (n^3)");
  sweep_cmd->add_option("--gamma", gamma, "Relaxation parameter");
  add_output_options(sweep_cmd, &sweep_out, &seed);

  // verify-schur
  unsigned vs_n = 0;
  int vs_k = -1, vs_kmax = -1;
  bool vs_emit = false;
  OutputConfig vs_out;
  CLI::App* vs_cmd =
      app.add_subcommand("verify-schur", "Check the symmetric/exterior Schur identity");
  vs_cmd->add_option("--n", vs_n, "Number of variables")->required();
  vs_cmd->add_option("--k", vs_k, "Single k to check (default: the k-max range)");
  vs_cmd->add_option("--k-max", vs_kmax, "Check every k from n to k-max (default n+6)");
  vs_cmd->add_flag("--emit", vs_emit, "Embed both sides as serialized polynomials (json only)");
  add_output_options(vs_cmd, &vs_out, &seed);

  // verify-lfactor
  unsigned lf_n = 0, lf_trials = 50;
  int lf_k = -1, lf_kmax = -1;
  OutputConfig lf_out;
  CLI::App* lf_cmd = app.add_subcommand(
      "verify-lfactor", "Check the local-factor product identity on random classes");
  lf_cmd->add_option("--n", lf_n, "Degree of the class")->required();
  lf_cmd->add_option("--k", lf_k, "Single k to check");
  lf_cmd->add_option("--k-max", lf_kmax, "Check every k from n to k-max (default 10)");
  lf_cmd->add_option("--trials", lf_trials, "Random classes per k");
  add_output_options(lf_cmd, &lf_out, &seed);

  // verify-correspondence
  unsigned vc_n = 0, vc_trials = 20, vc_kmax = 4;
  std::string vc_entry = "all";
  OutputConfig vc_out;
  CLI::App* vc_cmd = app.add_subcommand(
      "verify-correspondence", "Check the representation <-> Schur polynomial dictionary rows");
  vc_cmd->add_option("--n", vc_n, "Degree of the class")->required();
  vc_cmd->add_option("--trials", vc_trials, "Random classes per entry");
  vc_cmd->add_option("--k-max", vc_kmax, "Largest power for the k-indexed rows");
  vc_cmd->add_option("--entry", vc_entry, "Restrict to one row")
      ->check(CLI::IsMember({"all", "sym", "ext", "det", "det-dual-std", "det-dual-sym",
                             "det-dual-ext", "det-adjoint"}));
  add_output_options(vc_cmd, &vc_out, &seed);

  // group-decompose
  std::string group = "a4", op = "sym2";
  unsigned long gd_p = 2;
  unsigned gd_copies = 1, gd_power = 0;
  int gd_irrep = -1;
  OutputConfig gd_out;
  CLI::App* gd_cmd =
      app.add_subcommand("group-decompose", "Decompose a derived character into irreducibles");
  gd_cmd->add_option("--group", group, "Built-in group")->check(CLI::IsMember({"a4", "heisenberg"}));
  gd_cmd->add_option("--p", gd_p, "Prime for the heisenberg group");
  gd_cmd->add_option("--copies", gd_copies, "Direct-product copies of the group");
  gd_cmd->add_option("--op", op, "Derived character to decompose")
      ->check(CLI::IsMember({"sym2", "alt2", "tensor"}));
  gd_cmd->add_option("--power", gd_power, "Tensor power for --op tensor (default p, or 2 for a4)");
  gd_cmd->add_option("--irrep", gd_irrep,
                     "Index of the base irreducible (default: last, highest-dimensional)");
  add_output_options(gd_cmd, &gd_out, &seed);

  // asymptotics
  unsigned as_nmin = 16, as_nmax = 28;
  std::string as_k = "cubic";
  OutputConfig as_out;
  CLI::App* as_cmd =
      app.add_subcommand("asymptotics", "Bound against the central binomial coefficient");
  as_cmd->add_option("--n-min", as_nmin, "Smallest degree");
  as_cmd->add_option("--n-max", as_nmax, "Largest degree");
  as_cmd->add_option("--k", as_k, "k as integer literal, 'quadratic' or 'cubic'");
  as_cmd->add_option("--gamma", gamma, "Relaxation parameter");
  add_output_options(as_cmd, &as_out, &seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bound_cmd) {
      emit_rows(bound_out, "bound",
                {symbound::bound_report_json(symbound::summand_bound(n, k, gamma))},
                JsonStyle::kBareObject);
      return 0;
    }

    if (*delta_cmd) {
      auto d = symbound::delta(n, k, gamma);
      Json j;
      j["n"] = n;
      j["k"] = k;
      j["gamma"] = gamma;
      j["delta"] = symbound::decimal(d.value);
      j["argmin_i"] = d.argmin_i;
      j["trivial"] = (d.value == 1);
      emit_rows(delta_out, "delta", {j}, JsonStyle::kBareObject);
      return 0;
    }

    if (*sweep_cmd) {
      if (n_min < 2 || n_max < n_min) throw std::invalid_argument("sweep: bad degree range");
      std::vector<Json> rows;
      for (unsigned nn = n_min; nn <= n_max; ++nn)
        rows.push_back(symbound::bound_report_json(
            symbound::summand_bound(nn, resolve_sweep_k(k_mode, nn), gamma)));
      emit_rows(sweep_out, "sweep", rows, JsonStyle::kEnvelope);
      return 0;
    }

    if (*vs_cmd) {
      if (vs_n < 1) throw std::invalid_argument("verify-schur: n must be >= 1");
      unsigned k_lo = vs_n, k_hi = vs_n + 6;
      if (vs_k >= 0) k_lo = k_hi = static_cast<unsigned>(vs_k);
      if (vs_kmax >= 0) k_hi = static_cast<unsigned>(vs_kmax);
      if (k_hi < k_lo) throw std::invalid_argument("verify-schur: empty k range");
      bool all_hold = true;
      std::vector<Json> rows;
      for (unsigned kk = k_lo; kk <= k_hi; ++kk) {
        auto r = symbound::schur_identity_check(vs_n, kk);
        all_hold = all_hold && r.holds;
        Json row;
        row["n"] = vs_n;
        row["k"] = kk;
        row["holds"] = r.holds;
        if (vs_emit) {
          row["lhs"] = symbound::sympoly_json(r.lhs);
          row["rhs"] = symbound::sympoly_json(r.rhs);
        }
        rows.push_back(std::move(row));
      }
      emit_rows(vs_out, "verify-schur", rows, JsonStyle::kEnvelope);
      return all_hold ? 0 : 1;
    }

    if (*lf_cmd) {
      if (lf_n < 1) throw std::invalid_argument("verify-lfactor: n must be >= 1");
      unsigned k_lo = lf_n, k_hi = std::max(10u, lf_n);
      if (lf_k >= 0) k_lo = k_hi = static_cast<unsigned>(lf_k);
      if (lf_kmax >= 0) k_hi = static_cast<unsigned>(lf_kmax);
      if (k_hi < k_lo) throw std::invalid_argument("verify-lfactor: empty k range");
      symbound::RationalSampler sampler(seed);
      bool all_hold = true;
      std::vector<Json> rows;
      for (unsigned kk = k_lo; kk <= k_hi; ++kk) {
        bool holds = true;
        for (unsigned trial = 0; trial < lf_trials; ++trial) {
          symbound::SatakeClass a(sampler.satake_alphas(lf_n));
          symbound::LFactorIdentityReport r;
          pole_free_parameter(sampler, a, kk, r);
          holds = holds && r.holds;
        }
        all_hold = all_hold && holds;
        Json row;
        row["n"] = lf_n;
        row["k"] = kk;
        row["seed"] = seed;
        row["trials"] = lf_trials;
        row["holds"] = holds;
        rows.push_back(std::move(row));
      }
      emit_rows(lf_out, "verify-lfactor", rows, JsonStyle::kEnvelope, seed);
      return all_hold ? 0 : 1;
    }

    if (*vc_cmd) {
      if (vc_n < 1) throw std::invalid_argument("verify-correspondence: n must be >= 1");
      symbound::RationalSampler sampler(seed);
      bool all_hold = true;
      std::vector<Json> rows;
      for (auto entry : symbound::all_correspondence_entries()) {
        const std::string name = symbound::entry_name(entry);
        if (vc_entry != "all" && vc_entry != name) continue;
        bool holds = true;
        unsigned performed = 0;
        const unsigned k_hi = symbound::entry_uses_k(entry) ? vc_kmax : 1;
        for (unsigned trial = 0; trial < vc_trials; ++trial) {
          symbound::SatakeClass a(sampler.satake_alphas(vc_n));
          for (unsigned kk = 1; kk <= k_hi; ++kk) {
            if (!symbound::entry_valid(entry, vc_n, kk)) continue;
            holds = holds && symbound::verify_correspondence(a, entry, kk).holds;
            ++performed;
          }
        }
        if (performed == 0) continue;  // entry never valid at this degree
        all_hold = all_hold && holds;
        rows.push_back(symbound::correspondence_batch_json(name, vc_n, seed, vc_trials, holds));
      }
      emit_rows(vc_out, "verify-correspondence", rows, JsonStyle::kEnvelope, seed);
      return all_hold ? 0 : 1;
    }

    if (*gd_cmd) {
      symbound::CharTable base =
          group == "a4" ? symbound::a4_table() : symbound::heisenberg_table(gd_p);
      symbound::CharTable table =
          gd_copies <= 1
              ? base
              : symbound::product_table(std::vector<symbound::CharTable>(gd_copies, base));
      std::size_t irrep = table.irreducibles.size() - 1;
      if (gd_irrep >= 0) {
        if (static_cast<std::size_t>(gd_irrep) >= table.irreducibles.size())
          throw std::invalid_argument("group-decompose: irrep index out of range");
        irrep = static_cast<std::size_t>(gd_irrep);
      }
      const symbound::ClassFunction& chi = table.irreducibles[irrep];
      symbound::ClassFunction derived;
      std::string op_label;
      if (op == "sym2") {
        derived = symbound::sym2_alt2(chi, table).first;
        op_label = "sym2";
      } else if (op == "alt2") {
        derived = symbound::sym2_alt2(chi, table).second;
        op_label = "alt2";
      } else {
        unsigned m = gd_power;
        if (m == 0) m = group == "a4" ? 2 : static_cast<unsigned>(gd_p);
        derived = symbound::tensor_power(chi, m);
        op_label = "tensor^" + std::to_string(m);
      }
      symbound::Decomposition d = symbound::decompose(derived, table);
      Json j = symbound::decomposition_json(d, table);

      std::vector<Json> table_rows;
      for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        if (d.multiplicities[i] == 0) continue;
        Json row;
        row["irrep"] = i;
        row["dim"] = table.irrep_dim(i);
        row["multiplicity"] = d.multiplicities[i];
        table_rows.push_back(std::move(row));
      }
      std::string human = table.name + ", " + op_label + " of irreducible #" +
                          std::to_string(irrep) + " (dim " +
                          std::to_string(table.irrep_dim(irrep)) + "): " +
                          std::to_string(d.summand_count()) + " summands\n" +
                          rows_to_markdown(table_rows);
      if (gd_out.format.empty()) {
        write_out(gd_out, j.dump() + "\n" + human);
      } else if (gd_out.format == "json") {
        write_out(gd_out, j.dump() + "\n");
      } else if (gd_out.format == "md") {
        write_out(gd_out, human);
      } else {
        write_out(gd_out, rows_to_csv(table_rows));
      }
      return 0;
    }

    if (*as_cmd) {
      if (as_nmin < 2 || as_nmax < as_nmin)
        throw std::invalid_argument("asymptotics: bad degree range");
      std::vector<Json> rows;
      for (unsigned nn = as_nmin; nn <= as_nmax; ++nn) {
        const unsigned kk = resolve_sweep_k(as_k, nn);
        auto ref = symbound::asymptotic_reference(nn);
        auto rep = symbound::summand_bound(nn, kk, gamma);
        const double ratio = symbound::Rat(rep.bound).get_d() / symbound::Rat(ref.central).get_d();
        Json row;
        row["n"] = nn;
        row["k"] = kk;
        row["central"] = symbound::decimal(ref.central);
        row["stirling"] = ref.stirling;
        row["bound"] = symbound::decimal(rep.bound);
        row["ratio"] = ratio;
        rows.push_back(std::move(row));
      }
      emit_rows(as_out, "asymptotics", rows, JsonStyle::kEnvelope);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

// Serialization: design/group exchange files, the sieve case file, and the
// verification / sieve reports (JSON, TSV, aligned text). All integers that
// can exceed 2^53 are encoded as decimal strings.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdes/designlib.hpp"
#include "flagdes/permgrp.hpp"
#include "flagdes/sieve.hpp"

namespace flagdes {

using json = nlohmann::ordered_json;

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json design_to_json(const Design& d) {
  json j;
  j["schema"] = 1;
  j["type"] = "design";
  j["v"] = d.v;
  j["k"] = d.block_size();
  j["blocks"] = d.blocks;
  return j;
}

inline Design design_from_json(const json& j) {
  if (j.value("schema", 0) != 1 || j.value("type", "") != "design")
    throw io_error("not a schema-1 design file");
  Design d;
  d.v = j.at("v").get<std::uint32_t>();
  d.blocks = j.at("blocks").get<std::vector<std::vector<std::uint32_t>>>();
  d.canonicalize();
  if (!d.blocks.empty() && j.contains("k") && j.at("k").get<std::uint32_t>() != d.block_size())
    throw io_error("declared k disagrees with block contents");
  return d;
}

inline json group_to_json(const PermGroup& g) {
  json j;
  j["schema"] = 1;
  j["type"] = "group";
  j["degree"] = g.degree();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  j["generators"] = gens;
  j["order"] = std::to_string(g.order());
  return j;
}

inline PermGroup group_from_json(const json& j) {
  if (j.value("schema", 0) != 1 || j.value("type", "") != "group")
    throw io_error("not a schema-1 group file");
  std::uint32_t degree = j.at("degree").get<std::uint32_t>();
  std::vector<Permutation> gens;
  for (const auto& imgs : j.at("generators"))
    gens.emplace_back(imgs.get<std::vector<std::uint32_t>>());
  PermGroup g(degree, std::move(gens));
  if (j.contains("order")) {
    std::uint64_t asserted = std::stoull(j.at("order").get<std::string>());
    if (g.order() != asserted)
      throw io_error("asserted group order " + std::to_string(asserted) +
                     " != computed " + std::to_string(g.order()));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Sieve case file

inline BoundRule bound_rule_from_string(const std::string& s) {
  if (s == "gcd_h") return BoundRule::GcdH;
  if (s == "gcd_h_out") return BoundRule::GcdHOut;
  if (s == "largest_prime_h") return BoundRule::LargestPrimeH;
  if (s == "gcd_subdegree") return BoundRule::GcdSubdegree;
  if (s == "sym4_scan") return BoundRule::Sym4Scan;
  throw io_error("unknown bound rule: " + s);
}

inline GroupFamily family_from_string(const std::string& s) {
  if (s == "PSU") return GroupFamily::PSU;
  if (s == "SU") return GroupFamily::SU;
  if (s == "GU") return GroupFamily::GU;
  if (s == "PSL2") return GroupFamily::PSL2;
  if (s == "Sp") return GroupFamily::Sp;
  if (s == "explicit") return GroupFamily::Explicit;
  throw io_error("unknown group family: " + s);
}

inline Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

inline std::vector<SieveCase> cases_from_json(const json& j) {
  if (j.value("schema", 0) != 1) throw io_error("not a schema-1 case file");
  std::vector<SieveCase> cases;
  for (const auto& row : j.at("cases")) {
    SieveCase c;
    c.table = row.at("table").get<std::string>();
    c.line = row.at("line").get<std::uint32_t>();
    c.socle_name = row.value("socle_name", "");
    c.h_name = row.value("h_name", "");
    if (row.contains("socle")) {
      const auto& soc = row.at("socle");
      c.socle.family = family_from_string(soc.at("family").get<std::string>());
      if (c.socle.family == GroupFamily::Explicit)
        c.socle.explicit_order = int_from_json(soc.at("order"));
      else {
        c.socle.n = soc.at("n").get<std::uint32_t>();
        c.socle.q = int_from_json(soc.at("q"));
      }
    }
    if (row.contains("h_order")) c.h_order = int_from_json(row.at("h_order"));
    if (row.contains("out")) c.out = int_from_json(row.at("out"));
    if (row.contains("subdegree_div")) c.subdegree_div = int_from_json(row.at("subdegree_div"));
    c.rule = bound_rule_from_string(row.at("rule").get<std::string>());
    c.structural_exception = row.value("structural_exception", false);
    if (row.contains("v_printed")) c.v_printed = int_from_json(row.at("v_printed"));
    if (row.contains("ur_printed")) c.ur_printed = int_from_json(row.at("ur_printed"));
    c.status_printed = row.value("status_printed", "");
    c.note = row.value("note", "");
    cases.push_back(std::move(c));
  }
  return cases;
}

inline std::vector<SieveCase> load_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open case file: " + path);
  json j;
  in >> j;
  return cases_from_json(j);
}

// ---------------------------------------------------------------------------
// Reports

struct SieveRowReport {
  const SieveCase* c;
  SieveVerdict verdict;
  bool v_matches;     // computed v == printed v (vacuously true for scans)
  bool ur_matches;    // computed u_r == printed u_r
  bool status_matches;
  bool flagged;       // a documented discrepancy is recorded in the case note
};

inline SieveRowReport run_sieve_row(const SieveCase& c) {
  SieveRowReport r{&c, prune_case(c), true, true, true, !c.note.empty()};
  if (c.rule != BoundRule::Sym4Scan) {
    r.v_matches = c.v_printed == 0 || r.verdict.v == c.v_printed;
    r.ur_matches = c.ur_printed == 0 || r.verdict.u_r == c.ur_printed;
  }
  r.status_matches =
      c.status_printed.empty() || to_string(r.verdict.status) == c.status_printed;
  return r;
}

inline std::string sieve_report_tsv(const std::vector<SieveRowReport>& rows) {
  std::ostringstream os;
  os << "table\tline\tsocle\th\tv_computed\tv_printed\tur_computed\tur_printed\tstatus\trule\n";
  for (const auto& r : rows) {
    const auto& c = *r.c;
    os << c.table << '\t' << c.line << '\t' << c.socle_name << '\t' << c.h_name << '\t';
    if (c.rule == BoundRule::Sym4Scan)
      os << "-\t-\t-\t-";
    else
      os << r.verdict.v.str() << '\t' << (c.v_printed != 0 ? c.v_printed.str() : "-") << '\t'
         << r.verdict.u_r.str() << '\t' << (c.ur_printed != 0 ? c.ur_printed.str() : "-");
    os << '\t' << to_string(r.verdict.status) << '\t' << r.verdict.rule << '\n';
  }
  return os.str();
}

inline json sieve_report_json(const std::vector<SieveRowReport>& rows) {
  json j;
  j["schema"] = 1;
  j["type"] = "sieve_report";
  json out = json::array();
  for (const auto& r : rows) {
    const auto& c = *r.c;
    json row;
    row["table"] = c.table;
    row["line"] = c.line;
    row["socle"] = c.socle_name;
    row["h"] = c.h_name;
    if (c.rule != BoundRule::Sym4Scan) {
      row["v_computed"] = r.verdict.v.str();
      row["ur_computed"] = r.verdict.u_r.str();
      if (c.v_printed != 0) row["v_printed"] = c.v_printed.str();
      if (c.ur_printed != 0) row["ur_printed"] = c.ur_printed.str();
    }
    row["status"] = to_string(r.verdict.status);
    row["rule"] = r.verdict.rule;
    row["matches"] = r.v_matches && r.ur_matches && r.status_matches;
    if (!c.note.empty()) row["note"] = c.note;
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  return j;
}

struct VerificationReport {
  DesignParams params;
  bool fisher = false;
  bool has_group = false;
  bool flag_transitive = false;
  bool primitive = false;
  std::vector<std::uint64_t> subdegrees;
  bool r_divides_v_minus_1 = false;
  bool lambda_v_lt_r2 = false;
  bool r_divides_subdegrees = false;
  std::uint64_t gcd_r_lambda = 0;
};

inline VerificationReport verify_with_group(const Design& d, const PermGroup* g) {
  VerificationReport rep;
  rep.params = verify_design(d);
  rep.fisher = rep.params.b >= rep.params.v;
  rep.gcd_r_lambda = std::gcd(rep.params.r, rep.params.lambda);
  rep.r_divides_v_minus_1 = (rep.params.v - 1) % rep.params.r == 0;
  rep.lambda_v_lt_r2 = rep.params.lambda * rep.params.v < rep.params.r * rep.params.r;
  if (g) {
    rep.has_group = true;
    rep.flag_transitive = is_flag_transitive(*g, d);
    rep.primitive = g->is_transitive() && g->is_primitive();
    rep.subdegrees = g->subdegrees(0);
    rep.r_divides_subdegrees = true;
    for (auto s : rep.subdegrees)
      if (s > 1 && s % rep.params.r != 0) rep.r_divides_subdegrees = false;
  }
  return rep;
}

inline json verification_report_json(const VerificationReport& r) {
  json j;
  j["schema"] = 1;
  j["type"] = "verification";
  j["params"] = {{"v", r.params.v}, {"b", r.params.b}, {"r", r.params.r},
                 {"k", r.params.k}, {"lambda", r.params.lambda}};
  j["fisher_b_ge_v"] = r.fisher;
  j["gcd_r_lambda"] = r.gcd_r_lambda;
  j["r_divides_v_minus_1"] = r.r_divides_v_minus_1;
  j["lambda_v_lt_r2"] = r.lambda_v_lt_r2;
  if (r.has_group) {
    j["flag_transitive"] = r.flag_transitive;
    j["primitive"] = r.primitive;
    j["subdegrees"] = r.subdegrees;
    j["r_divides_subdegrees"] = r.r_divides_subdegrees;
  }
  return j;
}

inline std::string verification_report_text(const VerificationReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& val) {
    os << std::left << std::setw(26) << name << val << '\n';
  };
  row("parameters",
      "2-(" + std::to_string(r.params.v) + ", " + std::to_string(r.params.k) + ", " +
          std::to_string(r.params.lambda) + ")  b=" + std::to_string(r.params.b) +
          " r=" + std::to_string(r.params.r));
  row("fisher b >= v", r.fisher ? "yes" : "no");
  row("gcd(r, lambda)", std::to_string(r.gcd_r_lambda));
  row("r | v-1", r.r_divides_v_minus_1 ? "yes" : "no");
  row("lambda*v < r^2", r.lambda_v_lt_r2 ? "yes" : "no");
  if (r.has_group) {
    row("flag-transitive", r.flag_transitive ? "yes" : "no");
    row("point-primitive", r.primitive ? "yes" : "no");
    std::ostringstream sd;
    for (std::size_t i = 0; i < r.subdegrees.size(); ++i)
      sd << (i ? " " : "") << r.subdegrees[i];
    row("subdegrees", sd.str());
    row("r | subdegrees", r.r_divides_subdegrees ? "yes" : "no");
  }
  return os.str();
}

/// Writes the full content in one shot; never leaves a partial file behind.
inline void write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open output file: " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw io_error("rename failed: " + path);
}

}  // namespace flagdes

// Command-line front end: construct the supported designs, verify design and
// group properties, run the arithmetic sieve over a case file, and regenerate
// the reference-table comparisons.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "flagdes/designlib.hpp"
#include "flagdes/io.hpp"
#include "flagdes/sieve.hpp"
#include "flagdes/unitary.hpp"

namespace {

using namespace flagdes;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

[[noreturn]] void fail(const std::string& code, const std::string& message) {
  json err;
  err["schema"] = 1;
  err["type"] = "error";
  err["code"] = code;
  err["message"] = message;
  std::cerr << err.dump(2) << '\n';
  std::exit(1);
}

int cmd_construct(const std::string& name, std::uint64_t q, std::uint32_t n, int line,
                  const std::string& out, const std::string& group_out) {
  Design d;
  std::string group_json;
  if (name == "hermitian-unital") {
    d = hermitian_unital(q);
    if (!group_out.empty() && q >= 3) group_json = group_to_json(psu3_action(q)).dump(2) + "\n";
  } else if (name == "witt-bose-shrikhande") {
    WbsSpace w = witt_bose_shrikhande(n);
    d = std::move(w.design);
    if (!group_out.empty()) group_json = group_to_json(w.point_action).dump(2) + "\n";
  } else if (name == "small") {
    SmallDesignCase sc = small_design_case(line);
    auto found = find_base_blocks(sc.action, sc.k, sc.lambda);
    if (found.empty()) fail("not_found", "base-block search returned no design");
    d = found.front();
    if (!group_out.empty()) group_json = group_to_json(sc.action).dump(2) + "\n";
  } else {
    fail("bad_target", "unknown construction: " + name);
  }
  emit(out, design_to_json(d).dump(2) + "\n");
  if (!group_json.empty()) write_file(group_out, group_json);
  return 0;
}

int cmd_verify(const std::string& design_path, const std::string& group_path,
               const std::string& out, const std::string& format) {
  std::ifstream din(design_path);
  if (!din) fail("io", "cannot open design file: " + design_path);
  json dj;
  din >> dj;
  Design d = design_from_json(dj);
  std::optional<PermGroup> g;
  if (!group_path.empty()) {
    std::ifstream gin(group_path);
    if (!gin) fail("io", "cannot open group file: " + group_path);
    json gj;
    gin >> gj;
    g = group_from_json(gj);
  }
  VerificationReport rep = verify_with_group(d, g ? &*g : nullptr);
  if (format == "text")
    emit(out, verification_report_text(rep));
  else
    emit(out, verification_report_json(rep).dump(2) + "\n");
  bool ok = rep.gcd_r_lambda == 1 && rep.r_divides_v_minus_1 && rep.lambda_v_lt_r2 &&
            (!rep.has_group || (rep.flag_transitive && rep.primitive && rep.r_divides_subdegrees));
  return ok ? 0 : 1;
}

int cmd_sieve(const std::string& cases_path, const std::string& out, const std::string& format) {
  auto cases = load_cases(cases_path);
  std::vector<SieveRowReport> rows;
  bool all_match = true;
  for (const auto& c : cases) {
    rows.push_back(run_sieve_row(c));
    const auto& r = rows.back();
    all_match = all_match && r.status_matches && r.ur_matches && (r.v_matches || r.flagged);
  }
  if (format == "json")
    emit(out, sieve_report_json(rows).dump(2) + "\n");
  else
    emit(out, sieve_report_tsv(rows));
  return all_match ? 0 : 1;
}

int cmd_tables(const std::string& cases_path, const std::string& which, const std::string& out) {
  std::ostringstream os;
  bool ok = true;
  if (which == "all" || which == "1") {
    os << "table\tline\tv\tb\tr\tk\tlambda\tstabilizer\tflag_transitive\tmatch\n";
    for (int line = 1; line <= 6; ++line) {
      SmallDesignCase sc = small_design_case(line);
      auto found = find_base_blocks(sc.action, sc.k, sc.lambda);
      bool match = false;
      DesignParams p{};
      bool ft = false;
      for (const auto& d : found) {
        p = verify_design(d);
        ft = is_flag_transitive(sc.action, d);
        if (p == sc.expected && ft) {
          match = true;
          break;
        }
      }
      std::uint64_t stab = sc.action.point_stabilizer(0).order();
      match = match && stab == sc.stabilizer_order;
      ok = ok && match;
      os << "1\t" << line << '\t' << p.v << '\t' << p.b << '\t' << p.r << '\t' << p.k << '\t'
         << p.lambda << '\t' << stab << '\t' << (ft ? "yes" : "no") << '\t'
         << (match ? "yes" : "no") << '\n';
    }
  }
  if (which == "all" || which == "4" || which == "5" || which == "6") {
    auto cases = load_cases(cases_path);
    std::vector<SieveRowReport> rows;
    for (const auto& c : cases) {
      if (which != "all" && c.table != which) continue;
      rows.push_back(run_sieve_row(c));
      const auto& r = rows.back();
      ok = ok && r.status_matches && r.ur_matches && (r.v_matches || r.flagged);
    }
    os << sieve_report_tsv(rows);
  }
  emit(out, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction, verification, and arithmetic elimination for "
               "flag-transitive 2-designs with unitary automorphism groups"};
  app.require_subcommand(1);

  std::string name, design_path, group_path, cases_path, out, group_out;
  std::string format, which = "all";
  std::uint64_t q = 3;
  std::uint32_t n = 3;
  int line = 1;

  auto* construct = app.add_subcommand("construct", "emit a design exchange file");
  construct->add_option("name", name,
                        "hermitian-unital | witt-bose-shrikhande | small")->required();
  construct->add_option("--q", q, "field size for hermitian-unital");
  construct->add_option("--n", n, "exponent for witt-bose-shrikhande (q = 2^n)");
  construct->add_option("--line", line, "line number 1..6 for small");
  construct->add_option("--out", out, "output path (default stdout)");
  construct->add_option("--group-out", group_out, "also emit the acting group");

  auto* verify = app.add_subcommand("verify", "verify a design (+ optional group) file");
  verify->add_option("--design", design_path, "design exchange file")->required();
  verify->add_option("--group", group_path, "group exchange file");
  verify->add_option("--out", out, "output path (default stdout)");
  verify->add_option("--format", format, "json | text");

  auto* sieve = app.add_subcommand("sieve", "run the arithmetic sieve over a case file");
  sieve->add_option("--cases", cases_path, "case file (JSON)")->required();
  sieve->add_option("--out", out, "output path (default stdout)");
  sieve->add_option("--format", format, "tsv | json");

  auto* tables = app.add_subcommand("tables", "regenerate reference-table comparisons");
  tables->add_option("--cases", cases_path, "case file (JSON)");
  tables->add_option("--table", which, "1 | 4 | 5 | 6 | all");
  tables->add_option("--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(name, q, n, line, out, group_out);
    if (verify->parsed())
      return cmd_verify(design_path, group_path, out, format.empty() ? "json" : format);
    if (sieve->parsed()) return cmd_sieve(cases_path, out, format.empty() ? "tsv" : format);
    if (tables->parsed()) {
      if ((which == "all" || which != "1") && cases_path.empty())
        fail("bad_args", "--cases is required for tables 4/5/6");
      return cmd_tables(cases_path, which, out);
    }
  } catch (const std::exception& e) {
    fail("exception", e.what());
  }
  return 1;
}

#include "seifert/cli.hpp"

#include "seifert/report.hpp"
#include "seifert/selftest.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace seifert::cli {

namespace {

struct Options {
  bool json = false;
  std::string invariants;
  std::optional<long> instantiate_n;
  bool audit = false;
  std::string quotient_file;
  std::string z_list;
  std::string l_list;
  std::string formula = "bicyclic-core";
  int max_denominator = 8;
  int random_cases = 0;
  int random_max_denominator = 24;
  std::uint64_t seed = 20181;
  std::string artifact_dir;
};

std::string read_all(std::istream &in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string trimmed(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

std::string invariant_text(Options const &o, std::istream &in) {
  auto text = trimmed(o.invariants.empty() ? read_all(in) : o.invariants);
  if (text.empty())
    throw std::invalid_argument("no invariants given (argument or stdin)");
  return text;
}

// "6,_,4" -> {6, unset, 4}; an empty entry also means unset.
std::vector<std::optional<Integer>> parse_override_list(std::string const &text) {
  std::vector<std::optional<Integer>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty() || item == "_")
      out.emplace_back(std::nullopt);
    else
      out.emplace_back(parse_integer(item));
  }
  if (!text.empty() && text.back() == ',')
    out.emplace_back(std::nullopt);
  return out;
}

void apply_overrides(std::vector<std::optional<Integer>> &target,
                     std::vector<std::optional<Integer>> const &given) {
  if (target.size() < given.size())
    target.resize(given.size());
  for (std::size_t i = 0; i < given.size(); ++i)
    if (given[i])
      target[i] = given[i];
}

void append_unique(Json &list, std::vector<std::string> const &items) {
  for (auto const &s : items)
    if (std::find(list.begin(), list.end(), Json(s)) == list.end())
      list.push_back(s);
}

void print_json(std::ostream &out, Json const &j) { out << j.dump(2) << "\n"; }

class Table {
public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream &out) const {
    std::size_t width = 0;
    for (auto const &r : rows_)
      width = std::max(width, r.first.size());
    for (auto const &r : rows_)
      out << std::left << std::setw(static_cast<int>(width) + 2) << r.first << r.second << "\n";
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(std::vector<std::string> const &items, char const *sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i)
    s += (i ? sep : "") + items[i];
  return s;
}

std::string join_params(std::vector<Param> const &ps) {
  if (ps.empty())
    return "-";
  std::vector<std::string> s;
  for (auto const &p : ps)
    s.push_back(p.to_string());
  return join(s, ",");
}

void print_columns(std::ostream &out, std::vector<std::vector<std::string>> const &rows) {
  std::vector<std::size_t> width;
  for (auto const &r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  }
  for (auto const &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i)
      line += i + 1 < r.size() ? r[i] + std::string(width[i] - r[i].size() + 2, ' ') : r[i];
    out << line << "\n";
  }
}

// Geometry, reversal and family of one manifold.  `strict` makes a
// non-elliptic manifold a domain error instead of a reported fact.
int describe(Options const &o, std::istream &in, std::ostream &out, bool strict) {
  auto text = invariant_text(o, in);
  auto m = parse_invariants(text);
  auto norm = normalize(m);
  auto geometry = geometry_verdict(norm);
  if (strict && !geometry.elliptic)
    throw NotElliptic(format_invariants(norm) + " is not elliptic (chi_orb = " +
                      to_string(geometry.chi_orb) + ", e = " + to_string(geometry.euler_class) + ")");

  Json citations = Json::array({"elliptic-iff-positive-chi-and-nonzero-euler-class"});
  Json warnings = Json::array();
  std::optional<ReversalVerdict> reversal;
  std::optional<GroupFamily> family;
  try {
    reversal = reversal_excluded(norm);
    append_unique(citations, reversal->citations);
  } catch (OutOfScopeGeometry const &e) {
    warnings.push_back(std::string("reversal: ") + e.what());
  }
  if (geometry.elliptic) {
    family = admissible_family(norm);
    append_unique(citations, family->citations);
  }

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = text;
    j["normalized"] = to_json(norm);
    j["geometry"] = to_json(geometry);
    j["reversal"] = reversal ? to_json(*reversal) : Json(nullptr);
    j["family"] = family ? to_json(*family) : Json(nullptr);
    j["caveats"] = family ? Json(family->caveats) : Json::array();
    j["citations"] = citations;
    j["warnings"] = warnings;
    print_json(out, j);
    return kExitOk;
  }

  Table t;
  t.add("input", text);
  t.add("normalized", format_invariants(norm));
  t.add("base", geometry.base_label);
  t.add("chi_orb", to_string(geometry.chi_orb));
  t.add("euler class", to_string(geometry.euler_class));
  t.add("elliptic", geometry.elliptic ? "yes" : "no");
  if (reversal) {
    std::vector<std::string> reasons;
    for (auto r : reversal->reasons)
      reasons.push_back(to_string(r));
    t.add("reversal", reversal->excluded ? "excluded (" + join(reasons) + ")" : "not excluded");
  }
  if (family) {
    t.add("case", to_string(family->dispatch_case));
    t.add("family", family->expr ? family->expr->to_string() : "deferred");
    if (family->alternate)
      t.add("alternate", family->alternate->to_string());
    for (auto const &c : family->caveats)
      t.add("caveat", c);
  }
  for (auto const &w : warnings)
    t.add("warning", w.get<std::string>());
  std::vector<std::string> cites;
  for (auto const &c : citations)
    cites.push_back(c.get<std::string>());
  t.add("citations", join(cites));
  t.print(out);
  return kExitOk;
}

std::vector<std::string> atlas_cells(S2ActionRow const &row) {
  return {std::to_string(row.number),
          to_string(row.underlying),
          row.group.to_string(),
          row.branch_data.to_string(),
          join_params(row.orbit_numbers),
          row.lcm.to_string(),
          std::to_string(row.index_over_lcm),
          to_string(row.oc_rule)};
}

int atlas(Options const &o, std::ostream &out) {
  if (o.instantiate_n && *o.instantiate_n < 1)
    throw std::invalid_argument("--instantiate-n must be at least 1");
  std::vector<long> audit_ns;
  if (o.audit) {
    if (o.instantiate_n)
      audit_ns.push_back(*o.instantiate_n);
    else
      audit_ns = {1, 2, 3};
  }
  std::optional<Integer> n;
  if (o.instantiate_n)
    n = Integer(*o.instantiate_n);
  auto rows = atlas_rows(n);

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = o.instantiate_n ? Json(*o.instantiate_n) : Json(nullptr);
    Json list = Json::array();
    for (auto const &r : rows)
      list.push_back(to_json(r));
    j["rows"] = list;
    if (o.audit) {
      Json audits = Json::array();
      for (long k : audit_ns) {
        Json per;
        per["n"] = k;
        Json items = Json::array();
        for (auto const &r : atlas_rows(Integer(k)))
          items.push_back(to_json(recompute_lcm_index(r)));
        per["rows"] = items;
        audits.push_back(per);
      }
      j["audit"] = audits;
    }
    j["citations"] = Json::array({"s2-action-table"});
    print_json(out, j);
    return kExitOk;
  }

  std::vector<std::vector<std::string>> table{
      {"row", "quotient", "group", "branch data", "orbit numbers", "lcm", "|G|/lcm", "b"}};
  for (auto const &r : rows)
    table.push_back(atlas_cells(r));
  print_columns(out, table);
  for (long k : audit_ns) {
    out << "\naudit at n = " << k << "\n";
    std::vector<std::vector<std::string>> audit{{"row", "|G|", "lcm", "recomputed lcm", "index", "status"}};
    for (auto const &r : atlas_rows(Integer(k))) {
      auto a = recompute_lcm_index(r);
      audit.push_back({std::to_string(a.number), to_string(a.group_order), to_string(a.table_lcm),
                       to_string(a.recomputed_lcm), to_string(a.table_index),
                       a.consistent() ? "ok" : join(a.notes, "; ")});
    }
    print_columns(out, audit);
  }
  return kExitOk;
}

int quotient(Options const &o, std::istream &in, std::ostream &out) {
  std::string text;
  if (o.quotient_file.empty() || o.quotient_file == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(o.quotient_file);
    if (!file)
      throw std::invalid_argument("cannot read " + o.quotient_file);
    text = read_all(file);
  }
  Json input = Json::parse(text);
  auto q_in = quotient_input_from_json(input);
  apply_overrides(q_in.action.z_overrides, parse_override_list(o.z_list));
  apply_overrides(q_in.action.l_overrides, parse_override_list(o.l_list));
  auto q = assemble_quotient(q_in.invariants, q_in.action);

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = input;
    j["quotient"] = to_json(q);
    j["warnings"] = q.warnings;
    j["citations"] = q.citations;
    j["report"] = quotient_text(q_in, q);
    print_json(out, j);
  } else {
    out << quotient_text(q_in, q);
  }
  return kExitOk;
}

int oracle_check(Options const &o, std::ostream &out) {
  SweepOptions s;
  s.max_denominator = o.max_denominator;
  s.random_cases = o.random_cases;
  s.random_max_denominator = o.random_max_denominator;
  s.seed = o.seed;
  auto formula = parse_sweep_formula(o.formula);
  auto r = sweep(formula, s);
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["sweep"] = to_json(r);
    j["citations"] = Json::array({"core-order-by-stabilizer"});
    print_json(out, j);
  } else {
    Table t;
    t.add("formula", to_string(r.formula));
    t.add("max denominator", std::to_string(r.max_denominator));
    t.add("exhaustive cases", std::to_string(r.exhaustive_cases));
    t.add("random cases", std::to_string(r.random_cases) + " (denominators <= " +
                              std::to_string(r.random_max_denominator) + ", seed " +
                              std::to_string(r.seed) + ")");
    t.add("discrepancies", std::to_string(r.discrepancies.size()));
    t.print(out);
    for (std::size_t i = 0; i < r.discrepancies.size() && i < 20; ++i) {
      auto const &d = r.discrepancies[i];
      std::vector<std::string> gens;
      for (auto const &g : d.generators)
        gens.push_back(to_string(g));
      out << "  " << join(gens, " ") << ": formula " << to_string(d.formula) << ", oracle "
          << to_string(d.oracle) << "\n";
    }
  }
  return r.clean() ? kExitOk : kExitDomain;
}

int selftest(Options const &o, std::ostream &out) {
  AcceptanceOptions a;
  a.seed = o.seed;
  if (!o.artifact_dir.empty())
    a.artifact_dir = o.artifact_dir;
  auto results = run_acceptance(a);
  bool all = std::all_of(results.begin(), results.end(), [](auto const &r) { return r.passed; });
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    Json list = Json::array();
    for (auto const &r : results)
      list.push_back(to_json(r));
    j["checks"] = list;
    j["passed"] = all;
    print_json(out, j);
  } else {
    for (auto const &r : results)
      out << format_check(r) << "\n";
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kExitOk : kExitDomain;
}

} // namespace

int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Seifert fibered manifolds: invariants, symmetry families and quotient data", "seifert"};
  app.require_subcommand(1);

  auto *analyze = app.add_subcommand("analyze", "Geometry, Euler class, reversal and family of a manifold");
  auto *classify = app.add_subcommand("classify", "Admissible group family of an elliptic manifold");
  auto *atlas_cmd = app.add_subcommand("atlas", "The table of finite actions on S2");
  auto *quotient_cmd = app.add_subcommand("quotient", "Quotient data of a fiber-preserving action");
  auto *oracle_cmd = app.add_subcommand("oracle-check", "Compare a core-order formula with enumeration");
  auto *selftest_cmd = app.add_subcommand("selftest", "Run the acceptance checks");

  for (auto *sub : {analyze, classify, atlas_cmd, quotient_cmd, oracle_cmd, selftest_cmd})
    sub->add_flag("--json", o.json, "Write JSON instead of text");
  for (auto *sub : {analyze, classify})
    sub->add_option("invariants", o.invariants, "Invariants such as \"(0,o1|(3,2),(1,5))\"; stdin when omitted");

  atlas_cmd->add_option("--instantiate-n", o.instantiate_n, "Substitute n in the parameterized rows");
  atlas_cmd->add_flag("--audit", o.audit, "Recompute the lcm and index columns");

  quotient_cmd->add_option("file", o.quotient_file, "Action description JSON; stdin when omitted or '-'");
  quotient_cmd->add_option("--z", o.z_list, "Per-class z overrides, e.g. 6,6 (empty or _ keeps a default)");
  quotient_cmd->add_option("--l", o.l_list, "Per-class l overrides, e.g. 12,_");

  oracle_cmd->add_option("--formula", o.formula, "cyclic-core or bicyclic-core")
      ->check(CLI::IsMember({"cyclic-core", "bicyclic-core"}));
  oracle_cmd->add_option("--max-denominator", o.max_denominator, "Exhaustive grid bound")
      ->check(CLI::Range(1, 64));
  oracle_cmd->add_option("--random-cases", o.random_cases, "Additional random cases")->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--random-max-denominator", o.random_max_denominator, "Denominator bound of random cases")
      ->check(CLI::Range(1, 4096));
  oracle_cmd->add_option("--seed", o.seed, "Random seed");

  selftest_cmd->add_option("--seed", o.seed, "Random seed of the property checks");
  selftest_cmd->add_option("--artifact-dir", o.artifact_dir, "Directory for the sweep discrepancy report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (CLI::ParseError const &e) {
    auto subs = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*analyze)
      return describe(o, in, out, false);
    if (*classify)
      return describe(o, in, out, true);
    if (*atlas_cmd)
      return atlas(o, out);
    if (*quotient_cmd)
      return quotient(o, in, out);
    if (*oracle_cmd)
      return oracle_check(o, out);
    return selftest(o, out);
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

} // namespace seifert::cli

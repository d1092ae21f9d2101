/*
 * Copyright (c) 2026 The orbicount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "orbicount/orbicount.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum Exit { ExitOk = 0, ExitMismatch = 1, ExitInput = 2, ExitBudget = 3, ExitInternal = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(oc_status s) {
  switch (s) {
  case OC_OK: return ExitOk;
  case OC_ERR_BUDGET: return ExitBudget;
  case OC_ERR_INTERNAL: return ExitInternal;
  default: return ExitInput;
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Failure{ExitInput, "cannot read '" + path + "'"};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string &s) {
  std::error_code ec;
  return !s.empty() && s.size() < 4096 && std::filesystem::is_regular_file(s, ec);
}

std::string file_or_inline(const std::string &s) { return is_file(s) ? read_file(s) : s; }

struct Global {
  std::string format = "text";
  std::string cache_dir;
  bool cache_set = false;
  std::vector<std::string> budgets;
  std::string output;
};

struct Source {
  std::string family;
  int size = -1;
  std::string presentation;
  std::string file;

  void add(CLI::App *cmd, bool gamma_alias) {
    cmd->add_option("--family", family, "catalog family: surface, free, free_abelian, nonorientable");
    cmd->add_option("--size", size, "catalog size parameter");
    cmd->add_option(gamma_alias ? "--presentation,--gamma" : "--presentation", presentation,
                    "presentation: family:size, textual grammar, JSON, or a file holding one");
    cmd->add_option("--file", file, "file holding a presentation");
  }

  std::string spec() const {
    int given = (!family.empty()) + (!presentation.empty()) + (!file.empty());
    if (given != 1) {
      throw Failure{ExitInput, "give exactly one of --family, --presentation, --file"};
    }
    if (!family.empty()) {
      if (size < 0) {
        throw Failure{ExitInput, "--family needs --size"};
      }
      return family + ":" + std::to_string(size);
    }
    if (!file.empty()) {
      std::string text = read_file(file);
      oc_presentation *p = nullptr;
      oc_status s = oc_presentation_parse(text.c_str(), &p);
      if (s != OC_OK) {
        throw Failure{exit_for(s), file + ": " + oc_last_error()};
      }
      oc_presentation_free(p);
      return text;
    }
    return file_or_inline(presentation);
  }
};

class Budget {
public:
  explicit Budget(const std::vector<std::string> &settings) {
    oc_budget_new(&b_);
    for (const auto &kv : settings) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw Failure{ExitInput, "budget setting '" + kv + "' is not key=value"};
      }
      std::uint64_t value = 0;
      try {
        std::size_t used = 0;
        value = std::stoull(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      } catch (const std::exception &) {
        throw Failure{ExitInput, "budget value in '" + kv + "' is not a non-negative integer"};
      }
      oc_status s = oc_budget_set(b_, kv.substr(0, eq).c_str(), value);
      if (s != OC_OK) {
        throw Failure{ExitInput, oc_last_error()};
      }
    }
  }
  ~Budget() { oc_budget_free(b_); }
  Budget(const Budget &) = delete;
  Budget &operator=(const Budget &) = delete;
  const oc_budget *get() const { return b_; }

private:
  oc_budget *b_ = nullptr;
};

using Entry = oc_status (*)(const char *, const oc_budget *, char **);

Json call(Entry entry, const Json &request, const Global &g) {
  Budget budget(g.budgets);
  char *out = nullptr;
  std::string text = request.dump();
  oc_status s = entry(text.c_str(), budget.get(), &out);
  if (s != OC_OK) {
    throw Failure{exit_for(s), oc_last_error()};
  }
  Json result = Json::parse(out);
  oc_string_free(out);
  return result;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string scalar(const Json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void csv_row(std::ostream &os, const std::vector<std::string> &cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << (i ? "," : "") << csv_field(cells[i]);
  }
  os << "\n";
}

void emit_census(std::ostream &os, const Json &r, const std::string &format) {
  bool split = !r["rows"].empty() && r["rows"][0].contains("j_plus");
  if (format == "csv") {
    std::vector<std::string> head{"r", "j", "u"};
    if (split) {
      head.push_back("j_plus");
      head.push_back("j_minus");
    }
    csv_row(os, head);
    for (const auto &row : r["rows"]) {
      std::vector<std::string> cells;
      for (const auto &h : head) cells.push_back(scalar(row[h]));
      csv_row(os, cells);
    }
    return;
  }
  os << "presentation: " << scalar(r["presentation"]) << "\n";
  os << "r\tj_r\tu_r" << (split ? "\tj_plus\tj_minus" : "") << "\n";
  for (const auto &row : r["rows"]) {
    os << row["r"].get<int>() << "\t" << scalar(row["j"]) << "\t" << scalar(row["u"]);
    if (split) os << "\t" << scalar(row["j_plus"]) << "\t" << scalar(row["j_minus"]);
    os << "\n";
  }
  if (r.contains("verify")) {
    for (const auto &c : r["verify"]["checks"]) {
      os << "check " << scalar(c["name"]) << ": "
         << (c.contains("skipped") ? "skipped (" + scalar(c["skipped"]) + ")" : c["passed"].get<bool>() ? "pass" : "FAIL")
         << "\n";
    }
  }
}

void emit_homcount(std::ostream &os, const Json &r, const std::string &format) {
  static const std::vector<std::string> keys{"presentation", "target", "target_order", "hom_count",
                                             "class_count", "product_with_Z_ratio", "passed"};
  if (format == "csv") {
    csv_row(os, {"key", "value"});
    for (const auto &k : keys) csv_row(os, {k, scalar(r[k])});
    return;
  }
  for (const auto &k : keys) os << k << ": " << scalar(r[k]) << "\n";
}

void emit_bundles(std::ostream &os, const Json &r, const std::string &format) {
  if (format == "csv") {
    csv_row(os, {"hom", "theta", "class", "index", "free_rank", "torsion", "rho", "multiplicity", "aut_order",
                 "centralizer_structural", "centralizer_brute"});
    int h = 0;
    for (const auto &hom : r["homs"]) {
      int c = 0;
      for (const auto &cls : hom["classes"]) {
        csv_row(os, {std::to_string(h), hom["theta"].dump(), std::to_string(c++), scalar(cls["table"]["index"]),
                     scalar(cls["abelian_invariants"]["free_rank"]), cls["abelian_invariants"]["torsion"].dump(),
                     cls["rho"].dump(), scalar(cls["multiplicity"]), scalar(cls["aut_order"]),
                     scalar(hom["centralizer_structural"]), scalar(hom["centralizer_brute"])});
      }
      ++h;
    }
    return;
  }
  os << "wreath: " << scalar(r["wreath"]) << " (order " << scalar(r["wreath_order"]) << ")\n";
  for (const auto &hom : r["homs"]) {
    os << "theta " << hom["theta_labels"].dump() << "\n";
    for (const auto &c : hom["components"]) {
      os << "  orbit " << c["orbit"].dump() << " index " << scalar(c["index"]) << " rho " << c["rho"].dump() << "\n";
    }
    for (const auto &cls : hom["classes"]) {
      os << "  class index " << scalar(cls["table"]["index"]) << " rho " << cls["rho"].dump() << " multiplicity "
         << scalar(cls["multiplicity"]) << " aut_order " << scalar(cls["aut_order"]) << "\n";
    }
    os << "  centralizer structural " << scalar(hom["centralizer_structural"]) << " brute "
       << scalar(hom["centralizer_brute"]) << "\n";
  }
  if (r.contains("bijection")) {
    os << "hom classes " << scalar(r["hom_classes"]) << ", distinct classifications "
       << scalar(r["distinct_classifications"]) << "\n";
  }
  os << "result: " << (r["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
}

void emit_verify(std::ostream &os, const Json &r, const std::string &format) {
  if (format == "csv") {
    std::vector<std::string> head{"k", "lhs", "rhs", "match"};
    for (const auto &route : r["routes"]) head.push_back(scalar(route["name"]));
    csv_row(os, head);
    for (std::size_t k = 0; k < r["lhs"].size(); ++k) {
      std::vector<std::string> cells{std::to_string(k), scalar(r["lhs"][k]), scalar(r["rhs"][k]),
                                     r["match"][k].get<bool>() ? "1" : "0"};
      for (const auto &route : r["routes"]) {
        cells.push_back(k < route["values"].size() ? scalar(route["values"][k]) : "");
      }
      csv_row(os, cells);
    }
    return;
  }
  os << "identity " << scalar(r["id"]) << " " << r["params"].dump() << "\n";
  os << "k\tlhs\trhs\tmatch\n";
  for (std::size_t k = 0; k < r["lhs"].size(); ++k) {
    os << k << "\t" << scalar(r["lhs"][k]) << "\t" << scalar(r["rhs"][k]) << "\t"
       << (r["match"][k].get<bool>() ? "yes" : "NO") << "\n";
  }
  for (const auto &route : r["routes"]) {
    os << "route " << scalar(route["name"]) << (route["control"].get<bool>() ? " (control)" : "") << ": "
       << (route["agrees"].get<bool>() ? "agrees" : "differs") << "\n";
  }
  for (const auto &n : r["notes"]) os << "note: " << scalar(n) << "\n";
  if (r.contains("timing")) {
    os << "time lhs " << scalar(r["timing"]["lhs_seconds"]) << " s, rhs " << scalar(r["timing"]["rhs_seconds"])
       << " s\n";
  }
  os << "result: " << (r["truncated"].get<bool>() ? "TRUNCATED" : r["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
}

void emit_characters(std::ostream &os, const Json &r, const std::string &format) {
  if (format == "csv") {
    csv_row(os, {"check", "table", "parameter", "character_side", "oracle_side", "match"});
    for (const auto &c : r["checks"]) {
      csv_row(os, {scalar(c["check"]), scalar(c["table"]), scalar(c["parameter"]), scalar(c["character_side"]),
                   scalar(c["oracle_side"]), c["match"].get<bool>() ? "1" : "0"});
    }
    return;
  }
  for (const auto &t : r["tables"]) {
    os << "table " << scalar(t["name"]) << ": order " << scalar(t["order"]) << ", " << scalar(t["classes"])
       << " classes, degrees " << t["degrees"].dump() << ", indicators " << t["schur_indicators"].dump() << "\n";
  }
  for (const auto &c : r["checks"]) {
    os << scalar(c["check"]) << " " << scalar(c["table"]) << " param " << scalar(c["parameter"]) << ": "
       << scalar(c["character_side"]) << " vs " << scalar(c["oracle_side"]) << " "
       << (c["match"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  }
  os << "result: " << (r["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Orbifold Euler characteristics of symmetric products, exactly."};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", g.cache_dir, "subgroup cache directory (default: $ORBICOUNT_CACHE or .orbicount-cache)")
      ->each([&](const std::string &) { g.cache_set = true; });
  app.add_option("--budget", g.budgets,
                 "budget override key=value; keys: group_order_cap, table_cap, convolution_cap, hom_nodes, "
                 "lowindex_nodes, orbit_cap, centralizer_cap, wreath_cap");
  app.add_option("--output", g.output, "write the report to this file instead of stdout");
  app.footer("CSV columns:\n"
             "  census: r,j,u[,j_plus,j_minus]\n"
             "  homcount: key,value\n"
             "  bundles: hom,theta,class,index,free_rank,torsion,rho,multiplicity,aut_order,\n"
             "           centralizer_structural,centralizer_brute\n"
             "  verify: k,lhs,rhs,match,<one column per route>\n"
             "  characters: check,table,parameter,character_side,oracle_side,match\n"
             "Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 budget exceeded or truncated,\n"
             "  4 internal error.");

  auto *census = app.add_subcommand("census", "subgroup census j_r, u_r of a presentation");
  Source census_src;
  census_src.add(census, true);
  int max_index = 4;
  bool census_verify = false;
  census->add_option("--max-index", max_index, "largest index")->check(CLI::Range(1, 64));
  census->add_flag("--verify", census_verify, "cross-check against the product with Z and homomorphism counts");

  auto *homcount = app.add_subcommand("homcount", "homomorphism counts into G or a wreath product of G");
  Source hom_src;
  hom_src.add(homcount, true);
  std::string hom_group = "trivial";
  int wreath_n = -1;
  homcount->add_option("--group", hom_group, "group spec (trivial, Zn:k, Sn:k, JSON) or a file");
  homcount->add_option("--wreath-n", wreath_n, "target the wreath product of the group with S_n")
      ->check(CLI::NonNegativeNumber);

  auto *bundles = app.add_subcommand("bundles", "classification of homomorphisms into a wreath product");
  Source bundle_src;
  bundle_src.add(bundles, true);
  std::string bundle_group = "trivial";
  int bundle_n = 1;
  std::string theta;
  bool all = false;
  bundles->add_option("--group", bundle_group, "group spec or a file");
  bundles->add_option("--n", bundle_n, "wreath degree")->check(CLI::PositiveNumber);
  auto *theta_opt = bundles->add_option("--theta", theta, "images as JSON (ids or {f, sigma}) or a file");
  bundles->add_flag("--all", all, "every conjugacy class of homomorphisms")->excludes(theta_opt);

  auto *verify = app.add_subcommand("verify", "check a series identity coefficient by coefficient");
  verify->set_help_flag("--help", "Print this help message and exit");
  std::string id, params_text, gamma, vgroup, space;
  int N = -1, gg = -1, s = -1, h = -1, d = -1, p = -1, direct_max = -1;
  bool timing = false, list = false;
  verify->add_option("--id", id, "identity id (see --list)");
  verify->add_flag("--list", list, "print the identity ids");
  verify->add_option("--params", params_text, "parameters as JSON or a file; flags override");
  verify->add_option("--gamma,--presentation", gamma, "presentation spec or a file");
  verify->add_option("--group", vgroup, "group spec or a file");
  verify->add_option("--space", space, "virtual G-space as JSON or a file");
  verify->add_option("--N,--m", N, "truncation order")->check(CLI::NonNegativeNumber);
  verify->add_option("--g", gg, "surface genus parameter");
  verify->add_option("--s", s, "free rank parameter");
  verify->add_option("--h", h, "non-orientable parameter");
  verify->add_option("--d", d, "dimension parameter");
  verify->add_option("--p", p, "prime for the p-primary variants");
  verify->add_option("--direct-max", direct_max, "largest index for direct subgroup enumeration routes");
  verify->add_flag("--timing", timing, "include wall-clock timings (output is then not reproducible)");

  auto *characters = app.add_subcommand("characters", "character table checks");
  std::string table = "all", table_file, check = "all";
  std::vector<int> char_params;
  characters->add_option("--table", table, "shipped table name or all");
  characters->add_option("--table-file", table_file, "character table JSON file");
  characters->add_option("--check", check,
                         "eq_1_15_first, eq_1_15_second, eq_5_16, eq_5_17, epsilon2, all, or none");
  characters->add_option("--param", char_params, "parameter values (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ExitInput;
  }

  try {
    Json result;
    std::ostringstream os;
    auto with_cache = [&](Json &req) {
      if (g.cache_set) {
        req["cache_dir"] = g.cache_dir;
      } else {
        req["cache_dir"] = "";
      }
    };
    if (*census) {
      Json req{{"presentation", census_src.spec()}, {"max_index", max_index}, {"verify", census_verify}};
      with_cache(req);
      result = call(oc_census, req, g);
      if (g.format == "json") os << result.dump(2) << "\n";
      else emit_census(os, result, g.format);
    } else if (*homcount) {
      Json req{{"presentation", hom_src.spec()}, {"group", file_or_inline(hom_group)}};
      if (wreath_n >= 0) req["wreath_n"] = wreath_n;
      result = call(oc_homcount, req, g);
      if (g.format == "json") os << result.dump(2) << "\n";
      else emit_homcount(os, result, g.format);
    } else if (*bundles) {
      Json req{{"presentation", bundle_src.spec()}, {"group", file_or_inline(bundle_group)}, {"n", bundle_n}};
      if (all) {
        req["all"] = true;
      } else if (!theta.empty()) {
        try {
          req["theta"] = Json::parse(file_or_inline(theta));
        } catch (const nlohmann::json::parse_error &e) {
          throw Failure{ExitInput, "--theta is not valid JSON at byte " + std::to_string(e.byte)};
        }
      } else {
        throw Failure{ExitInput, "bundles needs --theta or --all"};
      }
      result = call(oc_bundles, req, g);
      if (g.format == "json") os << result.dump(2) << "\n";
      else emit_bundles(os, result, g.format);
    } else if (*verify) {
      if (list) {
        char *out = nullptr;
        oc_identity_ids(&out);
        Json ids = Json::parse(out);
        oc_string_free(out);
        for (const auto &x : ids) os << scalar(x) << "\n";
      } else {
        if (id.empty()) {
          throw Failure{ExitInput, "verify needs --id"};
        }
        Json params = Json::object();
        if (!params_text.empty()) {
          try {
            params = Json::parse(file_or_inline(params_text));
          } catch (const nlohmann::json::parse_error &e) {
            throw Failure{ExitInput, "--params is not valid JSON at byte " + std::to_string(e.byte)};
          }
        }
        if (!gamma.empty()) params["gamma"] = file_or_inline(gamma);
        if (!vgroup.empty()) params["group"] = file_or_inline(vgroup);
        if (!space.empty()) {
          try {
            params["space"] = Json::parse(file_or_inline(space));
          } catch (const nlohmann::json::parse_error &e) {
            throw Failure{ExitInput, "--space is not valid JSON at byte " + std::to_string(e.byte)};
          }
        }
        if (N >= 0) params["N"] = N;
        if (gg >= 0) params["g"] = gg;
        if (s >= 0) params["s"] = s;
        if (h >= 0) params["h"] = h;
        if (d >= 0) params["d"] = d;
        if (p >= 0) params["p"] = p;
        if (direct_max >= 0) params["direct_max"] = direct_max;
        Json req{{"id", id}, {"params", params}, {"timing", timing}};
        with_cache(req);
        result = call(oc_verify, req, g);
        if (g.format == "json") os << result.dump(2) << "\n";
        else emit_verify(os, result, g.format);
      }
    } else if (*characters) {
      Json req{{"check", check}};
      if (!table_file.empty()) req["table_json"] = read_file(table_file);
      else req["table"] = table;
      if (!char_params.empty()) req["params"] = char_params;
      result = call(oc_characters, req, g);
      if (g.format == "json") os << result.dump(2) << "\n";
      else emit_characters(os, result, g.format);
    }

    if (g.output.empty()) {
      std::cout << os.str();
      std::cout.flush();
    } else {
      std::ofstream out(g.output, std::ios::binary);
      out << os.str();
      if (!out) {
        throw Failure{ExitInput, "cannot write '" + g.output + "'"};
      }
    }
    if (result.is_object()) {
      if (result.value("truncated", false)) return ExitBudget;
      if (result.contains("passed") && !result["passed"].get<bool>()) return ExitMismatch;
      if (result.contains("verify") && !result["verify"]["passed"].get<bool>()) return ExitMismatch;
    }
    return ExitOk;
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitInternal;
  }
}

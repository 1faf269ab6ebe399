#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pbzlab/pbzlab.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

struct source_opts {
  std::string name;
  std::string path;
};

void add_source(CLI::App* cmd, source_opts& src) {
  cmd->add_option("--algebra,-a", src.name, "catalog name, e.g. GD:3 or SANDWICH:M3");
  cmd->add_option("--file,-f", src.path, "AlgebraFile (JSON)");
}

pbz::finite_algebra load(const source_opts& src) {
  if (!src.name.empty() && !src.path.empty()) {
    throw pbz::error(pbz::errc::invalid_input, "--algebra/--file", "give only one algebra source");
  }
  if (!src.name.empty()) return pbz::catalog(src.name);
  if (!src.path.empty()) return pbz::load_algebra_file(src.path);
  throw pbz::error(pbz::errc::invalid_input, "--algebra/--file", "no algebra given");
}

std::string valuation_text(const pbz::finite_algebra& A, const pbz::sat_result& r) {
  std::string s;
  for (std::size_t i = 0; i < r.variables.size(); ++i) {
    if (i) s += ", ";
    s += r.variables[i] + "=" + A.label((*r.witness)[i]);
  }
  return s;
}

int cmd_check(const source_opts& src, bool as_json) {
  auto A = load(src);
  if (as_json) std::cout << pbz::check_report(A).dump(2) << "\n";
  else std::cout << pbz::check_report_text(A);
  return exit_ok;
}

int cmd_sat(const source_opts& src, const std::string& text, const std::string& id_name, bool as_json) {
  if (text.empty() == id_name.empty()) {
    throw pbz::error(pbz::errc::invalid_input, "identity", "give exactly one of an identity string or --id");
  }
  auto A = load(src);
  auto id = id_name.empty() ? pbz::parse_identity(text) : pbz::named_identity_from(id_name);
  auto r = pbz::satisfies(A, id);
  if (as_json) {
    pbz::json out{{"identity", pbz::to_string(id)}, {"holds", r.holds}, {"valuations", r.valuations}};
    if (r.witness) {
      pbz::json w;
      for (std::size_t i = 0; i < r.variables.size(); ++i) w[r.variables[i]] = A.label((*r.witness)[i]);
      out["witness"] = w;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pbz::to_string(id) << "\n";
    if (r.holds) std::cout << "holds (" << r.valuations << " valuations)\n";
    else std::cout << "fails at " << valuation_text(A, r) << "\n";
  }
  return r.holds ? exit_ok : exit_failed;
}

int cmd_con(const source_opts& src, const std::string& flavor_name, int size_guard, bool as_json) {
  auto A = load(src);
  auto f = flavor_name.empty() ? A.kind() : pbz::parse_flavor(flavor_name);
  auto cons = pbz::all_congruences(A, f, size_guard);
  bool chain = true;
  for (const auto& a : cons)
    for (const auto& b : cons) chain = chain && (a.refines(b) || b.refines(a));
  auto irr = pbz::irreducibility(A, f, size_guard);
  if (as_json) {
    pbz::json list = pbz::json::array();
    for (const auto& t : cons) {
      pbz::json blocks = pbz::json::array();
      for (const auto& b : t.blocks()) blocks.push_back(pbz::labels_json(A, b));
      list.push_back(blocks);
    }
    std::cout << pbz::json{{"flavor", std::string(pbz::to_string(f))},
                           {"count", cons.size()},
                           {"congruences", list},
                           {"chain", chain},
                           {"simple", irr.simple},
                           {"subdirectly_irreducible", irr.subdirectly_irreducible},
                           {"directly_irreducible", irr.directly_irreducible}}
                     .dump(2)
              << "\n";
    return exit_ok;
  }
  std::cout << cons.size() << " " << pbz::to_string(f) << " congruences" << (chain ? " (chain)" : "") << "\n";
  for (std::size_t i = 0; i < cons.size(); ++i) std::cout << "  " << i << ": " << pbz::describe(A, cons[i]) << "\n";
  std::cout << "simple=" << (irr.simple ? "true" : "false")
            << " subdirectly_irreducible=" << (irr.subdirectly_irreducible ? "true" : "false")
            << " directly_irreducible=" << (irr.directly_irreducible ? "true" : "false") << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& filter, bool as_json) {
  auto rows = pbz::run_checks(filter);
  if (rows.empty()) {
    std::cerr << "warning: no rows match filter '" << filter << "'\n";
    if (as_json) std::cout << "[]\n";
    return exit_ok;
  }
  int failed = 0;
  pbz::json out = pbz::json::array();
  for (const auto& r : rows) {
    failed += r.pass ? 0 : 1;
    if (as_json) {
      out.push_back({{"id", r.id}, {"criterion", r.criterion}, {"claim", r.claim}, {"pass", r.pass},
                     {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  else std::cout << rows.size() - failed << "/" << rows.size() << " rows passed\n";
  return failed ? exit_failed : exit_ok;
}

int cmd_dump(const source_opts& src) {
  std::cout << pbz::algebra_to_json(load(src)).dump(2) << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pbzlab: finite BI-, BZ- and PBZ*-lattice workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  source_opts check_src;
  auto* check = app.add_subcommand("check", "classify an algebra");
  add_source(check, check_src);
  check->add_option("path", check_src.path, "AlgebraFile (JSON)");

  source_opts sat_src;
  std::string sat_text, sat_id;
  auto* sat = app.add_subcommand("sat", "check an identity by exhaustive sweep");
  add_source(sat, sat_src);
  sat->add_option("identity", sat_text, "identity such as \"x ^ (y v z) = (x^y) v (x^z)\"");
  sat->add_option("--id", sat_id, "named identity: STAR SDM SK J0 DIST MOD R RV O C:n D:n");

  source_opts con_src;
  std::string con_flavor;
  int size_guard = pbz::default_congruence_guard;
  auto* con = app.add_subcommand("con", "list the congruences");
  add_source(con, con_src);
  con->add_option("--flavor", con_flavor, "Lattice, BI or BZ (default: the algebra's own)");
  con->add_option("--size-guard", size_guard, "largest carrier enumerated");

  std::string filter;
  auto* verify = app.add_subcommand("verify-paper", "run the lemma checks");
  verify->add_option("--filter", filter, "only rows whose id contains this text");

  source_opts dump_src;
  auto* dump = app.add_subcommand("dump", "print an algebra as an AlgebraFile");
  add_source(dump, dump_src);

  for (auto* cmd : {check, sat, con, verify}) cmd->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*check) return cmd_check(check_src, as_json);
    if (*sat) return cmd_sat(sat_src, sat_text, sat_id, as_json);
    if (*con) return cmd_con(con_src, con_flavor, size_guard, as_json);
    if (*verify) return cmd_verify(filter, as_json);
    if (*dump) return cmd_dump(dump_src);
  } catch (const pbz::error& e) {
    std::cerr << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gft/catalog.hpp"
#include "gft/functorial.hpp"
#include "gft/grpfile.hpp"
#include "gft/heights.hpp"
#include "gft/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct CommonOpts {
  gft::Caps caps;
};

void add_cap_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--max-order", opts.caps.max_subgroup_order,
                  "Largest group order for full subgroup enumeration")
      ->envname("GFT_MAX_ORDER");
  cmd->add_option("--max-elements", opts.caps.max_elements,
                  "Element enumeration cap")
      ->envname("GFT_MAX_ELEMENTS");
  cmd->add_option("--max-degree", opts.caps.max_degree,
                  "Quotient coset-action degree cap")
      ->envname("GFT_MAX_DEGREE");
}

gft::LocalGroup load_local(const std::string& path, const gft::Caps& caps,
                           gft::Ctx& ctx_out) {
  gft::Group g = gft::load_group_file(path);
  ctx_out = gft::make_ctx(g, caps);
  return gft::local_group(ctx_out);
}

std::string describe(const gft::Ctx& ctx, const gft::ElemSet& s) {
  std::string out = "order " + std::to_string(s.count()) + " <";
  auto gens = gft::minimal_gens(ctx, s);
  if (gens.empty()) out += "()";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gft::to_cycles(ctx->perm(gens[i]));
  }
  return out + ">";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group functorial toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;

  // compute --group <file> (--radical <name> | --functorial <expr>)
  auto* compute = app.add_subcommand(
      "compute", "Evaluate a radical or functorial expression on a group");
  std::string compute_group, compute_radical, compute_expr;
  compute->add_option("--group", compute_group, "Group file (.grp)")
      ->required()
      ->envname("GFT_GROUP");
  compute->add_option("--radical", compute_radical,
                      "Named radical: F, Fstar, Ftilde, Phi, Soc");
  compute->add_option("--functorial", compute_expr,
                      "Functorial expression, e.g. 'Phi_pi{2} * Fstar'");
  add_cap_flags(compute, opts);

  // height --group <file> --functorial <expr>
  auto* height =
      app.add_subcommand("height", "Compute the gamma-height of a group");
  std::string height_group, height_expr = "Fstar";
  height->add_option("--group", height_group, "Group file (.grp)")
      ->required()
      ->envname("GFT_GROUP");
  height->add_option("--functorial", height_expr,
                     "Functorial expression (default Fstar)");
  add_cap_flags(height, opts);

  // verify --suite <name|all> [--out report.json]
  auto* verify =
      app.add_subcommand("verify", "Run verification suites over the catalog");
  std::string verify_suite = "all", verify_out;
  verify->add_option("--suite", verify_suite, "Suite name or 'all'")
      ->envname("GFT_SUITE");
  verify->add_option("--out", verify_out, "Write the JSON report to a file")
      ->envname("GFT_OUT");
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing,
                   "Omit the volatile timing field from the report");
  add_cap_flags(verify, opts);

  // catalog list
  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog operations");
  auto* catalog_list =
      catalog_cmd->add_subcommand("list", "List the built-in catalog");
  catalog_cmd->require_subcommand(1);

  // parse-check --functorial <expr> | --group <file>
  auto* parse_check = app.add_subcommand(
      "parse-check", "Parse an expression or group file and echo it back");
  std::string pc_expr, pc_group;
  parse_check->add_option("--functorial", pc_expr, "Expression to parse");
  parse_check->add_option("--group", pc_group, "Group file to parse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (compute->parsed()) {
      if (compute_radical.empty() == compute_expr.empty()) {
        std::cerr << "compute: give exactly one of --radical, --functorial\n";
        return kExitInput;
      }
      std::string text = compute_radical.empty() ? compute_expr : compute_radical;
      gft::ExprPtr e = gft::parse_functorial(text);
      gft::Ctx ctx;
      gft::LocalGroup g = load_local(compute_group, opts.caps, ctx);
      gft::ElemSet value = gft::evaluate(e, g, opts.caps);
      std::cout << gft::print_expr(e) << "(G) = " << describe(ctx, value)
                << "\n";
      return kExitOk;
    }

    if (height->parsed()) {
      gft::Ctx ctx;
      gft::LocalGroup g = load_local(height_group, opts.caps, ctx);
      int h = gft::h_gamma(g, gft::parse_functorial(height_expr), opts.caps);
      std::cout << h << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      gft::RunOptions run;
      run.caps = opts.caps;
      run.with_timing = !no_timing;
      if (verify_suite != "all") run.suites = {verify_suite};
      gft::RunResult result = gft::run_suites(gft::builtin_catalog(), run);
      std::string dump = result.report.dump(2) + "\n";
      if (!verify_out.empty()) {
        std::ofstream out(verify_out);
        if (!out) {
          std::cerr << "cannot write " << verify_out << "\n";
          return kExitInput;
        }
        out << dump;
      } else {
        std::cout << dump;
      }
      std::cerr << "pass " << result.passed << ", fail " << result.failed
                << ", skipped " << result.skipped << "\n";
      return result.ok() ? kExitOk : kExitAssert;
    }

    if (catalog_list->parsed()) {
      for (const auto& entry : gft::builtin_catalog())
        std::cout << entry.name << "  order " << entry.group.order()
                  << "  degree " << entry.group.degree() << "\n";
      return kExitOk;
    }

    if (parse_check->parsed()) {
      if (pc_expr.empty() == pc_group.empty()) {
        std::cerr << "parse-check: give exactly one of --functorial, --group\n";
        return kExitInput;
      }
      if (!pc_expr.empty()) {
        std::cout << gft::print_expr(gft::parse_functorial(pc_expr)) << "\n";
      } else {
        gft::Group g = gft::load_group_file(pc_group);
        std::cout << "degree " << g.degree() << ", order " << g.order() << "\n";
      }
      return kExitOk;
    }
  } catch (const gft::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gft::CapError& e) {
    std::cerr << "cap exhausted: " << e.what() << "\n";
    return kExitCap;
  } catch (const gft::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssert;
  }
  return kExitInput;
}

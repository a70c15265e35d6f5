// Command-line front end: parse map and family documents, run the
// analyses, and emit text or JSON reports. Exit codes: 0 success,
// 1 validation error, 2 domain error, 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cremona/errors.hpp"
#include "cremona/family.hpp"
#include "cremona/oracle.hpp"
#include "documents.hpp"

namespace {

using cremona::docs::Json;

void emit(const Json& report, bool as_json) {
  if (as_json) {
    std::cout << cremona::docs::dump(report);
  } else {
    std::cout << cremona::docs::render_text(report);
  }
}

cremona::RationalMap load_map(const std::string& source) {
  return cremona::docs::map_from_json(cremona::docs::load_document(source));
}

cremona::ParamWriting load_family(const std::string& source) {
  Json doc = cremona::docs::load_document(source);
  if (!cremona::docs::is_family_document(doc)) {
    cremona::fail(cremona::ErrorKind::parse_error,
                  "expected a family document (it must have a \"param\" field)");
  }
  return cremona::docs::family_from_json(doc);
}

std::vector<cremona::Poly> load_components(const std::string& source) {
  Json doc = cremona::docs::load_document(source);
  if (cremona::docs::is_family_document(doc)) {
    return cremona::docs::family_from_json(doc).components();
  }
  return cremona::docs::map_from_json(doc).components();
}

cremona::Mobius parse_mobius(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    cremona::fail(cremona::ErrorKind::invalid_argument,
                  "--mobius expects four comma-separated rationals a,b,c,d");
  }
  return cremona::Mobius{
      cremona::rational_from_string(parts[0]), cremona::rational_from_string(parts[1]),
      cremona::rational_from_string(parts[2]), cremona::rational_from_string(parts[3])};
}

struct Flags {
  bool json = false;
  std::string doc;
  std::string doc2;
  std::string by;
  std::string mobius;
  std::string output;
  int max_power = 8;
  int ell = 1;
  int samples = 25;
  uint64_t seed = 2026;
  int second_line = 2;
  int prime_bits = 31;
  int trials = 5;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computation with birational maps of projective space and their "
      "one-parameter families"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "emit JSON instead of text");

  const std::string doc_help = "document: a file path, inline JSON starting with '{', or builtin:NAME";

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", flags.seed, "random seed recorded in the report");
  };
  auto add_oracle_flags = [&](CLI::App* cmd) {
    add_seed(cmd);
    cmd->add_option("--prime-bits", flags.prime_bits, "bit size of the random primes");
    cmd->add_option("--trials", flags.trials, "independent trials per query");
  };
  auto oracle_config = [&] {
    cremona::OracleConfig cfg;
    cfg.prime_bits = flags.prime_bits;
    cfg.trials = flags.trials;
    cfg.seed = flags.seed;
    return cfg;
  };
  auto scan_options = [&] {
    cremona::DropScanOptions options;
    options.seed = flags.seed;
    options.lines = flags.second_line;
    return options;
  };

  // --- map ----------------------------------------------------------------
  CLI::App* map_cmd = app.add_subcommand("map", "analyze a single rational map");
  map_cmd->require_subcommand(1);

  CLI::App* map_info = map_cmd->add_subcommand("info", "degree, normalization, Jacobian");
  map_info->add_option("doc", flags.doc, doc_help)->required();
  map_info->callback(
      [&] { emit(cremona::docs::map_info_report(load_map(flags.doc)), flags.json); });

  CLI::App* map_identity =
      map_cmd->add_subcommand("identity", "exact projective identity test");
  map_identity->add_option("doc", flags.doc, doc_help)->required();
  map_identity->callback(
      [&] { emit(cremona::docs::identity_report(load_map(flags.doc)), flags.json); });

  CLI::App* map_jacobian = map_cmd->add_subcommand("jacobian", "Jacobian determinant");
  map_jacobian->add_option("doc", flags.doc, doc_help)->required();
  map_jacobian->callback(
      [&] { emit(cremona::docs::jacobian_report(load_map(flags.doc)), flags.json); });

  CLI::App* map_powers =
      map_cmd->add_subcommand("powers", "degrees of iterates and growth class");
  map_powers->add_option("doc", flags.doc, doc_help)->required();
  map_powers->add_option("--max-power", flags.max_power, "highest power to compute");
  map_powers->callback([&] {
    emit(cremona::docs::powers_report(load_map(flags.doc), flags.max_power), flags.json);
  });

  CLI::App* map_compose = map_cmd->add_subcommand("compose", "compose two maps (first after second)");
  map_compose->add_option("doc", flags.doc, doc_help)->required();
  map_compose->add_option("doc2", flags.doc2, doc_help)->required();
  map_compose->callback([&] {
    emit(cremona::docs::compose_report(load_map(flags.doc), load_map(flags.doc2)),
         flags.json);
  });

  CLI::App* map_conjugate =
      map_cmd->add_subcommand("conjugate", "conjugate by an invertible linear map");
  map_conjugate->add_option("doc", flags.doc, doc_help)->required();
  map_conjugate->add_option("--by", flags.by, "linear map document")->required();
  map_conjugate->callback([&] {
    emit(cremona::docs::conjugate_report(load_map(flags.doc), load_map(flags.by)),
         flags.json);
  });

  // --- jonq ---------------------------------------------------------------
  CLI::App* jonq_cmd = app.add_subcommand(
      "jonq", "structure relative to the projection away from (1:0:...:0)");
  jonq_cmd->require_subcommand(1);

  CLI::App* jonq_check = jonq_cmd->add_subcommand(
      "check", "fibre-fixing and fibre-permuting membership, quotient, section images");
  jonq_check->add_option("doc", flags.doc, doc_help)->required();
  jonq_check->callback(
      [&] { emit(cremona::docs::jonq_check_report(load_map(flags.doc)), flags.json); });

  CLI::App* jonq_rho =
      jonq_cmd->add_subcommand("rho", "quotient map induced on the target hyperplane");
  jonq_rho->add_option("doc", flags.doc, doc_help)->required();
  jonq_rho->callback(
      [&] { emit(cremona::docs::rho_report(load_map(flags.doc)), flags.json); });

  CLI::App* jonq_sigma =
      jonq_cmd->add_subcommand("sigma", "section: lift a map of P^(n-1) to P^n");
  jonq_sigma->add_option("doc", flags.doc, doc_help)->required();
  jonq_sigma->add_option("--ell", flags.ell, "index of the section, 1 <= ell <= n");
  jonq_sigma->callback([&] {
    emit(cremona::docs::sigma_report(load_map(flags.doc), flags.ell), flags.json);
  });

  // --- family -------------------------------------------------------------
  CLI::App* family_cmd =
      app.add_subcommand("family", "analyze a one-parameter family of maps");
  family_cmd->require_subcommand(1);

  CLI::App* family_deg =
      family_cmd->add_subcommand("deg", "writing degree and family degree");
  family_deg->add_option("doc", flags.doc, doc_help)->required();
  family_deg->callback(
      [&] { emit(cremona::docs::family_deg_report(load_family(flags.doc)), flags.json); });

  CLI::App* family_stratify = family_cmd->add_subcommand(
      "stratify", "degree profile: drop locus, collapse locus, generic witness");
  family_stratify->add_option("doc", flags.doc, doc_help)->required();
  add_seed(family_stratify);
  family_stratify->add_option("--second-line", flags.second_line,
                              "independent scan lines that must agree");
  family_stratify->callback([&] {
    emit(cremona::docs::stratify_report(load_family(flags.doc), scan_options()),
         flags.json);
  });

  CLI::App* family_scan = family_cmd->add_subcommand(
      "scan", "specialize at random rational parameters and check semicontinuity");
  family_scan->add_option("doc", flags.doc, doc_help)->required();
  family_scan->add_option("--samples", flags.samples, "number of random parameter values");
  add_seed(family_scan);
  family_scan->add_option("--second-line", flags.second_line,
                          "independent scan lines that must agree");
  family_scan->callback([&] {
    emit(cremona::docs::scan_report(load_family(flags.doc), flags.samples, flags.seed,
                                    scan_options()),
         flags.json);
  });

  CLI::App* family_compose =
      family_cmd->add_subcommand("compose", "compose two families (first after second)");
  family_compose->add_option("doc", flags.doc, doc_help)->required();
  family_compose->add_option("doc2", flags.doc2, doc_help)->required();
  family_compose->callback([&] {
    emit(cremona::docs::family_compose_report(load_family(flags.doc),
                                              load_family(flags.doc2)),
         flags.json);
  });

  CLI::App* family_reparam = family_cmd->add_subcommand(
      "reparam", "substitute a Mobius transformation into the parameter");
  family_reparam->add_option("doc", flags.doc, doc_help)->required();
  family_reparam
      ->add_option("--mobius", flags.mobius,
                   "a,b,c,d for t -> (a*t + b)/(c*t + d), rationals")
      ->required();
  family_reparam->callback([&] {
    emit(cremona::docs::reparam_report(load_family(flags.doc), parse_mobius(flags.mobius)),
         flags.json);
  });

  // --- oracle -------------------------------------------------------------
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "randomized finite-field cross-checks");
  oracle_cmd->require_subcommand(1);

  CLI::App* oracle_gcd = oracle_cmd->add_subcommand(
      "gcd", "estimate the gcd degree of a document's components");
  oracle_gcd->add_option("doc", flags.doc, doc_help)->required();
  add_oracle_flags(oracle_gcd);
  oracle_gcd->callback([&] {
    emit(cremona::docs::oracle_gcd_report(load_components(flags.doc), oracle_config()),
         flags.json);
  });

  CLI::App* oracle_identity = oracle_cmd->add_subcommand(
      "identity", "probabilistic identity test; refutations carry a witness");
  oracle_identity->add_option("doc", flags.doc, doc_help)->required();
  add_oracle_flags(oracle_identity);
  oracle_identity->callback([&] {
    emit(cremona::docs::oracle_identity_report(load_map(flags.doc), oracle_config()),
         flags.json);
  });

  CLI::App* oracle_profile = oracle_cmd->add_subcommand(
      "profile", "empirical degree profile of a family at random parameters");
  oracle_profile->add_option("doc", flags.doc, doc_help)->required();
  oracle_profile->add_option("--samples", flags.samples, "number of samples");
  add_oracle_flags(oracle_profile);
  oracle_profile->callback([&] {
    emit(cremona::docs::oracle_profile_report(load_family(flags.doc), flags.samples,
                                              oracle_config()),
         flags.json);
  });

  // --- examples -------------------------------------------------------------
  CLI::App* examples_cmd =
      app.add_subcommand("examples", "emit the built-in example documents");
  std::string example_name;
  examples_cmd
      ->add_option("name", example_name,
                   "one of: standard-quadratic, henon, nodal-cubic, degeneration")
      ->required();
  examples_cmd->add_option("-o,--output", flags.output, "write to a file instead of stdout");
  examples_cmd->callback([&] {
    Json doc = cremona::docs::builtin_document(example_name);
    std::string text = cremona::docs::dump(doc);
    if (flags.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(flags.output);
      if (!out) {
        cremona::fail(cremona::ErrorKind::invalid_argument,
                      "cannot write to '" + flags.output + "'");
      }
      out << text;
    }
  });

  // Let --json (declared on the root) be given after the subcommand too.
  auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
    for (CLI::App* sub : node->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const cremona::CremonaError& e) {
    std::cerr << "error [" << cremona::to_string(e.kind()) << "]: " << e.what();
    if (!e.detail().empty()) std::cerr << " (at " << e.detail() << ")";
    std::cerr << "\n";
    return e.category();
  }
  return 0;
}

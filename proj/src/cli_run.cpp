#include "homsuper/cli_run.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "homsuper/cli_format.hpp"
#include "homsuper/cli_reports.hpp"

namespace homsuper {

namespace {

// A basis name, or comma-separated rationals of full length.
std::pair<std::string, Vec> parse_seed(const HomLieSuperAlgebra& a, const std::string& text) {
  if (std::optional<std::size_t> idx = a.basis_index(text))
    return {text, unit_vec(a.dim(), *idx)};
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty seed entry");
    v.push_back(scalar_from_string(tok.substr(b, e - b + 1)));
  }
  if (v.size() != a.dim())
    throw std::invalid_argument("seed needs " + std::to_string(a.dim()) + " entries, got " +
                                std::to_string(v.size()));
  return {text, v};
}

int emit(const Json& doc, bool as_json, std::ostream& out) {
  if (as_json)
    out << doc.dump(2) << "\n";
  else
    render_text(out, doc);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional Hom-Lie superalgebras over exact rationals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report with stable key order");

  std::string file;
  auto with_file = [&file](CLI::App* cmd) {
    cmd->fallthrough();  // global flags may trail the subcommand
    cmd->add_option("file", file, "algebra file")->required();
    return cmd;
  };
  CLI::App* cmd_verify =
      with_file(app.add_subcommand("verify", "axiom report; exit 0 iff the axioms hold"));
  CLI::App* cmd_analyze = with_file(app.add_subcommand("analyze", "structural report"));
  CLI::App* cmd_killing =
      with_file(app.add_subcommand("killing", "Killing form, radical, twisted variant"));
  CLI::App* cmd_forms = with_file(app.add_subcommand("forms", "invariant bilinear form space"));

  CLI::App* cmd_ideals = with_file(app.add_subcommand("ideals", "ideal closures of seeds"));
  std::string seed_text, side = "two";
  bool graded = false, alpha_invariant = false;
  cmd_ideals->add_option("--seed", seed_text, "basis name or comma-separated rationals");
  cmd_ideals->add_option("--side", side, "closure side")
      ->check(CLI::IsMember({"left", "right", "two"}));
  cmd_ideals->add_flag("--graded", graded, "close under parity projection");
  cmd_ideals->add_flag("--alpha", alpha_invariant, "close under alpha");

  CLI::App* cmd_decompose =
      with_file(app.add_subcommand("decompose", "orthogonal decomposition into simple summands"));
  std::string form = "killing";
  cmd_decompose->add_option("--form", form, "splitting form")->check(CLI::IsMember({"killing"}));

  CLI::App* cmd_derivations =
      with_file(app.add_subcommand("derivations", "twisted derivation spaces"));
  long k = 0;
  std::string parity = "both";
  cmd_derivations->add_option("--k", k, "twist power")->required();
  cmd_derivations->add_option("--parity", parity, "derivation parity")
      ->check(CLI::IsMember({"even", "odd", "both"}));

  CLI::App* cmd_criterion =
      with_file(app.add_subcommand("criterion", "Killing nondegeneracy criterion report"));

  std::vector<std::string> argv_strings;
  argv_strings.push_back("homsuper");
  argv_strings.insert(argv_strings.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_strings) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    HomLieSuperAlgebra a = load_algebra_file(file);
    if (*cmd_verify) {
      Json doc = verify_report(a);
      emit(doc, as_json, out);
      return doc["is_hom_lie_superalgebra"].get<bool>() ? 0 : 1;
    }
    if (*cmd_analyze) return emit(analyze_report(a), as_json, out);
    if (*cmd_killing) return emit(killing_report(a), as_json, out);
    if (*cmd_forms) return emit(forms_report(a), as_json, out);
    if (*cmd_ideals) {
      IdealSpec spec;
      spec.side = side == "left" ? IdealSide::Left
                  : side == "right" ? IdealSide::Right
                                    : IdealSide::TwoSided;
      spec.graded = graded;
      spec.alpha_invariant = alpha_invariant;
      std::vector<std::pair<std::string, Vec>> seeds;
      if (!seed_text.empty()) seeds.push_back(parse_seed(a, seed_text));
      return emit(ideals_report(a, seeds, spec), as_json, out);
    }
    if (*cmd_decompose) return emit(decompose_report(a), as_json, out);
    if (*cmd_derivations) {
      std::optional<Parity> p;
      if (parity == "even") p = Parity::Even;
      if (parity == "odd") p = Parity::Odd;
      return emit(derivations_report(a, k, p), as_json, out);
    }
    if (*cmd_criterion) return emit(criterion_report(a), as_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace homsuper

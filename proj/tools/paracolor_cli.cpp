#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "paracolor/errors.hpp"
#include "paracolor/gedanken.hpp"

namespace pc = paracolor;

namespace {

int cmd_form(const std::string& name) {
  std::cout << pc::BilinearForm::preset(name).serialize();
  std::cout << "class " << pc::statistics_class_name(
                               pc::BilinearForm::preset(name).classify())
            << '\n';
  return 0;
}

int cmd_algebra_list() {
  for (const std::string& label : pc::catalog_labels()) {
    const pc::AlgebraSpec& spec = pc::catalog(label);
    std::cout << label << "  kind=" << pc::osc_kind_name(spec.kind)
              << "  generators:";
    for (size_t k = 0; k < spec.gen_names.size(); ++k)
      std::cout << ' ' << spec.gen_names[k] << '['
                << spec.gens[k].grade.str() << ']';
    if (!spec.aliases.empty()) {
      std::cout << "  aliases:";
      for (const std::string& a : spec.aliases) std::cout << ' ' << a;
    }
    if (!spec.classification.empty())
      std::cout << "  type=" << spec.classification;
    std::cout << '\n';
  }
  return 0;
}

int cmd_algebra_check(const std::string& label) {
  const pc::AlgebraSpec& spec = pc::catalog(label);
  const pc::ClosureReport report = pc::closure_check(spec);
  std::cout << spec.label << '\n';
  std::cout << "closed: " << (report.closed ? "yes" : "no") << '\n';
  std::cout << "relations: " << (report.relations_ok ? "ok" : "mismatch")
            << '\n';
  std::cout << "jacobi: " << (report.jacobi_ok ? "ok" : "failed") << '\n';
  if (!report.detail.empty()) std::cout << "detail: " << report.detail << '\n';
  return report.closed && report.relations_ok && report.jacobi_ok ? 0 : 1;
}

int cmd_spectrum(const std::string& label) {
  const pc::HilbertSpace2& space = pc::hilbert_space_cached(label);
  for (const auto& [energy, count] : pc::fingerprint(space))
    std::cout << "E=" << energy.str() << " x" << count << '\n';
  return 0;
}

int cmd_hilbert(const std::string& label) {
  std::cout << pc::hilbert_str(pc::hilbert_space_cached(label));
  return 0;
}

nlohmann::ordered_json projector_json(const pc::Projector& proj) {
  nlohmann::ordered_json j;
  j["support"] = nlohmann::ordered_json::array();
  for (size_t k : proj.support) j["support"].push_back(k + 1);
  j["matrix"] = nlohmann::ordered_json::array();
  for (const auto& row : proj.p) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const pc::Rational& q : row) jr.push_back(pc::rational_str(q));
    j["matrix"].push_back(jr);
  }
  return j;
}

int cmd_discriminate(const std::string& pair, const std::string& level) {
  const pc::RayPair rays = pc::sign_pair(pair, pc::parse_level(level));
  const pc::Discrimination disc = pc::discriminate(rays.ordinary, rays.colored);
  nlohmann::ordered_json j;
  j["pair"] = pair;
  j["level"] = rays.level.str();
  j["ordinary_ray"] = nlohmann::ordered_json::array();
  for (const pc::Int& x : rays.ordinary.v)
    j["ordinary_ray"].push_back(x.str());
  j["colored_ray"] = nlohmann::ordered_json::array();
  for (const pc::Int& x : rays.colored.v) j["colored_ray"].push_back(x.str());
  if (disc.verdict == pc::Verdict::Discriminable) {
    j["verdict"] = "Discriminable";
    j["projector_plus"] = projector_json(*disc.plus);
    j["projector_minus"] = projector_json(*disc.minus);
  } else {
    j["verdict"] = "Indistinguishable";
    j["overlap_sq"] = pc::rational_str(disc.overlap_sq);
    if (disc.overlap)
      j["overlap"] = pc::rational_str(*disc.overlap);
    else
      j["overlap"] = nullptr;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_gedanken(const pc::TrialConfig& config, const std::string& format) {
  const pc::BlindReport report = pc::run_blind_test(config);
  if (format == "json")
    std::cout << pc::report_json(report);
  else
    std::cout << pc::report_text(report);
  return report.correct ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for graded oscillator pairs and their "
               "two-particle telltales"};
  app.require_subcommand(1);

  std::string form_name;
  auto* form = app.add_subcommand("form", "print a pairing preset");
  form->add_option("name", form_name, "LA, LS, CLA or CLS")->required();

  auto* algebra = app.add_subcommand("algebra", "catalog operations");
  algebra->require_subcommand(1);
  algebra->add_subcommand("list", "list catalog entries");
  std::string check_label;
  auto* check = algebra->add_subcommand("check", "closure and identity scan");
  check->add_option("label", check_label, "catalog label")->required();

  std::string spectrum_label;
  auto* spectrum = app.add_subcommand("spectrum", "two-particle level counts");
  spectrum->add_option("label", spectrum_label, "catalog label or pair member")
      ->required();

  std::string hilbert_label;
  auto* hilbert = app.add_subcommand("hilbert", "two-particle state table");
  hilbert->add_option("label", hilbert_label, "catalog label or pair member")
      ->required();

  std::string disc_pair, disc_level = "l+2";
  auto* disc = app.add_subcommand("discriminate",
                                  "projector pair for a catalog pair");
  disc->add_option("pair", disc_pair, "pair name, e.g. LS_min-CLS_min")
      ->required();
  disc->add_option("--level", disc_level, "l+1, l+2 or 2l+1");

  auto* ged = app.add_subcommand("gedanken", "blind discrimination runs");
  ged->require_subcommand(1);
  auto* run = ged->add_subcommand("run", "one seeded blind run");
  pc::TrialConfig config;
  std::string lambda_text, format = "text";
  run->add_option("--pair", config.pair, "pair name")->required();
  run->add_option("--seed", config.seed, "pick seed")->required();
  run->add_option("--trials", config.trials, "repeat count, default 1");
  run->add_option("--lambda", lambda_text,
                  "rational coupling, default symbolic");
  run->add_option("--level", config.level, "measurement level, default l+2");
  run->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (form->parsed()) return cmd_form(form_name);
    if (algebra->parsed()) {
      if (algebra->get_subcommand("list")->parsed()) return cmd_algebra_list();
      return cmd_algebra_check(check_label);
    }
    if (spectrum->parsed()) return cmd_spectrum(spectrum_label);
    if (hilbert->parsed()) return cmd_hilbert(hilbert_label);
    if (disc->parsed()) return cmd_discriminate(disc_pair, disc_level);
    if (!lambda_text.empty()) config.lambda0 = pc::parse_rational(lambda_text);
    return cmd_gedanken(config, format);
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

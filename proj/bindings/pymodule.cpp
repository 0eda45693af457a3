#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paracolor/errors.hpp"
#include "paracolor/gedanken.hpp"

namespace py = pybind11;
namespace pc = paracolor;

namespace {

std::vector<std::vector<int>> form_table(const std::string& name) {
  const pc::BilinearForm form = pc::BilinearForm::preset(name);
  std::vector<std::vector<int>> out;
  for (uint32_t a = 0; a < 4; ++a) {
    std::vector<int> row;
    for (uint32_t b = 0; b < 4; ++b)
      row.push_back(form.value(pc::GradeWord{2, a}, pc::GradeWord{2, b}));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<long>>> hilbert_table(
    const std::string& label) {
  std::vector<std::pair<std::string, std::vector<long>>> out;
  for (const auto& lvl : pc::hilbert_space_cached(label).levels)
    for (const auto& ray : lvl.rays) {
      std::vector<long> coords;
      for (const pc::Int& x : ray.v)
        coords.push_back(x.convert_to<long>());
      out.emplace_back(lvl.energy.str(), std::move(coords));
    }
  return out;
}

std::vector<std::pair<std::string, size_t>> spectrum_table(
    const std::string& label) {
  std::vector<std::pair<std::string, size_t>> out;
  for (const auto& [energy, count] :
       pc::fingerprint(pc::hilbert_space_cached(label)))
    out.emplace_back(energy.str(), count);
  return out;
}

std::string gedanken_run(const std::string& pair, uint32_t seed,
                         uint32_t trials, const std::string& level,
                         const std::optional<std::string>& lam) {
  pc::TrialConfig config;
  config.pair = pair;
  config.seed = seed;
  config.trials = trials;
  config.level = level;
  if (lam) config.lambda0 = pc::parse_rational(*lam);
  return pc::report_json(pc::run_blind_test(config));
}

std::string discriminate_json(const std::string& pair,
                              const std::string& level) {
  const pc::RayPair rays = pc::sign_pair(pair, pc::parse_level(level));
  const pc::Discrimination d = pc::discriminate(rays.ordinary, rays.colored);
  if (d.verdict == pc::Verdict::Discriminable) return "Discriminable";
  return "Indistinguishable overlap_sq=" + pc::rational_str(d.overlap_sq);
}

}  // namespace

PYBIND11_MODULE(paracolor, m) {
  m.doc() = "exact graded oscillator engine";
  m.def("presets", [] { return pc::BilinearForm::preset_names(); });
  m.def("form_table", &form_table, py::arg("name"));
  m.def("classify", [](const std::string& name) {
    return std::string(pc::statistics_class_name(
        pc::BilinearForm::preset(name).classify()));
  });
  m.def("koszul", [](const std::string& name, const std::string& a,
                     const std::string& b) {
    return pc::BilinearForm::preset(name).koszul(pc::GradeWord::parse(a),
                                                 pc::GradeWord::parse(b));
  });
  m.def("catalog_labels", [] { return pc::catalog_labels(); });
  m.def("algebra_check", [](const std::string& label) {
    const pc::ClosureReport r = pc::closure_check(pc::catalog(label));
    return r.closed && r.relations_ok && r.jacobi_ok;
  });
  m.def("hamiltonian_diag", [] {
    const pc::GradedMatrix h = pc::build_hamiltonian();
    std::vector<std::string> diag;
    for (size_t i = 0; i < h.dim; ++i) diag.push_back(h.at(i, i).str());
    return diag;
  });
  m.def("spectrum", &spectrum_table, py::arg("label"));
  m.def("hilbert", &hilbert_table, py::arg("label"));
  m.def("pair_names", [] {
    std::vector<std::string> names;
    for (const pc::PairInfo& p : pc::pair_table()) names.push_back(p.name);
    return names;
  });
  m.def("identify_pair", [](const std::string& label) {
    return pc::identify_pair(
        pc::fingerprint(pc::hilbert_space_cached(label)));
  });
  m.def("discriminate", &discriminate_json, py::arg("pair"),
        py::arg("level") = "l+2");
  m.def("gedanken_run", &gedanken_run, py::arg("pair"), py::arg("seed"),
        py::arg("trials") = 1, py::arg("level") = "l+2",
        py::arg("lam") = std::nullopt);
  py::register_exception<pc::Error>(m, "EngineError");
}

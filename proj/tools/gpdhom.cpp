// gpdhom: homology of finite groupoids and the maps induced by etale
// correspondences. Subcommands: homology, induced-map, verify.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 parse
// failure, 3 internal invariant breach.

#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <string>

#include "gpdhom/verify.hpp"

namespace {

using namespace gpdhom;

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

Json load_json(const std::string& path) { return gpdhom::detail::load_json_file(path); }

long long to_ll(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw InternalError(std::string(what) + ": value does not fit in a JSON integer");
  return static_cast<long long>(v);
}

Json group_to_json(const FGAbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = Json::array();
  for (const Int& d : g.torsion) j["torsion"].push_back(to_ll(d, "torsion"));
  return j;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_ll(m.at(i, j), "matrix entry"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_text(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    return "[] (" + m.shape_string() + ")";
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "[ " : "  [ ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m.at(i, j).str();
    }
    s += " ]";
    if (i + 1 < m.rows()) s += "\n";
  }
  return s;
}

int cmd_homology(const std::string& groupoid_file, const std::string& module_file,
                 int max_degree, const std::string& format) {
  GroupoidPtr g = groupoid_from_json(load_json(groupoid_file), groupoid_file);
  std::vector<FGAbelianGroup> groups;
  if (module_file.empty()) {
    IntChainComplex c = matui_complex(*g, max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) groups.push_back(homology_groups(c, n).presentation());
  } else {
    GModule m = module_from_json(load_json(module_file), g, file_stem(groupoid_file),
                                 module_file);
    IntChainComplex c = bar_complex(*g, m, max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) groups.push_back(homology_groups(c, n).presentation());
  }
  if (format == "json") {
    Json out = Json::object();
    for (int n = 0; n <= max_degree; ++n) out["H" + std::to_string(n)] = group_to_json(groups[n]);
    std::cout << out.dump(2) << "\n";
  } else {
    for (int n = 0; n <= max_degree; ++n)
      std::cout << "H" << n << ": " << groups[n].to_string() << "\n";
  }
  return 0;
}

void print_induced(const std::vector<SubquotientMap>& maps, const std::string& format) {
  if (format == "json") {
    Json out;
    out["degrees"] = Json::array();
    for (std::size_t n = 0; n < maps.size(); ++n) {
      Json d;
      d["n"] = static_cast<int>(n);
      d["source"] = group_to_json(maps[n].source.presentation());
      d["target"] = group_to_json(maps[n].target.presentation());
      d["matrix"] = matrix_to_json(maps[n].matrix);
      out["degrees"].push_back(std::move(d));
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (std::size_t n = 0; n < maps.size(); ++n) {
    std::cout << "H" << n << ": " << maps[n].source.presentation().to_string() << " -> "
              << maps[n].target.presentation().to_string() << "\n";
    std::cout << "  matrix (target generators x source generators):\n";
    std::string text = matrix_to_text(maps[n].matrix);
    std::cout << "  " << text << "\n";
  }
}

int cmd_induced_map(const std::string& corr_file, const std::string& hom_file,
                    const std::string& action_file, const std::string& omega_s_file,
                    const std::string& source_file, const std::string& target_file,
                    int max_degree, const std::string& format) {
  std::vector<SubquotientMap> maps;
  auto compute = [&](const EtaleCorrespondence& corr) {
    CorrespondenceChainMap c = correspondence_chain_map(
        corr, trivial_module(corr.source_groupoid()), trivial_module(corr.target_groupoid()),
        rho_bar_pullback(corr), max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) maps.push_back(induced_homology_map(c, n));
  };
  if (!corr_file.empty()) {
    if (source_file.empty() || target_file.empty())
      throw ParseError("--corr requires --source and --target groupoid files");
    GroupoidPtr g = groupoid_from_json(load_json(source_file), source_file);
    GroupoidPtr h = groupoid_from_json(load_json(target_file), target_file);
    Json j = load_json(corr_file);
    const std::string sname = gpdhom::detail::require_string(
        gpdhom::detail::field(j, "source", corr_file), corr_file);
    const std::string tname = gpdhom::detail::require_string(
        gpdhom::detail::field(j, "target", corr_file), corr_file);
    if (sname != file_stem(source_file) || tname != file_stem(target_file))
      throw ParseError(corr_file + ": references groupoids '" + sname + "', '" + tname +
                       "' but files provide '" + file_stem(source_file) + "', '" +
                       file_stem(target_file) + "'");
    compute(correspondence_from_json(j, g, h, corr_file));
  } else if (!hom_file.empty()) {
    if (source_file.empty() || target_file.empty())
      throw ParseError("--from-homomorphism requires --source and --target groupoid files");
    GroupoidPtr g = groupoid_from_json(load_json(source_file), source_file);
    GroupoidPtr h = groupoid_from_json(load_json(target_file), target_file);
    GroupoidHom phi = hom_from_json(load_json(hom_file), g, h, hom_file);
    compute(correspondence_from_homomorphism(phi));
  } else if (!action_file.empty()) {
    if (source_file.empty()) throw ParseError("--from-action requires --source");
    GroupoidPtr g = groupoid_from_json(load_json(source_file), source_file);
    GSet x = gset_from_json(load_json(action_file), g, action_file);
    ActionCorrespondence ac = correspondence_from_action(x);
    std::cout << "target: transformation groupoid with "
              << ac.transformation_groupoid->object_count() << " objects, "
              << ac.transformation_groupoid->arrow_count() << " arrows\n";
    compute(ac.corr);
  } else if (!omega_s_file.empty()) {
    FiniteInverseSemigroup s = semigroup_from_json(load_json(omega_s_file));
    OmegaS os = omega_s(s);
    std::cout << "source: discrete groupoid with " << os.discrete.groupoid->object_count()
              << " objects; target: universal groupoid with "
              << os.universal.groupoid->object_count() << " objects\n";
    compute(os.corr);
  } else {
    throw ParseError("induced-map needs one of --corr, --from-homomorphism, --from-action, "
                     "--omega-s");
  }
  print_induced(maps, format);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int size_bound,
               const std::string& recheck_file) {
  if (!recheck_file.empty()) {
    SuiteResult res = recheck(load_json(recheck_file));
    std::cout << res.to_string() << "\n";
    if (!res.pass) {
      std::cout << "counterexample:\n" << res.counterexample.dump(2) << "\n";
      return 1;
    }
    return 0;
  }
  std::vector<std::string> names =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool all_pass = true;
  for (const std::string& name : names) {
    SuiteResult res = run_suite(name, seed, size_bound);
    std::cout << res.to_string() << "\n";
    if (!res.pass) {
      all_pass = false;
      std::cout << "counterexample:\n" << res.counterexample.dump(2) << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of finite groupoids and maps induced by etale correspondences"};
  app.require_subcommand(1);

  std::string groupoid_file, module_file, format = "table";
  int max_degree = 4;
  CLI::App* homology = app.add_subcommand("homology", "homology of a groupoid");
  homology->add_option("groupoid", groupoid_file, "groupoid JSON file")->required();
  homology->add_option("--coefficients", module_file, "module JSON file");
  homology->add_option("--max-degree", max_degree, "highest degree to compute");
  homology->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string corr_file, hom_file, action_file, omega_s_file, source_file, target_file;
  std::string im_format = "table";
  int im_max_degree = 4;
  CLI::App* induced = app.add_subcommand("induced-map", "map induced on homology");
  induced->add_option("--corr", corr_file, "correspondence JSON file");
  induced->add_option("--from-homomorphism", hom_file, "homomorphism JSON file");
  induced->add_option("--from-action", action_file, "G-set JSON file");
  induced->add_option("--omega-s", omega_s_file, "inverse semigroup JSON file");
  induced->add_option("--source", source_file, "source groupoid JSON file");
  induced->add_option("--target", target_file, "target groupoid JSON file");
  induced->add_option("--max-degree", im_max_degree, "highest degree to compute");
  induced->add_option("--format", im_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string suite = "all", recheck_file;
  std::uint64_t seed = 0;
  int size_bound = 24;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember({"all", "adjunction", "shapiro", "functoriality", "homotopy",
                             "kappa", "invsemi"}));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--size-bound", size_bound, "arrow bound for random groupoids");
  verify->add_option("--recheck", recheck_file, "re-run a dumped counterexample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (homology->parsed())
      return cmd_homology(groupoid_file, module_file, max_degree, format);
    if (induced->parsed())
      return cmd_induced_map(corr_file, hom_file, action_file, omega_s_file, source_file,
                             target_file, im_max_degree, im_format);
    if (verify->parsed()) return cmd_verify(suite, seed, size_bound, recheck_file);
  } catch (const gpdhom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gpdhom::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const gpdhom::InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

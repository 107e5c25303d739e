// Command-line front end: validation, sign resolution, Cartan identity
// verification, homology tables, and the conjugacy-class decomposition check.
//
// Exit codes: 0 success, 1 mathematical failure (identity or decomposition
// mismatch, unresolved sign convention), 2 validation failure, 3 parse error.

#include <CLI11.hpp>

#include <iostream>

#include "xhc/builtin.hpp"
#include "xhc/io.hpp"

using namespace xhc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

// "builtin:<name>" loads a shipped algebra or pair; anything else is a path.
bool is_builtin(const std::string& spec, std::string& name) {
  if (spec.rfind("builtin:", 0) != 0) return false;
  name = spec.substr(8);
  return true;
}

DGAlgebra load_algebra(const std::string& spec) {
  std::string name;
  if (is_builtin(spec, name)) return builtin_algebra(name, Field::rational());
  return parse_algebra(read_file(spec));
}

GroupAction load_group(const std::string& spec, const DGAlgebra& a) {
  std::string name;
  if (is_builtin(spec, name)) {
    // builtin:<pair> resolves the action of the named shipped pair
    return builtin_pair(name, a.field).action;
  }
  return parse_group(read_file(spec), a);
}

SignConvention load_convention(const std::string& path) {
  std::string text = read_file(path);
  // The certificate is JSON; re-extract the resolved convention string.
  auto pos = text.find("\"resolved\"");
  if (pos == std::string::npos) throw ParseError("not a convention certificate: " + path);
  auto q1 = text.find('"', text.find(':', pos));
  auto q2 = text.find('"', q1 + 1);
  if (q1 == std::string::npos || q2 == std::string::npos)
    throw ParseError("malformed convention certificate: " + path);
  return SignConvention::parse(text.substr(q1 + 1, q2 - q1 - 1));
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

int run_validate(const std::string& algebra_path, const std::string& group_path) {
  DGAlgebra a = load_algebra(algebra_path);
  std::vector<Violation> all = validate_dg_algebra(a);
  if (!group_path.empty()) {
    GroupAction act = load_group(group_path, a);
    auto gv = validate_group(act.group);
    all.insert(all.end(), gv.begin(), gv.end());
    if (gv.empty()) {
      auto av = validate_action(a, act);
      all.insert(all.end(), av.begin(), av.end());
    }
  }
  if (all.empty()) {
    std::cout << "{\n  \"status\": \"valid\"\n}\n";
    return kExitOk;
  }
  std::cout << violations_to_json(all);
  return kExitValidation;
}

int run_resolve_signs(const std::string& out_path, bool restrict_family) {
  std::function<bool(const SignConvention&)> filter = nullptr;
  if (restrict_family) {
    // Deliberately excludes the resolvable region: forces "exhausted".
    filter = [](const SignConvention& c) { return c.B_variant == 0; };
  }
  try {
    SignCertificate cert = resolve_signs(builtin_probes(), 3, filter);
    emit(out_path, certificate_to_json(cert));
    return kExitOk;
  } catch (const ConventionError& e) {
    std::cerr << "conventions exhausted or ambiguous: " << e.what() << "\n";
    for (const auto& s : e.survivors) std::cerr << "survivor: " << s.str() << "\n";
    return kExitMath;
  }
}

struct VerifyConfig {
  std::string algebra, group, convention, out;
  std::vector<std::string> cochain_paths;
  std::string identity = "all";
  std::string twist = "all-classes";
  int n_max = 3;
  int samples = 0;
  unsigned long seed = 1;
};

int run_verify(const VerifyConfig& cfg) {
  DGAlgebra a = load_algebra(cfg.algebra);
  GroupAction act = load_group(cfg.group, a);
  SignConvention conv = load_convention(cfg.convention);

  std::vector<Violation> bad = validate_dg_algebra(a);
  auto gv = validate_group(act.group);
  bad.insert(bad.end(), gv.begin(), gv.end());
  if (gv.empty()) {
    auto av = validate_action(a, act);
    bad.insert(bad.end(), av.begin(), av.end());
  }
  if (!bad.empty()) {
    std::cout << violations_to_json(bad);
    return kExitValidation;
  }

  std::vector<Cochain> family;
  for (const auto& path : cfg.cochain_paths) {
    Cochain d = parse_cochain(read_file(path), a);
    auto cv = validate_cochain(d, /*require_normalized=*/true);
    if (!cv.empty()) {
      std::cout << violations_to_json(cv);
      return kExitValidation;
    }
    // Twisted identities require equivariant cochains; project.
    family.push_back(equivariant_average(d, act));
  }
  auto sampled = verification_cochains(a, act, cfg.samples, cfg.seed);
  family.insert(family.end(), sampled.begin(), sampled.end());

  std::vector<int> sectors;
  if (cfg.twist == "all-classes") {
    for (const auto& cls : conjugacy_classes(act.group).classes) sectors.push_back(cls.front());
  } else {
    auto g = act.group.find(cfg.twist);
    if (!g) throw ParseError("unknown group element \"" + cfg.twist + "\"");
    sectors.push_back(*g);
  }

  bool want_all = cfg.identity == "all";
  if (!want_all && cfg.identity != "1" && cfg.identity != "2" && cfg.identity != "3" &&
      cfg.identity != "4")
    throw ParseError("--identity must be one of 1,2,3,4,all");

  std::vector<IdentityReport> reports;
  bool ok = true;
  for (int g : sectors) {
    for (size_t i = 0; i < family.size(); ++i) {
      const Cochain& d = family[i];
      std::vector<IdentityReport> r;
      if (want_all || cfg.identity == "1") {
        auto v = verify_identity_1(a, act, g, d, cfg.n_max, conv);
        r.insert(r.end(), v.begin(), v.end());
      }
      if (want_all || cfg.identity == "2") {
        auto v = verify_identity_2(a, act, g, d, cfg.n_max, conv);
        r.insert(r.end(), v.begin(), v.end());
      }
      if (want_all || cfg.identity == "3") {
        const Cochain& e = family[(i + 1) % family.size()];
        auto v = verify_identity_3(a, act, g, d, e, cfg.n_max, conv);
        r.insert(r.end(), v.begin(), v.end());
      }
      if (want_all || cfg.identity == "4") {
        auto v = verify_identity_4(a, act, g, d, cfg.n_max, conv);
        r.insert(r.end(), v.begin(), v.end());
      }
      for (const auto& rep : r) ok = ok && rep.pass;
      reports.insert(reports.end(), r.begin(), r.end());
    }
  }
  emit(cfg.out, identity_reports_to_json(reports));
  return ok ? kExitOk : kExitMath;
}

struct HomologyConfig {
  std::string algebra, group, convention, out;
  std::string twist = "e";
  std::string coefficients = "hochschild";
  std::string u_window;
  int n_max = 4;
  bool invariants = false;
};

int run_homology(const HomologyConfig& cfg) {
  DGAlgebra a = load_algebra(cfg.algebra);
  GroupAction act = load_group(cfg.group, a);
  SignConvention conv = load_convention(cfg.convention);

  auto g = act.group.find(cfg.twist);
  if (!g) throw ParseError("unknown group element \"" + cfg.twist + "\"");

  CoefficientW w;
  if (cfg.coefficients == "hochschild") {
    w = CoefficientW::hochschild();
  } else {
    int lo = 0, hi = 0;
    if (cfg.u_window.empty())
      throw ParseError("--coefficients " + cfg.coefficients + " requires --u-window lo:hi");
    auto colon = cfg.u_window.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing colon");
      lo = std::stoi(cfg.u_window.substr(0, colon));
      hi = std::stoi(cfg.u_window.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("--u-window must be of the form lo:hi, got " + cfg.u_window);
    }
    if (cfg.coefficients == "cyclic") {
      w = CoefficientW{CoefficientW::Kind::Cyclic, lo, hi};
    } else if (cfg.coefficients == "negative") {
      w = CoefficientW{CoefficientW::Kind::Negative, lo, hi};
    } else if (cfg.coefficients == "periodic") {
      w = CoefficientW{CoefficientW::Kind::Periodic, lo, hi};
    } else {
      throw ParseError("--coefficients must be hochschild, cyclic, negative, or periodic");
    }
  }
  HomologyTable t = mixed_homology(a, act, *g, w, cfg.n_max, conv, cfg.invariants);
  emit(cfg.out, homology_table_to_json(t));
  return kExitOk;
}

int run_decompose(const std::string& algebra_path, const std::string& group_path,
                  const std::string& convention_path, const std::string& out_path, int n_max) {
  DGAlgebra a = load_algebra(algebra_path);
  GroupAction act = load_group(group_path, a);
  SignConvention conv = load_convention(convention_path);
  DecompositionReport rep = check_decomposition(a, act, n_max, conv);
  emit(out_path, decomposition_to_json(rep));
  return rep.pass ? kExitOk : kExitMath;
}

int run_write_corpus(const std::string& dir) {
  for (const auto& name : builtin_pair_names()) {
    BuiltinPair p = builtin_pair(name, Field::rational());
    write_file(dir + "/" + name + ".algebra.json", algebra_to_json(p.algebra));
    write_file(dir + "/" + name + ".group.json", group_to_json(p.action, p.algebra));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Hochschild/cyclic operator calculus for DG algebras with group action"};
  app.require_subcommand(1);

  std::string algebra, group, convention, out, dir;
  VerifyConfig vcfg;
  HomologyConfig hcfg;
  int n_max = 4;
  bool restrict_family = false;

  auto* validate = app.add_subcommand("validate", "Validate algebra/group/action files");
  validate->add_option("algebra", algebra, "algebra file or builtin:<name>")->required();
  validate->add_option("group", group, "group+action file or builtin:<pair>");

  auto* resolve = app.add_subcommand("resolve-signs", "Pin the sign convention");
  resolve->add_option("--out", out, "certificate output path (default stdout)");
  resolve->add_flag("--restrict-family", restrict_family,
                    "search a deliberately restricted family (diagnostic)");

  auto* verify = app.add_subcommand("verify", "Verify the Cartan homotopy identities");
  verify->add_option("--algebra", vcfg.algebra)->required();
  verify->add_option("--group", vcfg.group)->required();
  verify->add_option("--convention", vcfg.convention, "convention certificate file")->required();
  verify->add_option("--cochain", vcfg.cochain_paths, "cochain file(s)");
  verify->add_option("--identity", vcfg.identity, "1|2|3|4|all");
  verify->add_option("--twist", vcfg.twist, "group element name or all-classes");
  verify->add_option("--max-n", vcfg.n_max);
  verify->add_option("--sample", vcfg.samples, "number of seeded random cochains");
  verify->add_option("--seed", vcfg.seed);
  verify->add_option("--out", vcfg.out);

  auto* homology = app.add_subcommand("homology", "Homology table of a twisted sector");
  homology->add_option("--algebra", hcfg.algebra)->required();
  homology->add_option("--group", hcfg.group)->required();
  homology->add_option("--convention", hcfg.convention)->required();
  homology->add_option("--twist", hcfg.twist, "group element name");
  homology->add_option("--coefficients", hcfg.coefficients,
                       "hochschild|cyclic|negative|periodic");
  homology->add_option("--u-window", hcfg.u_window, "lo:hi");
  homology->add_option("--max-n", hcfg.n_max);
  homology->add_flag("--invariants", hcfg.invariants, "restrict to Z(g)-invariants");
  homology->add_option("--out", hcfg.out);

  auto* decompose = app.add_subcommand("decompose", "Check the conjugacy-class decomposition");
  decompose->add_option("--algebra", algebra)->required();
  decompose->add_option("--group", group)->required();
  decompose->add_option("--convention", convention)->required();
  decompose->add_option("--max-n", n_max);
  decompose->add_option("--out", out);

  auto* corpus = app.add_subcommand("write-corpus", "Write the builtin corpus as JSON files");
  corpus->add_option("dir", dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(algebra, group);
    if (resolve->parsed()) return run_resolve_signs(out, restrict_family);
    if (verify->parsed()) return run_verify(vcfg);
    if (homology->parsed()) return run_homology(hcfg);
    if (decompose->parsed()) return run_decompose(algebra, group, convention, out, n_max);
    if (corpus->parsed()) return run_write_corpus(dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StructuralError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConventionError& e) {
    std::cerr << "sign resolution failed: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitOk;
}

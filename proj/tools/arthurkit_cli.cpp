// Command-line front end: every module as a subcommand, JSON/DOT/LaTeX/text
// output, and the cross-module `audit` sweep.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "arthurkit/audit.hpp"
#include "arthurkit/json_io.hpp"

namespace ak = arthurkit;
using ak::Json;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ak::DomainError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ak::DomainError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

ak::CuspidalDatum tau_from_flags(const std::string& tau_file, const std::string& tau_type,
                                 const std::string& tau_id, int a, bool l_half_nonzero,
                                 int eta) {
  if (!tau_file.empty()) return ak::cuspidal_from_json(read_json_file(tau_file));
  ak::CuspidalDatum tau;
  if (tau_type == "symplectic")
    tau = ak::CuspidalDatum::symplectic(tau_id, a);
  else if (tau_type == "orthogonal")
    tau = ak::CuspidalDatum::orthogonal(tau_id, a);
  else if (tau_type == "conjugate")
    tau = ak::CuspidalDatum::conjugate_self_dual(tau_id, a, ak::Sign::from_int(eta));
  else
    throw ak::DomainError("unknown tau type '" + tau_type +
                          "' (expected symplectic, orthogonal or conjugate)");
  if (l_half_nonzero) tau.central_nonvanishing = true;
  return tau;
}

ak::AuditConfig config_from_flags(const std::string& config_path, int max_n) {
  ak::AuditConfig cfg = ak::AuditConfig::defaults();
  std::string path = config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("ARTHURKIT_CONFIG")) path = env;
  }
  if (!path.empty()) {
    Json j = read_json_file(path);
    cfg.endoscopy_max_n = j.value("endoscopy_max_n", cfg.endoscopy_max_n);
    cfg.jordan_max_n = j.value("jordan_max_n", cfg.jordan_max_n);
    cfg.max_summands = j.value("max_summands", cfg.max_summands);
    cfg.collapse_max_total = j.value("collapse_max_total", cfg.collapse_max_total);
    cfg.grading_max_total = j.value("grading_max_total", cfg.grading_max_total);
    cfg.kernel_max_a = j.value("kernel_max_a", cfg.kernel_max_a);
    cfg.kernel_max_b = j.value("kernel_max_b", cfg.kernel_max_b);
    cfg.kernel_max_c = j.value("kernel_max_c", cfg.kernel_max_c);
    if (j.contains("tau_pool")) {
      cfg.tau_pool.clear();
      for (const auto& t : j.at("tau_pool")) cfg.tau_pool.push_back(ak::cuspidal_from_json(t));
    }
  }
  if (max_n > 0) cfg.endoscopy_max_n = max_n;
  return cfg;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arthurkit: combinatorics of Arthur parameters, nilpotent orbits and endoscopy"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format: json, text, dot or latex")
      ->check(CLI::IsMember({"json", "text", "dot", "latex"}));

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Barbasch-Vogan dual of a partition");
  std::string dual_pair = "C:B";
  std::string dual_partition;
  dual_cmd->add_option("--family", dual_pair, "Family pair dual:target, e.g. C:B")->required();
  dual_cmd->add_option("--partition", dual_partition, "Partition literal")->required();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Groups an elliptic parameter belongs to");
  std::string classify_param;
  int classify_kappa = 0;
  classify_cmd->add_option("--param", classify_param, "Parameter JSON file")->required();
  classify_cmd->add_option("--kappa", classify_kappa, "Unitary sign context (+1 or -1)");

  // endoscopy
  auto* endo_cmd = app.add_subcommand("endoscopy", "Elliptic endoscopy data");
  std::string endo_group;
  bool endo_enumerate = false;
  std::string endo_param, endo_tau_file;
  int endo_b = 1;
  endo_cmd->add_option("--group", endo_group, "Target group token Family:n[:decoration]")
      ->required();
  endo_cmd->add_flag("--enumerate", endo_enumerate, "List all elliptic splitting shapes");
  endo_cmd->add_option("--param", endo_param, "Rest parameter psi_2 JSON file");
  endo_cmd->add_option("--tau", endo_tau_file, "Cuspidal datum JSON file for psi_1 = (tau,b)");
  endo_cmd->add_option("--b", endo_b, "b of psi_1");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Grading, coefficient kind and stabilizer");
  std::string orbit_family = "C", orbit_partition;
  orbit_cmd->add_option("--family", orbit_family, "Orbit family A, B, C or D, or a group family");
  orbit_cmd->add_option("--partition", orbit_partition, "Partition literal [d^c,1^r]")->required();

  // beta
  auto* beta_cmd = app.add_subcommand("beta", "Normalizing factor grammar and pole data");
  std::string beta_family = "Sp";
  int beta_b = 1, beta_case = 0, beta_usize = 0;
  bool beta_no_rs = false;
  beta_cmd->add_option("--family", beta_family, "Group family (SOodd, Sp, SOeven, U)");
  beta_cmd->add_option("--u-size", beta_usize, "Size N for unitary families");
  beta_cmd->add_option("--b", beta_b, "b >= 1")->required();
  beta_cmd->add_option("--case", beta_case, "Pole case 1..4 (adds X+ and residual data)");
  beta_cmd->add_flag("--no-rankin-selberg", beta_no_rs, "Drop the Rankin-Selberg factor (n0 = 0)");
  bool beta_latex = false;
  beta_cmd->add_flag("--latex", beta_latex, "Emit the normalizer as a LaTeX product");

  // poles
  auto* poles_cmd = app.add_subcommand("poles", "X+ set and residual annotations");
  int poles_b = 1, poles_case = 1;
  poles_cmd->add_option("--b", poles_b, "b >= 1")->required();
  poles_cmd->add_option("--case", poles_case, "Pole case 1..4")->required();

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "Construction case record");
  std::string compile_target = "Sp", compile_tau_file, compile_tau_type = "orthogonal",
              compile_tau_id = "tau", compile_chi = "1";
  int compile_a = 2, compile_b = 1, compile_c = 2, compile_kappa = 1, compile_eta = 1;
  bool compile_l_half = false, compile_mv_plus_one = false;
  compile_cmd->add_option("--target", compile_target, "Target family")->required();
  compile_cmd->add_option("--tau", compile_tau_file, "Cuspidal datum JSON file");
  compile_cmd->add_option("--tau-type", compile_tau_type,
                          "symplectic, orthogonal or conjugate (ignored with --tau)");
  compile_cmd->add_option("--tau-id", compile_tau_id, "Token for the synthesized tau");
  compile_cmd->add_option("--a", compile_a, "GL dimension of tau");
  compile_cmd->add_option("--b", compile_b, "b >= 0")->required();
  compile_cmd->add_option("--c", compile_c, "c >= 0")->required();
  compile_cmd->add_option("--eta", compile_eta, "eta_tau for conjugate tau (+1/-1)");
  compile_cmd->add_flag("--L-half-nonzero", compile_l_half, "Assert L(1/2, tau) != 0");
  compile_cmd->add_option("--kappa", compile_kappa, "Unitary sign kappa");
  compile_cmd->add_flag("--mv-plus-one", compile_mv_plus_one, "Use m_V = a(b+c)+1");
  compile_cmd->add_option("--chi", compile_chi, "Character token for psi0 summands");

  // tower
  auto* tower_cmd = app.add_subcommand("tower", "(tau,b)-tower of correspondences");
  std::string tower_base, tower_param, tower_tau_file, tower_tau_type = "symplectic",
              tower_tau_id = "tau";
  int tower_a = 2, tower_steps = 2;
  bool tower_l_half = false;
  tower_cmd->add_option("--base", tower_base, "Base group token Family:n")->required();
  tower_cmd->add_option("--param", tower_param, "Base parameter JSON file")->required();
  tower_cmd->add_option("--tau", tower_tau_file, "Cuspidal datum JSON file");
  tower_cmd->add_option("--tau-type", tower_tau_type, "symplectic or orthogonal");
  tower_cmd->add_option("--tau-id", tower_tau_id, "Token for the synthesized tau");
  tower_cmd->add_option("--a", tower_a, "GL dimension of tau");
  tower_cmd->add_flag("--L-half-nonzero", tower_l_half, "Assert L(1/2, tau) != 0");
  tower_cmd->add_option("--steps", tower_steps, "Ascending levels");
  bool tower_dot = false;
  tower_cmd->add_flag("--dot", tower_dot, "Emit the tower as a DOT digraph");

  // triangle
  auto* tri_cmd = app.add_subcommand("triangle", "Basic triangle at level l");
  std::string tri_tau_file, tri_tau_id = "tau";
  int tri_a = 2, tri_l = 1;
  tri_cmd->add_option("--tau", tri_tau_file, "Cuspidal datum JSON file");
  tri_cmd->add_option("--tau-id", tri_tau_id, "Token for the synthesized symplectic tau");
  tri_cmd->add_option("--a", tri_a, "GL dimension of tau (even)");
  tri_cmd->add_option("--l", tri_l, "Level l >= 0")->required();
  bool tri_dot = false;
  tri_cmd->add_flag("--dot", tri_dot, "Emit the triangles as a DOT digraph");

  // jordan
  auto* jordan_cmd = app.add_subcommand("jordan", "Pole profiles and reconstruction");
  std::string jordan_param, jordan_reconstruct;
  int jordan_n = 0;
  jordan_cmd->add_option("--param", jordan_param, "Parameter JSON file");
  jordan_cmd->add_option("--reconstruct", jordan_reconstruct, "Pole profile JSON file");
  jordan_cmd->add_option("--N", jordan_n, "Expected GL size for reconstruction");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Cross-module consistency sweeps");
  std::string audit_config;
  int audit_max_n = 0;
  audit_cmd->add_option("--config", audit_config,
                        "Config JSON (defaults to $ARTHURKIT_CONFIG when set)");
  audit_cmd->add_option("--max-N", audit_max_n, "Override the endoscopy sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*dual_cmd) {
      auto colon = dual_pair.find(':');
      if (colon == std::string::npos)
        throw ak::DomainError("--family must be a pair like C:B");
      ak::OrbitFamily from = ak::orbit_family_from_string(dual_pair.substr(0, colon));
      ak::OrbitFamily to = ak::orbit_family_from_string(dual_pair.substr(colon + 1));
      ak::Partition p = ak::Partition::parse(dual_partition);
      ak::Partition d = ak::bv_dual(p, from, to);
      if (format == "json")
        print_json(Json{{"input", ak::to_json(p)}, {"dual", ak::to_json(d)}});
      else
        std::cout << d.str() << "\n";
    } else if (*classify_cmd) {
      ak::ArthurParameter psi = ak::parameter_from_json(read_json_file(classify_param));
      std::optional<ak::Sign> kappa;
      if (classify_kappa != 0) kappa = ak::Sign::from_int(classify_kappa);
      auto groups = ak::classify(psi, kappa);
      Json arr = Json::array();
      for (const auto& g : groups) arr.push_back(ak::to_json(g));
      if (format == "json")
        print_json(Json{{"parameter", ak::to_json(psi)}, {"groups", arr}});
      else {
        for (const auto& g : groups) std::cout << g.str() << "\n";
      }
    } else if (*endo_cmd) {
      ak::GroupDatum g = ak::group_from_token(endo_group);
      if (endo_enumerate) {
        Json arr = Json::array();
        for (const auto& e : ak::enumerate_elliptic(g)) arr.push_back(ak::to_json(e));
        print_json(Json{{"target", ak::to_json(g)}, {"data", arr}});
      } else {
        if (endo_tau_file.empty())
          throw ak::DomainError("endoscopy: provide --tau and --b, or --enumerate");
        ak::CuspidalDatum tau = ak::cuspidal_from_json(read_json_file(endo_tau_file));
        ak::ArthurParameter psi2;
        if (!endo_param.empty()) psi2 = ak::parameter_from_json(read_json_file(endo_param));
        ak::EndoscopyDatum e =
            ak::elliptic_decompose(g, ak::SimpleParameter(tau, endo_b), psi2);
        std::vector<std::string> reasons;
        bool ok = ak::validate(e, &reasons);
        Json j = ak::to_json(e);
        j["valid"] = ok;
        print_json(j);
      }
    } else if (*orbit_cmd) {
      ak::Partition p = ak::Partition::parse(orbit_partition);
      ak::OrbitFamily fam;
      std::optional<ak::GroupFamily> group_family;
      if (orbit_family.size() == 1) {
        fam = ak::orbit_family_from_string(orbit_family);
        switch (fam) {
          case ak::OrbitFamily::A: group_family = ak::GroupFamily::U; break;
          case ak::OrbitFamily::B: group_family = ak::GroupFamily::SOodd; break;
          case ak::OrbitFamily::C: group_family = ak::GroupFamily::Sp; break;
          case ak::OrbitFamily::D: group_family = ak::GroupFamily::SOeven; break;
        }
      } else {
        group_family = ak::group_family_from_string(orbit_family);
        fam = ak::orbit_family_of(*group_family);
      }
      ak::WeightedGrading g = ak::grading(fam, p);
      Json j = ak::to_json(g);
      j["unipotent"] = Json{{"dim_VX", ak::unipotent_dims(g).dim_vx},
                            {"dim_g1", ak::unipotent_dims(g).dim_g1},
                            {"heisenberg_dim", ak::unipotent_dims(g).heisenberg_dim}};
      // Coefficient kind and stabilizer when the partition is a hook [d^c 1^r].
      const auto& parts = p.parts();
      if (!parts.empty() && parts.front() > 1) {
        int d = parts.front();
        int c = p.multiplicity(d);
        int r = p.multiplicity(1);
        if (static_cast<std::size_t>(c + r) == parts.size() && r >= 1) {
          j["coefficient"] = ak::name(ak::coefficient_kind(fam, d, c, r));
          ak::StabilizerPair s = ak::stabilizer(*group_family, p.total(), d, c);
          j["stabilizer"] = ak::to_json(s);
          Json keys = Json::array();
          for (const auto& k : ak::rational_orbit_keys(*group_family, d, c, p.total()))
            keys.push_back(ak::to_json(k));
          j["rational_orbit_keys"] = keys;
        }
      }
      if (format == "text") {
        std::cout << "partition " << p.str() << " family " << ak::name(fam) << "\n";
        for (const auto& [k, v] : g.dims) std::cout << "  g_" << k << ": dim " << v << "\n";
      } else {
        print_json(j);
      }
    } else if (*beta_cmd) {
      ak::GroupFamily fam = ak::group_family_from_string(beta_family);
      ak::GroupDatum g;
      switch (fam) {
        case ak::GroupFamily::SOodd: g = ak::GroupDatum::so_odd(1); break;
        case ak::GroupFamily::Sp: g = ak::GroupDatum::sp(1); break;
        case ak::GroupFamily::SOeven: g = ak::GroupDatum::so_even(1); break;
        case ak::GroupFamily::Mp: g = ak::GroupDatum::mp(1); break;
        case ak::GroupFamily::U:
          if (beta_usize <= 0)
            throw ak::DomainError("beta: unitary family needs --u-size N (parity matters)");
          g = ak::GroupDatum::unitary(beta_usize, ak::Sign::plus());
          break;
      }
      auto factors = ak::beta_factors(g, beta_b, !beta_no_rs);
      if (format == "latex" || beta_latex) {
        std::cout << ak::latex_product(factors) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& f : factors) arr.push_back(ak::to_json(f));
        auto [rho, rho_minus] = ak::rho_pair(g);
        Json j{{"family", beta_family},
               {"b", beta_b},
               {"rho", ak::name(rho)},
               {"rho_minus", ak::name(rho_minus)},
               {"factors", arr}};
        if (beta_case >= 1) {
          ak::PoleCase pc = ak::PoleCase::from_id(beta_case);
          Json xs = Json::array();
          for (const auto& s : ak::x_plus(beta_b, pc)) xs.push_back(ak::to_json(s));
          Json rs = Json::array();
          for (const auto& pt : ak::residual_points(beta_b, pc)) rs.push_back(ak::to_json(pt));
          j["case"] = beta_case;
          j["x_plus"] = xs;
          j["residual_points"] = rs;
        }
        print_json(j);
      }
    } else if (*poles_cmd) {
      ak::PoleCase pc = ak::PoleCase::from_id(poles_case);
      Json xs = Json::array();
      for (const auto& s : ak::x_plus(poles_b, pc)) xs.push_back(ak::to_json(s));
      Json rs = Json::array();
      for (const auto& pt : ak::residual_points(poles_b, pc)) rs.push_back(ak::to_json(pt));
      print_json(Json{{"b", poles_b}, {"case", poles_case}, {"x_plus", xs},
                      {"residual_points", rs}});
    } else if (*compile_cmd) {
      ak::GroupFamily target = ak::group_family_from_string(compile_target);
      ak::CuspidalDatum tau = tau_from_flags(compile_tau_file, compile_tau_type, compile_tau_id,
                                             compile_a, compile_l_half, compile_eta);
      ak::CompileOptions opts;
      opts.kappa = ak::Sign::from_int(compile_kappa);
      opts.mv_plus_one = compile_mv_plus_one;
      opts.chi_id = compile_chi;
      ak::ConstructionCase cc = ak::compile(target, tau, compile_b, compile_c, opts);
      print_json(ak::to_json(cc));
    } else if (*tower_cmd) {
      ak::GroupDatum base = ak::group_from_token(tower_base);
      ak::ArthurParameter psi = ak::parameter_from_json(read_json_file(tower_param));
      ak::CuspidalDatum tau = tau_from_flags(tower_tau_file, tower_tau_type, tower_tau_id,
                                             tower_a, tower_l_half, 1);
      auto nodes = ak::tower(base, psi, tau, tower_steps);
      if (format == "dot" || tower_dot)
        std::cout << ak::to_dot(nodes);
      else
        print_json(ak::to_json(nodes));
    } else if (*tri_cmd) {
      ak::CuspidalDatum tau;
      if (!tri_tau_file.empty()) {
        tau = ak::cuspidal_from_json(read_json_file(tri_tau_file));
      } else {
        tau = ak::CuspidalDatum::symplectic(tri_tau_id, tri_a);
        tau.central_nonvanishing = true;
      }
      ak::TriangleRecord t = ak::basic_triangles(tau, tri_l);
      if (format == "dot" || tri_dot)
        std::cout << ak::to_dot(t);
      else
        print_json(ak::to_json(t));
    } else if (*jordan_cmd) {
      if (!jordan_reconstruct.empty()) {
        std::map<std::string, ak::CuspidalDatum> dims;
        ak::PoleProfile prof =
            ak::profile_from_json(read_json_file(jordan_reconstruct), &dims);
        if (jordan_n <= 0) throw ak::DomainError("jordan --reconstruct needs --N");
        ak::ArthurParameter psi = ak::reconstruct(prof, dims, jordan_n);
        print_json(Json{{"parameter", ak::to_json(psi)},
                        {"groups",
                         [&] {
                           Json arr = Json::array();
                           for (const auto& g : ak::classify(psi)) arr.push_back(ak::to_json(g));
                           return arr;
                         }()}});
      } else if (!jordan_param.empty()) {
        ak::ArthurParameter psi = ak::parameter_from_json(read_json_file(jordan_param));
        ak::PoleProfile prof = ak::pole_profile(psi);
        Json j = ak::to_json(prof);
        // Carry the cuspidal data so the output feeds --reconstruct directly.
        Json dims = Json::array();
        std::set<std::string> seen;
        for (const auto& s : psi.summands())
          if (seen.insert(s.tau.id).second) dims.push_back(ak::to_json(s.tau));
        j["dims"] = dims;
        Json blocks = Json::object();
        for (const auto& id : ak::t_set(psi)) {
          Json arr = Json::array();
          for (int b : ak::jordan_blocks(psi, id)) arr.push_back(b);
          blocks[id] = arr;
        }
        j["jordan_blocks"] = blocks;
        Json maxima = Json::array();
        for (const auto& m : ak::maximal_summands(psi))
          maxima.push_back(Json{{"tau", m.tau.id}, {"b", m.b}});
        j["maximal_summands"] = maxima;
        print_json(j);
      } else {
        throw ak::DomainError("jordan: provide --param or --reconstruct");
      }
    } else if (*audit_cmd) {
      ak::AuditConfig cfg = config_from_flags(audit_config, audit_max_n);
      ak::AuditReport rep = ak::run_audit(cfg);
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& s : rep.sweeps) {
          Json msgs = Json::array();
          for (const auto& m : s.messages) msgs.push_back(m);
          arr.push_back(Json{{"name", s.name},
                             {"checked", s.checked},
                             {"failures", s.failures},
                             {"messages", msgs}});
        }
        print_json(Json{{"sweeps", arr}, {"total_failures", rep.total_failures()}});
      } else {
        std::cout << rep.render_text();
      }
      if (rep.total_failures() != 0) return 1;
    }
  } catch (const ak::DomainError& e) {
    Json err{{"error", "domain"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arthurkit/endoscopy.hpp"
#include "arthurkit/orbits.hpp"
#include "arthurkit/parameters.hpp"

namespace arthurkit {

/// Full record of one kernel construction: the ambient group carrying the
/// residual parameter psi0, the coefficient regime of the [d^c 1^*] orbit,
/// and the endoscopy triple G0 x H -> G the construction should realize.
struct ConstructionCase {
  GroupDatum target;  // G of the endoscopy triple
  CuspidalDatum tau;
  int a = 0, b = 0, c = 0, d = 0;  // d = a - 1
  GroupDatum ambient;
  ArthurParameter psi0;
  CoefficientKind coefficient = CoefficientKind::Bessel;
  EndoscopyDatum endoscopy;
  std::string conjecture_tag;
  std::vector<std::pair<std::string, bool>> constraints;
  std::string note;

  bool all_constraints_satisfied() const {
    for (const auto& [k, v] : constraints)
      if (!v) return false;
    return true;
  }
};

/// Extra inputs for the unitary construction and the character summand.
struct CompileOptions {
  Sign kappa = Sign::plus();    // U targets
  bool mv_plus_one = false;     // U targets: m_V = a(b+c)+1 instead of a(b+c)
  std::string chi_id = "1";     // character token used in psi0 when required
};

namespace detail {

inline void constraint(ConstructionCase& cc, const std::string& name, bool ok) {
  cc.constraints.emplace_back(name, ok);
}

inline EndoscopyDatum make_datum(GroupDatum target, GroupDatum f1, GroupDatum f2,
                                 std::string basis) {
  EndoscopyDatum e;
  e.target = std::move(target);
  e.factors = {std::move(f1), std::move(f2)};
  e.basis = std::move(basis);
  return e;
}

}  // namespace detail

/// Maps (target family, tau, b, c) with d = a - 1 to the construction record.
/// Parity constraints that fail are recorded with satisfied = false; only the
/// structurally absent cells throw.
inline ConstructionCase compile(GroupFamily target_family, const CuspidalDatum& tau, int b, int c,
                                const CompileOptions& opts = {}) {
  if (!tau.self_dual()) throw DomainError("compile: tau must be self-dual");
  const int a = tau.a;
  if (a < 2)
    throw DomainError(
        "compile: a = 1 gives d = 0, the character/theta tower regime, which is outside the "
        "tabulated constructions");
  if (b < 0) throw DomainError("compile: b must be >= 0");
  if (c < 0) throw DomainError("compile: c must be >= 0");
  const int d = a - 1;
  const bool a_even = a % 2 == 0;
  const bool c_even = c % 2 == 0;
  const bool tau_symplectic =
      tau.base == BaseField::Plain && tau.duality == DualityType::Symplectic;

  ConstructionCase cc;
  cc.tau = tau;
  cc.a = a;
  cc.b = b;
  cc.c = c;
  cc.d = d;
  if (b == 0) cc.note = "identity transfer (b=0)";

  auto psi_simple = [&](int bb) { return ArthurParameter::simple(tau, bb); };
  const CuspidalDatum one = CuspidalDatum::character("1");

  if (target_family == GroupFamily::U) {
    const int m_v = a * (b + c) + (opts.mv_plus_one ? 1 : 0);
    cc.conjecture_tag = "eq-5.14";
    cc.ambient = GroupDatum::unitary(m_v, opts.kappa);
    cc.psi0 = psi_simple(b + c);
    if (opts.mv_plus_one) {
      CuspidalDatum chi = CuspidalDatum::character(opts.chi_id);
      chi.base = BaseField::QuadraticExt;
      chi.eta = Sign::pow_minus_one(m_v - 1) * opts.kappa;  // sign rule for the appended summand
      cc.psi0 = boxplus(cc.psi0, SimpleParameter(chi, 1));
    }
    cc.coefficient = d % 2 == 1 ? CoefficientKind::Bessel : CoefficientKind::FourierJacobi;
    Sign k1 = opts.kappa * Sign::pow_minus_one(c);
    Sign k2 = opts.kappa * Sign::pow_minus_one(m_v - a * c);
    cc.target = GroupDatum::unitary(m_v - d * c, opts.kappa);
    cc.endoscopy = detail::make_datum(cc.target, GroupDatum::unitary(m_v - a * c, k1),
                                      GroupDatum::unitary(c, k2), "eq-5.14");
    cc.endoscopy.signs = {k1, k2};
    detail::constraint(cc, "m_V - a*c >= 0", m_v - a * c >= 0);
    detail::constraint(cc, "tau conjugate self-dual over E", tau.base == BaseField::QuadraticExt);
    detail::constraint(cc, "eta_(tau,b+c) = kappa (-1)^(m_V - 1)",
                       tau.base == BaseField::QuadraticExt &&
                           conjugate_sign(SimpleParameter(tau, b + c)) ==
                               opts.kappa * Sign::pow_minus_one(m_v - 1));
    return cc;
  }

  if (tau.base != BaseField::Plain)
    throw DomainError("compile: conjugate self-dual tau needs a unitary target");

  switch (target_family) {
    case GroupFamily::Sp:
      if (a_even && c_even) {
        // Bessel case on the symplectic ambient group.
        cc.conjecture_tag = "conj-5.2";
        cc.ambient = GroupDatum::sp_size(a * (b + c));
        cc.psi0 = boxplus(psi_simple(b + c), SimpleParameter(one, 1));
        cc.coefficient = CoefficientKind::Bessel;
        cc.target = GroupDatum::sp_size(a * b + c);
        std::string eta0 = b == 0 ? "1" : eta_label(psi_simple(b));
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::so_even(a * b / 2, eta0),
                                          GroupDatum::sp_size(c), "eq-3.6");
        detail::constraint(cc, "c = 2f >= 2", c >= 2);
        detail::constraint(cc, "tau symplectic => b even; tau orthogonal => b odd",
                           tau_symplectic == (b % 2 == 0));
        return cc;
      }
      if (!a_even && c_even) {
        if (b % 2 == 0)
          throw DomainError(
              "compile: conj-5.9 cell needs odd b (group sizes are incoherent otherwise)");
        cc.conjecture_tag = "conj-5.9";
        cc.ambient = GroupDatum::sp_size(a * (b + c) - 1);
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::FourierJacobi;
        cc.target = GroupDatum::sp_size(a * b + c - 1);
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::sp_size(a * b - 1),
                                          GroupDatum::so_size(c, "eta_q_d"), "eq-3.7");
        detail::constraint(cc, "tau orthogonal", !tau_symplectic);
        detail::constraint(cc, "b = 2l+1 >= 1", b % 2 == 1);
        return cc;
      }
      throw DomainError("compile: Sp target requires c even (case not constructed)");

    case GroupFamily::SOodd:
      if (a_even && !c_even) {
        cc.conjecture_tag = "conj-5.3";
        cc.ambient = GroupDatum::so_size(a * (b + c));
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::Bessel;
        cc.target = GroupDatum::so_size(a * b + c);
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::so_size(a * b + 1),
                                          GroupDatum::so_size(c, "eta_q_d"), "eq-3.2");
        detail::constraint(cc, "tau symplectic => b odd; tau orthogonal => b even",
                           tau_symplectic == (b % 2 == 1));
        return cc;
      }
      if (!a_even && c_even) {
        if (b % 2 == 1)
          throw DomainError(
              "compile: conj-5.12 cell needs even b (group sizes are incoherent otherwise)");
        cc.conjecture_tag = "conj-5.12";
        cc.ambient = GroupDatum::so_size(a * (b + c) + 1);
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::FourierJacobi;
        cc.target = GroupDatum::so_size(a * b + c + 1);
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::mp_size(a * b),
                                          GroupDatum::mp_size(c), "eq-3.4");
        detail::constraint(cc, "tau orthogonal", !tau_symplectic);
        detail::constraint(cc, "b = 2l even", b % 2 == 0);
        detail::constraint(cc, "c = 2f >= 2", c >= 2);
        return cc;
      }
      throw DomainError(
          "compile: SO_odd target with this parity cell is not constructed (deferred to later "
          "work)");

    case GroupFamily::SOeven:
      if (a_even && c_even) {
        cc.conjecture_tag = "conj-5.4";
        cc.ambient = GroupDatum::so_size(a * (b + c), "eta_q_V");
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::Bessel;
        std::string eta0 = b == 0 ? "1" : eta_label(psi_simple(b));
        std::string eta_d = "eta_q_d";
        cc.target = GroupDatum::so_size(a * b + c, quadratic_product_label({eta0, eta_d}));
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::so_size(a * b, eta0),
                                          GroupDatum::so_size(c, eta_d), "eq-3.10");
        cc.endoscopy.eta_pair = {eta0, eta_d};
        detail::constraint(cc, "b >= 1", b >= 1);
        detail::constraint(cc, "c = 2f >= 2", c >= 2);
        detail::constraint(cc, "tau symplectic => b even; tau orthogonal => b odd",
                           tau_symplectic == (b % 2 == 0));
        detail::constraint(cc, "eta_q_V = eta_q_0 (symbolic)", true);
        return cc;
      }
      if (!a_even && c_even) {
        if (b % 2 == 0)
          throw DomainError(
              "compile: conj-5.11 cell needs odd b (group sizes are incoherent otherwise)");
        cc.conjecture_tag = "conj-5.11";
        cc.ambient = GroupDatum::so_size(a * (b + c) + 1, "eta_q_V");
        cc.psi0 = boxplus(psi_simple(b + c), SimpleParameter(CuspidalDatum::character(opts.chi_id), 1));
        cc.coefficient = CoefficientKind::FourierJacobi;
        cc.target = GroupDatum::so_size(a * b + c + 1, "eta_q_1");
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::sp_size(a * b - 1),
                                          GroupDatum::sp_size(c), "sec-3.3-twisted");
        detail::constraint(cc, "tau orthogonal", !tau_symplectic);
        detail::constraint(cc, "b = 2l+1 >= 1", b % 2 == 1);
        detail::constraint(cc, "c = 2f >= 2", c >= 2);
        return cc;
      }
      throw DomainError("compile: SO_even target requires c even (case not constructed)");

    case GroupFamily::Mp:
      if (a_even && c_even) {
        cc.conjecture_tag = "conj-5.5";
        cc.ambient = GroupDatum::mp_size(a * (b + c));
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::Bessel;
        cc.target = GroupDatum::mp_size(a * b + c);
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::so_size(a * b + 1),
                                          GroupDatum::mp_size(c), "sec-3.1-liw11");
        cc.endoscopy.variants.push_back({cc.target,
                                         {GroupDatum::mp_size(a * b), GroupDatum::mp_size(c)},
                                         "Mp",
                                         "sec-3.1-liw11"});
        detail::constraint(cc, "b >= 1", b >= 1);
        detail::constraint(cc, "c = 2f >= 2", c >= 2);
        detail::constraint(cc, "tau symplectic => b odd; tau orthogonal => b even",
                           tau_symplectic == (b % 2 == 1));
        detail::constraint(cc, "tau symplectic => L(1/2,tau) != 0",
                           !tau_symplectic || tau.central_nonvanishing.value_or(false));
        return cc;
      }
      if (!a_even && !c_even) {
        if (b % 2 == 1)
          throw DomainError(
              "compile: conj-5.10 cell needs even b (group sizes are incoherent otherwise)");
        cc.conjecture_tag = "conj-5.10";
        cc.ambient = GroupDatum::sp_size(a * (b + c) - 1);
        cc.psi0 = psi_simple(b + c);
        cc.coefficient = CoefficientKind::FourierJacobi;
        cc.target = GroupDatum::mp_size(a * b + c - 1);
        cc.endoscopy = detail::make_datum(cc.target, GroupDatum::so_size(a * b + 1),
                                          GroupDatum::so_size(c, "eta_q_d"), "sec-3.1-liw11");
        detail::constraint(cc, "tau orthogonal", !tau_symplectic);
        detail::constraint(cc, "b = 2l >= 2", b >= 2 && b % 2 == 0);
        detail::constraint(cc, "c = 2f+1 >= 1", c >= 1);
        return cc;
      }
      throw DomainError("compile: Mp target parity cell not constructed");

    case GroupFamily::U:
      break;  // handled above
  }
  throw DomainError("compile: unsupported target family");
}

/// One level of a (tau,b)-tower. Negative level_b marks a formal boxminus node.
struct TowerNode {
  int level_b = 0;
  GroupDatum group;
  ArthurParameter parameter;
  bool subtracted = false;

  std::string label() const {
    std::string p = parameter.str();
    if (subtracted) p += " (boxminus)";
    return group.str() + " / " + p;
  }
};

namespace detail {

inline GroupDatum tower_node_group(GroupFamily fam, int size) {
  switch (fam) {
    case GroupFamily::SOodd:
    case GroupFamily::SOeven: return GroupDatum::so_size(size);
    case GroupFamily::Sp: return GroupDatum::sp_size(size);
    case GroupFamily::Mp: return GroupDatum::mp_size(size);
    case GroupFamily::U: return GroupDatum::unitary(size, Sign::plus());
  }
  throw DomainError("tower: bad node family");
}

}  // namespace detail

/// Tower of correspondences over a fixed base parameter: ascending nodes add
/// (tau, b) with b stepping by 2 through `steps` levels, descending nodes
/// formally remove summands of psi_base while they exist. The simple-type
/// Sp/Mp column (symplectic tau) steps by 1 and alternates families.
inline std::vector<TowerNode> tower(const GroupDatum& base, const ArthurParameter& psi_base,
                                    const CuspidalDatum& tau, int steps) {
  if (steps < 0) throw DomainError("tower: steps must be >= 0");
  if (tau.base != BaseField::Plain) throw DomainError("tower: tabulated for plain tau only");
  if (!tau.self_dual()) throw DomainError("tower: tau must be self-dual");
  const int a = tau.a;
  const bool a_even = a % 2 == 0;
  const bool tau_symplectic = tau.duality == DualityType::Symplectic;

  {
    auto groups = classify(psi_base);
    bool found = false;
    for (const auto& g : groups)
      if (g.same_shape(base)) found = true;
    if (!found)
      throw DomainError("tower: base parameter " + psi_base.str() + " does not classify into " +
                        base.str());
  }

  std::vector<TowerNode> nodes;

  // Simple-type Sp/Mp column (the descent tower): parameter (tau,b) with a
  // (1,1) summand on the symplectic levels; steps of 1, alternating family.
  if ((base.family == GroupFamily::Mp || base.family == GroupFamily::Sp) && tau_symplectic) {
    if (!a_even) throw DomainError("tower: symplectic tau needs even a");
    const CuspidalDatum one = CuspidalDatum::character("1");
    int b0 = -1;
    for (const auto& s : psi_base.summands())
      if (s.tau.id == tau.id) b0 = s.b;
    if (b0 < 1) throw DomainError("tower: base parameter carries no (tau, b) summand");
    if (base.defining_size() != a * b0 ||
        base.family != (b0 % 2 == 1 ? GroupFamily::Mp : GroupFamily::Sp))
      throw DomainError("tower: base group does not sit at level b = " + std::to_string(b0) +
                        " of the simple-type column");
    auto level = [&](int b) {
      TowerNode n;
      n.level_b = b;
      if (b % 2 == 1) {
        n.group = GroupDatum::mp_size(a * b);
        n.parameter = ArthurParameter::simple(tau, b);
      } else {
        n.group = GroupDatum::sp_size(a * b);
        n.parameter = b == 0 ? ArthurParameter({SimpleParameter(one, 1)})
                             : boxplus(ArthurParameter::simple(tau, b), SimpleParameter(one, 1));
      }
      return n;
    };
    for (int b = b0; b <= b0 + steps; ++b) nodes.push_back(level(b));
    return nodes;
  }

  // The four tabulated tower shapes over a fixed base parameter.
  GroupFamily node_family;
  int anchor;  // node size at b = 0
  int b0;      // first ascending level
  if (base.family == GroupFamily::SOodd && tau_symplectic && a_even) {
    node_family = GroupFamily::SOodd;  // diag-8.2
    anchor = base.defining_size();
    b0 = 1;
  } else if (base.family == GroupFamily::SOodd && !tau_symplectic && a_even) {
    node_family = GroupFamily::SOodd;  // diag-8.3
    anchor = base.defining_size();
    b0 = 0;
  } else if (base.family == GroupFamily::SOodd && !tau_symplectic && !a_even) {
    node_family = GroupFamily::Mp;  // diag-8.4
    anchor = base.defining_size() - 1;
    b0 = 0;
  } else if (base.family == GroupFamily::Mp && !tau_symplectic && !a_even) {
    node_family = GroupFamily::SOodd;  // diag-8.5
    anchor = base.defining_size() + 1;
    b0 = 0;
  } else {
    throw DomainError("tower: base " + base.str() + " with tau of type " +
                      name(tau.duality) + ", a = " + std::to_string(a) +
                      " matches no tabulated tower shape");
  }

  // Descending branch: truncated at missing summands, never an error.
  int bdesc_start = b0 == 0 ? 2 : b0;
  std::vector<TowerNode> descending;
  for (int b = bdesc_start;; b += 2) {
    SimpleParameter sp(tau, b);
    if (!contains(psi_base, sp)) break;
    int size = anchor - a * b;
    if (size < (node_family == GroupFamily::SOodd ? 1 : 0)) break;
    TowerNode n;
    n.level_b = -b;
    n.group = detail::tower_node_group(node_family, size);
    n.parameter = boxminus(psi_base, sp);
    n.subtracted = true;
    descending.push_back(n);
  }
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) nodes.push_back(*it);

  if (b0 == 0) {
    TowerNode n;
    n.level_b = 0;
    n.group = detail::tower_node_group(node_family, anchor);
    n.parameter = psi_base;
    nodes.push_back(n);
  }
  int b = b0 == 0 ? 2 : b0;
  for (int k = 0; k < steps; ++k, b += 2) {
    TowerNode n;
    n.level_b = b;
    n.group = detail::tower_node_group(node_family, anchor + a * b);
    n.parameter = boxplus(psi_base, SimpleParameter(tau, b));
    nodes.push_back(n);
  }
  return nodes;
}

/// A vertex of a basic triangle.
struct TriangleVertex {
  GroupDatum group;
  ArthurParameter parameter;
};

struct TriangleEdge {
  int from = 0, to = 0;  // vertex indices
  std::string label;     // FJ / RES / LFT
};

/// The basic triangle at level l, plus its dual when it exists (l >= 1).
/// Vertices: Sp of size 2a(l+1) with (tau,2l+2)[+](1,1); Mp of size a(2l+1)
/// with (tau,2l+1); Sp of size 2al with (tau,2l)[+](1,1).
struct TriangleRecord {
  std::vector<TriangleVertex> vertices;  // top, left, bottom
  std::vector<TriangleEdge> edges;
  std::optional<std::vector<TriangleVertex>> dual_vertices;
  std::vector<TriangleEdge> dual_edges;
};

inline TriangleRecord basic_triangles(const CuspidalDatum& tau, int l) {
  if (l < 0) throw DomainError("basic_triangles: l must be >= 0");
  if (tau.base != BaseField::Plain || tau.duality != DualityType::Symplectic)
    throw DomainError("basic_triangles: tau must be of symplectic type");
  if (!tau.central_nonvanishing.value_or(false))
    throw DomainError("basic_triangles: requires L(1/2, tau) != 0");
  const int a = tau.a;
  const CuspidalDatum one = CuspidalDatum::character("1");

  auto sp_vertex = [&](int ll) {
    ArthurParameter p = ll == 0
                            ? ArthurParameter({SimpleParameter(one, 1)})
                            : boxplus(ArthurParameter::simple(tau, 2 * ll), SimpleParameter(one, 1));
    return TriangleVertex{GroupDatum::sp_size(2 * a * ll), p};
  };
  auto mp_vertex = [&](int ll) {
    return TriangleVertex{GroupDatum::mp_size(a * (2 * ll + 1)),
                          ArthurParameter::simple(tau, 2 * ll + 1)};
  };

  TriangleRecord r;
  r.vertices = {sp_vertex(l + 1), mp_vertex(l), sp_vertex(l)};
  r.edges = {{0, 1, "FJ"}, {1, 2, "LFT"}, {2, 0, "RES"}};
  if (l >= 1) {
    r.dual_vertices = {mp_vertex(l), sp_vertex(l), mp_vertex(l - 1)};
    r.dual_edges = {{0, 1, "FJ"}, {1, 2, "LFT"}, {2, 0, "RES"}};
  }
  return r;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline std::string to_dot(const std::vector<TowerNode>& nodes) {
  std::ostringstream os;
  os << "digraph tower {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << detail::dot_escape(nodes[i].label()) << "\"];\n";
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    os << "  n" << i << " -> n" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const TriangleRecord& t) {
  std::ostringstream os;
  os << "digraph triangle {\n";
  auto emit = [&](const std::vector<TriangleVertex>& vs, const std::vector<TriangleEdge>& es,
                  const std::string& prefix) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      os << "  " << prefix << i << " [label=\""
         << detail::dot_escape(vs[i].group.str() + " / " + vs[i].parameter.str()) << "\"];\n";
    for (const auto& e : es)
      os << "  " << prefix << e.from << " -> " << prefix << e.to << " [label=\"" << e.label
         << "\"];\n";
  };
  emit(t.vertices, t.edges, "p");
  if (t.dual_vertices) emit(*t.dual_vertices, t.dual_edges, "d");
  os << "}\n";
  return os.str();
}

}  // namespace arthurkit

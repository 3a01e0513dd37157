#pragma once

#include <nlohmann/json.hpp>

#include "arthurkit/endoscopy.hpp"
#include "arthurkit/jordan.hpp"
#include "arthurkit/kernel_cases.hpp"
#include "arthurkit/orbits.hpp"
#include "arthurkit/parameters.hpp"
#include "arthurkit/partition.hpp"
#include "arthurkit/spectral.hpp"

namespace arthurkit {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json(to_string(r));
}

inline Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (int x : p.parts()) arr.push_back(x);
  return arr;
}

inline Json to_json(const CuspidalDatum& t) {
  Json j;
  j["id"] = t.id;
  j["a"] = t.a;
  j["base"] = t.base == BaseField::Plain ? "plain" : "quadratic_ext";
  if (t.base == BaseField::Plain)
    j["duality"] = name(t.duality);
  else
    j["eta"] = t.eta.value();
  if (t.central_nonvanishing) j["L_half_nonzero"] = *t.central_nonvanishing;
  j["is_character"] = t.is_character;
  if (t.dual_id) j["dual_id"] = *t.dual_id;
  if (t.central_char_token) j["central_char"] = *t.central_char_token;
  return j;
}

inline CuspidalDatum cuspidal_from_json(const Json& j) {
  CuspidalDatum t;
  t.id = j.at("id").get<std::string>();
  t.a = j.at("a").get<int>();
  std::string base = j.value("base", "plain");
  if (base == "plain") {
    t.base = BaseField::Plain;
    std::string dual = j.value("duality", "orthogonal");
    if (dual == "orthogonal")
      t.duality = DualityType::Orthogonal;
    else if (dual == "symplectic")
      t.duality = DualityType::Symplectic;
    else
      throw DomainError("cuspidal datum: unknown duality '" + dual + "'");
  } else if (base == "quadratic_ext") {
    t.base = BaseField::QuadraticExt;
    t.eta = Sign::from_int(j.at("eta").get<int>());
  } else {
    throw DomainError("cuspidal datum: unknown base '" + base + "'");
  }
  if (j.contains("L_half_nonzero")) t.central_nonvanishing = j.at("L_half_nonzero").get<bool>();
  t.is_character = j.value("is_character", false);
  if (j.contains("dual_id")) t.dual_id = j.at("dual_id").get<std::string>();
  if (j.contains("central_char")) t.central_char_token = j.at("central_char").get<std::string>();
  if (t.is_character && !t.central_char_token) t.central_char_token = t.id;
  t.validate();
  return t;
}

/// Parameter wire format: {"summands": [{"tau": <id or datum>, "b": int}, ...]}
/// with an optional "pool" of cuspidal data for id references.
inline Json to_json(const ArthurParameter& psi) {
  Json j;
  Json arr = Json::array();
  Json pool = Json::array();
  std::set<std::string> seen;
  for (const auto& s : psi.summands()) {
    arr.push_back(Json{{"tau", s.tau.id}, {"b", s.b}});
    if (seen.insert(s.tau.id).second) pool.push_back(to_json(s.tau));
  }
  j["summands"] = arr;
  j["pool"] = pool;
  return j;
}

inline ArthurParameter parameter_from_json(const Json& j) {
  std::map<std::string, CuspidalDatum> pool;
  if (j.contains("pool"))
    for (const auto& p : j.at("pool")) {
      CuspidalDatum t = cuspidal_from_json(p);
      pool.emplace(t.id, t);
    }
  std::vector<SimpleParameter> summands;
  for (const auto& s : j.at("summands")) {
    int b = s.at("b").get<int>();
    const Json& tau = s.at("tau");
    if (tau.is_string()) {
      auto it = pool.find(tau.get<std::string>());
      if (it == pool.end())
        throw DomainError("parameter: tau id '" + tau.get<std::string>() + "' not in pool");
      summands.emplace_back(it->second, b);
    } else {
      summands.emplace_back(cuspidal_from_json(tau), b);
    }
  }
  return ArthurParameter(std::move(summands));
}

inline Json to_json(const GroupDatum& g) {
  Json j;
  j["family"] = name(g.family);
  j["n"] = g.n;
  j["size"] = g.defining_size();
  j["twisted_gl_size"] = g.twisted_gl_size();
  if (g.family == GroupFamily::SOeven && !g.eta.empty()) j["eta"] = g.eta;
  if (g.family == GroupFamily::U) j["kappa"] = g.kappa.value();
  j["label"] = g.str();
  return j;
}

/// Compact group token "Family:n[:decoration]", rank-based like GroupDatum.
inline GroupDatum group_from_token(const std::string& token) {
  std::vector<std::string> parts;
  std::istringstream is(token);
  std::string item;
  while (std::getline(is, item, ':')) parts.push_back(item);
  if (parts.size() < 2) throw DomainError("group token must be Family:n[:decoration]");
  GroupFamily fam = group_family_from_string(parts[0]);
  int n = 0;
  try {
    n = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw DomainError("group token: bad rank/size '" + parts[1] + "'");
  }
  switch (fam) {
    case GroupFamily::SOodd: return GroupDatum::so_odd(n);
    case GroupFamily::Sp: return GroupDatum::sp(n);
    case GroupFamily::Mp: return GroupDatum::mp(n);
    case GroupFamily::SOeven:
      return GroupDatum::so_even(n, parts.size() > 2 ? parts[2] : "");
    case GroupFamily::U: {
      Sign k = Sign::plus();
      if (parts.size() > 2) k = parts[2] == "-" || parts[2] == "-1" ? Sign::minus() : Sign::plus();
      return GroupDatum::unitary(n, k);
    }
  }
  throw DomainError("group token: unknown family");
}

inline Json to_json(const EndoscopyVariant& v) {
  Json j;
  j["target"] = to_json(v.target);
  j["factors"] = Json::array({to_json(v.factors.first), to_json(v.factors.second)});
  j["tag"] = v.tag;
  j["conjecture_basis"] = v.basis;
  return j;
}

inline Json to_json(const EndoscopyDatum& e) {
  Json j;
  j["target"] = to_json(e.target);
  j["factors"] = Json::array({to_json(e.factors.first), to_json(e.factors.second)});
  if (e.signs) j["signs"] = Json::array({e.signs->first.value(), e.signs->second.value()});
  if (e.eta_pair) j["eta_pair"] = Json::array({e.eta_pair->first, e.eta_pair->second});
  j["conjecture_basis"] = e.basis;
  if (!e.variants.empty()) {
    Json arr = Json::array();
    for (const auto& v : e.variants) arr.push_back(to_json(v));
    j["variants"] = arr;
  }
  return j;
}

inline Json to_json(const FormLabel& f) {
  Json j;
  j["dim"] = f.dim;
  j["token"] = f.token;
  if (f.invariant) j["invariant"] = *f.invariant;
  return j;
}

inline Json to_json(const WeightedGrading& g) {
  Json j;
  j["partition"] = to_json(g.partition);
  j["family"] = name(g.family);
  Json dims = Json::object();
  for (const auto& [k, v] : g.dims) dims[std::to_string(k)] = v;
  j["dims"] = dims;
  j["total_dim"] = g.total_dim();
  return j;
}

inline Json to_json(const StabilizerPair& s) {
  Json j;
  j["factors"] = Json::array({to_json(s.first), to_json(s.second)});
  if (s.q_d) j["q_d"] = to_json(*s.q_d);
  if (s.q_1) j["q_1"] = to_json(*s.q_1);
  return j;
}

inline Json to_json(const RationalOrbitKey& k) {
  Json j;
  j["partition"] = to_json(k.partition);
  j["q_d"] = k.q_d ? to_json(*k.q_d) : Json(nullptr);
  j["q_1"] = k.q_1 ? to_json(*k.q_1) : Json(nullptr);
  return j;
}

inline Json to_json(const LFactor& f) {
  Json j;
  switch (f.kind) {
    case LFactor::Kind::RankinSelberg: j["kind"] = "rankin_selberg"; break;
    case LFactor::Kind::Rho: j["kind"] = "rho"; break;
    case LFactor::Kind::RhoMinus: j["kind"] = "rho_minus"; break;
  }
  if (f.kind != LFactor::Kind::RankinSelberg) {
    j["symbol"] = name(f.rho);
    j["index"] = f.index;
  }
  j["slope"] = f.slope;
  j["intercept"] = to_json(f.intercept);
  j["display"] = f.str();
  return j;
}

inline Json to_json(const ResidualPoint& r) {
  Json j;
  j["s0"] = to_json(r.s0);
  j["square_integrable"] = r.square_integrable;
  return j;
}

inline Json to_json(const ConstructionCase& c) {
  Json j;
  j["conjecture_tag"] = c.conjecture_tag;
  j["target"] = to_json(c.target);
  j["tau"] = to_json(c.tau);
  j["a"] = c.a;
  j["b"] = c.b;
  j["c"] = c.c;
  j["d"] = c.d;
  j["ambient"] = to_json(c.ambient);
  j["psi0"] = to_json(c.psi0);
  j["coefficient"] = name(c.coefficient);
  j["endoscopy"] = to_json(c.endoscopy);
  Json cons = Json::array();
  for (const auto& [name_, ok] : c.constraints)
    cons.push_back(Json{{"name", name_}, {"satisfied", ok}});
  j["constraints"] = cons;
  j["all_constraints_satisfied"] = c.all_constraints_satisfied();
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const TowerNode& n) {
  Json j;
  j["level_b"] = n.level_b;
  j["group"] = to_json(n.group);
  j["parameter"] = to_json(n.parameter);
  j["subtracted"] = n.subtracted;
  return j;
}

inline Json to_json(const std::vector<TowerNode>& nodes) {
  Json arr = Json::array();
  for (const auto& n : nodes) arr.push_back(to_json(n));
  return arr;
}

inline Json to_json(const TriangleRecord& t) {
  Json j;
  auto vertices = [&](const std::vector<TriangleVertex>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs)
      arr.push_back(Json{{"group", to_json(v.group)}, {"parameter", to_json(v.parameter)}});
    return arr;
  };
  auto edges = [&](const std::vector<TriangleEdge>& es) {
    Json arr = Json::array();
    for (const auto& e : es)
      arr.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
    return arr;
  };
  j["vertices"] = vertices(t.vertices);
  j["edges"] = edges(t.edges);
  if (t.dual_vertices) {
    j["dual_vertices"] = vertices(*t.dual_vertices);
    j["dual_edges"] = edges(t.dual_edges);
  }
  return j;
}

inline Json to_json(const PoleProfile& p) {
  Json entries = Json::object();
  for (const auto& [id, poles] : p.entries) {
    Json arr = Json::array();
    for (const Rat& s : poles) arr.push_back(to_json(s));
    entries[id] = arr;
  }
  return Json{{"entries", entries}};
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("bad rational literal '" + s + "'");
  }
}

/// Profile wire format: {"entries": {id: [s, ...]}, "dims": [<cuspidal datum>, ...]}
inline PoleProfile profile_from_json(const Json& j, std::map<std::string, CuspidalDatum>* dims) {
  PoleProfile out;
  for (const auto& [id, arr] : j.at("entries").items()) {
    std::vector<Rat> poles;
    for (const auto& v : arr) poles.push_back(rat_from_json(v));
    std::sort(poles.begin(), poles.end(), std::greater<Rat>());
    out.entries[id] = std::move(poles);
  }
  if (dims && j.contains("dims"))
    for (const auto& d : j.at("dims")) {
      CuspidalDatum t = cuspidal_from_json(d);
      dims->emplace(t.id, t);
    }
  out.validate();
  return out;
}

}  // namespace arthurkit

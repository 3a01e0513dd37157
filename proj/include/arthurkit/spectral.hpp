#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arthurkit/common.hpp"
#include "arthurkit/parameters.hpp"

namespace arthurkit {

/// Second-order twist symbols entering the normalizing factor.
enum class RhoSymbol { AsaiPlus, AsaiMinus, Sym2, Lambda2 };

inline const char* name(RhoSymbol r) {
  switch (r) {
    case RhoSymbol::AsaiPlus: return "Asai+";
    case RhoSymbol::AsaiMinus: return "Asai-";
    case RhoSymbol::Sym2: return "Sym2";
    case RhoSymbol::Lambda2: return "Lambda2";
  }
  return "?";
}

inline std::string latex(RhoSymbol r) {
  switch (r) {
    case RhoSymbol::AsaiPlus: return "\\mathrm{Asai}^{+}";
    case RhoSymbol::AsaiMinus: return "\\mathrm{Asai}^{-}";
    case RhoSymbol::Sym2: return "\\mathrm{sym}^{2}";
    case RhoSymbol::Lambda2: return "\\wedge^{2}";
  }
  return "?";
}

/// (rho, rho^-) for the group family; the metaplectic row is not tabulated
/// and is refused rather than guessed.
inline std::pair<RhoSymbol, RhoSymbol> rho_pair(const GroupDatum& g) {
  switch (g.family) {
    case GroupFamily::U:
      return g.n % 2 == 0 ? std::pair{RhoSymbol::AsaiPlus, RhoSymbol::AsaiMinus}
                          : std::pair{RhoSymbol::AsaiMinus, RhoSymbol::AsaiPlus};
    case GroupFamily::SOodd: return {RhoSymbol::Sym2, RhoSymbol::Lambda2};
    case GroupFamily::Sp:
    case GroupFamily::SOeven: return {RhoSymbol::Lambda2, RhoSymbol::Sym2};
    case GroupFamily::Mp:
      throw DomainError("rho_pair: table not defined in eq-5.2 for Mp");
  }
  throw DomainError("rho_pair: unknown family");
}

/// One factor of the normalizer: an L-function evaluated at slope*s + intercept.
struct LFactor {
  enum class Kind { RankinSelberg, Rho, RhoMinus };
  Kind kind = Kind::RankinSelberg;
  RhoSymbol rho = RhoSymbol::Sym2;  // resolved symbol when kind != RankinSelberg
  int slope = 1;
  Rat intercept = 0;
  int index = 0;  // i for Rho/RhoMinus factors

  Rat shift_at(const Rat& s) const { return Rat(slope) * s + intercept; }

  std::string argument_str() const {
    std::ostringstream os;
    if (slope == 1)
      os << "s";
    else
      os << slope << "s";
    if (intercept != 0) os << (intercept > 0 ? "+" : "") << to_string(intercept);
    return os.str();
  }

  std::string str() const {
    switch (kind) {
      case Kind::RankinSelberg: return "L(" + argument_str() + ", tau x sigma)";
      case Kind::Rho: return "L(" + argument_str() + ", tau, " + name(rho) + ")";
      case Kind::RhoMinus: return "L(" + argument_str() + ", tau, " + name(rho) + ")";
    }
    return "?";
  }

  std::string latex_str() const {
    std::string arg;
    if (slope != 1) arg += std::to_string(slope);
    arg += "s";
    if (intercept != 0) arg += (intercept > 0 ? "+" : "") + to_latex(intercept);
    if (kind == Kind::RankinSelberg) return "L(" + arg + ",\\tau\\times\\sigma)";
    return "L(" + arg + ",\\tau," + latex(rho) + ")";
  }
};

/// The b+1 factors of the normalizer beta_{b,tau,sigma}(s): one Rankin-Selberg
/// factor at s + (b+1)/2, rho factors at e_{b,i}(s)+1 and rho^- factors at
/// e_{b,i}(s), where e_{b,i}(s) = 2s + b + 1 - 2i. Dropping the Rankin-Selberg
/// factor gives the n_0 = 0 regime.
inline std::vector<LFactor> beta_factors(const GroupDatum& g, int b,
                                         bool include_rankin_selberg = true) {
  if (b < 1) throw DomainError("beta_factors: b must be >= 1");
  auto [rho, rho_minus] = rho_pair(g);
  std::vector<LFactor> out;
  if (include_rankin_selberg) {
    LFactor rs;
    rs.kind = LFactor::Kind::RankinSelberg;
    rs.slope = 1;
    rs.intercept = Rat(b + 1, 2);
    out.push_back(rs);
  }
  for (int i = 1; i <= (b + 1) / 2; ++i) {  // ceil(b/2)
    LFactor f;
    f.kind = LFactor::Kind::Rho;
    f.rho = rho;
    f.slope = 2;
    f.intercept = Rat(b + 2 - 2 * i);
    f.index = i;
    out.push_back(f);
  }
  for (int i = 1; i <= b / 2; ++i) {  // floor(b/2)
    LFactor f;
    f.kind = LFactor::Kind::RhoMinus;
    f.rho = rho_minus;
    f.slope = 2;
    f.intercept = Rat(b + 1 - 2 * i);
    f.index = i;
    out.push_back(f);
  }
  return out;
}

inline std::string latex_product(const std::vector<LFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "\\,";
    out += factors[i].latex_str();
  }
  return out;
}

/// The four pole-location cases: rho vs rho^- pole at s=1, crossed with the
/// central-value / Rankin-Selberg-pole condition.
struct PoleCase {
  int case_id = 1;  // 1..4

  static PoleCase from_id(int id) {
    if (id < 1 || id > 4) throw DomainError("pole case must be 1..4");
    return PoleCase{id};
  }

  friend bool operator==(PoleCase a, PoleCase b) { return a.case_id == b.case_id; }
};

inline PoleCase pole_case(bool rho_has_pole, bool second_condition) {
  if (rho_has_pole) return PoleCase{second_condition ? 1 : 2};
  return PoleCase{second_condition ? 3 : 4};
}

/// Candidate pole set X^+: a descending step-1 progression from the case's top
/// value, intersected with (0, infinity). The hatted zero is omitted.
inline std::vector<Rat> x_plus(int b, PoleCase c) {
  if (b < 1) throw DomainError("x_plus: b must be >= 1");
  Rat top;
  switch (c.case_id) {
    case 1: top = Rat(b, 2); break;
    case 2: top = Rat(b - 2, 2); break;
    case 3: top = Rat(b + 1, 2); break;
    case 4: top = Rat(b - 1, 2); break;
    default: throw DomainError("x_plus: bad case");
  }
  std::vector<Rat> out;
  for (Rat s = top; s > 0; s -= 1) out.push_back(s);
  return out;
}

struct ResidualPoint {
  Rat s0;
  bool square_integrable = true;
};

/// Residual-point annotations: every point of X^+ carries a square-integrable
/// residue except s0 = (b-1)/2 in case (3).
inline std::vector<ResidualPoint> residual_points(int b, PoleCase c) {
  std::vector<ResidualPoint> out;
  for (const Rat& s0 : x_plus(b, c)) {
    bool sq = !(c.case_id == 3 && s0 == Rat(b - 1, 2));
    out.push_back({s0, sq});
  }
  return out;
}

}  // namespace arthurkit

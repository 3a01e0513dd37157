#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arthurkit/parameters.hpp"
#include "arthurkit/partition.hpp"

namespace arthurkit {

/// Torus weights on the defining module: each part d contributes the ladder
/// d-1, d-3, ..., 1-d.
inline std::vector<int> weights_of(const Partition& p) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(p.total()));
  for (int d : p.parts())
    for (int j = d - 1; j >= 1 - d; j -= 2) w.push_back(j);
  return w;
}

/// Adjoint grading of the Lie algebra under the sl2 torus of the orbit,
/// computed by weight pair counting on the defining module.
struct WeightedGrading {
  Partition partition;
  OrbitFamily family = OrbitFamily::A;
  std::vector<int> weights;
  std::map<int, long long> dims;  // eigenvalue -> dim g_j

  long long dim(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }

  long long total_dim() const {
    long long t = 0;
    for (const auto& [j, d] : dims) t += d;
    return t;
  }
};

inline WeightedGrading grading(OrbitFamily family, const Partition& p) {
  if (!is_valid(p, family))
    throw DomainError("grading: " + p.str() + " is not a valid " + name(family) + "-partition");
  WeightedGrading g;
  g.partition = p;
  g.family = family;
  g.weights = weights_of(p);
  const auto& w = g.weights;
  const std::size_t n = w.size();
  switch (family) {
    case OrbitFamily::A:  // gl: V (x) V^*
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) g.dims[w[i] - w[k]] += 1;
      break;
    case OrbitFamily::C:  // sp: Sym^2 V
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) g.dims[w[i] + w[k]] += 1;
      break;
    case OrbitFamily::B:
    case OrbitFamily::D:  // so: Lambda^2 V
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) g.dims[w[i] + w[k]] += 1;
      break;
  }
  return g;
}

/// Closed-form dimension of the ambient Lie algebra, for cross-checks.
inline long long lie_algebra_dim(OrbitFamily family, int module_size) {
  long long m = module_size;
  switch (family) {
    case OrbitFamily::A: return m * m;
    case OrbitFamily::B:
    case OrbitFamily::D: return m * (m - 1) / 2;
    case OrbitFamily::C: return m * (m + 1) / 2;
  }
  return 0;
}

struct UnipotentDims {
  long long dim_vx = 0;          // dim of the unipotent radical, sum over j >= 2
  long long dim_g1 = 0;          // dim g_1
  long long heisenberg_dim = 0;  // dim g_1 + 1
};

inline UnipotentDims unipotent_dims(const WeightedGrading& g) {
  UnipotentDims u;
  for (const auto& [j, d] : g.dims)
    if (j >= 2) u.dim_vx += d;
  u.dim_g1 = g.dim(1);
  u.heisenberg_dim = u.dim_g1 + 1;
  return u;
}

enum class CoefficientKind { Bessel, FourierJacobi };

inline const char* name(CoefficientKind k) {
  return k == CoefficientKind::Bessel ? "Bessel" : "FourierJacobi";
}

/// Builds [d^c 1^r]; rejects degenerate shapes.
inline Partition hook_partition(int d, int c, int r) {
  if (d < 1 || c < 1 || r < 0) throw DomainError("hook partition [d^c 1^r] needs d, c >= 1");
  std::vector<int> parts(static_cast<std::size_t>(c), d);
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return Partition(std::move(parts));
}

/// Bessel vs Fourier-Jacobi regime of the [d^c 1^r] coefficient: Fourier-Jacobi
/// exactly when g_1 is nonzero, which for r >= 1 happens exactly for even d.
inline CoefficientKind coefficient_kind(OrbitFamily family, int d, int c, int r) {
  if (r == 0) throw DomainError("coefficient_kind: degenerate: no 1-parts");
  Partition p = hook_partition(d, c, r);
  if (!is_valid(p, family))
    throw DomainError("coefficient_kind: " + p.str() + " is not " + name(family) + "-valid");
  return grading(family, p).dim(1) != 0 ? CoefficientKind::FourierJacobi : CoefficientKind::Bessel;
}

/// Opaque symbolic form label: a dimension plus an uninterpreted invariant token.
struct FormLabel {
  int dim = 0;
  std::string token;
  std::optional<std::string> invariant;

  std::string str() const {
    return token + "[" + std::to_string(dim) + (invariant ? ";" + *invariant : "") + "]";
  }
};

/// Stabilizer of the [d^c 1^{m-cd}] coefficient character inside the Levi,
/// with the symbolic form slots its parametrization carries.
struct StabilizerPair {
  GroupDatum first;
  GroupDatum second;
  std::optional<FormLabel> q_d;
  std::optional<FormLabel> q_1;
};

/// F-rational orbit key for the stable orbit [d^c 1^*]: which of the two form
/// slots are present depends on the family and the parity of d.
struct RationalOrbitKey {
  Partition partition;
  std::optional<FormLabel> q_d;
  std::optional<FormLabel> q_1;
};

namespace detail {

/// Family of the ambient group of a grading/stabilizer computation, given as
/// the orbit-partition family. Mp is handled as C with metaplectic factors.
inline void check_hook_against_family(OrbitFamily fam, int m_size, int d, int c) {
  if (d < 1) throw DomainError("sec-5.2: requires d >= 1");
  if (c < 1) throw DomainError("sec-5.2: requires c >= 1");
  int r = m_size - c * d;
  if (r < 0) throw DomainError("sec-5.2: m_size - c*d must be >= 0");
  switch (fam) {
    case OrbitFamily::C:
      if (m_size % 2 != 0) throw DomainError("sec-5.2 symplectic case: size must be even");
      if (d % 2 == 1 && c % 2 != 0)
        throw DomainError("sec-5.2 symplectic case: d odd forces c even");
      break;
    case OrbitFamily::B:
      if (m_size % 2 != 1) throw DomainError("sec-5.2 odd orthogonal case: size must be odd");
      if (d % 2 == 0 && c % 2 != 0)
        throw DomainError("sec-5.2 odd orthogonal case: d even forces c even");
      break;
    case OrbitFamily::D:
      if (m_size % 2 != 0) throw DomainError("sec-5.2 even orthogonal case: size must be even");
      if (d % 2 == 0 && c % 2 != 0)
        throw DomainError("sec-5.2 even orthogonal case: d even forces c even");
      break;
    case OrbitFamily::A:
      break;  // unitary: no parity constraint on c
  }
}

}  // namespace detail

/// Orbit-partition family used for a classical group family.
inline OrbitFamily orbit_family_of(GroupFamily f) {
  switch (f) {
    case GroupFamily::Sp:
    case GroupFamily::Mp: return OrbitFamily::C;
    case GroupFamily::SOodd: return OrbitFamily::B;
    case GroupFamily::SOeven: return OrbitFamily::D;
    case GroupFamily::U: return OrbitFamily::A;
  }
  return OrbitFamily::A;
}

inline StabilizerPair stabilizer(GroupFamily group_family, int m_size, int d, int c) {
  OrbitFamily fam = orbit_family_of(group_family);
  if (group_family == GroupFamily::Mp && d % 2 == 0)
    throw DomainError("sec-5.2: metaplectic stabilizers are tabulated for odd d only");
  detail::check_hook_against_family(fam, m_size, d, c);
  const int rest = m_size - c * d;
  StabilizerPair out;
  auto q_d = FormLabel{c, "q_d", std::nullopt};
  auto q_1 = FormLabel{rest, "q_1", std::nullopt};
  switch (group_family) {
    case GroupFamily::Sp:
      if (d % 2 == 1) {
        out.first = GroupDatum::sp(c / 2);
        out.second = GroupDatum::sp(rest / 2);
      } else {
        out.first = GroupDatum::so_size(c, "eta_q_d");
        out.second = GroupDatum::sp(rest / 2);
        out.q_d = q_d;
      }
      break;
    case GroupFamily::Mp:
      out.first = GroupDatum::mp(c / 2);
      out.second = GroupDatum::mp(rest / 2);
      break;
    case GroupFamily::SOodd:
    case GroupFamily::SOeven:
      if (d % 2 == 0) {
        out.first = GroupDatum::sp(c / 2);
        out.second = GroupDatum::so_size(rest, "eta_q_1");
        out.q_1 = q_1;
      } else {
        out.first = GroupDatum::so_size(c, "eta_q_d");
        out.second = GroupDatum::so_size(rest, "eta_q_1");
        out.q_d = q_d;
        out.q_1 = q_1;
      }
      break;
    case GroupFamily::U:
      out.first = GroupDatum::unitary(c, Sign::plus());
      out.second = GroupDatum::unitary(rest, Sign::plus());
      out.q_d = q_d;
      out.q_1 = q_1;
      break;
  }
  return out;
}

inline std::vector<RationalOrbitKey> rational_orbit_keys(GroupFamily group_family, int d, int c,
                                                         int m_size) {
  OrbitFamily fam = orbit_family_of(group_family);
  detail::check_hook_against_family(fam, m_size, d, c);
  const int rest = m_size - c * d;
  Partition p = hook_partition(d, c, rest);
  RationalOrbitKey key;
  key.partition = p;
  switch (group_family) {
    case GroupFamily::Sp:
    case GroupFamily::Mp:
      if (d % 2 == 0) key.q_d = FormLabel{c, "q_d", std::nullopt};
      // d odd: single rational orbit, both slots empty
      break;
    case GroupFamily::SOodd:
    case GroupFamily::SOeven: {
      // d odd constrains the pair q_d + q_1; d even constrains q_1 alone.
      bool odd_orth = group_family == GroupFamily::SOodd;
      if (d % 2 == 1) {
        key.q_d = FormLabel{c, "q_d", std::nullopt};
        key.q_1 = FormLabel{rest, "q_1",
                            odd_orth ? "pair-split:q_d+q_1" : "pair-kernel:q_V"};
      } else {
        key.q_1 = FormLabel{rest, "q_1", odd_orth ? "split" : "kernel:q_V"};
      }
      break;
    }
    case GroupFamily::U:
      key.q_d = FormLabel{c, "q_d", std::nullopt};
      key.q_1 = FormLabel{rest, "q_1",
                          d % 2 == 0 ? "kernel:q_V" : "pair-kernel:q_V"};
      break;
  }
  return {key};
}

}  // namespace arthurkit

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arthurkit/common.hpp"
#include "arthurkit/parameters.hpp"

namespace arthurkit {

/// Pole locations of the partial tensor L-functions L(s, pi x tau), per tau id.
/// Every location is (b+1)/2 for a summand (tau, b); poles are at most simple,
/// so for elliptic parameters each multiset is actually a set.
struct PoleProfile {
  std::map<std::string, std::vector<Rat>> entries;  // descending per tau

  void validate() const {
    for (const auto& [id, poles] : entries) {
      for (const Rat& s : poles) {
        if (s < 1 || (2 * s).denominator() != 1)
          throw DomainError("pole profile: location " + to_string(s) + " for '" + id +
                            "' is not a half-integer >= 1");
      }
      for (std::size_t i = 0; i + 1 < poles.size(); ++i)
        if (!(poles[i] > poles[i + 1]))
          throw DomainError("pole profile: locations for '" + id +
                            "' must be strictly decreasing (simple poles)");
    }
  }
};

namespace detail {
inline void require_elliptic_self_dual(const ArthurParameter& psi) {
  if (!is_elliptic(psi)) throw DomainError("parameter is not elliptic");
  for (const auto& s : psi.summands())
    if (!s.tau.self_dual()) throw DomainError("summand " + s.str() + " is not self-dual");
}
}  // namespace detail

/// Each summand (tau, b) contributes exactly the pole at (b+1)/2.
inline PoleProfile pole_profile(const ArthurParameter& psi) {
  detail::require_elliptic_self_dual(psi);
  PoleProfile out;
  for (const auto& s : psi.summands()) out.entries[s.tau.id].push_back(Rat(s.b + 1, 2));
  for (auto& [id, poles] : out.entries) std::sort(poles.begin(), poles.end(), std::greater<Rat>());
  out.validate();
  return out;
}

inline std::set<std::string> t_set(const ArthurParameter& psi) {
  detail::require_elliptic_self_dual(psi);
  std::set<std::string> out;
  for (const auto& s : psi.summands()) out.insert(s.tau.id);
  return out;
}

/// Descending b-values of the tau_id-summands; they must share one parity.
inline std::vector<int> jordan_blocks(const ArthurParameter& psi, const std::string& tau_id) {
  detail::require_elliptic_self_dual(psi);
  std::vector<int> bs;
  for (const auto& s : psi.summands())
    if (s.tau.id == tau_id) bs.push_back(s.b);
  if (bs.empty()) throw DomainError("jordan_blocks: '" + tau_id + "' does not occur");
  std::sort(bs.begin(), bs.end(), std::greater<int>());
  for (std::size_t i = 0; i + 1 < bs.size(); ++i)
    if ((bs[i] - bs[i + 1]) % 2 != 0)
      throw DomainError("jordan_blocks: parameter violates same-parity rule for '" + tau_id + "'");
  return bs;
}

/// For each tau id, the summand with maximal b, ordered by tau id.
inline std::vector<SimpleParameter> maximal_summands(const ArthurParameter& psi) {
  if (!is_elliptic(psi)) throw DomainError("maximal_summands: parameter is not elliptic");
  std::map<std::string, SimpleParameter> best;
  for (const auto& s : psi.summands()) {
    auto it = best.find(s.tau.id);
    if (it == best.end())
      best.emplace(s.tau.id, s);
    else if (it->second.b < s.b)
      it->second = s;
  }
  std::vector<SimpleParameter> out;
  for (const auto& [id, s] : best) out.push_back(s);
  return out;
}

/// Rebuilds psi from its pole profile: each pole at s gives a summand
/// (tau, 2s-1). Checks the total GL size and the per-tau parity rule.
inline ArthurParameter reconstruct(const PoleProfile& profile,
                                   const std::map<std::string, CuspidalDatum>& dims, int N) {
  profile.validate();
  std::vector<SimpleParameter> summands;
  int total = 0;
  for (const auto& [id, poles] : profile.entries) {
    auto it = dims.find(id);
    if (it == dims.end()) throw DomainError("reconstruct: unknown tau id '" + id + "'");
    std::vector<int> bs;
    for (const Rat& s : poles) {
      Rat b = 2 * s - 1;
      bs.push_back(static_cast<int>(b.numerator()));
    }
    for (std::size_t i = 0; i + 1 < bs.size(); ++i)
      if ((bs[i] - bs[i + 1]) % 2 != 0)
        throw DomainError("reconstruct: poles for '" + id + "' violate the same-parity rule");
    for (int b : bs) {
      summands.emplace_back(it->second, b);
      total += it->second.a * b;
    }
  }
  if (total != N)
    throw DomainError("reconstruct: N mismatch: parameter incomplete (" + std::to_string(total) +
                      " != " + std::to_string(N) + ")");
  ArthurParameter psi(std::move(summands));
  if (!is_elliptic(psi)) throw DomainError("reconstruct: repeated poles give a non-elliptic sum");
  return psi;
}

}  // namespace arthurkit

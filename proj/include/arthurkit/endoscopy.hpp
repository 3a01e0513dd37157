#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arthurkit/parameters.hpp"

namespace arthurkit {

/// Alternative factorization shape attached to an endoscopy datum (the
/// metaplectic variants are never merged with the orthogonal shapes).
struct EndoscopyVariant {
  GroupDatum target;
  std::pair<GroupDatum, GroupDatum> factors;
  std::string tag;    // e.g. "Mp"
  std::string basis;  // citation tag
};

/// Elliptic (or twisted elliptic) endoscopy datum G0 x H -> G with the
/// decorations the group family needs: a sign pair for unitary groups, a
/// symbolic character pair for even orthogonal groups.
struct EndoscopyDatum {
  GroupDatum target;
  std::pair<GroupDatum, GroupDatum> factors;
  std::optional<std::pair<Sign, Sign>> signs;
  std::optional<std::pair<std::string, std::string>> eta_pair;
  std::string basis;  // citation tag, e.g. "eq-3.6"
  std::vector<EndoscopyVariant> variants;

  std::string str() const {
    std::ostringstream os;
    os << factors.first.str() << " x " << factors.second.str() << " -> " << target.str();
    return os.str();
  }
};

namespace detail {

inline void check_parity_rule(bool ok, const std::string& rule) {
  if (!ok) throw DomainError("endoscopy parity rule violated: " + rule);
}

}  // namespace detail

/// The endoscopy factorization of G carried by psi1 = (tau, b) against the
/// complement psi2, per the case tables for the five families.
inline EndoscopyDatum elliptic_decompose(const GroupDatum& G, const SimpleParameter& psi1,
                                         const ArthurParameter& psi2) {
  const ArthurParameter psi = boxplus(psi2, psi1);
  {
    auto groups = classify(psi, G.family == GroupFamily::U ? std::optional<Sign>(G.kappa)
                                                           : std::nullopt);
    bool found = false;
    for (const auto& g : groups)
      if (g.same_shape(G)) found = true;
    if (!found)
      throw DomainError("elliptic_decompose: " + psi.str() + " does not classify into " + G.str());
  }

  const int a = psi1.tau.a;
  const int b = psi1.b;
  const int ab = a * b;
  const int N = G.twisted_gl_size();
  const bool a_even = a % 2 == 0;

  EndoscopyDatum out;
  out.target = G;

  switch (G.family) {
    case GroupFamily::SOodd: {
      // (tau,b) of symplectic type; both factors odd orthogonal.
      detail::check_parity_rule(ab % 2 == 0, "sec-3.1: ab must be even for SO_odd targets");
      if (a_even) {
        detail::check_parity_rule(
            (psi1.tau.duality == DualityType::Symplectic) == (b % 2 == 1),
            "sec-3.1 (a=2e): tau symplectic <=> b odd");
        out.basis = "eq-3.2";
      } else {
        detail::check_parity_rule(psi1.tau.duality == DualityType::Orthogonal && b % 2 == 0,
                                  "sec-3.1 (a=2e+1): tau orthogonal and b even");
        out.basis = "eq-3.3";
      }
      out.factors = {GroupDatum::so_odd(ab / 2), GroupDatum::so_odd((N - ab) / 2)};
      out.variants.push_back({GroupDatum::mp(N / 2),
                              {GroupDatum::so_odd(ab / 2), GroupDatum::mp((N - ab) / 2)},
                              "Mp",
                              "sec-3.1-liw11"});
      out.variants.push_back({GroupDatum::mp(N / 2),
                              {GroupDatum::mp(ab / 2), GroupDatum::mp((N - ab) / 2)},
                              "Mp",
                              "sec-3.1-liw11"});
      if (!a_even)
        out.variants.push_back({GroupDatum::so_odd(N / 2),
                                {GroupDatum::mp(ab / 2), GroupDatum::mp((N - ab) / 2)},
                                "Mp",
                                "eq-3.4"});
      break;
    }
    case GroupFamily::Mp: {
      detail::check_parity_rule(ab % 2 == 0, "sec-3.1: ab must be even for Mp targets");
      if (a_even) {
        detail::check_parity_rule(
            (psi1.tau.duality == DualityType::Symplectic) == (b % 2 == 1),
            "sec-3.1 (a=2e): tau symplectic <=> b odd");
        out.factors = {GroupDatum::so_odd(ab / 2), GroupDatum::mp((N - ab) / 2)};
        out.basis = "sec-3.1-liw11";
      } else {
        detail::check_parity_rule(psi1.tau.duality == DualityType::Orthogonal && b % 2 == 0,
                                  "sec-3.1 (a=2e+1): tau orthogonal and b even");
        out.factors = {GroupDatum::so_odd(ab / 2), GroupDatum::so_odd((N - ab) / 2)};
        out.basis = "sec-3.1-liw11";
      }
      out.variants.push_back({G,
                              {GroupDatum::mp(ab / 2), GroupDatum::mp((N - ab) / 2)},
                              "Mp",
                              "sec-3.1-liw11"});
      break;
    }
    case GroupFamily::Sp: {
      // N = 2n+1; (tau,b) of orthogonal type.
      if (a_even) {
        detail::check_parity_rule(
            (psi1.tau.duality == DualityType::Symplectic) == (b % 2 == 0),
            "eq-3.6 (a=2e): tau symplectic <=> b even");
        out.factors = {GroupDatum::so_even(ab / 2, eta_label(ArthurParameter::simple(psi1.tau, b))),
                       GroupDatum::sp((N - 1 - ab) / 2)};
        out.basis = "eq-3.6";
      } else {
        detail::check_parity_rule(psi1.tau.duality == DualityType::Orthogonal && b % 2 == 1,
                                  "eq-3.7 (a=2e+1): tau orthogonal and b odd");
        // ab odd: the complement SO_{2n-ab+1} has even size, an even orthogonal factor.
        out.factors = {GroupDatum::sp((ab - 1) / 2),
                       GroupDatum::so_even((N - ab) / 2, eta_label(psi2))};
        out.basis = "eq-3.7";
      }
      break;
    }
    case GroupFamily::SOeven: {
      if (a_even) {
        detail::check_parity_rule(
            (psi1.tau.duality == DualityType::Symplectic) == (b % 2 == 0),
            "eq-3.10 (a=2e): tau symplectic <=> b even");
        std::string eta1 = eta_label(ArthurParameter::simple(psi1.tau, b));
        std::string eta2 = eta_label(psi2);
        out.factors = {GroupDatum::so_even(ab / 2, eta1), GroupDatum::so_even((N - ab) / 2, eta2)};
        out.eta_pair = {eta1, eta2};
        out.basis = "eq-3.10";
        if (out.target.eta.empty()) out.target.eta = quadratic_product_label({eta1, eta2});
      } else {
        detail::check_parity_rule(psi1.tau.duality == DualityType::Orthogonal && b % 2 == 1,
                                  "sec-3.3 twisted (a=2e+1): tau orthogonal and b odd");
        detail::check_parity_rule(ab % 2 == 1, "sec-3.3 twisted: ab must be odd");
        out.factors = {GroupDatum::sp((ab - 1) / 2), GroupDatum::sp((N - ab - 1) / 2)};
        out.basis = "sec-3.3-twisted";
      }
      break;
    }
    case GroupFamily::U: {
      Sign k1, k2;
      if (N % 2 == 0) {
        k1 = Sign::pow_minus_one(ab);
        k2 = Sign::pow_minus_one(ab);
        out.basis = "eq-3.12";
      } else {
        k1 = Sign::pow_minus_one(ab + 1);
        k2 = Sign::pow_minus_one(ab);
        out.basis = "eq-3.13";
      }
      out.factors = {GroupDatum::unitary(ab, k1), GroupDatum::unitary(N - ab, k2)};
      out.signs = {k1, k2};
      break;
    }
  }
  return out;
}

namespace detail {

inline bool shape_allowed(const EndoscopyDatum& e) {
  GroupFamily t = e.target.family;
  GroupFamily f1 = e.factors.first.family;
  GroupFamily f2 = e.factors.second.family;
  auto is = [&](GroupFamily x, GroupFamily y) {
    return (f1 == x && f2 == y) || (f1 == y && f2 == x);
  };
  switch (t) {
    case GroupFamily::SOodd:
      return is(GroupFamily::SOodd, GroupFamily::SOodd) || is(GroupFamily::Mp, GroupFamily::Mp);
    case GroupFamily::Sp:
      return is(GroupFamily::SOeven, GroupFamily::Sp);
    case GroupFamily::SOeven:
      return is(GroupFamily::SOeven, GroupFamily::SOeven) || is(GroupFamily::Sp, GroupFamily::Sp);
    case GroupFamily::Mp:
      return is(GroupFamily::SOodd, GroupFamily::Mp) || is(GroupFamily::Mp, GroupFamily::Mp) ||
             is(GroupFamily::SOodd, GroupFamily::SOodd);
    case GroupFamily::U:
      return f1 == GroupFamily::U && f2 == GroupFamily::U;
  }
  return false;
}

}  // namespace detail

/// Structural validity: factor-shape legality, the twisted-GL size additivity,
/// the unitary sign rule and the even-orthogonal character product.
inline bool validate(const EndoscopyDatum& e, std::vector<std::string>* reasons = nullptr) {
  bool ok = true;
  auto fail = [&](const std::string& r) {
    ok = false;
    if (reasons) reasons->push_back(r);
  };

  if (!detail::shape_allowed(e))
    fail("factor families (" + std::string(name(e.factors.first.family)) + "," +
         name(e.factors.second.family) + ") are not an endoscopy shape for " +
         name(e.target.family));

  int sum = e.factors.first.twisted_gl_size() + e.factors.second.twisted_gl_size();
  if (sum != e.target.twisted_gl_size())
    fail("twisted GL sizes do not add up: " + std::to_string(sum) +
         " != " + std::to_string(e.target.twisted_gl_size()));

  if (e.target.family == GroupFamily::U) {
    int N = e.target.n;
    if (!e.signs) {
      fail("unitary datum lacks the sign pair");
    } else {
      if (e.signs->first != Sign::pow_minus_one(N - e.factors.first.n))
        fail("unitary sign rule violated for factor 1: kappa_1 != (-1)^(N-N_1)");
      if (e.signs->second != Sign::pow_minus_one(N - e.factors.second.n))
        fail("unitary sign rule violated for factor 2: kappa_2 != (-1)^(N-N_2)");
    }
  }

  if (e.target.family == GroupFamily::SOeven && e.eta_pair) {
    std::string prod = quadratic_product_label({e.eta_pair->first, e.eta_pair->second});
    std::string target_eta = e.target.eta.empty() ? "1" : e.target.eta;
    if (prod != target_eta)
      fail("character labels do not multiply to the target: " + prod + " != " + target_eta);
  }

  return ok;
}

/// All elliptic-endoscopy splitting shapes of G, decorations symbolic.
inline std::vector<EndoscopyDatum> enumerate_elliptic(const GroupDatum& G) {
  std::vector<EndoscopyDatum> out;
  switch (G.family) {
    case GroupFamily::SOodd: {
      int N = 2 * G.n;
      for (int n1 = 0; n1 <= N / 2; n1 += 2) {
        EndoscopyDatum e;
        e.target = G;
        e.factors = {GroupDatum::so_odd(n1 / 2), GroupDatum::so_odd((N - n1) / 2)};
        e.basis = "eq-3.2";
        out.push_back(std::move(e));
      }
      break;
    }
    case GroupFamily::Mp: {
      int N = 2 * G.n;
      for (int n1 = 0; n1 <= N; n1 += 2) {
        EndoscopyDatum e;
        e.target = G;
        e.factors = {GroupDatum::so_odd(n1 / 2), GroupDatum::mp((N - n1) / 2)};
        e.basis = "sec-3.1-liw11";
        e.variants.push_back({G,
                              {GroupDatum::mp(n1 / 2), GroupDatum::mp((N - n1) / 2)},
                              "Mp",
                              "sec-3.1-liw11"});
        out.push_back(std::move(e));
      }
      break;
    }
    case GroupFamily::Sp: {
      int N = 2 * G.n + 1;
      for (int n1 = 0; n1 <= N; ++n1) {
        EndoscopyDatum e;
        e.target = G;
        if (n1 % 2 == 0) {
          e.factors = {GroupDatum::so_even(n1 / 2, "eta1'"), GroupDatum::sp((N - n1 - 1) / 2)};
          e.basis = "eq-3.6";
        } else {
          e.factors = {GroupDatum::sp((n1 - 1) / 2), GroupDatum::so_even((N - n1) / 2, "eta1'")};
          e.basis = "eq-3.7";
        }
        out.push_back(std::move(e));
      }
      break;
    }
    case GroupFamily::SOeven: {
      int N = 2 * G.n;
      std::string target_eta = G.eta.empty() ? "1" : G.eta;
      for (int n1 = 0; n1 <= N / 2; n1 += 2) {
        EndoscopyDatum e;
        e.target = G;
        // Free symbolic pair whose product is the target label by construction.
        std::string eta1 = "eta1'";
        std::string eta2 = quadratic_product_label({target_eta, eta1});
        e.factors = {GroupDatum::so_even(n1 / 2, eta1), GroupDatum::so_even((N - n1) / 2, eta2)};
        e.eta_pair = {eta1, eta2};
        e.basis = "eq-3.8";
        out.push_back(std::move(e));
      }
      for (int n1 = 1; n1 <= N / 2; n1 += 2) {
        EndoscopyDatum e;
        e.target = G;
        e.factors = {GroupDatum::sp((n1 - 1) / 2), GroupDatum::sp((N - n1 - 1) / 2)};
        e.basis = "eq-3.9";
        out.push_back(std::move(e));
      }
      break;
    }
    case GroupFamily::U: {
      int N = G.n;
      for (int n1 = 0; 2 * n1 <= N; ++n1) {
        EndoscopyDatum e;
        e.target = G;
        Sign k1 = Sign::pow_minus_one(N - n1);
        Sign k2 = Sign::pow_minus_one(N - (N - n1));
        e.factors = {GroupDatum::unitary(n1, k1), GroupDatum::unitary(N - n1, k2)};
        e.signs = {k1, k2};
        e.basis = "eq-2.1.12";
        out.push_back(std::move(e));
      }
      break;
    }
  }
  return out;
}

}  // namespace arthurkit

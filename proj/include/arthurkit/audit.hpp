#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "arthurkit/endoscopy.hpp"
#include "arthurkit/jordan.hpp"
#include "arthurkit/kernel_cases.hpp"
#include "arthurkit/orbits.hpp"
#include "arthurkit/parameters.hpp"
#include "arthurkit/partition.hpp"
#include "arthurkit/spectral.hpp"

namespace arthurkit {

struct AuditConfig {
  int endoscopy_max_n = 12;   // GL size bound for the endoscopy sweep
  int jordan_max_n = 16;      // GL size bound for the reconstruction sweep
  int max_summands = 3;
  int collapse_max_total = 20;
  int grading_max_total = 24;
  int kernel_max_a = 6;
  int kernel_max_b = 5;
  int kernel_max_c = 6;
  std::vector<CuspidalDatum> tau_pool;

  static AuditConfig defaults() {
    AuditConfig c;
    c.tau_pool = default_pool();
    return c;
  }

  static std::vector<CuspidalDatum> default_pool() {
    auto chi = CuspidalDatum::character("1");
    auto sig = CuspidalDatum::symplectic("sig2", 2);
    sig.central_nonvanishing = true;
    auto rho = CuspidalDatum::orthogonal("rho3", 3);
    return {chi, sig, rho};
  }
};

struct SweepResult {
  SweepResult() = default;
  explicit SweepResult(std::string name_) : name(std::move(name_)) {}

  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // first few failure details

  void fail(const std::string& msg) {
    ++failures;
    if (messages.size() < 5) messages.push_back(msg);
  }
};

struct AuditReport {
  std::vector<SweepResult> sweeps;

  long long total_failures() const {
    long long t = 0;
    for (const auto& s : sweeps) t += s.failures;
    return t;
  }

  std::string render_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < sweeps.size(); ++i) {
      const auto& s = sweeps[i];
      os << "[" << (s.failures == 0 ? "pass" : "FAIL") << "] " << s.name << ": " << s.checked
         << " checks, " << s.failures << " failures\n";
      for (const auto& m : s.messages) os << "       " << m << "\n";
    }
    os << "summary: " << sweeps.size() << " sweeps, " << total_failures() << " failures\n";
    return os.str();
  }
};

/// All elliptic formal sums of distinct (tau, b) pairs from the pool with GL
/// size at most max_n and at most max_summands summands, deterministic order.
inline std::vector<ArthurParameter> enumerate_elliptic_parameters(
    const std::vector<CuspidalDatum>& pool, int max_n, int max_summands) {
  std::vector<SimpleParameter> choices;
  for (const auto& tau : pool)
    for (int b = 1; b * tau.a <= max_n; ++b) choices.emplace_back(tau, b);
  std::sort(choices.begin(), choices.end());

  std::vector<ArthurParameter> out;
  std::vector<SimpleParameter> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int size_left) {
    if (!cur.empty()) out.push_back(ArthurParameter(cur));
    if (static_cast<int>(cur.size()) == max_summands) return;
    for (std::size_t i = from; i < choices.size(); ++i) {
      int sz = choices[i].gl_size();
      if (sz > size_left) continue;
      cur.push_back(choices[i]);
      rec(i + 1, size_left - sz);
      cur.pop_back();
    }
  };
  rec(0, max_n);
  return out;
}

namespace audit_detail {

inline SweepResult transpose_involution() {
  SweepResult r{"partitions/transpose-involution"};
  for (int n = 0; n <= 30; ++n)
    for (const auto& p : enumerate_partitions(n, OrbitFamily::A)) {
      ++r.checked;
      if (transpose(transpose(p)) != p) r.fail("transpose not involutive at " + p.str());
    }
  return r;
}

inline SweepResult collapse_idempotent(const AuditConfig& cfg) {
  SweepResult r{"partitions/collapse-idempotent-dominated"};
  for (OrbitFamily fam : {OrbitFamily::B, OrbitFamily::C, OrbitFamily::D}) {
    int parity = fam == OrbitFamily::B ? 1 : 0;
    for (int n = parity; n <= cfg.collapse_max_total; n += 2) {
      for (const auto& p : enumerate_partitions(n, OrbitFamily::A)) {
        ++r.checked;
        Partition q = collapse(p, fam);
        if (!is_valid(q, fam)) r.fail("collapse output invalid at " + p.str());
        if (collapse(q, fam) != q) r.fail("collapse not idempotent at " + p.str());
        if (!dominates(p, q)) r.fail("collapse not dominated at " + p.str());
        if (is_valid(p, fam) && q != p) r.fail("collapse moved a valid partition " + p.str());
      }
    }
  }
  return r;
}

inline SweepResult bv_golden_forms() {
  SweepResult r{"partitions/bv-dual-golden-forms"};
  auto rep = [](int value, int count) { return std::vector<int>(count, value); };
  for (int a = 1; a <= 40; ++a)
    for (int b = 1; a * b <= 40; ++b) {
      Partition p(rep(b, a));  // [b^a]
      // C -> B with a even: [(a+1)a^(b-2)(a-1)1] for even b, [(a+1)a^(b-1)] for odd b
      if (a % 2 == 0) {
        ++r.checked;
        Partition got = bv_dual(p, OrbitFamily::C, OrbitFamily::B);
        std::vector<int> want;
        if (b % 2 == 0) {
          want.push_back(a + 1);
          auto mid = rep(a, b - 2);
          want.insert(want.end(), mid.begin(), mid.end());
          want.push_back(a - 1);
          want.push_back(1);
        } else {
          want.push_back(a + 1);
          auto mid = rep(a, b - 1);
          want.insert(want.end(), mid.begin(), mid.end());
        }
        if (got != Partition::from_unsorted(want))
          r.fail("C->B mismatch at [b^a], a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
      // D -> D with a even: [a^b] for even b, [a^(b-1)(a-1)1] for odd b
      if (a % 2 == 0) {
        ++r.checked;
        Partition got = bv_dual(p, OrbitFamily::D, OrbitFamily::D);
        std::vector<int> want;
        if (b % 2 == 0) {
          want = rep(a, b);
        } else {
          want = rep(a, b - 1);
          want.push_back(a - 1);
          want.push_back(1);
        }
        if (got != Partition::from_unsorted(want))
          r.fail("D->D mismatch at [b^a], a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
      // B -> C with a, b odd: [a^(b-1)(a-1)]
      if (a % 2 == 1 && b % 2 == 1) {
        ++r.checked;
        Partition got = bv_dual(p, OrbitFamily::B, OrbitFamily::C);
        std::vector<int> want = rep(a, b - 1);
        want.push_back(a - 1);
        if (got != Partition::from_unsorted(want))
          r.fail("B->C mismatch at [b^a], a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
      // A -> A: transpose
      {
        ++r.checked;
        if (bv_dual(p, OrbitFamily::A, OrbitFamily::A) != Partition(rep(a, b)))
          r.fail("A->A mismatch at [b^a], a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  return r;
}

inline SweepResult bv_order_reversing() {
  SweepResult r{"partitions/bv-dual-order-reversing"};
  for (int n = 2; n <= 12; n += 2) {
    auto ps = enumerate_partitions(n, OrbitFamily::C);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        if (!dominates(p, q)) continue;
        ++r.checked;
        Partition dp = bv_dual(p, OrbitFamily::C, OrbitFamily::B);
        Partition dq = bv_dual(q, OrbitFamily::C, OrbitFamily::B);
        if (!dominates(dq, dp)) r.fail("C->B not order-reversing at " + p.str() + " vs " + q.str());
      }
  }
  return r;
}

inline SweepResult kappa_identity() {
  SweepResult r{"parameters/kappa-ab-identity"};
  for (Sign ka : {Sign::plus(), Sign::minus()})
    for (int a = 1; a <= 30; ++a)
      for (int b = 1; a * b <= 30; ++b) {
        ++r.checked;
        Sign eta_tau = ka * Sign::pow_minus_one(a - 1);
        Sign lhs = kappa_ab(ka, a, b) * Sign::pow_minus_one(a * b - 1);
        Sign rhs = eta_tau * Sign::pow_minus_one(b - 1);
        if (lhs != rhs)
          r.fail("kappa identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  return r;
}

inline SweepResult conjugate_sign_identity() {
  SweepResult r{"parameters/conjugate-sign-vs-kappa"};
  for (Sign ka : {Sign::plus(), Sign::minus()})
    for (int a = 1; a <= 30; ++a)
      for (int b = 1; a * b <= 30; ++b) {
        ++r.checked;
        CuspidalDatum tau =
            CuspidalDatum::conjugate_self_dual("t", a, ka * Sign::pow_minus_one(a - 1));
        Sign got = conjugate_sign(SimpleParameter(tau, b));
        Sign want = kappa_ab(ka, a, b) * Sign::pow_minus_one(a * b - 1);
        if (got != want)
          r.fail("sign mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  return r;
}

inline SweepResult classify_consistency(const AuditConfig& cfg) {
  SweepResult r{"parameters/classify-twisted-gl-size"};
  auto params =
      enumerate_elliptic_parameters(cfg.tau_pool, cfg.endoscopy_max_n, cfg.max_summands);
  for (const auto& psi : params) {
    auto groups = classify(psi);
    ++r.checked;
    for (const auto& g : groups) {
      if (g.twisted_gl_size() != psi.gl_size())
        r.fail("twisted GL size mismatch for " + psi.str() + " in " + g.str());
      if (g.family == GroupFamily::Sp) {
        for (const auto& s : psi.summands())
          if (tensor_type(s) != DualityType::Orthogonal)
            r.fail("non-orthogonal summand classified into " + g.str());
        if (!is_valid(underlying_partition(psi), OrbitFamily::B))
          r.fail("underlying partition not B-valid for " + psi.str());
      }
      // Dual-side partitions land in the orbit family of the dual group.
      if (g.family == GroupFamily::SOodd || g.family == GroupFamily::Mp) {
        if (!is_valid(underlying_partition(psi), OrbitFamily::C))
          r.fail("underlying partition not C-valid for " + psi.str());
      }
      if (g.family == GroupFamily::SOeven) {
        if (!is_valid(underlying_partition(psi), OrbitFamily::D))
          r.fail("underlying partition not D-valid for " + psi.str());
      }
    }
  }
  return r;
}

inline SweepResult boxplus_roundtrip(const AuditConfig& cfg) {
  SweepResult r{"parameters/boxplus-boxminus-roundtrip"};
  auto params = enumerate_elliptic_parameters(cfg.tau_pool, 8, 2);
  for (const auto& psi : params)
    for (const auto& tau : cfg.tau_pool)
      for (int b = 1; b <= 3; ++b) {
        ++r.checked;
        SimpleParameter sp(tau, b);
        if (boxminus(boxplus(psi, sp), sp) != psi)
          r.fail("roundtrip failed for " + psi.str() + " with " + sp.str());
      }
  return r;
}

inline SweepResult endoscopy_sweep(const AuditConfig& cfg) {
  SweepResult r{"endoscopy/decompose-and-validate"};
  auto params =
      enumerate_elliptic_parameters(cfg.tau_pool, cfg.endoscopy_max_n, cfg.max_summands);
  for (const auto& psi : params) {
    for (const auto& g : classify(psi)) {
      for (const auto& s : psi.summands()) {
        ++r.checked;
        try {
          EndoscopyDatum e = elliptic_decompose(g, s, boxminus(psi, s));
          std::vector<std::string> reasons;
          if (!validate(e, &reasons))
            r.fail("validate failed for " + psi.str() + " -> " + e.str() +
                   (reasons.empty() ? "" : ": " + reasons.front()));
        } catch (const DomainError& err) {
          r.fail("decompose failed for " + psi.str() + " in " + g.str() + ": " + err.what());
        }
      }
    }
  }
  return r;
}

inline SweepResult unitary_signs() {
  SweepResult r{"endoscopy/unitary-sign-rules"};
  for (int N = 1; N <= 20; ++N)
    for (Sign kappa : {Sign::plus(), Sign::minus()}) {
      for (const auto& e : enumerate_elliptic(GroupDatum::unitary(N, kappa))) {
        ++r.checked;
        if (!e.signs) {
          r.fail("unitary datum without signs at N=" + std::to_string(N));
          continue;
        }
        Sign k1 = e.signs->first, k2 = e.signs->second;
        if (k1 != Sign::pow_minus_one(N - e.factors.first.n) ||
            k2 != Sign::pow_minus_one(N - e.factors.second.n))
          r.fail("sign rule fails at N=" + std::to_string(N));
        if (k1 * k2 != Sign::pow_minus_one(N))
          r.fail("sign product != (-1)^N at N=" + std::to_string(N));
      }
    }
  return r;
}

inline SweepResult grading_dichotomy(const AuditConfig& cfg) {
  SweepResult r{"orbits/grading-dichotomy-and-dimension"};
  for (OrbitFamily fam : {OrbitFamily::A, OrbitFamily::B, OrbitFamily::C, OrbitFamily::D}) {
    for (int d = 1; d <= cfg.grading_max_total; ++d)
      for (int c = 1; c * d <= cfg.grading_max_total; ++c)
        for (int rest = 1; c * d + rest <= cfg.grading_max_total; ++rest) {
          Partition p = hook_partition(d, c, rest);
          if (!is_valid(p, fam)) continue;
          ++r.checked;
          WeightedGrading g = grading(fam, p);
          bool bessel = g.dim(1) == 0;
          if (bessel != (d % 2 == 1))
            r.fail("dichotomy fails for " + p.str() + " in family " + name(fam));
          if (g.total_dim() != lie_algebra_dim(fam, p.total()))
            r.fail("dimension mismatch for " + p.str() + " in family " + name(fam));
          for (const auto& [j, dim] : g.dims)
            if (dim != g.dim(-j)) r.fail("asymmetric grading for " + p.str());
        }
  }
  return r;
}

inline SweepResult stabilizer_sizes() {
  SweepResult r{"orbits/stabilizer-factor-sizes"};
  for (GroupFamily gf :
       {GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven, GroupFamily::Mp, GroupFamily::U})
    for (int m = 1; m <= 16; ++m)
      for (int d = 1; d <= m; ++d)
        for (int c = 1; c * d <= m; ++c) {
          StabilizerPair s;
          try {
            s = stabilizer(gf, m, d, c);
          } catch (const DomainError&) {
            continue;  // cell excluded by the parity table
          }
          ++r.checked;
          if (s.first.defining_size() != c)
            r.fail("factor 1 size != c for " + std::string(name(gf)) + " m=" + std::to_string(m) +
                   " d=" + std::to_string(d) + " c=" + std::to_string(c));
          if (s.second.defining_size() != m - c * d)
            r.fail("factor 2 size != m - c*d for " + std::string(name(gf)) +
                   " m=" + std::to_string(m) + " d=" + std::to_string(d) +
                   " c=" + std::to_string(c));
        }
  return r;
}

inline SweepResult beta_grammar() {
  SweepResult r{"spectral/beta-grammar"};
  std::vector<GroupDatum> gs = {GroupDatum::so_odd(3), GroupDatum::sp(3), GroupDatum::so_even(3),
                                GroupDatum::unitary(6, Sign::plus()),
                                GroupDatum::unitary(7, Sign::plus())};
  for (const auto& g : gs)
    for (int b = 1; b <= 50; ++b) {
      ++r.checked;
      auto fs = beta_factors(g, b);
      if (static_cast<int>(fs.size()) != b + 1)
        r.fail("factor count != b+1 at b=" + std::to_string(b) + " for " + g.str());
      auto pair = rho_pair(g);
      for (const auto& f : fs) {
        if (f.kind == LFactor::Kind::RankinSelberg) {
          if (f.slope != 1 || f.intercept != Rat(b + 1, 2)) r.fail("bad RS shift");
        } else if (f.slope != 2) {
          r.fail("second-order factor with slope != 2");
        }
        if (f.kind == LFactor::Kind::Rho && f.rho != pair.first) r.fail("rho symbol mismatch");
        if (f.kind == LFactor::Kind::RhoMinus && f.rho != pair.second)
          r.fail("rho^- symbol mismatch");
      }
      // Paired factors differ by exactly 1 in the intercept at each index.
      for (int i = 1; i <= b / 2; ++i) {
        Rat rho_icpt, minus_icpt;
        for (const auto& f : fs) {
          if (f.index != i) continue;
          if (f.kind == LFactor::Kind::Rho) rho_icpt = f.intercept;
          if (f.kind == LFactor::Kind::RhoMinus) minus_icpt = f.intercept;
        }
        if (rho_icpt - minus_icpt != 1)
          r.fail("rho/rho- intercepts not offset by 1 at b=" + std::to_string(b));
      }
    }
  return r;
}

inline SweepResult x_plus_nesting() {
  SweepResult r{"spectral/x-plus-nesting-and-residual"};
  auto subset = [](const std::vector<Rat>& small, const std::vector<Rat>& big) {
    for (const auto& s : small)
      if (std::find(big.begin(), big.end(), s) == big.end()) return false;
    return true;
  };
  for (int b = 1; b <= 50; ++b) {
    ++r.checked;
    if (!subset(x_plus(b, PoleCase::from_id(2)), x_plus(b, PoleCase::from_id(1))))
      r.fail("case 2 not nested in case 1 at b=" + std::to_string(b));
    if (!subset(x_plus(b, PoleCase::from_id(4)), x_plus(b, PoleCase::from_id(3))))
      r.fail("case 4 not nested in case 3 at b=" + std::to_string(b));
    for (int id = 1; id <= 4; ++id)
      for (const auto& pt : residual_points(b, PoleCase::from_id(id))) {
        bool expect = !(id == 3 && pt.s0 == Rat(b - 1, 2));
        if (pt.square_integrable != expect)
          r.fail("residual annotation wrong at b=" + std::to_string(b) +
                 " case=" + std::to_string(id));
      }
  }
  return r;
}

inline std::vector<CuspidalDatum> kernel_tau_pool(int max_a) {
  std::vector<CuspidalDatum> taus;
  for (int a = 2; a <= max_a; ++a) {
    auto orth = CuspidalDatum::orthogonal("o" + std::to_string(a), a);
    orth.central_nonvanishing = true;
    taus.push_back(orth);
    if (a % 2 == 0) {
      auto symp = CuspidalDatum::symplectic("s" + std::to_string(a), a);
      symp.central_nonvanishing = true;
      taus.push_back(symp);
    }
  }
  return taus;
}

inline SweepResult kernel_case_audit(const AuditConfig& cfg) {
  SweepResult r{"kernel/case-table-audit"};
  std::vector<GroupFamily> targets = {GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven,
                                      GroupFamily::Mp};
  for (const auto& tau : kernel_tau_pool(cfg.kernel_max_a))
    for (GroupFamily target : targets)
      for (int b = 0; b <= cfg.kernel_max_b; ++b)
        for (int c = 0; c <= cfg.kernel_max_c; ++c) {
          ConstructionCase cc;
          try {
            cc = compile(target, tau, b, c);
          } catch (const DomainError&) {
            continue;  // structurally absent cell
          }
          if (!cc.all_constraints_satisfied()) continue;
          ++r.checked;
          std::string cell = std::string(name(target)) + " tau=" + tau.id +
                             " b=" + std::to_string(b) + " c=" + std::to_string(c);
          auto groups = classify(cc.psi0);
          bool found = false;
          for (const auto& g : groups)
            if (g.same_shape(cc.ambient)) found = true;
          if (!found) r.fail("psi0 does not classify into ambient at " + cell);

          int m_size = cc.ambient.defining_size();
          int rest = m_size - cc.c * cc.d;
          if (cc.c >= 1 && rest >= 1) {
            try {
              CoefficientKind k =
                  coefficient_kind(orbit_family_of(cc.ambient.family), cc.d, cc.c, rest);
              if (k != cc.coefficient) r.fail("coefficient kind mismatch at " + cell);
            } catch (const DomainError& err) {
              r.fail("coefficient check failed at " + cell + ": " + err.what());
            }
          }
          std::vector<std::string> reasons;
          if (!validate(cc.endoscopy, &reasons))
            r.fail("endoscopy triple invalid at " + cell +
                   (reasons.empty() ? "" : ": " + reasons.front()));
        }
  return r;
}

inline SweepResult unitary_kernel_signs() {
  SweepResult r{"kernel/unitary-sign-rules"};
  for (int a = 2; a <= 6; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (bool plus_one : {false, true})
          for (Sign kappa : {Sign::plus(), Sign::minus()}) {
            int m_v = a * (b + c) + (plus_one ? 1 : 0);
            if (m_v > 40 || m_v - a * c < 0) continue;
            CuspidalDatum tau = CuspidalDatum::conjugate_self_dual(
                "u" + std::to_string(a), a,
                kappa * Sign::pow_minus_one(m_v - 1) * Sign::pow_minus_one(b + c - 1));
            CompileOptions opts;
            opts.kappa = kappa;
            opts.mv_plus_one = plus_one;
            ConstructionCase cc;
            try {
              cc = compile(GroupFamily::U, tau, b, c, opts);
            } catch (const DomainError&) {
              continue;
            }
            ++r.checked;
            if (!cc.endoscopy.signs) {
              r.fail("missing signs at m_V=" + std::to_string(m_v));
              continue;
            }
            if (cc.endoscopy.signs->first != kappa * Sign::pow_minus_one(c))
              r.fail("kappa_{m_V-ac} != kappa(-1)^c at m_V=" + std::to_string(m_v));
            if (cc.endoscopy.signs->second != kappa * Sign::pow_minus_one(m_v - a * c))
              r.fail("kappa_c != kappa(-1)^(m_V-ac) at m_V=" + std::to_string(m_v));
            if (cc.all_constraints_satisfied()) {
              bool found = false;
              for (const auto& g : classify(cc.psi0, kappa))
                if (g.same_shape(cc.ambient)) found = true;
              if (!found) r.fail("psi0 misclassified at m_V=" + std::to_string(m_v));
            }
          }
  return r;
}

inline SweepResult tower_adjacency() {
  SweepResult r{"kernel/tower-adjacency"};
  auto tau_s = CuspidalDatum::symplectic("s2", 2);
  tau_s.central_nonvanishing = true;
  auto tau_o2 = CuspidalDatum::orthogonal("o2", 2);
  auto tau_o3 = CuspidalDatum::orthogonal("o3", 3);
  auto sigma = CuspidalDatum::symplectic("sig", 4);

  struct Case {
    GroupDatum base;
    ArthurParameter psi;
    CuspidalDatum tau;
  };
  std::vector<Case> cases;
  // SO_odd base, symplectic tau (odd levels) and orthogonal tau (even levels).
  ArthurParameter psi_so5({SimpleParameter(sigma, 1)});  // N=4 -> SO_5
  cases.push_back({GroupDatum::so_odd(2), psi_so5, tau_s});
  cases.push_back({GroupDatum::so_odd(2), psi_so5, tau_o2});
  cases.push_back({GroupDatum::so_odd(2), psi_so5, tau_o3});
  // Mp base, odd a orthogonal tau.
  cases.push_back({GroupDatum::mp(2), psi_so5, tau_o3});

  for (const auto& c : cases) {
    auto nodes = tower(c.base, c.psi, c.tau, 3);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      ++r.checked;
      int dn = nodes[i + 1].parameter.gl_size() - nodes[i].parameter.gl_size();
      int dl = nodes[i + 1].level_b - nodes[i].level_b;
      if (dn != c.tau.a * dl)
        r.fail("tower size step mismatch at level " + std::to_string(nodes[i].level_b));
      if (nodes[i + 1].group.twisted_gl_size() != nodes[i + 1].parameter.gl_size())
        r.fail("tower node group does not match its parameter at level " +
               std::to_string(nodes[i + 1].level_b));
    }
  }
  return r;
}

inline SweepResult jordan_roundtrip(const AuditConfig& cfg) {
  SweepResult r{"jordan/reconstruct-roundtrip"};
  std::map<std::string, CuspidalDatum> dims;
  for (const auto& t : cfg.tau_pool) dims.emplace(t.id, t);
  auto params = enumerate_elliptic_parameters(cfg.tau_pool, cfg.jordan_max_n, cfg.max_summands);
  for (const auto& psi : params) {
    // Reconstruction is defined on parity-homogeneous parameters only; every
    // parameter that classifies into some group is automatically homogeneous.
    bool homogeneous = true;
    try {
      for (const auto& id : t_set(psi)) {
        auto blocks = jordan_blocks(psi, id);
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
          if (blocks[i] <= blocks[i + 1]) r.fail("blocks not strictly decreasing");
      }
    } catch (const DomainError&) {
      homogeneous = false;
    }
    if (!homogeneous && !classify(psi).empty()) {
      r.fail("classifiable parameter with inhomogeneous blocks: " + psi.str());
      continue;
    }
    if (!homogeneous) continue;
    ++r.checked;
    try {
      PoleProfile prof = pole_profile(psi);
      ArthurParameter back = reconstruct(prof, dims, psi.gl_size());
      if (!(back == psi)) r.fail("roundtrip mismatch for " + psi.str());
    } catch (const DomainError& err) {
      r.fail("roundtrip error for " + psi.str() + ": " + err.what());
    }
    auto maxima = maximal_summands(psi);
    if (maxima.size() != t_set(psi).size()) r.fail("maximal summands do not cover t_set");
    for (const auto& m : maxima)
      if (!contains(psi, m)) r.fail("maximal summand not in parameter");
  }
  return r;
}

}  // namespace audit_detail

inline AuditReport run_audit(const AuditConfig& cfg = AuditConfig::defaults()) {
  AuditReport rep;
  rep.sweeps.push_back(audit_detail::transpose_involution());
  rep.sweeps.push_back(audit_detail::collapse_idempotent(cfg));
  rep.sweeps.push_back(audit_detail::bv_golden_forms());
  rep.sweeps.push_back(audit_detail::bv_order_reversing());
  rep.sweeps.push_back(audit_detail::kappa_identity());
  rep.sweeps.push_back(audit_detail::conjugate_sign_identity());
  rep.sweeps.push_back(audit_detail::classify_consistency(cfg));
  rep.sweeps.push_back(audit_detail::boxplus_roundtrip(cfg));
  rep.sweeps.push_back(audit_detail::endoscopy_sweep(cfg));
  rep.sweeps.push_back(audit_detail::unitary_signs());
  rep.sweeps.push_back(audit_detail::grading_dichotomy(cfg));
  rep.sweeps.push_back(audit_detail::stabilizer_sizes());
  rep.sweeps.push_back(audit_detail::beta_grammar());
  rep.sweeps.push_back(audit_detail::x_plus_nesting());
  rep.sweeps.push_back(audit_detail::kernel_case_audit(cfg));
  rep.sweeps.push_back(audit_detail::unitary_kernel_signs());
  rep.sweeps.push_back(audit_detail::tower_adjacency());
  rep.sweeps.push_back(audit_detail::jordan_roundtrip(cfg));
  return rep;
}

}  // namespace arthurkit

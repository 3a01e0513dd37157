// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The collapse criterion is checked against an independent
// brute-force oracle (tests/support/oracles.hpp).

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "arthurkit/audit.hpp"
#include "arthurkit/endoscopy.hpp"
#include "arthurkit/jordan.hpp"
#include "arthurkit/kernel_cases.hpp"
#include "arthurkit/orbits.hpp"
#include "arthurkit/partition.hpp"
#include "arthurkit/spectral.hpp"
#include "../support/oracles.hpp"

using namespace arthurkit;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, double seconds, double budget,
            const std::string& detail = "") {
  bool in_budget = budget <= 0 || seconds <= budget;
  bool pass = ok && in_budget;
  std::printf("[%s] criterion %d: %s (%.2fs%s)%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              seconds, budget > 0 ? (" / budget " + std::to_string(budget) + "s").c_str() : "",
              detail.empty() ? "" : (" - " + detail).c_str());
  if (!pass) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& name, double budget, F&& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, ok, seconds, budget, detail);
}

std::vector<int> rep(int value, int count) { return std::vector<int>(count, value); }

// 1. bv_dual on [b^a] reproduces the tabulated closed forms, ab <= 40.
bool golden_bv(std::string& detail) {
  long long checked = 0;
  for (int a = 1; a <= 40; ++a)
    for (int b = 1; a * b <= 40; ++b) {
      Partition p(rep(b, a));
      if (a % 2 == 0) {
        // dual pair (C -> B): [(a+1)a^(b-2)(a-1)1] for even b, [(a+1)a^(b-1)] for odd b
        std::vector<int> want{a + 1};
        if (b % 2 == 0) {
          auto mid = rep(a, b - 2);
          want.insert(want.end(), mid.begin(), mid.end());
          want.push_back(a - 1);
          want.push_back(1);
        } else {
          auto mid = rep(a, b - 1);
          want.insert(want.end(), mid.begin(), mid.end());
        }
        ++checked;
        if (bv_dual(p, OrbitFamily::C, OrbitFamily::B) != Partition::from_unsorted(want)) {
          detail = "C->B fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
          return false;
        }
        // dual pair (D -> D): [a^b] for even b, [a^(b-1)(a-1)1] for odd b
        std::vector<int> want_d;
        if (b % 2 == 0) {
          want_d = rep(a, b);
        } else {
          want_d = rep(a, b - 1);
          want_d.push_back(a - 1);
          want_d.push_back(1);
        }
        ++checked;
        if (bv_dual(p, OrbitFamily::D, OrbitFamily::D) != Partition::from_unsorted(want_d)) {
          detail = "D->D fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
          return false;
        }
      }
      if (a % 2 == 1 && b % 2 == 1) {
        // dual pair (B -> C): [a^(b-1)(a-1)]
        std::vector<int> want = rep(a, b - 1);
        want.push_back(a - 1);
        ++checked;
        if (bv_dual(p, OrbitFamily::B, OrbitFamily::C) != Partition::from_unsorted(want)) {
          detail = "B->C fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
          return false;
        }
      }
    }
  detail = std::to_string(checked) + " closed-form cells";
  return checked > 0;
}

// 2. Greedy collapse equals the brute-force dominance-maximal oracle, totals <= 20.
bool collapse_oracle(std::string& detail) {
  long long checked = 0;
  for (OrbitFamily fam : {OrbitFamily::B, OrbitFamily::C, OrbitFamily::D}) {
    int parity = fam == OrbitFamily::B ? 1 : 0;
    for (int n = parity; n <= 20; n += 2)
      for (const auto& parts : oracles::all_partitions(n)) {
        auto expected = oracles::collapse_oracle(parts, fam);
        if (!expected) {
          detail = "oracle found no unique maximum for " + Partition(parts).str();
          return false;
        }
        ++checked;
        if (collapse(Partition(parts), fam) != Partition(*expected)) {
          detail = std::string("mismatch for ") + Partition(parts).str() + " in family " +
                   name(fam);
          return false;
        }
      }
  }
  detail = std::to_string(checked) + " partitions";
  return true;
}

// 3. Grading dichotomy and closed-form dimension, totals <= 24.
bool grading_dichotomy(std::string& detail) {
  long long checked = 0;
  for (OrbitFamily fam : {OrbitFamily::A, OrbitFamily::B, OrbitFamily::C, OrbitFamily::D})
    for (int d = 1; d <= 24; ++d)
      for (int c = 1; c * d <= 24; ++c)
        for (int r = 1; c * d + r <= 24; ++r) {
          Partition p = hook_partition(d, c, r);
          if (!is_valid(p, fam)) continue;
          ++checked;
          WeightedGrading g = grading(fam, p);
          if ((g.dim(1) == 0) != (d % 2 == 1)) {
            detail = "dichotomy fails at " + p.str() + " family " + name(fam);
            return false;
          }
          if (g.total_dim() != lie_algebra_dim(fam, p.total())) {
            detail = "dimension fails at " + p.str() + " family " + name(fam);
            return false;
          }
        }
  detail = std::to_string(checked) + " hook partitions";
  return true;
}

// 4. Case-table audit over a <= 6, b <= 5, c <= 6.
bool case_table(std::string& detail) {
  long long checked = 0;
  for (const auto& tau : audit_detail::kernel_tau_pool(6))
    for (GroupFamily target :
         {GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven, GroupFamily::Mp})
      for (int b = 0; b <= 5; ++b)
        for (int c = 0; c <= 6; ++c) {
          ConstructionCase cc;
          try {
            cc = compile(target, tau, b, c);
          } catch (const DomainError&) {
            continue;
          }
          if (!cc.all_constraints_satisfied()) continue;
          ++checked;
          std::string cell = std::string(name(target)) + " tau=" + tau.id +
                             " b=" + std::to_string(b) + " c=" + std::to_string(c);
          bool found = false;
          for (const auto& g : classify(cc.psi0))
            if (g.same_shape(cc.ambient)) found = true;
          if (!found) {
            detail = "psi0 misclassified at " + cell;
            return false;
          }
          int rest = cc.ambient.defining_size() - cc.c * cc.d;
          if (cc.c >= 1 && rest >= 1 &&
              coefficient_kind(orbit_family_of(cc.ambient.family), cc.d, cc.c, rest) !=
                  cc.coefficient) {
            detail = "coefficient mismatch at " + cell;
            return false;
          }
          if (!validate(cc.endoscopy)) {
            detail = "endoscopy invalid at " + cell;
            return false;
          }
        }
  detail = std::to_string(checked) + " satisfied cells";
  return checked > 0;
}

// 5. Sign identities: kappa_ab vs eta, unitary endoscopy and eq-5.14 signs.
bool sign_identities(std::string& detail) {
  for (Sign ka : {Sign::plus(), Sign::minus()})
    for (int a = 1; a <= 30; ++a)
      for (int b = 1; a * b <= 30; ++b) {
        Sign eta_tau = ka * Sign::pow_minus_one(a - 1);
        if (kappa_ab(ka, a, b) * Sign::pow_minus_one(a * b - 1) !=
            eta_tau * Sign::pow_minus_one(b - 1)) {
          detail = "kappa_ab identity fails at a=" + std::to_string(a) +
                   " b=" + std::to_string(b);
          return false;
        }
      }
  for (int N = 1; N <= 20; ++N)
    for (const auto& e : enumerate_elliptic(GroupDatum::unitary(N, Sign::plus()))) {
      if (!e.signs) return false;
      if (e.signs->first != Sign::pow_minus_one(N - e.factors.first.n) ||
          e.signs->second != Sign::pow_minus_one(N - e.factors.second.n)) {
        detail = "unitary sign rule fails at N=" + std::to_string(N);
        return false;
      }
    }
  // eq-5.14: kappa_{m_V - ac} = kappa (-1)^c for all tested m_V <= 40
  for (int a = 2; a <= 6; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 6; ++c)
        for (bool plus_one : {false, true})
          for (Sign kappa : {Sign::plus(), Sign::minus()}) {
            int m_v = a * (b + c) + (plus_one ? 1 : 0);
            if (m_v > 40 || m_v - a * c < 0 || b + c == 0) continue;
            CuspidalDatum tau = CuspidalDatum::conjugate_self_dual(
                "u", a, kappa * Sign::pow_minus_one(m_v - 1) * Sign::pow_minus_one(b + c - 1));
            CompileOptions opts;
            opts.kappa = kappa;
            opts.mv_plus_one = plus_one;
            ConstructionCase cc = compile(GroupFamily::U, tau, b, c, opts);
            if (!cc.endoscopy.signs ||
                cc.endoscopy.signs->first != kappa * Sign::pow_minus_one(c) ||
                cc.endoscopy.signs->second != kappa * Sign::pow_minus_one(m_v - a * c)) {
              detail = "eq-5.14 sign fails at m_V=" + std::to_string(m_v);
              return false;
            }
          }
  return true;
}

// 6. beta grammar: count, slopes, rho table, b <= 50.
bool beta_grammar(std::string& detail) {
  struct Row {
    GroupDatum g;
    RhoSymbol rho, rho_minus;
  };
  std::vector<Row> rows = {
      {GroupDatum::unitary(6, Sign::plus()), RhoSymbol::AsaiPlus, RhoSymbol::AsaiMinus},
      {GroupDatum::unitary(7, Sign::plus()), RhoSymbol::AsaiMinus, RhoSymbol::AsaiPlus},
      {GroupDatum::so_odd(3), RhoSymbol::Sym2, RhoSymbol::Lambda2},
      {GroupDatum::sp(3), RhoSymbol::Lambda2, RhoSymbol::Sym2},
      {GroupDatum::so_even(3), RhoSymbol::Lambda2, RhoSymbol::Sym2},
  };
  for (const auto& row : rows) {
    auto pair = rho_pair(row.g);
    if (pair.first != row.rho || pair.second != row.rho_minus) {
      detail = "rho table mismatch for " + row.g.str();
      return false;
    }
    for (int b = 1; b <= 50; ++b) {
      auto fs = beta_factors(row.g, b);
      if (static_cast<int>(fs.size()) != b + 1) {
        detail = "count != b+1 at b=" + std::to_string(b);
        return false;
      }
      for (const auto& f : fs) {
        bool rs = f.kind == LFactor::Kind::RankinSelberg;
        if (rs && (f.slope != 1 || f.intercept != Rat(b + 1, 2))) {
          detail = "RS shift wrong at b=" + std::to_string(b);
          return false;
        }
        if (!rs && f.slope != 2) {
          detail = "slope law broken at b=" + std::to_string(b);
          return false;
        }
        if (f.kind == LFactor::Kind::Rho && f.intercept != Rat(b + 2 - 2 * f.index)) {
          detail = "rho intercept wrong at b=" + std::to_string(b);
          return false;
        }
        if (f.kind == LFactor::Kind::RhoMinus && f.intercept != Rat(b + 1 - 2 * f.index)) {
          detail = "rho^- intercept wrong at b=" + std::to_string(b);
          return false;
        }
      }
    }
  }
  return true;
}

// 7. X+ sets and the square-integrability exception, b <= 10.
bool x_plus_residuals(std::string& detail) {
  for (int b = 1; b <= 10; ++b)
    for (int id = 1; id <= 4; ++id) {
      PoleCase pc = PoleCase::from_id(id);
      Rat top;
      switch (id) {
        case 1: top = Rat(b, 2); break;
        case 2: top = Rat(b - 2, 2); break;
        case 3: top = Rat(b + 1, 2); break;
        default: top = Rat(b - 1, 2); break;
      }
      std::vector<Rat> want;
      for (Rat s = top; s > 0; s -= 1) want.push_back(s);
      if (x_plus(b, pc) != want) {
        detail = "X+ mismatch at b=" + std::to_string(b) + " case " + std::to_string(id);
        return false;
      }
      for (const auto& pt : residual_points(b, pc)) {
        bool expect = !(id == 3 && pt.s0 == Rat(b - 1, 2));
        if (pt.square_integrable != expect) {
          detail = "residual annotation wrong at b=" + std::to_string(b) + " case " +
                   std::to_string(id);
          return false;
        }
      }
    }
  return true;
}

// 8. Jordan round trip over the 3-token pool, N <= 16.
bool jordan_roundtrip(std::string& detail) {
  auto pool = AuditConfig::default_pool();
  std::map<std::string, CuspidalDatum> dims;
  for (const auto& t : pool) dims.emplace(t.id, t);
  long long checked = 0;
  for (const auto& psi : enumerate_elliptic_parameters(pool, 16, 3)) {
    bool homogeneous = true;
    try {
      for (const auto& id : t_set(psi)) jordan_blocks(psi, id);
    } catch (const DomainError&) {
      homogeneous = false;
    }
    if (!homogeneous) continue;
    ++checked;
    if (!(reconstruct(pole_profile(psi), dims, psi.gl_size()) == psi)) {
      detail = "round trip fails for " + psi.str();
      return false;
    }
  }
  detail = std::to_string(checked) + " parameters";
  return checked > 0;
}

std::string run_capture(const std::string& cmd, int* exit_code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  criterion(1, "Barbasch-Vogan golden suite (ab <= 40)", 1.0, golden_bv);
  criterion(2, "collapse equals brute-force oracle (totals <= 20)", 30.0, collapse_oracle);
  criterion(3, "grading dichotomy and dimensions (totals <= 24)", 10.0, grading_dichotomy);
  criterion(4, "case-table audit (a <= 6, b <= 5, c <= 6)", 10.0, case_table);
  criterion(5, "sign identities (kappa_ab, unitary, eq-5.14)", 0.0, sign_identities);
  criterion(6, "beta grammar and rho table (b <= 50)", 0.0, beta_grammar);
  criterion(7, "X+ sets and residual annotations (b <= 10)", 0.0, x_plus_residuals);
  criterion(8, "jordan reconstruction round trip (N <= 16)", 5.0, jordan_roundtrip);

  // 9. audit determinism: two runs of the CLI produce byte-identical reports.
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    if (argc > 1) {
      std::string cmd = std::string(argv[1]) + " --format text audit 2>/dev/null";
      int c1 = 0, c2 = 0;
      std::string r1 = run_capture(cmd, &c1);
      std::string r2 = run_capture(cmd, &c2);
      ok = c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2;
      if (!ok) detail = "audit runs differ or failed";
      std::string j1 = run_capture(std::string(argv[1]) + " audit 2>/dev/null", &c1);
      std::string j2 = run_capture(std::string(argv[1]) + " audit 2>/dev/null", &c2);
      ok = ok && c1 == 0 && c2 == 0 && j1 == j2;
    } else {
      detail = "CLI path not supplied";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(9, "audit determinism (byte-identical reports)", ok, seconds, 0.0, detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}

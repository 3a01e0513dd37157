#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "arthurkit/common.hpp"
#include "arthurkit/partition.hpp"

namespace arthurkit {

enum class BaseField { Plain, QuadraticExt };
enum class DualityType { Orthogonal, Symplectic };

inline const char* name(DualityType t) {
  return t == DualityType::Orthogonal ? "orthogonal" : "symplectic";
}

/// Abstract self-dual cuspidal representation of GL(a). Identity is the token:
/// two data are the same representation iff their ids match.
struct CuspidalDatum {
  std::string id;
  int a = 1;
  BaseField base = BaseField::Plain;
  DualityType duality = DualityType::Orthogonal;  // Plain only
  Sign eta = Sign::plus();                        // QuadraticExt only
  std::optional<bool> central_nonvanishing;       // L(1/2, tau) != 0
  bool is_character = false;
  std::optional<std::string> dual_id;              // involution partner; self if absent
  std::optional<std::string> central_char_token;   // symbolic quadratic character label

  static CuspidalDatum orthogonal(std::string id, int a) {
    CuspidalDatum t;
    t.id = std::move(id);
    t.a = a;
    t.duality = DualityType::Orthogonal;
    t.validate();
    return t;
  }

  static CuspidalDatum symplectic(std::string id, int a) {
    CuspidalDatum t;
    t.id = std::move(id);
    t.a = a;
    t.duality = DualityType::Symplectic;
    t.validate();
    return t;
  }

  /// Quadratic character chi of GL(1); id "1" is the trivial character.
  static CuspidalDatum character(std::string id) {
    CuspidalDatum t;
    t.id = std::move(id);
    t.a = 1;
    t.duality = DualityType::Orthogonal;
    t.is_character = true;
    t.central_char_token = t.id;  // "1" cancels out of product labels
    t.validate();
    return t;
  }

  static CuspidalDatum conjugate_self_dual(std::string id, int a, Sign eta) {
    CuspidalDatum t;
    t.id = std::move(id);
    t.a = a;
    t.base = BaseField::QuadraticExt;
    t.eta = eta;
    t.validate();
    return t;
  }

  void validate() const {
    if (a < 1) throw DomainError("cuspidal datum: a must be >= 1");
    if (is_character && a != 1) throw DomainError("cuspidal datum: character forces a = 1");
    if (base == BaseField::Plain && duality == DualityType::Symplectic && a % 2 != 0)
      throw DomainError("cuspidal datum '" + id + "': symplectic type needs even a");
  }

  bool self_dual() const { return !dual_id || *dual_id == id; }

  friend bool operator==(const CuspidalDatum& x, const CuspidalDatum& y) { return x.id == y.id; }
};

/// One summand (tau, b) of an Arthur parameter.
struct SimpleParameter {
  CuspidalDatum tau;
  int b = 1;

  SimpleParameter() = default;
  SimpleParameter(CuspidalDatum t, int b_) : tau(std::move(t)), b(b_) {
    if (b < 1) throw DomainError("simple parameter: b must be >= 1");
  }

  int gl_size() const { return tau.a * b; }

  friend bool operator==(const SimpleParameter& x, const SimpleParameter& y) {
    return x.tau.id == y.tau.id && x.b == y.b;
  }
  friend bool operator<(const SimpleParameter& x, const SimpleParameter& y) {
    if (x.tau.id != y.tau.id) return x.tau.id < y.tau.id;
    return x.b < y.b;
  }

  std::string str() const { return "(" + tau.id + "," + std::to_string(b) + ")"; }
};

/// Formal isobaric sum of simple parameters; a multiset under boxplus.
class ArthurParameter {
public:
  ArthurParameter() = default;
  explicit ArthurParameter(std::vector<SimpleParameter> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
  }
  static ArthurParameter simple(CuspidalDatum tau, int b) {
    return ArthurParameter({SimpleParameter(std::move(tau), b)});
  }

  const std::vector<SimpleParameter>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }

  int gl_size() const {
    int n = 0;
    for (const auto& s : summands_) n += s.gl_size();
    return n;
  }

  friend bool operator==(const ArthurParameter& x, const ArthurParameter& y) {
    return x.summands_ == y.summands_;
  }

  std::string str() const {
    if (summands_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      if (i) os << " [+] ";
      os << summands_[i].str();
    }
    return os.str();
  }

private:
  std::vector<SimpleParameter> summands_;
};

inline ArthurParameter boxplus(const ArthurParameter& x, const ArthurParameter& y) {
  std::vector<SimpleParameter> s = x.summands();
  s.insert(s.end(), y.summands().begin(), y.summands().end());
  return ArthurParameter(std::move(s));
}

inline ArthurParameter boxplus(const ArthurParameter& x, const SimpleParameter& sp) {
  std::vector<SimpleParameter> s = x.summands();
  s.push_back(sp);
  return ArthurParameter(std::move(s));
}

/// Removes one occurrence of sp; Grothendieck-group style formal subtraction.
inline ArthurParameter boxminus(const ArthurParameter& x, const SimpleParameter& sp) {
  std::vector<SimpleParameter> s = x.summands();
  auto it = std::find(s.begin(), s.end(), sp);
  if (it == s.end()) throw DomainError("boxminus: " + sp.str() + " is not a summand");
  s.erase(it);
  return ArthurParameter(std::move(s));
}

inline bool contains(const ArthurParameter& x, const SimpleParameter& sp) {
  const auto& s = x.summands();
  return std::find(s.begin(), s.end(), sp) != s.end();
}

/// Replaces each tau by its involution partner.
inline ArthurParameter dual(const ArthurParameter& x,
                            const std::map<std::string, CuspidalDatum>& pool = {}) {
  std::vector<SimpleParameter> out;
  out.reserve(x.summands().size());
  for (const auto& s : x.summands()) {
    if (s.tau.self_dual()) {
      out.push_back(s);
    } else {
      auto it = pool.find(*s.tau.dual_id);
      if (it == pool.end())
        throw DomainError("dual: partner '" + *s.tau.dual_id + "' of '" + s.tau.id +
                          "' not supplied");
      out.emplace_back(it->second, s.b);
    }
  }
  return ArthurParameter(std::move(out));
}

inline bool is_elliptic(const ArthurParameter& x) {
  const auto& s = x.summands();  // sorted, so duplicates are adjacent
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

/// Tensor type of (tau, b) for plain tau: orthogonal iff exactly one of
/// {tau symplectic, b even} fails.
inline DualityType tensor_type(const SimpleParameter& sp) {
  if (sp.tau.base != BaseField::Plain) throw DomainError("tensor_type: tau is not plain");
  bool tau_orth = sp.tau.duality == DualityType::Orthogonal;
  bool b_odd = sp.b % 2 == 1;
  return (tau_orth == b_odd) ? DualityType::Orthogonal : DualityType::Symplectic;
}

/// Conjugate self-dual sign of (tau, b): eta_tau * (-1)^(b-1).
inline Sign conjugate_sign(const SimpleParameter& sp) {
  if (sp.tau.base != BaseField::QuadraticExt)
    throw DomainError("conjugate_sign: tau is not over a quadratic extension");
  return sp.tau.eta * Sign::pow_minus_one(sp.b - 1);
}

/// kappa_{ab} = kappa_a * (-1)^(ab - a - b + 1).
inline Sign kappa_ab(Sign kappa_a, int a, int b) {
  if (a < 1 || b < 1) throw DomainError("kappa_ab: a, b must be >= 1");
  return kappa_a * Sign::pow_minus_one(static_cast<long long>(a) * b - a - b + 1);
}

/// Type tag of a simple parameter: a duality type in the plain case, a sign in
/// the conjugate (quadratic extension) case.
using TypeTag = std::variant<DualityType, Sign>;

inline TypeTag sign_of_simple(const SimpleParameter& sp, std::optional<Sign> kappa_a = {}) {
  if (sp.tau.base == BaseField::Plain) {
    return tensor_type(sp);
  }
  if (kappa_a) {
    Sign implied = *kappa_a * Sign::pow_minus_one(sp.tau.a - 1);
    if (implied != sp.tau.eta)
      throw DomainError("sign_of_simple: kappa_a inconsistent with eta_tau of '" + sp.tau.id + "'");
  }
  return conjugate_sign(sp);
}

enum class GroupFamily { SOodd, Sp, SOeven, Mp, U };

inline const char* name(GroupFamily f) {
  switch (f) {
    case GroupFamily::SOodd: return "SOodd";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SOeven: return "SOeven";
    case GroupFamily::Mp: return "Mp";
    case GroupFamily::U: return "U";
  }
  return "?";
}

inline GroupFamily group_family_from_string(const std::string& s) {
  if (s == "SOodd") return GroupFamily::SOodd;
  if (s == "Sp") return GroupFamily::Sp;
  if (s == "SOeven") return GroupFamily::SOeven;
  if (s == "Mp") return GroupFamily::Mp;
  if (s == "U") return GroupFamily::U;
  throw DomainError("unknown group family '" + s + "'");
}

/// Classical group descriptor. n is the rank for SOodd/Sp/SOeven/Mp
/// (SO_{2n+1}, Sp_{2n}, SO_{2n}, Mp_{2n}) and the size N for U(N).
struct GroupDatum {
  GroupFamily family = GroupFamily::Sp;
  int n = 0;
  std::string eta;            // SOeven: symbolic quadratic character label
  Sign kappa = Sign::plus();  // U only

  static GroupDatum so_odd(int n) { return {GroupFamily::SOodd, n, "", Sign::plus()}; }
  static GroupDatum sp(int n) { return {GroupFamily::Sp, n, "", Sign::plus()}; }
  static GroupDatum so_even(int n, std::string eta = "") {
    return {GroupFamily::SOeven, n, std::move(eta), Sign::plus()};
  }
  static GroupDatum mp(int n) { return {GroupFamily::Mp, n, "", Sign::plus()}; }
  static GroupDatum unitary(int size, Sign kappa) {
    return {GroupFamily::U, size, "", kappa};
  }

  /// Group of the given defining (matrix) size: SO_m by parity of m, Sp_m and
  /// Mp_m for even m.
  static GroupDatum so_size(int m, std::string eta = "") {
    if (m < 0) throw DomainError("so_size: negative size");
    return m % 2 == 1 ? so_odd((m - 1) / 2) : so_even(m / 2, std::move(eta));
  }
  static GroupDatum sp_size(int m) {
    if (m < 0 || m % 2 != 0) throw DomainError("sp_size: size must be even and >= 0");
    return sp(m / 2);
  }
  static GroupDatum mp_size(int m) {
    if (m < 0 || m % 2 != 0) throw DomainError("mp_size: size must be even and >= 0");
    return mp(m / 2);
  }

  /// Size of the defining module: the subscript in Sp_{2n}, SO_m, Mp_{2n}, U_N.
  int defining_size() const {
    switch (family) {
      case GroupFamily::SOodd: return 2 * n + 1;
      case GroupFamily::Sp: return 2 * n;
      case GroupFamily::SOeven: return 2 * n;
      case GroupFamily::Mp: return 2 * n;
      case GroupFamily::U: return n;
    }
    return 0;
  }

  /// GL size of the twisted endoscopy embedding (dimension of the dual group's
  /// standard representation).
  int twisted_gl_size() const {
    switch (family) {
      case GroupFamily::SOodd: return 2 * n;
      case GroupFamily::Sp: return 2 * n + 1;
      case GroupFamily::SOeven: return 2 * n;
      case GroupFamily::Mp: return 2 * n;
      case GroupFamily::U: return n;
    }
    return 0;
  }

  std::string str() const {
    std::ostringstream os;
    switch (family) {
      case GroupFamily::SOodd: os << "SO_" << 2 * n + 1; break;
      case GroupFamily::Sp: os << "Sp_" << 2 * n; break;
      case GroupFamily::SOeven:
        os << "SO_" << 2 * n;
        if (!eta.empty() && eta != "1") os << "(" << eta << ")";
        break;
      case GroupFamily::Mp: os << "Mp_" << 2 * n; break;
      case GroupFamily::U: os << "U_" << n << "(" << (kappa.positive() ? "+" : "-") << ")"; break;
    }
    return os.str();
  }

  friend bool operator==(const GroupDatum& a, const GroupDatum& b) {
    return a.family == b.family && a.n == b.n && a.eta == b.eta && a.kappa == b.kappa;
  }
  /// Structural match ignoring the symbolic decorations.
  bool same_shape(const GroupDatum& o) const { return family == o.family && n == o.n; }
};

/// Symbolic product of quadratic-character labels: each label is a
/// '*'-joined token list, and tokens cancel in pairs.
inline std::string quadratic_product_label(const std::vector<std::string>& labels) {
  std::vector<std::string> tokens;
  for (const auto& label : labels) {
    std::istringstream is(label);
    std::string tok;
    while (std::getline(is, tok, '*'))
      if (!tok.empty()) tokens.push_back(tok);
  }
  std::sort(tokens.begin(), tokens.end());
  std::vector<std::string> reduced;
  for (const auto& t : tokens) {
    if (t.empty() || t == "1") continue;
    if (!reduced.empty() && reduced.back() == t)
      reduced.pop_back();
    else
      reduced.push_back(t);
  }
  if (reduced.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (i) out += "*";
    out += reduced[i];
  }
  return out;
}

/// Central-character label of psi: the product over summands of tau's token,
/// b times each.
inline std::string eta_label(const ArthurParameter& psi) {
  std::vector<std::string> tokens;
  for (const auto& s : psi.summands()) {
    std::string t = s.tau.central_char_token.value_or("w_" + s.tau.id);
    if (s.b % 2 != 0) tokens.push_back(t);  // even powers cancel
  }
  return quadratic_product_label(std::move(tokens));
}

namespace detail {
inline void require_classifiable(const ArthurParameter& psi) {
  if (!is_elliptic(psi)) throw DomainError("classify: parameter is not elliptic");
  for (const auto& s : psi.summands())
    if (!s.tau.self_dual())
      throw DomainError("classify: summand " + s.str() + " is not self-dual");
  if (psi.summands().empty()) throw DomainError("classify: empty parameter");
}
}  // namespace detail

/// Groups G with psi in the elliptic parameter set of G. Empty when the
/// summand types do not align into one dual group.
inline std::vector<GroupDatum> classify(const ArthurParameter& psi,
                                        std::optional<Sign> kappa_context = {}) {
  detail::require_classifiable(psi);
  const int N = psi.gl_size();

  bool any_ext = false, all_ext = true;
  for (const auto& s : psi.summands()) {
    if (s.tau.base == BaseField::QuadraticExt)
      any_ext = true;
    else
      all_ext = false;
  }
  if (any_ext && !all_ext) throw DomainError("classify: summands mix base fields");

  if (any_ext) {
    // Each summand sign must equal kappa * (-1)^(N-1); all signs must agree.
    Sign first = conjugate_sign(psi.summands().front());
    for (const auto& s : psi.summands())
      if (conjugate_sign(s) != first) return {};
    Sign kappa = first * Sign::pow_minus_one(N - 1);
    if (kappa_context && *kappa_context != kappa) return {};
    return {GroupDatum::unitary(N, kappa)};
  }

  bool all_orth = true, all_symp = true;
  for (const auto& s : psi.summands()) {
    if (tensor_type(s) == DualityType::Orthogonal)
      all_symp = false;
    else
      all_orth = false;
  }
  if (all_orth) {
    if (N % 2 == 1) return {GroupDatum::sp((N - 1) / 2)};
    return {GroupDatum::so_even(N / 2, eta_label(psi))};
  }
  if (all_symp) {
    // N is automatically even here.
    return {GroupDatum::so_odd(N / 2), GroupDatum::mp(N / 2)};
  }
  return {};
}

/// Partition [b_1^{a_1} ... b_r^{a_r}] underlying psi on the dual side.
inline Partition underlying_partition(const ArthurParameter& psi) {
  std::vector<int> parts;
  for (const auto& s : psi.summands()) parts.insert(parts.end(), s.tau.a, s.b);
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace arthurkit

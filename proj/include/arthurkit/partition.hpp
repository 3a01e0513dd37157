#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "arthurkit/common.hpp"

namespace arthurkit {

/// Nilpotent-orbit families of the classical Lie algebras, by the standard
/// multiplicity parity constraints on partitions:
///   A: all partitions; B and D: even parts occur evenly; C: odd parts occur evenly.
enum class OrbitFamily { A, B, C, D };

inline const char* name(OrbitFamily f) {
  switch (f) {
    case OrbitFamily::A: return "A";
    case OrbitFamily::B: return "B";
    case OrbitFamily::C: return "C";
    case OrbitFamily::D: return "D";
  }
  return "?";
}

inline OrbitFamily orbit_family_from_string(const std::string& s) {
  if (s == "A") return OrbitFamily::A;
  if (s == "B") return OrbitFamily::B;
  if (s == "C") return OrbitFamily::C;
  if (s == "D") return OrbitFamily::D;
  throw DomainError("unknown orbit family '" + s + "' (expected A, B, C or D)");
}

/// Integer partition with weakly decreasing positive parts. Immutable value type.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
      total_ += parts_[i];
    }
  }

  /// Sorts and drops zero parts; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// Flat form, e.g. [3,3,1,1,1,1].
  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ']';
    return os.str();
  }

  /// Exponent form, e.g. [3^2,1^4].
  std::string exponent_str() const {
    std::ostringstream os;
    os << '[';
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (!first) os << ',';
      os << parts_[i];
      if (j - i > 1) os << '^' << (j - i);
      first = false;
      i = j;
    }
    os << ']';
    return os.str();
  }

  /// Accepts both the flat form "[3,3,1,1]" and the exponent form "[3^2,1^2]".
  static Partition parse(const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw DomainError("partition literal must be bracketed: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
      std::istringstream is(s);
      std::string item;
      while (std::getline(is, item, ',')) {
        auto caret = item.find('^');
        try {
          if (caret == std::string::npos) {
            parts.push_back(std::stoi(item));
          } else {
            int value = std::stoi(item.substr(0, caret));
            int count = std::stoi(item.substr(caret + 1));
            if (count < 0) throw DomainError("negative exponent in partition literal");
            parts.insert(parts.end(), count, value);
          }
        } catch (const std::invalid_argument&) {
          throw DomainError("bad partition literal item '" + item + "'");
        } catch (const std::out_of_range&) {
          throw DomainError("partition literal item out of range '" + item + "'");
        }
      }
    }
    return from_unsorted(std::move(parts));
  }

private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Conjugate partition. Involutive.
inline Partition transpose(const Partition& p) {
  std::vector<int> out;
  if (!p.empty()) {
    out.resize(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
      for (int j = 0; j < part; ++j) out[static_cast<std::size_t>(j)] += 1;
  }
  return Partition(std::move(out));
}

/// Dominance order: every prefix sum of p bounds the one of q. Requires equal totals.
inline bool dominates(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) throw DomainError("incomparable totals");
  long long sp = 0, sq = 0;
  std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp < sq) return false;
  }
  return true;
}

inline bool is_valid(const Partition& p, OrbitFamily fam) {
  switch (fam) {
    case OrbitFamily::A: return true;
    case OrbitFamily::B:
      if (p.total() % 2 == 0) return false;
      break;
    case OrbitFamily::C:
    case OrbitFamily::D:
      if (p.total() % 2 != 0) return false;
      break;
  }
  // B/D constrain even parts, C constrains odd parts.
  int constrained_parity = (fam == OrbitFamily::C) ? 1 : 0;
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p.parts()[j] == p.parts()[i]) ++j;
    if (p.parts()[i] % 2 == constrained_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

/// The dominance-maximal fam-valid partition dominated by p (the B/C/D collapse).
/// Greedy: repeatedly decrement the last copy of the largest bad part and re-add
/// the unit as early afterwards as sortedness allows.
inline Partition collapse(const Partition& p, OrbitFamily fam) {
  if (fam == OrbitFamily::A) return p;
  bool parity_ok = (fam == OrbitFamily::B) ? (p.total() % 2 == 1) : (p.total() % 2 == 0);
  if (!parity_ok)
    throw DomainError(std::string("collapse: total ") + std::to_string(p.total()) +
                      " has wrong parity for family " + name(fam));
  int constrained_parity = (fam == OrbitFamily::C) ? 1 : 0;
  std::vector<int> v = p.parts();
  for (;;) {
    // Largest part of the constrained parity with odd multiplicity, if any.
    std::size_t bad = v.size();
    std::size_t i = 0;
    while (i < v.size()) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (v[i] % 2 == constrained_parity && (j - i) % 2 != 0) {
        bad = j - 1;  // last copy
        break;
      }
      i = j;
    }
    if (bad == v.size()) break;
    v[bad] -= 1;
    bool placed = false;
    for (std::size_t j = bad + 1; j < v.size(); ++j) {
      if (v[j] + 1 <= v[j - 1]) {
        v[j] += 1;
        placed = true;
        break;
      }
    }
    if (!placed) v.push_back(1);
    std::erase(v, 0);
  }
  Partition out(std::move(v));
  assert(is_valid(out, fam));
  return out;
}

/// Barbasch-Vogan duality between nilpotent partitions of the dual pair of
/// families: (C,B), (B,C), (D,D) and (A,A) are the supported directions.
inline Partition bv_dual(const Partition& p, OrbitFamily dual_fam, OrbitFamily target_fam) {
  if (!is_valid(p, dual_fam))
    throw DomainError("bv_dual: " + p.str() + " is not a valid " + name(dual_fam) + "-partition");
  if (dual_fam == OrbitFamily::A && target_fam == OrbitFamily::A) return transpose(p);
  if (dual_fam == OrbitFamily::C && target_fam == OrbitFamily::B) {
    std::vector<int> t = transpose(p).parts();
    if (t.empty())
      t.push_back(1);
    else
      t.front() += 1;
    return collapse(Partition(std::move(t)), OrbitFamily::B);
  }
  if (dual_fam == OrbitFamily::B && target_fam == OrbitFamily::C) {
    std::vector<int> t = transpose(p).parts();
    if (t.empty()) throw DomainError("bv_dual B->C: empty partition has no part to decrement");
    t.back() -= 1;
    std::erase(t, 0);
    return collapse(Partition(std::move(t)), OrbitFamily::C);
  }
  if (dual_fam == OrbitFamily::D && target_fam == OrbitFamily::D)
    return collapse(transpose(p), OrbitFamily::D);
  throw DomainError(std::string("bv_dual: unsupported family pair ") + name(dual_fam) + "->" +
                    name(target_fam));
}

/// All fam-valid partitions of the given total, in decreasing lexicographic
/// order (which refines dominance).
inline std::vector<Partition> enumerate_partitions(int total, OrbitFamily fam) {
  if (total < 0) throw DomainError("enumerate: negative total");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p(cur);
      if (is_valid(p, fam)) out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(total, total == 0 ? 1 : total);
  return out;
}

}  // namespace arthurkit

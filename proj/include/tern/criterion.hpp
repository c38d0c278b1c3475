#pragma once

#include "tern/classes.hpp"

// The implicit-completeness decision procedure: a system is implicitly
// complete iff it escapes every one of the 54 classes; weakly implicitly
// complete iff it escapes the 28 classes containing all three constants.
// Verdicts are certificates: every claim can be re-checked without
// trusting the checker.

namespace tern {

enum class verdict_status { complete, incomplete };

struct escape_cert {
  func fn;      // system member outside the class
  witness why;  // the class-specific violation
};

struct completeness_verdict {
  verdict_status status;
  // complete: one entry per checked class
  std::vector<std::pair<cls, escape_cert>> witnesses;
  // incomplete: every class containing the whole system, registry order
  std::vector<cls> containing;
  bool weak = false;
};

namespace detail {

// Cheap tests first: constants and set/partition meets, then linearity and
// the small Pol matrices, then Sigma and the square scan.
inline const std::vector<cls>& evaluation_order() {
  static const std::vector<cls> order = [] {
    std::vector<cls> out;
    auto cost = [](cls c) {
      const class_info& ci = info(c);
      return std::visit(
          [&](const auto& k) -> int {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, pol_meet_kind>) {
              size_t worst = 0;
              for (const matrix& m : k.mats) worst = std::max(worst, m.cols.size());
              return worst <= 1 ? 0 : (worst <= 5 ? 1 : 3);
            } else if constexpr (std::is_same_v<T, linear_kind>)
              return 2;
            else if constexpr (std::is_same_v<T, sigma_pair_kind>)
              return 4;
            else if constexpr (std::is_same_v<T, sigma_partition_kind>)
              return 5;
            else
              return 6;
          },
          ci.kind);
    };
    out.assign(all_classes().begin(), all_classes().end());
    std::stable_sort(out.begin(), out.end(),
                     [&](cls a, cls b) { return cost(a) < cost(b); });
    return out;
  }();
  return order;
}

inline completeness_verdict check_against(const system& sys, bool weak) {
  for (const func& f : sys.fns) require_cap(f.arity());
  // canonical order of members for deterministic witness choice
  std::vector<const func*> fns;
  for (const func& f : sys.fns) fns.push_back(&f);
  std::sort(fns.begin(), fns.end(),
            [](const func* a, const func* b) { return *a < *b; });

  completeness_verdict v{verdict_status::complete, {}, {}, weak};
  for (cls c : evaluation_order()) {
    if (weak && !info(c).all_constants) continue;
    bool escaped = false;
    for (const func* f : fns) {
      member_result m = member(*f, c);
      if (!m.ok) {
        v.witnesses.emplace_back(c, escape_cert{*f, std::move(*m.why)});
        escaped = true;
        break;
      }
    }
    if (!escaped) v.containing.push_back(c);
  }
  if (!v.containing.empty()) {
    v.status = verdict_status::incomplete;
    v.witnesses.clear();
    std::sort(v.containing.begin(), v.containing.end(),
              [](cls a, cls b) { return index_of(a) < index_of(b); });
  } else {
    std::sort(v.witnesses.begin(), v.witnesses.end(),
              [](const auto& a, const auto& b) {
                return index_of(a.first) < index_of(b.first);
              });
  }
  return v;
}

}  // namespace detail

inline completeness_verdict check_implicit_completeness(const system& sys) {
  return detail::check_against(sys, false);
}

inline completeness_verdict check_weak_completeness(const system& sys) {
  return detail::check_against(sys, true);
}

// Re-checks every claim in a verdict against the system it was issued for.
inline bool revalidate(const completeness_verdict& v, const system& sys) {
  auto in_system = [&](const func& f) {
    return std::find(sys.fns.begin(), sys.fns.end(), f) != sys.fns.end();
  };
  size_t expected = 0;
  for (cls c : all_classes())
    if (!v.weak || info(c).all_constants) ++expected;
  if (v.status == verdict_status::complete) {
    if (v.witnesses.size() != expected) return false;
    for (const auto& [c, cert] : v.witnesses) {
      if (!in_system(cert.fn)) return false;
      if (member(cert.fn, c).ok) return false;
      if (!revalidate(cert.fn, c, cert.why)) return false;
    }
    return true;
  }
  if (v.containing.empty()) return false;
  for (cls c : v.containing) {
    if (v.weak && !info(c).all_constants) return false;
    for (const func& f : sys.fns)
      if (!member(f, c).ok) return false;
  }
  return true;
}

}  // namespace tern

// Command-line surface for the library: completeness checking, class
// membership, registry listing, fragments, closure fragments, monoid
// enumeration, duality and the verification suites.
//
// Exit codes: 0 = yes/complete/all verified, 1 = no/incomplete/refuted,
// 2 = usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "tern/json_io.hpp"

namespace {

using namespace tern;

int cmd_check(const std::string& file, bool weak, bool as_json) {
  tern::system sys = load_system(file);
  completeness_verdict v =
      weak ? check_weak_completeness(sys) : check_implicit_completeness(sys);
  if (as_json) {
    std::cout << verdict_to_json(v, sys.name).dump(2) << "\n";
  } else if (v.status == verdict_status::complete) {
    std::cout << "complete\n";
    for (const auto& [c, cert] : v.witnesses)
      std::cout << "  escapes " << info(c).name << " via " << cert.fn.str() << "\n";
  } else {
    std::cout << "incomplete\n";
    for (cls c : v.containing) std::cout << "  contained in " << info(c).name << "\n";
  }
  return v.status == verdict_status::complete ? 0 : 1;
}

int cmd_member(const std::string& cls_name, const std::string& literal, bool as_json) {
  auto c = class_from_name(cls_name);
  if (!c) throw error(errc::unknown_id, "unknown class: " + cls_name);
  func f = func::parse(literal);
  member_result r = member(f, *c);
  if (as_json) {
    ordered_json j;
    j["class"] = cls_name;
    j["function"] = f.str();
    j["member"] = r.ok;
    if (!r.ok) j["violation"] = witness_to_json(*r.why);
    std::cout << j.dump(2) << "\n";
  } else if (r.ok) {
    std::cout << "yes\n";
  } else {
    std::cout << "no\n" << witness_to_json(*r.why).dump(2) << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_classes(bool as_json, bool constants_only) {
  if (as_json) {
    if (constants_only) {
      ordered_json j = registry_to_json();
      auto filtered = ordered_json::array();
      for (auto& e : j["classes"])
        if (e["contains_all_constants"].get<bool>()) filtered.push_back(e);
      j["classes"] = std::move(filtered);
      j["count"] = j["classes"].size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << registry_to_json().dump(2) << "\n";
    }
    return 0;
  }
  for (const auto& ci : registry()) {
    if (constants_only && !ci.all_constants) continue;
    std::cout << ci.name << "\t" << ci.relation << "\t"
              << (ci.all_constants ? "constants" : "-") << "\torbit base "
              << info(ci.orbit_base).name << "\n";
  }
  return 0;
}

int cmd_fragment(const std::string& cls_name, int arity, bool as_json) {
  auto c = class_from_name(cls_name);
  if (!c) throw error(errc::unknown_id, "unknown class: " + cls_name);
  if (arity != 1 && arity != 2)
    throw error(errc::bad_input, "fragment arity must be 1 or 2");
  std::vector<func> frag = arity == 1 ? unary_fragment(*c) : binary_fragment(*c);
  if (as_json) {
    ordered_json j;
    j["class"] = cls_name;
    j["arity"] = arity;
    auto a = ordered_json::array();
    for (const func& f : frag) a.push_back(f.str());
    j["functions"] = std::move(a);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const func& f : frag) std::cout << f.str() << "\n";
  }
  return 0;
}

int cmd_closure(const std::string& file, int arity, bool as_json) {
  tern::system sys = load_system(file);
  auto frag = closure_fragment(sys.fns, arity);
  if (as_json) {
    ordered_json j;
    j["system"] = sys.name;
    j["arity"] = arity;
    auto a = ordered_json::array();
    for (const func& f : frag) a.push_back(f.str());
    j["functions"] = std::move(a);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const func& f : frag) std::cout << f.str() << "\n";
  }
  return 0;
}

std::vector<val> parse_val_list(const std::string& s) {
  std::vector<val> out;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '0' || ch > '2') throw error(errc::bad_input, "values must be 0,1,2");
    out.push_back(static_cast<val>(ch - '0'));
  }
  return out;
}

int cmd_monoids(const std::string& require, const std::string& forbid,
                bool mod_duality, bool as_json) {
  monoid_filter filter{parse_val_list(require), parse_val_list(forbid)};
  auto ms = enumerate_unary_monoids(filter);
  if (mod_duality) ms = quotient_by_duality(ms);
  if (as_json) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const monoid& m : ms) {
      auto e = ordered_json::array();
      for (const func& f : m.members()) e.push_back(f.str());
      arr.push_back(std::move(e));
    }
    j["monoids"] = std::move(arr);
    j["count"] = ms.size();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const monoid& m : ms) {
      bool first = true;
      for (const func& f : m.members()) {
        if (!first) std::cout << " ";
        std::cout << f.str();
        first = false;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_dual(const std::string& perm_str, const std::string& literal) {
  perm p = perm::parse(perm_str);
  std::cout << dual(func::parse(literal), p).str() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
  auto reports = run_suite(suite.empty() ? "all" : suite);
  bool all_ok = true;
  for (const auto& r : reports)
    if (r.status == report_status::refuted) all_ok = false;
  if (as_json) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      const char* tag = r.status == report_status::verified
                            ? "PASS"
                            : (r.status == report_status::refuted ? "FAIL" : "SKIP");
      std::cout << tag << " " << r.claim;
      if (!r.evidence.empty()) std::cout << " (" << r.evidence << ")";
      std::cout << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-valued logic: classes, closure and implicit completeness"};
  app.require_subcommand(1);

  int max_arity = 8;
  app.add_option("--max-arity", max_arity, "arity cap for membership tests")
      ->envname("P3_MAX_ARITY");

  bool as_json = false;

  auto* check = app.add_subcommand("check", "decide implicit completeness of a system");
  std::string check_file;
  bool weak = false;
  check->add_option("file", check_file, "system JSON file")->required();
  check->add_flag("--weak", weak, "weak completeness (28 constant-containing classes)");
  check->add_flag("--json", as_json, "machine-readable output");

  auto* memberc = app.add_subcommand("member", "test one function against one class");
  std::string cls_name, literal;
  memberc->add_option("--class", cls_name, "class name (see `classes`)")->required();
  memberc->add_option("--fn", literal, "base-3 function literal")->required();
  memberc->add_flag("--json", as_json);

  auto* classesc = app.add_subcommand("classes", "list the 54 classes");
  bool constants_only = false;
  classesc->add_flag("--json", as_json);
  classesc->add_flag("--constants-only", constants_only,
                     "only classes containing all three constants");

  auto* fragmentc = app.add_subcommand("fragment", "unary/binary fragment of a class");
  std::string frag_cls;
  int frag_arity = 1;
  fragmentc->add_option("--class", frag_cls)->required();
  fragmentc->add_option("--arity", frag_arity)->check(CLI::Range(1, 2));
  fragmentc->add_flag("--json", as_json);

  auto* closurec = app.add_subcommand("closure", "superposition-closure fragment");
  std::string closure_file;
  int closure_arity = 2;
  closurec->add_option("--arity", closure_arity)->check(CLI::Range(1, 3));
  closurec->add_option("file", closure_file)->required();
  closurec->add_flag("--json", as_json);

  auto* monoidsc = app.add_subcommand("monoids", "enumerate unary submonoids");
  std::string require_list, forbid_list;
  bool mod_duality = false;
  monoidsc->add_option("--require", require_list, "constants required, e.g. 0,1");
  monoidsc->add_option("--forbid", forbid_list, "constants forbidden, e.g. 2");
  monoidsc->add_flag("--mod-duality", mod_duality, "one representative per duality orbit");
  monoidsc->add_flag("--json", as_json);

  auto* dualc = app.add_subcommand("dual", "conjugate a function by a permutation");
  std::string perm_str, dual_literal;
  dualc->add_option("--perm", perm_str, "images of 0,1,2, e.g. 102")->required();
  dualc->add_option("fn", dual_literal, "base-3 function literal")->required();

  auto* verifyc = app.add_subcommand("verify", "run the structural claim suites");
  std::string suite;
  verifyc->add_option("--suite", suite, "suite name (default: all)");
  verifyc->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    tern::arity_cap() = max_arity;
    if (*check) return cmd_check(check_file, weak, as_json);
    if (*memberc) return cmd_member(cls_name, literal, as_json);
    if (*classesc) return cmd_classes(as_json, constants_only);
    if (*fragmentc) return cmd_fragment(frag_cls, frag_arity, as_json);
    if (*closurec) return cmd_closure(closure_file, closure_arity, as_json);
    if (*monoidsc) return cmd_monoids(require_list, forbid_list, mod_duality, as_json);
    if (*dualc) return cmd_dual(perm_str, dual_literal);
    if (*verifyc) return cmd_verify(suite, as_json);
  } catch (const tern::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

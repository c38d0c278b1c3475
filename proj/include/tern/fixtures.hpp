#pragma once

#include "tern/function.hpp"

// Reference data used by the verification suites and tests: the six
// generating systems, the Webb function, and the displayed unary base
// lists grouped by their constant count.

namespace tern::fixtures {

inline system s1() {
  return parse_system("S1", {"000010000", "011111111", "000", "111"});
}
inline system s2() {
  return parse_system("S2", {"000011011", "011111111", "001", "000", "111"});
}
inline system s3() {
  return parse_system("S3", {"002012222", "012112222", "001", "000", "111"});
}
inline system s4() {
  return parse_system("S4", {"002012222", "012112222", "000002002", "000", "111"});
}
inline system s5() {
  return parse_system("S5", {"002012222", "012112222", "220", "000", "111", "222"});
}
inline system s6() {
  return parse_system("S6", {"002012002", "012112002", "220"});
}

inline std::array<system, 6> orekhova_systems() {
  return {s1(), s2(), s3(), s4(), s5(), s6()};
}

// max(x,y) + 1, a Sheffer function of P3.
inline func webb() { return func::parse("120220000"); }

inline func max3() { return func::parse("012112222"); }
inline func min01() { return func::parse("002012222"); }
inline func plus_mod3() { return func::parse("012120201"); }
inline func shift() { return func::parse("120"); }

struct base_family {
  std::string name;  // family label, e.g. "nc/1.1"
  std::vector<std::string> fns;
  bool is_base;  // displayed list is itself closed (vs a generating seed)
};

// Bases with no constants. The last five entries of the first family line
// are grouped under one label in the source ordering; all six are listed.
inline std::vector<base_family> bases_no_constants() {
  return {
      {"nc/1.1", {"012"}, true},
      {"nc/1.2", {"012", "021"}, true},
      {"nc/1.3", {"010", "012"}, true},
      {"nc/1.4", {"010", "011", "012"}, true},
      {"nc/1.5a", {"010", "012", "212"}, true},
      {"nc/1.5b", {"002", "012", "102", "112"}, true},
      {"nc/2.1", {"012", "120", "201"}, true},
      {"nc/3.1", {"010", "011", "012", "100", "101", "102"}, true},
      {"nc/3.2", {"010", "011", "012", "100", "101"}, true},
      {"nc/3.3", {"010", "012", "101"}, true},
      {"nc/4.1", {"012", "021", "102", "120", "201", "210"}, true},
      {"nc/5.1", {"002", "012", "112", "220", "221"}, true},
      {"nc/5.2", {"002", "012", "102", "112", "220", "221"}, true},
  };
}

// Bases with constants 0,1 and without 2; each list is completed with
// {000, 111, 012}. Families 4.3/4.5 and 4.6/4.7 repeat in the source.
inline std::vector<base_family> bases_two_constants() {
  return {
      {"c01/1.1", {"010", "011"}, true},
      {"c01/1.2", {"001", "010", "011"}, true},
      {"c01/1.3", {"001", "002", "010", "011"}, true},
      {"c01/1.4", {"001", "010", "011", "110"}, true},
      {"c01/1.5", {"001", "002", "010", "011", "110"}, true},
      {"c01/1.6", {"001", "002", "010", "011", "110", "112"}, true},
      {"c01/1.7", {"010", "011", "100", "101"}, true},
      {"c01/1.8", {"001", "010", "011", "100", "101", "110"}, true},
      {"c01/1.9", {"001", "002", "010", "011", "100", "101", "110"}, true},
      {"c01/1.10", {"001", "002", "010", "011", "100", "101", "110", "112"}, true},
      {"c01/1.11", {"010", "011", "100", "101", "102"}, true},
      {"c01/1.12", {"001", "010", "011", "100", "101", "102", "110"}, true},
      {"c01/1.13",
       {"001", "002", "010", "011", "100", "101", "102", "110", "112"},
       true},
      {"c01/2.1", {"001", "010"}, true},
      {"c01/2.2", {"001", "002", "010"}, true},
      {"c01/2.3", {"001", "010", "101", "110"}, true},
      {"c01/2.4", {"001", "002", "010", "101", "110"}, true},
      {"c01/2.5", {"001", "010", "101", "110", "112"}, true},
      {"c01/2.6", {"001", "002", "010", "101", "110", "112"}, true},
      {"c01/3.1", {"010", "110"}, true},
      {"c01/3.2", {"010", "110", "112"}, true},
      {"c01/3.3", {"001", "010", "110"}, true},
      {"c01/3.4", {"002", "010", "110"}, true},
      {"c01/3.5", {"001", "002", "010", "110"}, true},
      {"c01/3.6", {"001", "010", "110", "112"}, true},
      {"c01/3.7", {"002", "010", "110", "112"}, true},
      {"c01/3.8", {"001", "002", "010", "110", "112"}, true},
      {"c01/4.1", {"001"}, true},
      {"c01/4.2", {"001", "002"}, true},
      {"c01/4.3", {"001", "110"}, true},
      {"c01/4.4", {"001", "112"}, true},
      {"c01/4.5", {"001", "110"}, true},
      {"c01/4.6", {"001", "002", "110"}, true},
      {"c01/4.7", {"001", "002", "110"}, true},
      {"c01/4.8", {"001", "002", "112"}, true},
      {"c01/4.9", {"001", "002", "110", "112"}, true},
      {"c01/4.10", {"001", "102", "110"}, true},
      {"c01/4.11", {"001", "002", "102", "110", "112"}, true},
      {"c01/5.1", {}, true},
      {"c01/5.2", {"002"}, true},
      {"c01/5.3", {"010"}, true},
      {"c01/5.4", {"010", "002"}, true},
      {"c01/6.1", {"102"}, true},
      {"c01/6.2", {"002", "112"}, true},
      {"c01/6.3", {"002", "102", "112"}, true},
  };
}

// Three-constant bases. U-type displays are complete as printed; M-type and
// T1-type get {000, 111, 222, 012} added; the L pair and the final family
// are listed with their known misprints corrected (020 -> 022 in t1/3.3,
// 202 -> 201 in both L rows); the slu/* entries are generating seeds, not
// closed bases.
inline std::vector<base_family> bases_three_constants() {
  return {
      {"u/6.2a", {"000", "012", "111", "002", "112", "222"}, true},
      {"u/6.2b", {"000", "012", "111", "002", "112", "220", "221", "222"}, true},
      {"u/6.3a", {"000", "012", "111", "002", "102", "112", "222"}, true},
      {"u/6.3b",
       {"000", "012", "111", "002", "102", "112", "220", "221", "222"},
       true},
      {"m/I", {"000", "001", "011", "012", "111", "112", "122", "222"}, true},
      {"m/II", {"000", "002", "012", "022", "111", "112", "122", "222"}, true},
      {"m/III",
       {"000", "001", "002", "011", "012", "022", "111", "112", "122", "222"},
       true},
      {"t1/1.1", {"022", "212", "122", "202"}, true},
      {"t1/1.2", {"022", "212", "122", "202", "102"}, true},
      {"t1/1.3", {"022", "212", "122", "211", "202", "020", "200", "121"}, true},
      {"t1/1.4",
       {"022", "212", "122", "211", "202", "020", "200", "121", "102"},
       true},
      {"t1/2.1", {"002", "022", "112", "200", "211", "220", "221"}, false},
      {"t1/2.2", {"002", "022", "112", "200", "211", "220", "221", "102"}, false},
      {"t1/3.1", {"002", "022", "112", "212", "122", "202"}, true},
      {"t1/3.2", {"002", "022", "112", "212", "122", "202", "102"}, true},
      {"t1/3.3",
       {"002", "022", "112", "212", "122", "202", "020", "121", "200", "211",
        "220", "221"},
       true},
      {"t1/3.4",
       {"002", "022", "112", "212", "122", "202", "020", "121", "200", "211",
        "220", "221", "102"},
       true},
      {"l/a", {"000", "012", "111", "120", "201", "222"}, true},
      {"l/b", {"000", "012", "021", "102", "111", "120", "201", "210", "222"}, true},
      {"slu/1", {"002", "021"}, false},
      {"slu/2", {"010", "022", "112"}, false},
      {"slu/3", {"001", "020"}, false},
      {"slu/4", {"002", "011", "022"}, false},
      {"slu/5", {"001", "122"}, false},
      {"slu/6", {"120"}, false},
  };
}

}  // namespace tern::fixtures

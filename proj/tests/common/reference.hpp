#pragma once

// Published closed forms used as expected values by the test suites.

#include <string>
#include <utility>
#include <vector>

#include "confdesign/algebra/ratfunc.hpp"
#include "confdesign/virasoro/tensor.hpp"

namespace confdesign::reference {

struct Term {
  const char* a;
  const char* b;
  const char* coef;
};

inline TensorVector tensor(const std::vector<Term>& terms) {
  TensorVector v;
  for (const auto& t : terms) v.add({Partition::parse(t.a), Partition::parse(t.b)}, parse_ratfunc(t.coef));
  return v;
}

inline TensorVector v2() { return tensor({{"1", "2", "1"}, {"2", "1", "-(c-e)/e"}}); }

inline TensorVector v4() {
  return tensor({
      {"1", "4", "-3/5"},
      {"1", "2.2", "1"},
      {"4", "1", "-3*(22+5*c-5*e)*(c-e)/(5*e*(22+5*e))"},
      {"2", "2", "-2*(22+5*c-5*e)/(5*e)"},
      {"2.2", "1", "(22+5*c-5*e)*(c-e)/(e*(22+5*e))"},
  });
}

// Degree-6 highest weight vector for e = 1/2 modulo the singular vector s6.
inline TensorVector v6_half() {
  const std::string P = "(-5031+3195*c+1696*c^2+140*c^3)";
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> t = {
      {{"1", "6"}, "(-2/3)*(2373+1657*c+20*c^2)"},
      {{"1", "4.2"}, "-(1/3)*(12387+7301*c+112*c^2)"},
      {{"1", "3.3"}, "(1/3)*(6051+854*c+70*c^2)"},
      {{"1", "2.2.2"}, "501+1099*c"},
      {{"6", "1"}, "-(5/48)*(-1+2*c)*" + P},
      {{"4", "2"}, "-(11/3)*" + P},
      {{"3", "3"}, "-(2/3)*" + P},
      {{"2", "4"}, "(1/3)*(-102555+89361*c+12970*c^2+224*c^3)"},
      {{"2", "2.2"}, "-407*(-129+115*c+14*c^2)"},
      {{"4.2", "1"}, "-(7/24)*(-1+2*c)*" + P},
      {{"3.3", "1"}, "(35/192)*(-1+2*c)*" + P},
      {{"2.2", "2"}, "7*" + P},
  };
  TensorVector v;
  for (const auto& [k, c] : t) v.add({Partition::parse(k.first), Partition::parse(k.second)}, parse_ratfunc(c));
  return v;
}

// s6 = (-108 a6 - 264 a4 a2 + 93 a3^2 + 64 a2^3) 1
inline std::vector<std::pair<std::string, long>> s6() {
  return {{"6", -108}, {"4.2", -264}, {"3.3", 93}, {"2.2.2", 64}};
}

// Kac determinant factors D_2, D_4, D_6, D_8 (integer-primitive, sorted).
inline std::vector<std::vector<std::string>> kac_factors() {
  return {{"c"},
          {"c", "5*c + 22"},
          {"c", "2*c - 1", "5*c + 22", "7*c + 68"},
          {"c", "2*c - 1", "3*c + 46", "5*c + 3", "5*c + 22", "7*c + 68"}};
}

// Lowest-space and V_2 traces as (beta, alpha_0, alpha_1, alpha_2).
inline std::vector<const char*> trace_lowest_v2() { return {"0", "h", "-c/e"}; }
inline std::vector<const char*> trace_lowest_v4() {
  return {"0", "h/5 + h^2", "(22+5*c)*(c-2*(e+22*h+5*e*h))/(5*e*(22+5*e))", "(968+330*c+25*c^2)/(5*e*(22+5*e))"};
}
inline std::vector<const char*> trace_V2_v2() { return {"0", "2", "-c/e"}; }
inline std::vector<const char*> trace_V2_v4() {
  return {"(44+5*c)*(c-e)/(22+5*e)", "22/5", "(22+5*c)*(c-22*(4+e))/(5*e*(22+5*e))",
          "(968+330*c+25*c^2)/(5*e*(22+5*e))"};
}

inline const char* delta6() {
  return "15*(c+24)*(c+15)*(c+44/5)*(c-34/35)*(4+7*c+c^2-124*h-31*c*h+248*h^2)*(c-e)*h"
         "/(8*(e+68/7)*(e+22/5)^2*e^2*(e-1/2))";
}
inline const char* delta6_half() {
  return "15*(c+24)*(c+15)*(c+44/5)*(c-34/35)*(4+7*c+c^2-124*h-31*c*h+248*h^2)*h/512";
}

inline std::vector<const char*> diophant_values() {
  return {"1/2",   "8",     "52/5",  "16",    "132/7", "20",    "102/5", "748/35", "43/2", "22",
          "808/35", "47/2", "24",    "170/7", "49/2",  "172/7", "152/5", "61/2",   "154/5", "220/7",
          "63/2",  "32",    "164/5", "236/7", "34",    "242/7", "36",    "40",     "204/5", "44",
          "109/2", "428/7", "68",    "484/7", "187/2", "132",   "1496"};
}
inline std::vector<const char*> rational_h_values() {
  return {"1/2", "8", "16", "808/35", "47/2", "164/5", "236/7", "242/7"};
}

struct TableRow {
  const char* c;
  long d;
  const char* h1;  // nullptr for a dash
  const char* h2;
};
inline std::vector<TableRow> table1() {
  return {{"8", 156, "1/2", "1"},          {"16", 2296, "1", "3/2"},          {"808/35", 63428, "103/70", "67/35"},
          {"47/2", 96256, "3/2", "31/16"}, {"24", 196884, nullptr, nullptr}, {"32", 139504, nullptr, nullptr},
          {"164/5", 90118, "11/5", "12/5"}, {"236/7", 63366, "16/7", "17/7"}, {"242/7", 49291, "67/28", "17/7"},
          {"40", 20620, nullptr, nullptr}, {"1496", 54836, nullptr, nullptr}};
}

inline std::vector<const char*> fermion_values() {
  return {"1/2", "8", "16", "20", "47/2", "24", "49/2", "172/7", "152/5", "61/2", "63/2", "32", "164/5", "236/7", "36"};
}

}  // namespace confdesign::reference

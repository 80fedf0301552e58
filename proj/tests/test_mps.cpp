#include <gtest/gtest.h>

#include <sstream>

#include "prepos/formulation.hpp"
#include "prepos/lp/mps.hpp"
#include "support/fixtures.hpp"

namespace prepos::lp {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Mps, EmptyProblem) { EXPECT_EQ(export_mps(Problem{}), "NAME PREPOS\nENDATA\n"); }

TEST(Mps, TinyInstanceSections) {
  LinearProgram lp = build_lp(testing::hand_instance());
  std::string text = export_mps(lp.problem);
  auto lines = lines_of(text);
  std::vector<std::string> sections;
  for (const auto& l : lines)
    if (!l.empty() && l[0] != ' ') sections.push_back(l.substr(0, l.find(' ')));
  EXPECT_EQ(sections, (std::vector<std::string>{"NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA"}));

  int objective_entries = 0, fx = 0;
  for (const auto& l : lines) {
    std::istringstream in(l);
    std::string a, b, c;
    in >> a >> b >> c;
    if (b == "OBJ" && !c.empty()) ++objective_entries;
    if (a == "FX") ++fx;
  }
  EXPECT_EQ(objective_entries, 18);
  EXPECT_EQ(fx, 3);
  EXPECT_NE(text.find(" FX BND Y_c1_i1_j1_t1_s1 0\n"), std::string::npos);
  EXPECT_NE(text.find(" L capacity_i1_s1\n"), std::string::npos);
  EXPECT_NE(text.find("    H_c1_i1_t2_s3 OBJ "), std::string::npos);
}

TEST(Mps, ByteIdenticalAcrossCalls) {
  LinearProgram a = build_lp(testing::random_instance(3));
  LinearProgram b = build_lp(testing::random_instance(3));
  EXPECT_EQ(export_mps(a.problem), export_mps(b.problem));
}

TEST(Mps, NumbersRoundTrip) {
  Problem p;
  p.add_column("x", 0.1 + 0.2);
  p.rows.push_back({{{0, 1.0 / 3.0}}, Sense::LessEqual, 161.925, "r"});
  std::string text = export_mps(p);
  EXPECT_NE(text.find("x OBJ 0.30000000000000004"), std::string::npos);
  EXPECT_NE(text.find("RHS r 161.925"), std::string::npos);
}

}  // namespace
}  // namespace prepos::lp

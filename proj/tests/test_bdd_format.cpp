#include <gtest/gtest.h>

#include <random>
#include <string>

#include "natbdd/bdd.hpp"
#include "natbdd/bdd_format.hpp"
#include "natbdd/error.hpp"

namespace {

using natbdd::Bdd;
using natbdd::BddNode;
using natbdd::Errc;
using natbdd::Error;

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no natbdd::Error thrown";
  return Errc::table_out_of_range;
}

BddNode random_node(std::mt19937& rng, unsigned bound) {
  if (bound == 0 || rng() % 4 == 0) return BddNode::leaf(rng() % 2 == 1);
  const unsigned var = rng() % bound;
  BddNode t = random_node(rng, var);
  BddNode e = random_node(rng, var);
  return BddNode::ite(var, std::move(t), std::move(e));
}

TEST(BddFormat, SexpRendering) {
  EXPECT_EQ(natbdd::to_sexp(natbdd::plain_bdd(0, 0)), "(bdd 0 (c 0))");
  EXPECT_EQ(natbdd::to_sexp(natbdd::reduced_bdd(3, 42)),
            "(bdd 3 (ite 2 (c 0) (ite 1 (c 1) (ite 0 (c 1) (c 0)))))");
}

TEST(BddFormat, JsonRendering) {
  EXPECT_EQ(natbdd::to_json(natbdd::reduced_bdd(1, 1)),
            R"({"vars":1,"root":{"var":0,"then":{"leaf":1},"else":{"leaf":0}}})");
}

TEST(BddFormat, RoundtripProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned vars = rng() % 9;
    const Bdd b(vars, random_node(rng, vars));
    ASSERT_EQ(natbdd::parse_sexp(natbdd::to_sexp(b)), b);
    ASSERT_EQ(natbdd::parse_json(natbdd::to_json(b)), b);
    ASSERT_EQ(natbdd::parse_bdd(natbdd::to_json(b) + "\n"), b);
    ASSERT_EQ(natbdd::parse_bdd("  " + natbdd::to_sexp(b) + "\n"), b);
  }
}

TEST(BddFormat, SexpRejectsMalformedText) {
  for (const char* bad : {
           "",
           "(bdd 1 (c 2))",
           "(bdd 1  (c 0))",
           "(bdd 1 (c 0)",
           "(bdd 1 (c 0)) x",
           "(bdd 1 (ite 1 (c 0) (c 1)))",
           "(bdd 2 (ite 0 (ite 1 (c 0) (c 1)) (c 1)))",
           "(bdd -1 (c 0))",
           "(bdd 99999999999 (c 0))",
           "(bdd 1 (ite 0 (c 0)))",
           "bdd(1, c(0))",
       }) {
    EXPECT_EQ(code_of([&] { natbdd::parse_sexp(bad); }), Errc::parse_error) << bad;
  }
}

TEST(BddFormat, JsonRejectsMalformedText) {
  for (const char* bad : {
           "{",
           R"({"vars":1})",
           R"({"vars":1,"root":{"leaf":2}})",
           R"({"vars":-1,"root":{"leaf":0}})",
           R"({"vars":1,"root":{"leaf":0},"x":1})",
           R"({"vars":1,"root":{"var":1,"then":{"leaf":0},"else":{"leaf":1}}})",
           R"({"vars":1,"root":{"var":0,"then":{"leaf":0}}})",
           R"({"vars":1,"root":[0]})",
       }) {
    EXPECT_EQ(code_of([&] { natbdd::parse_json(bad); }), Errc::parse_error) << bad;
  }
}

TEST(BddFormat, DeepNestingIsRejected) {
  std::string deep = "(bdd 4294967295 ";
  for (int i = 0; i < 5000; ++i) deep += "(ite " + std::to_string(100000 - i) + " (c 0) ";
  EXPECT_EQ(code_of([&] { natbdd::parse_sexp(deep); }), Errc::parse_error);
}

}  // namespace

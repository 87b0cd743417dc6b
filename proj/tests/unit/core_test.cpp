#include <gtest/gtest.h>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"

namespace og {
namespace {

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-5, 4) * Rational(4), Rational(-5));
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/12"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_TRUE(Rational::looks_like("-1/2"));
  EXPECT_FALSE(Rational::looks_like("F"));
}

TEST(FiniteSet, ChoiceSet) {
  FiniteSet x = FiniteSet::of_atoms({"F", "A"});
  EXPECT_EQ(x.size(), 2u);
  EXPECT_TRUE(x.contains(Value::atom("A")));
  EXPECT_EQ(x.index_of(Value::atom("A")), 1u);
}

TEST(FiniteSet, EmptyAndDuplicates) {
  EXPECT_TRUE(FiniteSet::make({}).empty());
  EXPECT_THROW(FiniteSet::make({Value::atom("a"), Value::atom("a")}), DuplicateElement);
}

TEST(FiniteSet, Products) {
  FiniteSet x = FiniteSet::of_atoms({"F", "A"});
  FiniteSet xx = product_set(x, x);
  ASSERT_EQ(xx.size(), 4u);
  EXPECT_EQ(xx[0], Value::pair(Value::atom("F"), Value::atom("F")));
  EXPECT_EQ(xx[3], Value::pair(Value::atom("A"), Value::atom("A")));
  EXPECT_TRUE(product_set(FiniteSet(), FiniteSet::of_atoms({"x"})).empty());
  EXPECT_EQ(product_set(FiniteSet::of_atoms({"0", "1"}), FiniteSet::of_atoms({"0", "1", "2"})).size(), 6u);
}

TEST(FiniteSet, Coproducts) {
  FiniteSet two = coproduct_set(unit_set(), unit_set());
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], Value::tagged(0, Value::unit()));
  EXPECT_EQ(two[1], Value::tagged(1, Value::unit()));
  EXPECT_EQ(two[1].to_string(), "in2(*)");

  FiniteSet b = FiniteSet::of_atoms({"p", "q"});
  FiniteSet eb = coproduct_set(FiniteSet(), b);
  ASSERT_EQ(eb.size(), 2u);
  for (const auto& v : eb) EXPECT_EQ(v.tag(), 1u);

  FiniteSet x = FiniteSet::of_atoms({"x"});
  FiniteSet xx = coproduct_set(x, x);
  EXPECT_EQ(xx.size(), 2u);
  EXPECT_NE(xx[0], xx[1]);
}

TEST(TotalFn, FunctionSpaces) {
  FiniteSet x = FiniteSet::of_atoms({"F", "A"});
  EXPECT_EQ(function_set(FiniteSet::of_atoms({"h"}), x).size(), 2u);
  EXPECT_EQ(function_set(FiniteSet(), FiniteSet::of_atoms({"x"})).size(), 1u);
  FiniteSet bits = FiniteSet::of_atoms({"0", "1"});
  EXPECT_EQ(function_set(bits, bits).size(), 4u);
}

TEST(TotalFn, RejectsValuesOutsideTheCodomain) {
  FiniteSet x = FiniteSet::of_atoms({"F", "A"});
  EXPECT_THROW(TotalFn(x, Carrier::finite(x), {Value::atom("F"), Value::atom("Z")}), TypeMismatch);
  EXPECT_THROW(TotalFn(x, Carrier::finite(x), {Value::atom("F")}), TypeMismatch);
}

TEST(Bounds, EnumerationBound) {
  FiniteSet bits = FiniteSet::of_atoms({"0", "1"});
  FiniteSet big = function_set(bits, FiniteSet::of_atoms({"a", "b", "c", "d"}));
  EXPECT_THROW(enumerate_functions(big, big, Bounds{1000}), EnumerationBound);
}

}  // namespace
}  // namespace og

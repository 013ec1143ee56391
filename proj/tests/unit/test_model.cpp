#include "gda/error.hpp"
#include "gda/model.hpp"
#include "gda/oracle.hpp"
#include "random_terms.hpp"

#include <gtest/gtest.h>

using namespace gda;

namespace {

Element x(int i) { return Element::blade(Blade{1} << (i - 1)); }

}  // namespace

TEST(Models, TwoGeneratorRationalModelIsValid)
{
	ModelSpec s;
	s.k = 2;
	s.field = Field::rationals;
	s.delta = {{0, x(2)}};
	Model m = Model::build(s);
	EXPECT_EQ(m.apply(DiffKind::delta, x(1)), x(2));
	EXPECT_TRUE(m.apply(DiffKind::delta, x(2)).is_zero());
	EXPECT_FALSE(m.odd(DiffKind::delta));
}

TEST(Models, NonNilpotentTableIsRejected)
{
	ModelSpec s;
	s.k = 1;
	s.field = Field::rationals;
	s.delta = {{0, x(1)}};
	EXPECT_THROW(Model::build(s), ModelError);
}

TEST(Models, StructuralErrors)
{
	ModelSpec s;
	s.k = 7;
	EXPECT_THROW(Model::build(s), ModelError);
	s.k = 2;
	s.delta = {{0, Element::blade(0b100)}};
	EXPECT_THROW(Model::build(s), ModelError);
	s.delta = {{5, x(1)}};
	EXPECT_THROW(Model::build(s), ModelError);
	ModelSpec mixed;
	mixed.k = 3;
	mixed.field = Field::rationals;
	mixed.delta = {{0, x(2)}, {2, Element::scalar(1)}};
	EXPECT_THROW(Model::build(mixed), ModelError);
}

TEST(Models, Gf2StandardModelSquaresToZero)
{
	Model m = standard_model(Field::gf2);
	EXPECT_TRUE(m.commutes());
	for (Blade b = 0; b < 16; ++b)
		for (auto d : {DiffKind::delta, DiffKind::Delta}) {
			const Element e = Element::blade(b);
			EXPECT_TRUE(m.apply(d, m.apply(d, e)).is_zero()) << b;
		}
}

TEST(Models, RationalStandardModelIsOdd)
{
	Model m = standard_model(Field::rationals);
	EXPECT_TRUE(m.odd(DiffKind::delta));
	EXPECT_FALSE(m.has(DiffKind::Delta));
	EXPECT_EQ(m.apply(DiffKind::delta, x(1)), m.wedge(x(2), x(3)));
	for (Blade b = 0; b < 16; ++b) {
		const Element e = Element::blade(b);
		EXPECT_TRUE(m.apply(DiffKind::delta, m.apply(DiffKind::delta, e)).is_zero()) << b;
	}
}

TEST(Models, WedgeSignsAndCoefficients)
{
	Model q = standard_model(Field::rationals);
	EXPECT_EQ(q.wedge(x(2), x(1)), q.scale(-1, q.wedge(x(1), x(2))));
	EXPECT_TRUE(q.wedge(x(1), x(1)).is_zero());
	Model f = standard_model(Field::gf2);
	EXPECT_EQ(f.wedge(x(2), x(1)), f.wedge(x(1), x(2)));
	EXPECT_TRUE(f.scale(2, x(1)).is_zero());
	EXPECT_THROW(f.coefficient(Rational(1, 2)), ModelError);
	EXPECT_EQ(to_string(q.wedge(x(1), x(3))), "1*x1*x3");
}

TEST(Evaluation, IsAHomomorphism)
{
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {0, 0, 0});
	Term b = make_generator(reg, "b", {0, 0, 0});
	Model m = standard_model(Field::rationals);
	Assignment as{{"a", x(1)}, {"b", x(3)}};
	EXPECT_EQ(evaluate(multiply({a, b}), m, as), m.wedge(x(1), x(3)));
	EXPECT_EQ(evaluate(add(scale(2, a), b), m, as), m.add(m.scale(2, x(1)), x(3)));
	EXPECT_TRUE(evaluate(Term{}, m, as).is_zero());
	EXPECT_EQ(evaluate(apply_differential(DiffKind::delta, a), m, as), m.apply(DiffKind::delta, x(1)));
	EXPECT_THROW(evaluate(a, m, {}), AssignmentError);
	EXPECT_THROW(evaluate(apply_differential(DiffKind::Delta, a), m, as), ModelError);
}

TEST(Evaluation, ProductOrderMatters)
{
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {1, 0, 0});
	Term b = make_generator(reg, "b", {1, 0, 0});
	Model m = standard_model(Field::rationals);
	EXPECT_FALSE(check_identity(multiply({a, b}), multiply({b, a}), m, 20, 3));
	EXPECT_TRUE(check_identity(multiply({a, b}), scale(-1, multiply({b, a})), m, 20, 3));
}

TEST(Evaluation, PaperSquareOverGf2)
{
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {0, 0, 0});
	Term b = make_generator(reg, "b", {0, 0, 0});
	Model m = standard_model(Field::gf2);
	const Term ab = multiply({a, b});
	const Term twice = apply_differential(DiffKind::delta, apply_differential(DiffKind::delta, ab));
	const Term cross = multiply({apply_differential(DiffKind::delta, a), apply_differential(DiffKind::delta, b)});
	EXPECT_EQ(twice, scale(2, cross));
	EXPECT_TRUE(check_identity(twice, Term{}, m, 30, 11));
}

TEST(Oracle, RandomLeibnizOverBothFields)
{
	test::RandomTerms gen(17);
	Model f = standard_model(Field::gf2);
	Model q = standard_model(Field::rationals);
	for (int i = 0; i < 60; ++i) {
		Term t = gen.homogeneous(4);
		for (const auto& id : leibniz_identities("t", t, DiffKind::delta, SignMode::paper_literal)) {
			auto r = check_model_identity(id, f, 10, i);
			EXPECT_TRUE(r.passed || r.skipped) << id.name << ": " << to_string(t);
		}
		for (const auto& id : leibniz_identities("t", t, DiffKind::delta, SignMode::koszul)) {
			auto r = check_model_identity(id, q, 10, i);
			EXPECT_TRUE(r.passed || r.skipped) << id.name << ": " << to_string(t);
		}
	}
}

TEST(Oracle, WrongSignsAreCaughtOverQ)
{
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {1, 0, 0});
	Term b = make_generator(reg, "b", {0, 0, 0});
	Model q = standard_model(Field::rationals);
	auto ids = leibniz_identities("ab", multiply({a, b}), DiffKind::delta, SignMode::paper_literal);
	ASSERT_FALSE(ids.empty());
	EXPECT_FALSE(check_model_identity(ids.front(), q, 20, 1).passed);
}

TEST(Oracle, MissingDerivationIsSkipped)
{
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {0, 0, 0});
	Model q = standard_model(Field::rationals);
	ModelIdentity id{"Delta a", apply_differential(DiffKind::Delta, a), a, {DiffKind::Delta}};
	auto r = check_model_identity(id, q, 5, 1);
	EXPECT_TRUE(r.skipped);
	EXPECT_FALSE(r.passed);
}

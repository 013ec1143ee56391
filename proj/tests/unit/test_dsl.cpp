#include "gda/dsl.hpp"
#include "gda/error.hpp"
#include "schema.hpp"

#include <gtest/gtest.h>

using namespace gda;
using namespace gda::dsl;

namespace {

const std::vector<std::string> shipped{"data/orthogonality.gda", "data/cocycle.gda", "data/cocycle_unclosed.gda"};

std::pair<std::size_t, std::size_t> error_position(std::string_view text)
{
	try {
		parse(text);
	} catch (const ParseError& e) {
		return {e.line(), e.column()};
	}
	return {0, 0};
}

}  // namespace

TEST(Dsl, ShippedFilesRoundTrip)
{
	for (const auto& rel : shipped) {
		SessionDecl d = parse(test::read_text(test::source_path(rel)));
		EXPECT_FALSE(d.statements.empty()) << rel;
		EXPECT_EQ(d.positions.size(), d.statements.size());
		const std::string printed = print(d);
		EXPECT_EQ(parse(printed), d) << rel;
		EXPECT_EQ(print(parse(printed)), printed) << rel;
	}
}

TEST(Dsl, AllStatementKindsRoundTrip)
{
	const std::string text = R"(set depth 4;
bound m >= -2;
gen a index (1,-1,0) flags [picked, nonlocal2];
gen b index (0,0,0);
ideal square2 D(a);
condition (I0) 0 = (d(a), b) - 1/2*(b, d(a));
condition (0) d(b) = a;
completion C := mama(a; b, b);
closed C by Delta;
tuba T := tuba(a, a; b, b, b, b) by Delta;
class K := kordo(a; b, b, b, b) symm [delta, Delta];
)";
	SessionDecl d = parse(text);
	ASSERT_EQ(d.statements.size(), 11u);
	EXPECT_EQ(parse(print(d)), d);
	const auto& cond = std::get<ConditionStmt>(d.statements[5]);
	ASSERT_EQ(cond.rhs.summands.size(), 2u);
	EXPECT_EQ(cond.rhs.summands[1].coeff, Rational(-1, 2));
	EXPECT_EQ(d.positions[2].line, 3u);
}

TEST(Dsl, OverlapAnnotations)
{
	TermExpr t = parse_term("(a[r=1,t=2], b)");
	ASSERT_EQ(t.summands.size(), 1u);
	EXPECT_EQ(t.summands[0].factors[0].overlap.r, 1);
	EXPECT_EQ(t.summands[0].factors[0].overlap.t, 2);
	EXPECT_EQ(parse_term(print(t)), t);
	EXPECT_THROW(parse_term("(a[q=1])"), ParseError);
	EXPECT_THROW(parse_term("(a[r=-1])"), ParseError);
}

TEST(Dsl, NestedDifferentials)
{
	TermExpr t = parse_term("D(d(x))");
	const auto& f = t.summands.at(0).factors.at(0);
	EXPECT_EQ(f.name, "x");
	EXPECT_EQ(f.diffs, (std::vector<DiffKind>{DiffKind::delta, DiffKind::Delta}));
	EXPECT_EQ(print(f), "D(d(x))");
	EXPECT_TRUE(parse_term("0").summands.empty());
	EXPECT_EQ(print(parse_term("0")), "0");
}

TEST(Dsl, MalformedIndexReportsPosition)
{
	auto [line, col] = error_position("gen a index (1,0,0);\ngen b index (1,x,0);");
	EXPECT_EQ(line, 2u);
	EXPECT_EQ(col, 16u);
}

TEST(Dsl, Diagnostics)
{
	EXPECT_EQ(error_position("gen a index (0,0,0)").first, 1u);
	EXPECT_EQ(error_position("frobnicate;").first, 1u);
	EXPECT_NE(error_position("condition (IX) 0 = a;").first, 0u);
	EXPECT_NE(error_position("ideal cubic a;").first, 0u);
	EXPECT_NE(error_position("gen d index (0,0,0);").first, 0u);
	EXPECT_EQ(error_position("# only a comment\n").first, 0u);
}

TEST(Dsl, Placeholders)
{
	EXPECT_THROW(parse_equation("a = (?b, c)"), ParseError);
	auto [lhs, rhs] = parse_equation("a = (?b, c)", true);
	EXPECT_EQ(rhs.summands.at(0).factors.at(0).name, "?b");
}

TEST(Dsl, ElaborationToTerms)
{
	SymbolRegistry reg;
	make_generator(reg, "a", {1, 0, 0});
	make_generator(reg, "b", {0, 1, 0});
	Resolver r = [&](const std::string& n) { return reg.find(n); };
	Term t = to_term(parse_term("2*(a, b) - (a, b)"), r);
	EXPECT_EQ(to_string(t), "1*(a, b)");
	EXPECT_EQ(t.begin()->second, 1);
	EXPECT_THROW(to_term(parse_term("(a, b) + a"), r), HeterogeneousSum);
	EXPECT_NO_THROW(to_term(parse_term("(a, b) + a"), r, {}, false));
	EXPECT_THROW(to_term(parse_term("zz"), r), Error);
}

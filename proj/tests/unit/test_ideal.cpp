#include "gda/error.hpp"
#include "gda/ideal.hpp"

#include <gtest/gtest.h>

using namespace gda;

namespace {

struct Ideals : ::testing::Test {
	SymbolRegistry reg;
	Term a = make_generator(reg, "a", {0, 0, 0});
	Term b = make_generator(reg, "b", {0, 0, 0});
	Term c = make_generator(reg, "c", {0, 0, 0});
	Term phi = make_generator(reg, "phi", {0, 1, 0});
	Term theta = make_generator(reg, "theta", {1, 0, 0});
	Term theta2 = make_generator(reg, "theta2", {1, 0, 0});
	Factor dphi = push_diff(make_factor(reg.get("phi")), DiffKind::delta);
	IdealRegistry ideals;
};

Factor factor_of(const Term& t) { return t.begin()->first.factors.front(); }

}  // namespace

TEST_F(Ideals, MembershipIsByPattern)
{
	ideals.register_member(IdealKind::nonlocal2, dphi);
	EXPECT_TRUE(ideals.is_member(IdealKind::nonlocal2, dphi));
	EXPECT_FALSE(ideals.is_member(IdealKind::nonlocal2, factor_of(phi)));
	ideals.register_member(IdealKind::nonlocal2, dphi);
	EXPECT_EQ(ideals.size(IdealKind::nonlocal2), 1u);
}

TEST_F(Ideals, NonLocalPairAnywhereVanishes)
{
	ideals.register_member(IdealKind::nonlocal2, dphi);
	Term t = multiply({a, Term::of(dphi), b, Term::of(dphi), c});
	EXPECT_TRUE(reduce(t, ideals).is_zero());
	auto hit = find_vanishing(t.begin()->first, ideals);
	ASSERT_TRUE(hit);
	EXPECT_EQ(hit->first, 1u);
	EXPECT_EQ(hit->second, 3u);
}

TEST_F(Ideals, SingleMemberSurvives)
{
	ideals.register_member(IdealKind::nonlocal2, dphi);
	Term t = multiply({a, Term::of(dphi), c});
	EXPECT_EQ(reduce(t, ideals), t);
}

TEST_F(Ideals, LocalRuleNeedsAdjacency)
{
	ideals.register_member(IdealKind::local2, factor_of(theta));
	ideals.register_member(IdealKind::local2, factor_of(theta2));
	Term apart = multiply({theta, a, theta2});
	EXPECT_EQ(reduce(apart, ideals), apart);
	EXPECT_TRUE(reduce(multiply({a, theta, theta2}), ideals).is_zero());
}

TEST_F(Ideals, SquareRuleNeedsIdenticalNeighbours)
{
	ideals.register_member(IdealKind::square2, factor_of(theta));
	ideals.register_member(IdealKind::square2, factor_of(theta2));
	EXPECT_TRUE(reduce(multiply({theta, theta}), ideals).is_zero());
	Term mixed = multiply({theta, theta2});
	EXPECT_EQ(reduce(mixed, ideals), mixed);
}

TEST_F(Ideals, AbsorbFlags)
{
	reg.declare("psi", {0, 0, 0}, {IdealFlag::nonlocal2});
	ideals.absorb_flags(reg);
	EXPECT_TRUE(ideals.is_member(IdealKind::nonlocal2, make_factor(reg.get("psi"))));
}

TEST_F(Ideals, WithoutRemovesOneMember)
{
	ideals.register_member(IdealKind::nonlocal2, dphi);
	IdealRegistry fewer = ideals.without(IdealKind::nonlocal2, dphi);
	EXPECT_FALSE(fewer.is_member(IdealKind::nonlocal2, dphi));
	EXPECT_TRUE(ideals.is_member(IdealKind::nonlocal2, dphi));
}

TEST(Factorization, ResolvesBothEndsOfAPair)
{
	SymbolRegistry reg;
	Term Pp = make_generator(reg, "Phi'", {1, 0, 0});
	Term P = make_generator(reg, "Phi", {-1, 0, 0});
	const Monomial m = multiply({Pp, P}).begin()->first;
	auto moves = factorization_moves(m, reg);
	ASSERT_EQ(moves.size(), 2u);

	const auto& first = moves[0];
	EXPECT_EQ(first.variant, Variant::right);
	EXPECT_EQ(first.resolved.name(), "Phi'");
	ASSERT_EQ(first.replacement.arity(), 2u);
	EXPECT_TRUE(first.replacement.factors[0].gen->fresh);
	EXPECT_EQ(first.replacement.factors[1].name(), "Phi");
	// fresh index solves Phi' = (beta', Phi): index(Phi') - index(Phi)
	EXPECT_EQ(first.fresh->index, (Index{2, 0, 0}));
	EXPECT_EQ(first.replacement.index(), (Index{1, 0, 0}));

	const auto& second = moves[1];
	EXPECT_EQ(second.variant, Variant::left);
	EXPECT_EQ(second.resolved.name(), "Phi");
	EXPECT_EQ(second.replacement.factors[0].name(), "Phi'");
	EXPECT_EQ(second.fresh->index, (Index{-2, 0, 0}));
}

TEST(Factorization, MiddlePositionHasThreeVariants)
{
	SymbolRegistry reg;
	Term x = make_generator(reg, "x", {1, 0, 0});
	Term y = make_generator(reg, "y", {0, 1, 0});
	Term z = make_generator(reg, "z", {0, 0, 1});
	auto moves = factorization_moves(multiply({x, y, z}).begin()->first, reg);
	std::size_t middle = 0;
	for (const auto& mv : moves)
		if (mv.position == 1) ++middle;
	EXPECT_EQ(middle, 3u);
	for (const auto& mv : moves) EXPECT_EQ(mv.replacement.index(), mv.resolved.effective_index());
}

TEST(Factorization, BoundsViolationsAreReported)
{
	SymbolRegistry reg;
	Term Pp = make_generator(reg, "Phi'", {1, 0, 0});
	Term P = make_generator(reg, "Phi", {-1, 0, 0});
	CoherenceConfig cfg;
	cfg.bounds.n_min = -1;
	std::vector<std::string> violations;
	auto moves = factorization_moves(multiply({Pp, P}).begin()->first, reg, cfg, &violations);
	EXPECT_EQ(moves.size(), 1u);
	EXPECT_EQ(violations.size(), 1u);
	EXPECT_THROW(factorization_moves(multiply({Pp, P}).begin()->first, reg, cfg), CoherenceViolation);
}

TEST(Factorization, SolveFreshIndex)
{
	const std::vector<Index> neighbours{{1, 2, 3}, {0, -1, 1}};
	EXPECT_EQ(solve_fresh_index({4, 4, 4}, neighbours, {}), (Index{3, 3, 0}));
}

#include "gda/differential.hpp"

#include "gda/error.hpp"

namespace gda {

std::string_view to_string(SignMode s) { return s == SignMode::paper_literal ? "paper" : "koszul"; }
std::string_view to_string(EpsilonMode e) { return e == EpsilonMode::pair ? "pair" : "drop"; }

Index index_shift(DiffKind d, Index i, const IndexBounds& bounds)
{
	Index out = shift(d, i);
	bounds.enforce(out, std::string(to_string(d)) + " image");
	return out;
}

namespace {

std::int64_t sign_degree(DiffKind d, const Factor& f)
{
	Index i = f.effective_index();
	return d == DiffKind::delta ? i.n : i.kappa;
}

}  // namespace

std::vector<LeibnizSummand> leibniz_summands(DiffKind d, const Monomial& m, SignMode sign, const DiffLaws& laws,
                                             const std::set<std::size_t>* slots)
{
	std::vector<LeibnizSummand> out;
	std::int64_t preceding = 0;
	for (std::size_t i = 0; i < m.arity(); ++i) {
		if (!slots || slots->count(i)) {
			Monomial next = m;
			next.factors[i] = push_diff(next.factors[i], d);
			int s = (sign == SignMode::koszul && (preceding % 2 != 0)) ? -1 : 1;
			bool dead = annihilated(next.factors[i], laws);
			out.push_back({i, s, std::move(next), dead});
		}
		preceding += sign_degree(d, m.factors[i]);
	}
	return out;
}

Term apply_differential(DiffKind d, const Term& t, SignMode sign, const DiffLaws& laws)
{
	Term raw;
	for (const auto& [m, c] : t)
		for (auto& s : leibniz_summands(d, m, sign, laws))
			if (!s.annihilated) raw.accumulate(s.monomial, c * s.sign);
	raw.mark_heterogeneous(t.heterogeneous());
	return normalize(raw, laws);
}

Term apply_slot_differential(DiffKind d, const Monomial& m, const std::set<std::size_t>& slots, SignMode sign,
                             const DiffLaws& laws)
{
	for (auto s : slots)
		if (s >= m.arity())
			throw SlotError("slot " + std::to_string(s) + " out of range for a product of " +
			                std::to_string(m.arity()) + " factors");
	Term raw;
	for (auto& s : leibniz_summands(d, m, sign, laws, &slots))
		if (!s.annihilated) raw.accumulate(s.monomial, s.sign);
	return normalize(raw, laws);
}

std::vector<Factor> epsilon(EpsilonMode mode, std::span<const Factor> a, std::span<const Factor> x)
{
	std::vector<Factor> out(a.begin(), a.end());
	if (mode == EpsilonMode::pair) out.insert(out.end(), x.begin(), x.end());
	return out;
}

Term epsilon(EpsilonMode mode, const Term& a, const Term& x)
{
	if (mode == EpsilonMode::drop) return a;
	return multiply({a, x});
}

}  // namespace gda

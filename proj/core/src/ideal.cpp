#include "gda/ideal.hpp"

#include "gda/error.hpp"

namespace gda {

std::string_view to_string(IdealKind k)
{
	switch (k) {
	case IdealKind::nonlocal2: return "nonlocal2";
	case IdealKind::local2: return "local2";
	case IdealKind::square2: return "square2";
	}
	return "nonlocal2";
}

std::string_view to_string(Variant v)
{
	switch (v) {
	case Variant::left: return "left";
	case Variant::right: return "right";
	case Variant::two_sided: return "two-sided";
	}
	return "left";
}

namespace {

IdealRegistry::Pattern pattern_of(const Factor& f, const DiffLaws& laws)
{
	Factor c = canonical_factor(f, laws);
	return {c.name(), c.diffs};
}

}  // namespace

const std::set<IdealRegistry::Pattern>& IdealRegistry::set_for(IdealKind kind) const
{
	switch (kind) {
	case IdealKind::nonlocal2: return nonlocal_;
	case IdealKind::local2: return local_;
	case IdealKind::square2: return square_;
	}
	return nonlocal_;
}

std::set<IdealRegistry::Pattern>& IdealRegistry::set_for(IdealKind kind)
{
	return const_cast<std::set<Pattern>&>(std::as_const(*this).set_for(kind));
}

void IdealRegistry::register_member(IdealKind kind, const Factor& pattern, const DiffLaws& laws)
{
	set_for(kind).insert(pattern_of(pattern, laws));
}

void IdealRegistry::absorb_flags(const SymbolRegistry& symbols)
{
	for (const auto& s : symbols.symbols()) {
		Factor f = make_factor(s);
		if (s->flags.has(IdealFlag::nonlocal2)) register_member(IdealKind::nonlocal2, f);
		if (s->flags.has(IdealFlag::local2)) register_member(IdealKind::local2, f);
		if (s->flags.has(IdealFlag::square2)) register_member(IdealKind::square2, f);
	}
}

bool IdealRegistry::is_member(IdealKind kind, const Factor& f, const DiffLaws& laws) const
{
	return set_for(kind).count(pattern_of(f, laws)) > 0;
}

std::size_t IdealRegistry::size(IdealKind kind) const { return set_for(kind).size(); }

IdealRegistry IdealRegistry::without(IdealKind kind, const Factor& pattern, const DiffLaws& laws) const
{
	IdealRegistry copy = *this;
	copy.set_for(kind).erase(pattern_of(pattern, laws));
	return copy;
}

std::string describe(const VanishingHit& hit, const Monomial& m)
{
	const std::string a = to_string(m.factors[hit.first]);
	const std::string b = to_string(m.factors[hit.second]);
	switch (hit.rule) {
	case Vanishing::nonlocal_pair:
		return "ideal I_nl(2): " + a + " and " + b + " at positions " + std::to_string(hit.first) + "," +
		       std::to_string(hit.second);
	case Vanishing::local_adjacent: return "ideal I_l(2): adjacent " + a + ", " + b;
	case Vanishing::square_adjacent: return "ideal I(2): square of " + a;
	}
	return {};
}

std::optional<VanishingHit> find_vanishing(const Monomial& m, const IdealRegistry& ideals, const DiffLaws& laws)
{
	const std::size_t l = m.arity();
	std::optional<std::size_t> first_nonlocal;
	for (std::size_t i = 0; i < l; ++i) {
		if (ideals.is_member(IdealKind::nonlocal2, m.factors[i], laws)) {
			if (first_nonlocal) return VanishingHit{Vanishing::nonlocal_pair, *first_nonlocal, i};
			first_nonlocal = i;
		}
	}
	for (std::size_t i = 0; i + 1 < l; ++i) {
		const Factor& a = m.factors[i];
		const Factor& b = m.factors[i + 1];
		if (ideals.is_member(IdealKind::local2, a, laws) && ideals.is_member(IdealKind::local2, b, laws))
			return VanishingHit{Vanishing::local_adjacent, i, i + 1};
		if (ideals.is_member(IdealKind::square2, a, laws) &&
		    canonical_factor(a, laws) == canonical_factor(b, laws))
			return VanishingHit{Vanishing::square_adjacent, i, i + 1};
	}
	return std::nullopt;
}

Term reduce(const Term& t, const IdealRegistry& ideals, const DiffLaws& laws)
{
	Term normal = normalize(t, laws);
	Term out;
	for (const auto& [m, c] : normal)
		if (!find_vanishing(m, ideals, laws)) out.accumulate(m, c);
	out.mark_heterogeneous(normal.heterogeneous() && !out.is_zero());
	return out;
}

Index solve_fresh_index(const Index& target, std::span<const Index> neighbours, const CoherenceConfig& config)
{
	Index known;
	for (const auto& i : neighbours) known = known + i;
	Index fresh = target - known;
	if (config.literal_m) {
		// m = sum(n_j - t_j) does not involve the fresh m component; it must hold already.
		if (target.m != target.n)
			throw CoherenceViolation("m-equation " + std::to_string(target.m) + " = " + std::to_string(target.n) +
			                         " cannot be solved under the literal m-coherence reading");
	}
	config.bounds.enforce(fresh, "fresh generator");
	return fresh;
}

std::vector<FactorizationResult> factorization_moves(const Monomial& product, SymbolRegistry& symbols,
                                                     const CoherenceConfig& config,
                                                     std::vector<std::string>* violations)
{
	std::vector<FactorizationResult> out;
	const std::size_t l = product.arity();
	if (l < 2) return out;

	auto attempt = [&](Variant v, std::size_t pos) {
		const Factor& x = product.factors[pos];
		std::vector<Index> around;
		if (v != Variant::right) around.push_back(product.factors[pos - 1].effective_index());
		if (v != Variant::left) around.push_back(product.factors[pos + 1].effective_index());
		Index fresh_index;
		try {
			fresh_index = solve_fresh_index(x.effective_index(), around, config);
		} catch (const CoherenceViolation& e) {
			if (!violations) throw;
			violations->push_back("position " + std::to_string(pos) + " " + std::string(to_string(v)) + ": " +
			                      e.what());
			return;
		}
		auto fresh = symbols.fresh(fresh_index, x.gen->role);
		std::vector<Factor> fs;
		if (v != Variant::right) fs.push_back(product.factors[pos - 1]);
		fs.push_back(make_factor(fresh));
		if (v != Variant::left) fs.push_back(product.factors[pos + 1]);
		out.push_back({v, pos, x, Monomial(std::move(fs)), fresh});
	};

	for (std::size_t pos = 0; pos < l; ++pos) {
		const bool has_left = pos > 0;
		const bool has_right = pos + 1 < l;
		if (has_right) attempt(Variant::right, pos);
		if (has_left) attempt(Variant::left, pos);
		if (has_left && has_right) attempt(Variant::two_sided, pos);
	}
	return out;
}

}  // namespace gda

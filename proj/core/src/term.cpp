#include "gda/term.hpp"

#include "gda/error.hpp"

#include <algorithm>

namespace gda {

Index shift(DiffKind d, Index i)
{
	if (d == DiffKind::delta) return {i.n + 1, i.m - 1, i.kappa};
	return {i.n, i.m, i.kappa + 1};
}

std::string_view to_string(DiffKind d) { return d == DiffKind::delta ? "delta" : "Delta"; }

bool is_chain_cochain(DiffKind d, const DiffLaws& laws)
{
	return d == DiffKind::delta || laws.Delta_chain_cochain;
}

Index Factor::effective_index() const
{
	Index i = gen->index;
	for (auto d : diffs) i = shift(d, i);
	return i;
}

std::strong_ordering Factor::operator<=>(const Factor& o) const
{
	if (auto c = gen->name <=> o.gen->name; c != 0) return c;
	return diffs <=> o.diffs;
}

Factor make_factor(SymbolPtr gen, std::vector<DiffKind> diffs)
{
	if (!gen) throw Error("factor without generator");
	return Factor{std::move(gen), std::move(diffs)};
}

Factor push_diff(Factor f, DiffKind d)
{
	f.diffs.push_back(d);
	return f;
}

Monomial::Monomial(std::vector<Factor> fs) : factors(std::move(fs)), overlaps(factors.size()) {}

Monomial::Monomial(std::vector<Factor> fs, std::vector<Overlap> ovs) : factors(std::move(fs)), overlaps(std::move(ovs))
{
	if (overlaps.size() != factors.size()) throw Error("overlap list length differs from factor count");
}

std::vector<IndexedFactor> Monomial::indexed() const
{
	std::vector<IndexedFactor> out;
	out.reserve(factors.size());
	for (std::size_t i = 0; i < factors.size(); ++i) out.push_back({factors[i].effective_index(), overlaps[i]});
	return out;
}

Index Monomial::index(const CoherenceConfig& config) const { return coherent_index(indexed(), config); }

Index Monomial::index_unchecked(const CoherenceConfig& config) const
{
	return coherent_index_unchecked(indexed(), config);
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const
{
	if (auto c = factors.size() <=> o.factors.size(); c != 0) return c;
	for (std::size_t i = 0; i < factors.size(); ++i)
		if (auto c = factors[i].name() <=> o.factors[i].name(); c != 0) return c;
	for (std::size_t i = 0; i < factors.size(); ++i)
		if (auto c = factors[i].diffs <=> o.factors[i].diffs; c != 0) return c;
	return overlaps <=> o.overlaps;
}

Monomial concat(const Monomial& a, const Monomial& b)
{
	Monomial out = a;
	out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
	out.overlaps.insert(out.overlaps.end(), b.overlaps.begin(), b.overlaps.end());
	return out;
}

Term Term::of(Monomial m, const Rational& c)
{
	Term t;
	t.accumulate(m, c);
	return t;
}

Term Term::of(const Factor& f, const Rational& c) { return of(Monomial({f}), c); }

Rational Term::coefficient(const Monomial& m) const
{
	auto it = summands_.find(m);
	return it == summands_.end() ? Rational(0) : it->second;
}

void Term::accumulate(const Monomial& m, const Rational& c)
{
	if (c == 0) return;
	auto [it, inserted] = summands_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) summands_.erase(it);
	}
}

std::optional<Index> Term::index(const CoherenceConfig& config) const
{
	if (summands_.empty()) return std::nullopt;
	return summands_.begin()->first.index_unchecked(config);
}

bool Term::homogeneous(const CoherenceConfig& config) const
{
	auto first = index(config);
	for (const auto& [m, c] : summands_)
		if (m.index_unchecked(config) != *first) return false;
	return true;
}

Term make_generator(SymbolRegistry& registry, const std::string& name, Index index, FlagSet flags, Role role)
{
	auto sym = registry.declare(name, index, flags, role);
	return Term::of(make_factor(sym));
}

Term multiply(std::span<const Term> terms)
{
	if (terms.empty()) throw ArityError("product of zero terms");
	Term acc = terms.front();
	for (std::size_t k = 1; k < terms.size(); ++k) {
		Term next;
		for (const auto& [ma, ca] : acc)
			for (const auto& [mb, cb] : terms[k]) next.accumulate(concat(ma, mb), ca * cb);
		next.mark_heterogeneous(acc.heterogeneous() || terms[k].heterogeneous());
		acc = std::move(next);
	}
	return acc;
}

Term multiply(std::initializer_list<Term> terms) { return multiply(std::span<const Term>(terms.begin(), terms.size())); }

Term add_heterogeneous(const Term& a, const Term& b, const CoherenceConfig& config)
{
	Term out = a;
	for (const auto& [m, c] : b) out.accumulate(m, c);
	bool het = a.heterogeneous() || b.heterogeneous();
	if (!a.is_zero() && !b.is_zero() && *a.index(config) != *b.index(config)) het = true;
	out.mark_heterogeneous(het && !out.is_zero());
	return out;
}

Term add(const Term& a, const Term& b, const CoherenceConfig& config)
{
	if (!a.is_zero() && !b.is_zero() && *a.index(config) != *b.index(config))
		throw HeterogeneousSum("cannot add terms of index " + to_string(*a.index(config)) + " and " +
		                       to_string(*b.index(config)));
	return add_heterogeneous(a, b, config);
}

Term scale(const Rational& q, const Term& t)
{
	Term out;
	if (q == 0) return out;
	for (const auto& [m, c] : t) out.accumulate(m, q * c);
	out.mark_heterogeneous(t.heterogeneous());
	return out;
}

Term subtract(const Term& a, const Term& b, const CoherenceConfig& config) { return add(a, scale(-1, b), config); }

Factor canonical_factor(Factor f, const DiffLaws& laws)
{
	if (laws.Delta_commutes) std::stable_sort(f.diffs.begin(), f.diffs.end());
	return f;
}

bool annihilated(const Factor& raw, const DiffLaws& laws)
{
	Factor f = canonical_factor(raw, laws);
	for (std::size_t i = 0; i + 1 < f.diffs.size(); ++i)
		if (f.diffs[i] == f.diffs[i + 1] && is_chain_cochain(f.diffs[i], laws)) return true;
	if (f.diffs.empty()) return false;
	if (f.gen->is_constant_for(raw.diffs.front())) return true;
	if (laws.Delta_commutes)
		for (auto d : f.diffs)
			if (f.gen->is_constant_for(d)) return true;
	return false;
}

bool annihilated(const Monomial& m, const DiffLaws& laws)
{
	return std::any_of(m.factors.begin(), m.factors.end(), [&](const Factor& f) { return annihilated(f, laws); });
}

Term normalize(const Term& t, const DiffLaws& laws)
{
	Term out;
	for (const auto& [m, c] : t) {
		if (annihilated(m, laws)) continue;
		Monomial cm = m;
		for (auto& f : cm.factors) f = canonical_factor(f, laws);
		out.accumulate(cm, c);
	}
	out.mark_heterogeneous(t.heterogeneous() && !out.is_zero());
	return out;
}

Term rename(const Term& t, const std::map<std::string, SymbolPtr>& mapping)
{
	Term out;
	for (const auto& [m, c] : t) {
		Monomial r = m;
		for (auto& f : r.factors)
			if (auto it = mapping.find(f.name()); it != mapping.end()) f.gen = it->second;
		out.accumulate(r, c);
	}
	out.mark_heterogeneous(t.heterogeneous());
	return out;
}

std::string to_string(const Factor& f)
{
	std::string s = f.name();
	for (auto d : f.diffs) s = std::string(d == DiffKind::delta ? "d(" : "D(") + s + ")";
	return s;
}

std::string to_string(const Monomial& m)
{
	std::string s = "(";
	for (std::size_t i = 0; i < m.factors.size(); ++i) {
		if (i) s += ", ";
		s += to_string(m.factors[i]);
		const auto& ov = m.overlaps[i];
		if (!ov.is_zero()) {
			s += "[";
			if (ov.r) s += "r=" + std::to_string(ov.r);
			if (ov.r && ov.t) s += ",";
			if (ov.t) s += "t=" + std::to_string(ov.t);
			s += "]";
		}
	}
	return s + ")";
}

std::string to_string(const Term& t)
{
	if (t.is_zero()) return "0";
	std::string s;
	bool first = true;
	for (const auto& [m, c] : t) {
		if (!first) s += " + ";
		first = false;
		s += to_string(c) + "*" + to_string(m);
	}
	return s;
}

}  // namespace gda

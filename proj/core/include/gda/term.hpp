#pragma once

#include "gda/index.hpp"
#include "gda/rational.hpp"
#include "gda/symbol.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gda {

/// Pure index effect of one differential: delta (n+1, m-1), Delta (kappa+1).
Index shift(DiffKind d, Index i);

std::string_view to_string(DiffKind d);

/// Algebraic laws of the two differentials.
struct DiffLaws {
	bool Delta_chain_cochain = true;  // Delta o Delta = 0
	bool Delta_commutes = true;       // Delta o delta = delta o Delta

	bool operator==(const DiffLaws&) const = default;
};

bool is_chain_cochain(DiffKind d, const DiffLaws& laws);
inline DiffKind other(DiffKind d) { return d == DiffKind::delta ? DiffKind::Delta : DiffKind::delta; }

/// A generator with a stack of applied differentials, innermost first.
struct Factor {
	SymbolPtr gen;
	std::vector<DiffKind> diffs;

	const std::string& name() const { return gen->name; }
	Index effective_index() const;
	bool differentiated() const { return !diffs.empty(); }

	bool operator==(const Factor& o) const { return gen->name == o.gen->name && diffs == o.diffs; }
	std::strong_ordering operator<=>(const Factor& o) const;
};

Factor make_factor(SymbolPtr gen, std::vector<DiffKind> diffs = {});
Factor push_diff(Factor f, DiffKind d);

/// Ordered, flattened product. `overlaps` runs parallel to `factors`.
struct Monomial {
	std::vector<Factor> factors;
	std::vector<Overlap> overlaps;

	Monomial() = default;
	explicit Monomial(std::vector<Factor> fs);
	Monomial(std::vector<Factor> fs, std::vector<Overlap> ovs);

	std::size_t arity() const { return factors.size(); }
	Index index(const CoherenceConfig& config = {}) const;           // bounds enforced
	Index index_unchecked(const CoherenceConfig& config = {}) const;
	std::vector<IndexedFactor> indexed() const;

	bool operator==(const Monomial& o) const = default;
	/// Canonical order: factor count, then names, then diff stacks, then overlaps.
	std::strong_ordering operator<=>(const Monomial& o) const;
};

Monomial concat(const Monomial& a, const Monomial& b);

/// Finite exact-rational combination of monomials. No zero coefficients are stored.
class Term {
public:
	using Map = std::map<Monomial, Rational>;

	Term() = default;
	static Term zero() { return {}; }
	static Term of(Monomial m, const Rational& c = 1);
	static Term of(const Factor& f, const Rational& c = 1);

	bool is_zero() const { return summands_.empty(); }
	std::size_t size() const { return summands_.size(); }
	Map::const_iterator begin() const { return summands_.begin(); }
	Map::const_iterator end() const { return summands_.end(); }
	const Map& summands() const { return summands_; }
	Rational coefficient(const Monomial& m) const;

	/// Adds c*m in place, merging and dropping a vanishing coefficient.
	void accumulate(const Monomial& m, const Rational& c);

	bool heterogeneous() const { return heterogeneous_; }
	void mark_heterogeneous(bool h = true) { heterogeneous_ = h; }

	/// Index of the first summand, or nothing for the zero term.
	std::optional<Index> index(const CoherenceConfig& config = {}) const;
	bool homogeneous(const CoherenceConfig& config = {}) const;

	bool operator==(const Term& o) const { return summands_ == o.summands_; }

private:
	Map summands_;
	bool heterogeneous_ = false;
};

/// Registers a new generator and returns it as a coefficient-1 term.
Term make_generator(SymbolRegistry& registry, const std::string& name, Index index, FlagSet flags = {},
                    Role role = Role::plain);

/// Multiple associative product: distributes over sums and concatenates factor lists.
Term multiply(std::span<const Term> terms);
Term multiply(std::initializer_list<Term> terms);

/// Strict sum; throws HeterogeneousSum when the indices differ.
Term add(const Term& a, const Term& b, const CoherenceConfig& config = {});
/// Sum that tolerates differing indices and flags the result.
Term add_heterogeneous(const Term& a, const Term& b, const CoherenceConfig& config = {});
Term scale(const Rational& q, const Term& t);
Term subtract(const Term& a, const Term& b, const CoherenceConfig& config = {});

/// Sorts commuting diff stacks canonically.
Factor canonical_factor(Factor f, const DiffLaws& laws);
/// True when the factor vanishes by a chain-cochain law or a declared constant.
bool annihilated(const Factor& f, const DiffLaws& laws);
bool annihilated(const Monomial& m, const DiffLaws& laws);

/// Canonical form: canonical factors, annihilated monomials removed, duplicates merged. Idempotent.
Term normalize(const Term& t, const DiffLaws& laws = {});

/// Renames generators (used for alpha-equivalence of fresh symbols).
Term rename(const Term& t, const std::map<std::string, SymbolPtr>& mapping);

std::string to_string(const Factor& f);
std::string to_string(const Monomial& m);
/// `c1*(f1, f2, ...) + c2*(...)`; the zero term prints as `0`.
std::string to_string(const Term& t);

}  // namespace gda

#pragma once

#include "gda/term.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>

namespace gda {

enum class Field { rationals, gf2 };

std::string_view to_string(Field f);

/// Basis blade x_{i1} ^ ... ^ x_{ik} as a bitmask over generator positions.
using Blade = std::uint32_t;

/// Sparse element of the exterior algebra.
class Element {
public:
	Element() = default;
	static Element scalar(const Rational& c);
	static Element blade(Blade b, const Rational& c = 1);

	const std::map<Blade, Rational>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void accumulate(Blade b, const Rational& c);

	bool operator==(const Element&) const = default;

private:
	std::map<Blade, Rational> terms_;
};

std::string to_string(const Element& e);

struct ModelSpec {
	int k = 0;
	Field field = Field::gf2;
	/// Image of generator x_{i+1} under the horizontal derivation, keyed by i.
	std::map<int, Element> delta;
	/// Optional vertical derivation.
	std::optional<std::map<int, Element>> Delta;
};

/// Exterior algebra on k <= 6 generators with one or two square-zero derivations.
class Model {
public:
	/// Throws ModelError for k > 6, images outside the algebra, mixed-parity images over Q, or d^2 != 0.
	static Model build(ModelSpec spec);

	int k() const { return k_; }
	Field field() const { return field_; }
	bool has(DiffKind d) const { return d == DiffKind::delta || Delta_.has_value(); }
	/// Whether the two derivations commute on every basis blade.
	bool commutes() const { return commutes_; }
	/// True when the derivation flips wedge parity, so it carries Koszul signs over Q.
	bool odd(DiffKind d) const { return odd_[static_cast<int>(d)]; }

	Element add(const Element& a, const Element& b) const;
	Element scale(const Rational& q, const Element& a) const;
	Element wedge(const Element& a, const Element& b) const;
	Element apply(DiffKind d, const Element& a) const;
	/// Coefficient reduction for the field; over gf2 an even denominator throws ModelError.
	Rational coefficient(const Rational& q) const;

private:
	Element apply_blade(DiffKind d, Blade b) const;
	/// Coefficients mapped into the field.
	Element reduced(Element e) const;
	const std::map<int, Element>& table(DiffKind d) const;

	int k_ = 0;
	Field field_ = Field::gf2;
	std::map<int, Element> delta_;
	std::optional<std::map<int, Element>> Delta_;
	bool odd_[2] = {true, true};
	bool commutes_ = false;
};

/// gf2: D x1 = x2, D x3 = x4, Delta x1 = x3, Delta x2 = x4 (k = 4, commuting).
/// rationals: D x1 = D x4 = x2 ^ x3, odd derivation, no Delta (k = 4).
Model standard_model(Field f);

using Assignment = std::map<std::string, Element>;

/// Homomorphic image of a term; throws AssignmentError for unassigned generators and ModelError for
/// differentials the model lacks.
Element evaluate(const Term& t, const Model& model, const Assignment& assignment);

/// Random element without constant term; over Q restricted to blades of the given wedge parity.
Element random_element(const Model& model, std::mt19937_64& rng, int parity);
/// One random element per symbol; over Q the wedge parity follows the symbol's n.
Assignment random_assignment(const Model& model, std::span<const SymbolPtr> symbols, std::mt19937_64& rng);

/// Generators appearing in the terms, sorted by name.
std::vector<SymbolPtr> generators_of(std::span<const Term> terms);

/// evaluate(lhs) == evaluate(rhs) for `trials` random assignments.
bool check_identity(const Term& lhs, const Term& rhs, const Model& model, int trials, std::uint64_t seed);

}  // namespace gda

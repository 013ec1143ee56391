#include "gda/model.hpp"

#include "gda/error.hpp"

#include <array>
#include <bit>

namespace gda {

std::string_view to_string(Field f) { return f == Field::rationals ? "q" : "gf2"; }

Element Element::scalar(const Rational& c) { return blade(0, c); }

Element Element::blade(Blade b, const Rational& c)
{
	Element e;
	e.accumulate(b, c);
	return e;
}

void Element::accumulate(Blade b, const Rational& c)
{
	if (c == 0) return;
	auto [it, inserted] = terms_.try_emplace(b, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

std::string to_string(const Element& e)
{
	if (e.is_zero()) return "0";
	std::string s;
	for (const auto& [b, c] : e.terms()) {
		if (!s.empty()) s += " + ";
		s += to_string(c);
		for (int i = 0; i < 32; ++i)
			if (b & (Blade{1} << i)) s += "*x" + std::to_string(i + 1);
	}
	return s;
}

namespace {

/// Sign of x_a ^ x_b when reordered into ascending blade order; 0 when they share a generator.
int blade_sign(Blade a, Blade b)
{
	if (a & b) return 0;
	int swaps = 0;
	for (Blade rest = b; rest; rest &= rest - 1) {
		const int i = std::countr_zero(rest);
		swaps += std::popcount(a >> (i + 1));
	}
	return swaps % 2 ? -1 : 1;
}

}  // namespace

Rational Model::coefficient(const Rational& q) const
{
	if (field_ == Field::rationals) return q;
	mpz_class den = q.get_den();
	if (den % 2 == 0) throw ModelError("coefficient " + to_string(q) + " has no image in gf2");
	mpz_class num = q.get_num() % 2;
	return num == 0 ? Rational(0) : Rational(1);
}

Element Model::reduced(Element e) const
{
	if (field_ == Field::rationals) return e;
	Element r;
	for (const auto& [b, c] : e.terms()) r.accumulate(b, coefficient(c));
	return r;
}

Element Model::add(const Element& a, const Element& b) const
{
	Element out;
	for (const auto& [bl, c] : a.terms()) out.accumulate(bl, c);
	for (const auto& [bl, c] : b.terms()) out.accumulate(bl, c);
	return reduced(std::move(out));
}

Element Model::scale(const Rational& q, const Element& a) const
{
	Element out;
	const Rational s = coefficient(q);
	for (const auto& [bl, c] : a.terms()) out.accumulate(bl, coefficient(s * c));
	return out;
}

Element Model::wedge(const Element& a, const Element& b) const
{
	Element out;
	for (const auto& [ba, ca] : a.terms())
		for (const auto& [bb, cb] : b.terms()) {
			const int s = blade_sign(ba, bb);
			if (s == 0) continue;
			out.accumulate(ba | bb, field_ == Field::gf2 ? Rational(ca * cb) : Rational(ca * cb * s));
		}
	return reduced(std::move(out));
}

const std::map<int, Element>& Model::table(DiffKind d) const
{
	if (d == DiffKind::delta) return delta_;
	if (!Delta_) throw ModelError("the model has no vertical derivation");
	return *Delta_;
}

Element Model::apply_blade(DiffKind d, Blade b) const
{
	const auto& t = table(d);
	Element out;
	int position = 0;
	for (int i = 0; i < k_; ++i) {
		const Blade bit = Blade{1} << i;
		if (!(b & bit)) continue;
		auto it = t.find(i);
		if (it != t.end()) {
			const Blade left = b & (bit - 1);
			const Blade right = b & ~(bit | (bit - 1));
			const int sign = (field_ == Field::rationals && odd(d) && position % 2) ? -1 : 1;
			Element piece = wedge(wedge(Element::blade(left), it->second), Element::blade(right));
			for (const auto& [pb, pc] : piece.terms()) out.accumulate(pb, pc * sign);
		}
		++position;
	}
	return reduced(std::move(out));
}

Element Model::apply(DiffKind d, const Element& a) const
{
	Element out;
	for (const auto& [b, c] : a.terms()) {
		const Element image = apply_blade(d, b);
		for (const auto& [pb, pc] : image.terms()) out.accumulate(pb, coefficient(c * pc));
	}
	return reduced(std::move(out));
}

Model Model::build(ModelSpec spec)
{
	if (spec.k < 1 || spec.k > 6) throw ModelError("model dimension k must lie in 1..6, got " + std::to_string(spec.k));
	Model m;
	m.k_ = spec.k;
	m.field_ = spec.field;
	const Blade full = (Blade{1} << spec.k) - 1;

	auto check_table = [&](const std::map<int, Element>& t, DiffKind d) -> std::map<int, Element> {
		std::map<int, Element> out;
		bool seen_even = false, seen_odd = false;
		for (const auto& [i, img] : t) {
			if (i < 0 || i >= spec.k)
				throw ModelError("derivation table entry for x" + std::to_string(i + 1) + " outside the model");
			Element reduced;
			for (const auto& [b, c] : img.terms()) {
				if (b & ~full) throw ModelError("image of x" + std::to_string(i + 1) + " leaves the algebra");
				reduced.accumulate(b, m.coefficient(c));
				if (std::popcount(b) % 2)
					seen_odd = true;
				else
					seen_even = true;
			}
			if (!reduced.is_zero()) out[i] = reduced;
		}
		if (spec.field == Field::rationals && seen_even && seen_odd)
			throw ModelError(std::string(to_string(d)) + " table mixes even and odd images; no graded derivation");
		m.odd_[static_cast<int>(d)] = !seen_odd;
		return out;
	};
	m.delta_ = check_table(spec.delta, DiffKind::delta);
	if (spec.Delta) m.Delta_ = check_table(*spec.Delta, DiffKind::Delta);

	for (Blade b = 0; b <= full; ++b) {
		for (DiffKind d : {DiffKind::delta, DiffKind::Delta}) {
			if (!m.has(d)) continue;
			if (!m.apply(d, m.apply_blade(d, b)).is_zero())
				throw ModelError(std::string(to_string(d)) + " does not square to zero on a basis blade");
		}
	}
	m.commutes_ = m.Delta_.has_value();
	if (m.Delta_)
		for (Blade b = 0; b <= full && m.commutes_; ++b) {
			Element e = Element::blade(b);
			if (m.apply(DiffKind::delta, m.apply(DiffKind::Delta, e)) !=
			    m.apply(DiffKind::Delta, m.apply(DiffKind::delta, e)))
				m.commutes_ = false;
		}
	return m;
}

Model standard_model(Field f)
{
	ModelSpec s;
	s.k = 4;
	s.field = f;
	if (f == Field::gf2) {
		s.delta = {{0, Element::blade(0b0010)}, {2, Element::blade(0b1000)}};
		s.Delta = std::map<int, Element>{{0, Element::blade(0b0100)}, {1, Element::blade(0b1000)}};
	} else {
		s.delta = {{0, Element::blade(0b0110)}, {3, Element::blade(0b0110)}};
	}
	return Model::build(std::move(s));
}

Element evaluate(const Term& t, const Model& model, const Assignment& assignment)
{
	Element out;
	for (const auto& [m, c] : t) {
		Element prod = Element::scalar(1);
		for (const auto& f : m.factors) {
			auto it = assignment.find(f.name());
			if (it == assignment.end()) throw AssignmentError("generator " + f.name() + " has no model value");
			Element v = it->second;
			for (auto d : f.diffs) {
				if (!model.has(d)) throw ModelError("the model has no " + std::string(to_string(d)) + " derivation");
				v = model.apply(d, v);
			}
			prod = model.wedge(prod, v);
		}
		out = model.add(out, model.scale(c, prod));
	}
	return out;
}

Element random_element(const Model& model, std::mt19937_64& rng, int parity)
{
	const Blade full = (Blade{1} << model.k()) - 1;
	Element e;
	if (model.field() == Field::gf2) {
		std::bernoulli_distribution coin(0.5);
		for (Blade b = 1; b <= full; ++b)
			if (coin(rng)) e.accumulate(b, 1);
		return e;
	}
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (Blade b = 1; b <= full; ++b)
		if (std::popcount(b) % 2 == parity) e.accumulate(b, coeff(rng));
	return e;
}

Assignment random_assignment(const Model& model, std::span<const SymbolPtr> symbols, std::mt19937_64& rng)
{
	Assignment a;
	for (const auto& s : symbols) {
		const int parity = static_cast<int>(((s->index.n % 2) + 2) % 2);
		a[s->name] = random_element(model, rng, parity);
	}
	return a;
}

std::vector<SymbolPtr> generators_of(std::span<const Term> terms)
{
	std::map<std::string, SymbolPtr> found;
	for (const auto& t : terms)
		for (const auto& [m, c] : t)
			for (const auto& f : m.factors) found.try_emplace(f.name(), f.gen);
	std::vector<SymbolPtr> out;
	for (auto& [n, s] : found) out.push_back(s);
	return out;
}

bool check_identity(const Term& lhs, const Term& rhs, const Model& model, int trials, std::uint64_t seed)
{
	const std::array<Term, 2> both{lhs, rhs};
	const auto symbols = generators_of(both);
	std::mt19937_64 rng(seed);
	for (int i = 0; i < trials; ++i) {
		Assignment a = random_assignment(model, symbols, rng);
		if (evaluate(lhs, model, a) != evaluate(rhs, model, a)) return false;
	}
	return true;
}

}  // namespace gda

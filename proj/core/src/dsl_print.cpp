#include "gda/dsl.hpp"

namespace gda::dsl {

namespace {

std::string index_text(const Index& i)
{
	return "(" + std::to_string(i.n) + "," + std::to_string(i.m) + "," + std::to_string(i.kappa) + ")";
}

template <class Range, class Fn>
std::string join(const Range& r, Fn fn, const char* sep = ", ")
{
	std::string s;
	bool first = true;
	for (const auto& x : r) {
		if (!first) s += sep;
		first = false;
		s += fn(x);
	}
	return s;
}

struct StatementPrinter {
	std::string operator()(const SetStmt& s) const { return "set " + s.key + " " + s.value + ";"; }

	std::string operator()(const BoundStmt& b) const
	{
		return "bound " + b.component + " " + b.op + " " + std::to_string(b.value) + ";";
	}

	std::string operator()(const GenStmt& g) const
	{
		std::string s = "gen " + g.name + " index " + index_text(g.index);
		if (!g.flags.empty()) s += " flags [" + join(g.flags, [](const std::string& f) { return f; }) + "]";
		return s + ";";
	}

	std::string operator()(const IdealStmt& i) const
	{
		return "ideal " + std::string(to_string(i.kind)) + " " + print(i.pattern) + ";";
	}

	std::string operator()(const ConditionStmt& c) const
	{
		return "condition " + c.label + " " + print(c.lhs) + " = " + print(c.rhs) + ";";
	}

	std::string operator()(const CompletionStmt& c) const
	{
		auto f = [](const FactorExpr& x) { return print(x); };
		return "completion " + c.name + " := mama(" + join(c.picked, f) + "; " + join(c.completions, f) + ");";
	}

	std::string operator()(const ClosedStmt& c) const
	{
		return "closed " + c.completion + " by " + std::string(diff_keyword(c.d)) + ";";
	}

	std::string operator()(const TubaStmt& t) const
	{
		auto id = [](const std::string& x) { return x; };
		return "tuba " + t.name + " := tuba(" + t.phi + ", " + t.psi + "; " + join(t.completions, id) + ") by " +
		       std::string(diff_keyword(t.d)) + ";";
	}

	std::string operator()(const ClassStmt& c) const
	{
		auto id = [](const std::string& x) { return x; };
		std::string s = "class " + c.name + " := kordo(" + c.phi + "; " + join(c.completions, id) + ")";
		if (!c.symm.empty())
			s += " symm [" + join(c.symm, [](DiffKind d) { return std::string(diff_keyword(d)); }) + "]";
		return s + ";";
	}
};

}  // namespace

std::string print(const FactorExpr& f)
{
	std::string s = f.name;
	for (auto d : f.diffs) s = std::string(d == DiffKind::delta ? "d(" : "D(") + s + ")";
	if (!f.overlap.is_zero()) {
		s += "[";
		if (f.overlap.r) s += "r=" + std::to_string(f.overlap.r);
		if (f.overlap.r && f.overlap.t) s += ",";
		if (f.overlap.t) s += "t=" + std::to_string(f.overlap.t);
		s += "]";
	}
	return s;
}

std::string print(const TermExpr& t)
{
	if (t.summands.empty()) return "0";
	return join(
	    t.summands,
	    [](const ProductExpr& p) {
		    std::string s = p.coeff == 1 ? "" : to_string(p.coeff) + "*";
		    auto f = [](const FactorExpr& x) { return print(x); };
		    if (p.parenthesized || p.factors.size() != 1) return s + "(" + join(p.factors, f) + ")";
		    return s + print(p.factors.front());
	    },
	    " + ");
}

std::string print(const Statement& s) { return std::visit(StatementPrinter{}, s); }

std::string print(const SessionDecl& decl)
{
	std::string out;
	for (const auto& s : decl.statements) out += print(s) + "\n";
	return out;
}

}  // namespace gda::dsl

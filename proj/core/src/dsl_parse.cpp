#include "gda/dsl.hpp"

#include "gda/error.hpp"

#include <cctype>

namespace gda::dsl {

std::string_view diff_keyword(DiffKind d) { return d == DiffKind::delta ? "delta" : "Delta"; }

namespace {

bool ident_start(unsigned char c, bool placeholders)
{
	return std::isalpha(c) || c == '_' || c >= 0x80 || (placeholders && c == '?');
}

bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

bool word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-'; }

class Parser {
public:
	Parser(std::string_view src, bool placeholders) : src_(src), placeholders_(placeholders) {}

	SessionDecl session()
	{
		SessionDecl decl;
		skip();
		while (!at_end()) {
			SourcePos at{line_, col_};
			decl.statements.push_back(statement());
			decl.positions.push_back(at);
			skip();
		}
		return decl;
	}

	TermExpr whole_term()
	{
		TermExpr t = term();
		finish();
		return t;
	}

	std::pair<TermExpr, TermExpr> equation()
	{
		TermExpr l = term();
		expect("=");
		TermExpr r = term();
		skip();
		if (!at_end() && peek() == ';') advance();
		finish();
		return {std::move(l), std::move(r)};
	}

private:
	[[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

	bool at_end() const { return pos_ >= src_.size(); }
	char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

	void advance()
	{
		if (src_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}

	void skip()
	{
		while (!at_end()) {
			char c = peek();
			if (c == '#') {
				while (!at_end() && peek() != '\n') advance();
			} else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			} else {
				break;
			}
		}
	}

	void finish()
	{
		skip();
		if (!at_end()) fail("unexpected trailing input");
	}

	bool lookahead(std::string_view lit)
	{
		skip();
		return src_.substr(pos_, lit.size()) == lit;
	}

	bool accept(std::string_view lit)
	{
		if (!lookahead(lit)) return false;
		for (std::size_t i = 0; i < lit.size(); ++i) advance();
		return true;
	}

	void expect(std::string_view lit)
	{
		if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
	}

	bool accept_keyword(std::string_view kw)
	{
		skip();
		if (src_.substr(pos_, kw.size()) != kw || word_char(static_cast<unsigned char>(peek(kw.size())))) return false;
		for (std::size_t i = 0; i < kw.size(); ++i) advance();
		return true;
	}

	void expect_keyword(std::string_view kw)
	{
		if (!accept_keyword(kw)) fail("expected '" + std::string(kw) + "'");
	}

	std::string identifier()
	{
		skip();
		if (at_end() || !ident_start(static_cast<unsigned char>(peek()), placeholders_)) fail("expected a name");
		std::string s;
		s += peek();
		advance();
		while (!at_end() && ident_char(static_cast<unsigned char>(peek()))) {
			s += peek();
			advance();
		}
		return s;
	}

	std::string word()
	{
		skip();
		std::string s;
		while (!at_end() && word_char(static_cast<unsigned char>(peek()))) {
			s += peek();
			advance();
		}
		if (s.empty()) fail("expected a word");
		return s;
	}

	std::int64_t integer()
	{
		skip();
		std::string s;
		if (peek() == '-' || peek() == '+') {
			s += peek();
			advance();
		}
		if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
		while (std::isdigit(static_cast<unsigned char>(peek()))) {
			s += peek();
			advance();
		}
		try {
			return std::stoll(s);
		} catch (const std::out_of_range&) {
			fail("integer out of range: " + s);
		}
	}

	Rational rational()
	{
		skip();
		std::string s;
		while (std::isdigit(static_cast<unsigned char>(peek()))) {
			s += peek();
			advance();
		}
		if (s.empty()) fail("expected a number");
		if (peek() == '/') {
			advance();
			std::string den;
			while (std::isdigit(static_cast<unsigned char>(peek()))) {
				den += peek();
				advance();
			}
			if (den.empty() || den.find_first_not_of('0') == std::string::npos) fail("invalid denominator");
			s += "/" + den;
		}
		Rational q(s);
		q.canonicalize();
		return q;
	}

	Overlap overlap()
	{
		Overlap o;
		bool any = false;
		do {
			std::string key = word();
			expect("=");
			std::int64_t v = integer();
			if (v < 0) fail("overlap counts must be non-negative");
			if (key == "r")
				o.r = v;
			else if (key == "t")
				o.t = v;
			else
				fail("unknown overlap parameter '" + key + "'");
			any = true;
		} while (accept(","));
		if (!any) fail("empty overlap annotation");
		expect("]");
		return o;
	}

	FactorExpr factor()
	{
		skip();
		std::size_t save_pos = pos_, save_line = line_, save_col = col_;
		std::string name = identifier();
		if ((name == "d" || name == "D") && lookahead("(")) {
			expect("(");
			FactorExpr inner = factor();
			expect(")");
			inner.diffs.push_back(name == "d" ? DiffKind::delta : DiffKind::Delta);
			if (accept("[")) inner.overlap = overlap();
			return inner;
		}
		if (name == "d" || name == "D") {
			pos_ = save_pos;
			line_ = save_line;
			col_ = save_col;
			fail("'" + name + "' is reserved for differentials");
		}
		FactorExpr f;
		f.name = std::move(name);
		if (accept("[")) f.overlap = overlap();
		return f;
	}

	ProductExpr summand()
	{
		ProductExpr p;
		skip();
		if (accept("-")) p.coeff = -1;
		skip();
		if (std::isdigit(static_cast<unsigned char>(peek()))) {
			p.coeff *= rational();
			expect("*");
		}
		skip();
		if (accept("(")) {
			do p.factors.push_back(factor());
			while (accept(","));
			expect(")");
			p.parenthesized = true;
		} else {
			p.factors.push_back(factor());
			p.parenthesized = false;
		}
		return p;
	}

	TermExpr term()
	{
		TermExpr t;
		skip();
		if (peek() == '0' && !std::isdigit(static_cast<unsigned char>(peek(1))) && peek(1) != '*' && peek(1) != '/') {
			std::size_t k = 1;
			while (pos_ + k < src_.size() && src_[pos_ + k] == ' ') ++k;
			if (pos_ + k >= src_.size() || src_[pos_ + k] != '*') {
				advance();
				return t;
			}
		}
		t.summands.push_back(summand());
		while (true) {
			if (accept("+")) {
				t.summands.push_back(summand());
			} else if (lookahead("-")) {
				t.summands.push_back(summand());
			} else {
				break;
			}
		}
		return t;
	}

	DiffKind diff_name()
	{
		std::string w = word();
		if (w == "delta") return DiffKind::delta;
		if (w == "Delta") return DiffKind::Delta;
		fail("expected delta or Delta, got '" + w + "'");
	}

	std::array<std::string, 4> four_names()
	{
		std::array<std::string, 4> out;
		for (int i = 0; i < 4; ++i) {
			if (i) expect(",");
			out[i] = identifier();
		}
		return out;
	}

	Statement statement()
	{
		skip();
		Statement s = dispatch();
		expect(";");
		return s;
	}

	Statement dispatch()
	{
		if (accept_keyword("set")) {
			SetStmt s;
			s.key = word();
			s.value = word();
			return s;
		}
		if (accept_keyword("bound")) {
			BoundStmt b;
			b.component = word();
			if (b.component != "n" && b.component != "m" && b.component != "kappa")
				fail("bounds apply to n, m or kappa");
			if (accept(">="))
				b.op = ">=";
			else if (accept("<="))
				b.op = "<=";
			else
				fail("expected >= or <=");
			b.value = integer();
			return b;
		}
		if (accept_keyword("gen")) {
			GenStmt g;
			g.name = identifier();
			if (g.name == "d" || g.name == "D") fail("'" + g.name + "' is reserved for differentials");
			expect_keyword("index");
			expect("(");
			g.index.n = integer();
			expect(",");
			g.index.m = integer();
			expect(",");
			g.index.kappa = integer();
			expect(")");
			if (accept_keyword("flags")) {
				expect("[");
				if (!lookahead("]")) {
					do g.flags.push_back(word());
					while (accept(","));
				}
				expect("]");
			}
			return g;
		}
		if (accept_keyword("ideal")) {
			IdealStmt i;
			std::string kind = word();
			if (kind == "nonlocal2")
				i.kind = IdealKind::nonlocal2;
			else if (kind == "local2")
				i.kind = IdealKind::local2;
			else if (kind == "square2")
				i.kind = IdealKind::square2;
			else
				fail("unknown ideal kind '" + kind + "'");
			i.pattern = factor();
			return i;
		}
		if (accept_keyword("condition")) {
			ConditionStmt c;
			skip();
			if (peek() != '(') fail("expected a pattern label such as (I0I)");
			std::string label;
			while (!at_end() && peek() != ')') {
				if (peek() != '(' && peek() != 'I' && peek() != '0') fail("pattern labels use I and 0 only");
				label += peek();
				advance();
			}
			if (at_end()) fail("unterminated pattern label");
			label += ')';
			advance();
			if (label.size() < 3) fail("empty pattern label");
			c.label = label;
			c.lhs = term();
			expect("=");
			c.rhs = term();
			return c;
		}
		if (accept_keyword("completion")) {
			CompletionStmt c;
			c.name = identifier();
			expect(":=");
			expect_keyword("mama");
			expect("(");
			if (!lookahead(";")) {
				do c.picked.push_back(factor());
				while (accept(","));
			}
			expect(";");
			do c.completions.push_back(factor());
			while (accept(","));
			expect(")");
			return c;
		}
		if (accept_keyword("closed")) {
			ClosedStmt c;
			c.completion = identifier();
			expect_keyword("by");
			c.d = diff_name();
			return c;
		}
		if (accept_keyword("tuba")) {
			TubaStmt t;
			t.name = identifier();
			expect(":=");
			expect_keyword("tuba");
			expect("(");
			t.phi = identifier();
			expect(",");
			t.psi = identifier();
			expect(";");
			t.completions = four_names();
			expect(")");
			if (accept_keyword("by")) t.d = diff_name();
			return t;
		}
		if (accept_keyword("class")) {
			ClassStmt c;
			c.name = identifier();
			expect(":=");
			expect_keyword("kordo");
			expect("(");
			c.phi = identifier();
			expect(";");
			c.completions = four_names();
			expect(")");
			if (accept_keyword("symm")) {
				expect("[");
				do c.symm.push_back(diff_name());
				while (accept(","));
				expect("]");
			}
			return c;
		}
		fail("unknown statement");
	}

	std::string_view src_;
	bool placeholders_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t col_ = 1;
};

}  // namespace

SessionDecl parse(std::string_view text) { return Parser(text, false).session(); }

TermExpr parse_term(std::string_view text) { return Parser(text, false).whole_term(); }

std::pair<TermExpr, TermExpr> parse_equation(std::string_view text, bool placeholders)
{
	return Parser(text, placeholders).equation();
}

Factor to_factor(const FactorExpr& f, const Resolver& resolve)
{
	SymbolPtr s = resolve(f.name);
	if (!s) throw Error("unknown generator '" + f.name + "'");
	return make_factor(std::move(s), f.diffs);
}

Term to_term(const TermExpr& t, const Resolver& resolve, const CoherenceConfig& config, bool strict)
{
	Term out;
	for (const auto& p : t.summands) {
		std::vector<Factor> fs;
		std::vector<Overlap> ovs;
		for (const auto& f : p.factors) {
			fs.push_back(to_factor(f, resolve));
			ovs.push_back(f.overlap);
		}
		Term piece = Term::of(Monomial(std::move(fs), std::move(ovs)), p.coeff);
		out = strict ? add(out, piece, config) : add_heterogeneous(out, piece, config);
	}
	return out;
}

}  // namespace gda::dsl

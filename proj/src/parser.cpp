#include "hamfact/parser.hpp"

#include <algorithm>
#include <sstream>

#include "hamfact/errors.hpp"

namespace hamfact {

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, Quote, Eq, Sep, End } kind;
    Rational num;
    std::string text;
    std::size_t line = 1, col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Lexer over UTF-8 text; gamma/lambda and subscript digits are normalized,
// the Unicode minus sign and prime are accepted.
std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto push = [&](Token::Kind k, std::string text = "", Rational num = Rational(0)) {
        out.push_back(Token{k, std::move(num), std::move(text), line, col});
    };
    auto u8 = [&](std::size_t at) { return static_cast<unsigned char>(s[at]); };
    while (i < s.size()) {
        const char c = s[i];
        if (c == '\n') {
            push(Token::Sep);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == ';') { push(Token::Sep); ++i; ++col; continue; }
        if (c == '+') { push(Token::Plus); ++i; ++col; continue; }
        if (c == '-') { push(Token::Minus); ++i; ++col; continue; }
        if (c == '*') { push(Token::Star); ++i; ++col; continue; }
        if (c == '^') { push(Token::Caret); ++i; ++col; continue; }
        if (c == '(') { push(Token::LParen); ++i; ++col; continue; }
        if (c == ')') { push(Token::RParen); ++i; ++col; continue; }
        if (c == '\'') { push(Token::Quote); ++i; ++col; continue; }
        if (c == '=') { push(Token::Eq); ++i; ++col; continue; }
        if (i + 2 < s.size() && u8(i) == 0xE2 && u8(i + 1) == 0x88 && u8(i + 2) == 0x92) {
            push(Token::Minus);  // Unicode minus
            i += 3;
            ++col;
            continue;
        }
        if (i + 2 < s.size() && u8(i) == 0xE2 && u8(i + 1) == 0x80 && u8(i + 2) == 0xB2) {
            push(Token::Quote);  // Unicode prime
            i += 3;
            ++col;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start_col = col;
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                digits += s[i++];
                ++col;
            }
            // a '/' directly followed by digits makes a fraction literal
            if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                digits += s[i++];
                ++col;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    digits += s[i++];
                    ++col;
                }
            }
            Token t{Token::Num, Rational::parse(digits), digits, line, start_col};
            out.push_back(std::move(t));
            continue;
        }
        // identifiers, possibly with normalized Unicode pieces
        {
            const std::size_t start_col = col;
            std::string name;
            bool progressed = true;
            bool first = true;
            while (i < s.size() && progressed) {
                progressed = false;
                if (ident_start(s[i]) || (!first && ident_cont(s[i]))) {
                    name += s[i++];
                    ++col;
                    progressed = true;
                } else if (i + 1 < s.size() && u8(i) == 0xCE && (u8(i + 1) == 0xB3 || u8(i + 1) == 0xBB)) {
                    name += (u8(i + 1) == 0xB3 ? 'g' : 'l');
                    i += 2;
                    ++col;
                    progressed = true;
                } else if (!first && i + 2 < s.size() && u8(i) == 0xE2 && u8(i + 1) == 0x82 &&
                           u8(i + 2) >= 0x80 && u8(i + 2) <= 0x89) {
                    name += static_cast<char>('0' + (u8(i + 2) - 0x80));
                    i += 3;
                    ++col;
                    progressed = true;
                }
                first = false;
            }
            if (!name.empty()) {
                Token t{Token::Ident, Rational(0), name, line, start_col};
                out.push_back(std::move(t));
                continue;
            }
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    push(Token::End);
    return out;
}

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t begin, std::size_t end,
               const std::vector<std::string>& vars, std::size_t levels,
               const std::map<std::string, Rational>& params)
        : toks_(toks), pos_(begin), end_(end), vars_(vars), levels_(levels), params_(params) {
        atom_vars_ = vars;
        if (levels_ > 1)
            for (const auto& v : vars) atom_vars_.push_back(v + "'");
        if (levels_ > 2)
            for (const auto& v : vars) atom_vars_.push_back(v + "''");
    }

    MultiPoly parse_full() {
        MultiPoly p = parse_expr();
        if (pos_ != end_) fail("unexpected trailing input");
        return p;
    }

    MultiPoly parse_until_eq() {
        MultiPoly p = parse_expr();
        expect(Token::Eq, "expected '='");
        return p;
    }

    MultiPoly parse_expr() {
        int sign = 1;
        if (peek().kind == Token::Plus) {
            advance();
        } else if (peek().kind == Token::Minus) {
            sign = -1;
            advance();
        }
        MultiPoly acc = parse_term();
        if (sign < 0) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = peek().kind == Token::Minus;
            advance();
            MultiPoly t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool at_end() const { return pos_ >= end_; }

private:
    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (peek().kind == Token::Star) {
            advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        if (peek().kind == Token::Caret) {
            advance();
            const Token& e = peek();
            if (e.kind != Token::Num || !e.num.is_integer() || e.num.is_negative())
                fail("exponent must be a non-negative integer");
            const long k = e.num.numerator().get_si();
            if (k > 32) fail("exponent too large");
            advance();
            base = base.pow(static_cast<std::uint32_t>(k));
        }
        return base;
    }

    MultiPoly parse_base() {
        const Token& t = peek();
        if (t.kind == Token::Num) {
            advance();
            return MultiPoly::constant(atom_vars_, t.num);
        }
        if (t.kind == Token::LParen) {
            advance();
            MultiPoly inner = parse_expr();
            expect(Token::RParen, "expected ')'");
            return inner;
        }
        if (t.kind == Token::Ident) {
            advance();
            std::size_t quotes = 0;
            while (peek().kind == Token::Quote) {
                ++quotes;
                advance();
            }
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it != vars_.end()) {
                if (quotes >= levels_)
                    throw ParseError("derivative order " + std::to_string(quotes) + " not supported here",
                                     t.line, t.col);
                const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
                return MultiPoly::variable(atom_vars_, quotes * vars_.size() + idx);
            }
            if (quotes > 0)
                throw ParseError("'" + t.text + "' is not a declared variable and cannot be differentiated",
                                 t.line, t.col);
            auto pit = params_.find(t.text);
            if (pit == params_.end()) throw UnboundParameterError(t.text, t.line, t.col);
            return MultiPoly::constant(atom_vars_, pit->second);
        }
        fail("expected a number, identifier or '('");
        return MultiPoly();  // unreachable
    }

    const Token& peek() const { return toks_[std::min(pos_, end_)]; }
    void advance() { ++pos_; }
    void expect(Token::Kind k, const std::string& msg) {
        if (peek().kind != k) fail(msg);
        advance();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = toks_[std::min(pos_, end_)];
        throw ParseError(msg, t.line, t.col);
    }

    const std::vector<Token>& toks_;
    std::size_t pos_, end_;
    const std::vector<std::string>& vars_;
    std::size_t levels_;
    const std::map<std::string, Rational>& params_;
    std::vector<std::string> atom_vars_;
};

std::string format_coeff_term(const Rational& c, const std::string& atom, bool leading) {
    std::string out;
    const Rational a = c.abs();
    if (leading) {
        if (c.is_negative()) out += "-";
    } else {
        out += c.is_negative() ? " - " : " + ";
    }
    if (!a.is_one()) out += a.to_string() + "*";
    out += atom;
    return out;
}

}  // namespace

std::string normalize_name(const std::string& name) {
    std::string out;
    std::size_t i = 0;
    auto u8 = [&](std::size_t at) { return static_cast<unsigned char>(name[at]); };
    while (i < name.size()) {
        if (i + 1 < name.size() && u8(i) == 0xCE && (u8(i + 1) == 0xB3 || u8(i + 1) == 0xBB)) {
            out += (u8(i + 1) == 0xB3 ? 'g' : 'l');
            i += 2;
        } else if (i + 2 < name.size() && u8(i) == 0xE2 && u8(i + 1) == 0x82 && u8(i + 2) >= 0x80 &&
                   u8(i + 2) <= 0x89) {
            out += static_cast<char>('0' + (u8(i + 2) - 0x80));
            i += 3;
        } else {
            out += name[i++];
        }
    }
    return out;
}

ParsedSystem parse_eom(const std::string& text, const std::map<std::string, Rational>& raw_params,
                       std::size_t max_force_degree) {
    std::map<std::string, Rational> params;
    for (const auto& [k, v] : raw_params) params[normalize_name(k)] = v;

    const auto toks = lex(text);
    // group tokens into equations
    std::vector<std::pair<std::size_t, std::size_t>> eqs;  // [begin, end) token ranges
    std::size_t begin = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].kind == Token::Sep || toks[i].kind == Token::End) {
            if (i > begin) eqs.emplace_back(begin, i);
            begin = i + 1;
        }
    }
    if (eqs.empty()) throw ParseError("no equations found", 1, 1);

    // heads declare the variables, in equation order
    std::vector<std::string> vars;
    for (const auto& [b, e] : eqs) {
        if (e - b < 3 || toks[b].kind != Token::Ident || toks[b + 1].kind != Token::Quote ||
            toks[b + 2].kind != Token::Quote)
            throw ParseError("equation must start with <var>''", toks[b].line, toks[b].col);
        const std::string& head = toks[b].text;
        if (std::find(vars.begin(), vars.end(), head) != vars.end())
            throw ParseError("duplicate equation for variable '" + head + "'", toks[b].line, toks[b].col);
        vars.push_back(head);
    }
    const std::size_t n = vars.size();
    for (const auto& v : vars)
        if (params.count(v))
            throw ParseError("parameter '" + v + "' shadows a variable", 1, 1);

    ParsedSystem sys;
    sys.vars = vars;
    sys.eom.b1 = RatMatrix(n, n);
    sys.eom.b2 = RatMatrix(n, n);
    const auto pos_names = vars;
    for (std::size_t i = 0; i < n; ++i) sys.force.components.emplace_back(pos_names);

    for (std::size_t eq = 0; eq < n; ++eq) {
        const auto [b, e] = eqs[eq];
        ExprParser lhs_parser(toks, b, e, vars, 3, params);
        MultiPoly lhs = lhs_parser.parse_until_eq();
        MultiPoly rhs = lhs_parser.parse_expr();
        if (!lhs_parser.at_end())
            throw ParseError("unexpected trailing input", toks[e - 1].line, toks[e - 1].col);
        MultiPoly p = lhs - rhs;

        const std::size_t line = toks[b].line, col = toks[b].col;
        bool saw_head = false;
        for (const auto& [exps, c] : p.terms()) {
            std::size_t dx = 0, dv = 0, da = 0;
            for (std::size_t k = 0; k < n; ++k) {
                dx += exps[k];
                dv += exps[n + k];
                da += exps[2 * n + k];
            }
            if (da > 0) {
                const bool unit_head = da == 1 && dv == 0 && dx == 0 && exps[2 * n + eq] == 1;
                if (!unit_head)
                    throw ParseError("second derivatives may only appear as the plain head term", line, col);
                if (c != Rational(1))
                    throw ParseError("the head term " + vars[eq] + "'' must have coefficient 1", line, col);
                saw_head = true;
            } else if (dv > 0) {
                if (dv > 1 || dx > 0)
                    throw NonlinearVelocityError("velocity-dependent nonlinearity is not supported", line, col);
                for (std::size_t k = 0; k < n; ++k)
                    if (exps[n + k] == 1) sys.eom.b1(eq, k) -= c;
            } else if (dx == 1) {
                for (std::size_t k = 0; k < n; ++k)
                    if (exps[k] == 1) sys.eom.b2(eq, k) -= c;
            } else if (dx >= 2) {
                MultiPoly::Exps pe(exps.begin(), exps.begin() + static_cast<long>(n));
                sys.force.components[eq].add_term(pe, -c);
            } else {
                throw ParseError("constant terms are not allowed", line, col);
            }
        }
        if (!saw_head)
            throw ParseError("equation lost its " + vars[eq] + "'' head term", line, col);
    }

    if (sys.force.max_degree() > max_force_degree)
        throw ParseError("force degree exceeds the limit of " + std::to_string(max_force_degree), 1, 1);
    return sys;
}

std::string render_eom(const ParsedSystem& sys) {
    std::ostringstream os;
    const std::size_t n = sys.vars.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i) os << "\n";
        os << sys.vars[i] << "''";
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = -sys.eom.b1(i, j);
            if (!c.is_zero()) os << format_coeff_term(c, sys.vars[j] + "'", false);
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = -sys.eom.b2(i, j);
            if (!c.is_zero()) os << format_coeff_term(c, sys.vars[j], false);
        }
        os << " = " << sys.force.components[i].to_string();
    }
    return os.str();
}

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                           const std::map<std::string, Rational>& raw_params) {
    std::map<std::string, Rational> params;
    for (const auto& [k, v] : raw_params) params[normalize_name(k)] = v;
    const auto toks = lex(text);
    std::size_t end = toks.size() - 1;
    for (const auto& t : toks)
        if (t.kind == Token::Sep) throw ParseError("expected a single polynomial", t.line, t.col);
    ExprParser parser(toks, 0, end, vars, 1, params);
    return parser.parse_full();
}

}  // namespace hamfact

#include "monoforge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace monoforge {

namespace {

struct Rational {
    long long num = 1;
    long long den = 1;  // > 0

    void reduce() {
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct Factor {
    std::string name;
    Exp exponent = 1;
    std::size_t pos = 0;
};

struct Term {
    Rational coeff;
    std::vector<Factor> factors;
    std::size_t pos = 0;
};

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(ParseErrorKind::Syntax, pos(), msg); }

    long long uint_lit(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(ParseErrorKind::Syntax, start, std::string("expected ") + what);
        if (pos_ - start > 15) throw ParseError(ParseErrorKind::Syntax, start, "number literal too large");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        const std::size_t start = pos_;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos_ >= text_.size() || !head(text_[pos_]))
            throw ParseError(ParseErrorKind::Syntax, start, "expected a variable name");
        ++pos_;
        while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Term parse_term(Cursor& cur) {
    Term t;
    t.pos = cur.pos();
    bool have_coeff = false;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        const std::size_t coeff_pos = cur.pos();
        const bool neg = cur.accept('-');
        t.coeff.num = cur.uint_lit("a coefficient");
        if (cur.accept('/')) {
            t.coeff.den = cur.uint_lit("a denominator");
            if (t.coeff.den == 0) throw ParseError(ParseErrorKind::Syntax, coeff_pos, "zero denominator");
        }
        if (neg) t.coeff.num = -t.coeff.num;
        if (t.coeff.num == 0)
            throw ParseError(ParseErrorKind::ZeroCoefficient, coeff_pos, "zero coefficient");
        t.coeff.reduce();
        have_coeff = true;
        if (!cur.accept('*')) return t;  // a bare constant term
    }
    while (true) {
        Factor f;
        f.pos = cur.pos();
        f.name = cur.ident();
        if (cur.accept('^')) {
            const std::size_t epos = cur.pos();
            f.exponent = cur.uint_lit("an exponent");
            if (f.exponent < 1) throw ParseError(ParseErrorKind::Syntax, epos, "exponent must be at least 1");
            if (f.exponent > 1'000'000'000)
                throw ParseError(ParseErrorKind::Syntax, epos, "exponent too large");
        }
        t.factors.push_back(std::move(f));
        if (!cur.accept('*')) break;
        if (std::isdigit(static_cast<unsigned char>(cur.peek())) && !have_coeff)
            cur.fail("coefficient must come first in a term");
    }
    return t;
}

struct RawExpr {
    Term first;
    Term second;
};

RawExpr parse_expr(const std::string& text) {
    Cursor cur(text);
    RawExpr e;
    e.first = parse_term(cur);
    if (cur.eof())
        throw ParseError(ParseErrorKind::NotABinomial, cur.pos(), "expected two terms, found one");
    const char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+' or '-' between the two terms");
    cur.accept(op);
    e.second = parse_term(cur);
    if (op == '-') e.second.coeff.num = -e.second.coeff.num;
    if (!cur.eof())
        throw ParseError(ParseErrorKind::NotABinomial, cur.pos(),
                         "a binomial has exactly two terms");
    return e;
}

bool indexed_name(const std::string& name, int& slot) {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    if (name.size() > 7) return false;  // keeps slot counts sane
    slot = std::stoi(name.substr(1)) - 1;
    return true;
}

// Assigns a slot to every name across all expressions.
std::vector<std::string> bind_names(const std::vector<RawExpr>& exprs,
                                    const std::optional<std::vector<std::string>>& order,
                                    std::map<std::string, int>& slot_of) {
    if (order) {
        for (std::size_t i = 0; i < order->size(); ++i) {
            if (slot_of.count((*order)[i]))
                throw ParseError(ParseErrorKind::Syntax, 0, "duplicate name in variable order");
            slot_of[(*order)[i]] = static_cast<int>(i);
        }
        for (const RawExpr& e : exprs)
            for (const Term* t : {&e.first, &e.second})
                for (const Factor& f : t->factors)
                    if (!slot_of.count(f.name))
                        throw ParseError(ParseErrorKind::Syntax, f.pos,
                                         "variable '" + f.name + "' is not in the given order");
        return *order;
    }

    bool any_indexed = false, any_free = false;
    int max_slot = -1;
    std::vector<std::string> free_names;
    for (const RawExpr& e : exprs) {
        for (const Term* t : {&e.first, &e.second}) {
            for (const Factor& f : t->factors) {
                int slot;
                if (indexed_name(f.name, slot)) {
                    any_indexed = true;
                    max_slot = std::max(max_slot, slot);
                } else {
                    any_free = true;
                    if (std::find(free_names.begin(), free_names.end(), f.name) == free_names.end())
                        free_names.push_back(f.name);
                }
                if (any_indexed && any_free)
                    throw ParseError(ParseErrorKind::Syntax, f.pos,
                                     "cannot mix x<k> names with other names; "
                                     "pass an explicit variable order");
            }
        }
    }
    std::vector<std::string> vars;
    if (any_indexed) {
        for (int i = 0; i <= max_slot; ++i) {
            vars.push_back("x" + std::to_string(i + 1));
            slot_of[vars.back()] = i;
        }
    } else {
        vars = free_names;
        for (std::size_t i = 0; i < vars.size(); ++i) slot_of[vars[i]] = static_cast<int>(i);
    }
    return vars;
}

ExponentVector term_vector(const Term& t, const std::map<std::string, int>& slot_of, int n) {
    ExponentVector v(n, 0);
    for (const Factor& f : t.factors) v[slot_of.at(f.name)] += f.exponent;
    return v;
}

}  // namespace

std::vector<ParsedBinomial> parse_all(const std::vector<std::string>& texts,
                                      const std::optional<std::vector<std::string>>& order) {
    std::vector<RawExpr> exprs;
    exprs.reserve(texts.size());
    for (const std::string& t : texts) exprs.push_back(parse_expr(t));

    std::map<std::string, int> slot_of;
    std::vector<std::string> vars = bind_names(exprs, order, slot_of);
    const int n = static_cast<int>(vars.size());

    std::vector<ParsedBinomial> out;
    out.reserve(exprs.size());
    for (const RawExpr& e : exprs) {
        ParsedBinomial b;
        b.variables = vars;
        b.A_raw = term_vector(e.first, slot_of, n);
        b.B_raw = term_vector(e.second, slot_of, n);
        // f = c1 x^A + c2' x^B = c1 (x^A - rho x^B) with rho = -c2'/c1.
        Rational rho;
        rho.num = -e.second.coeff.num * (e.first.coeff.den);
        rho.den = e.second.coeff.den * (e.first.coeff.num);
        if (rho.den < 0) {
            rho.den = -rho.den;
            rho.num = -rho.num;
        }
        rho.reduce();
        b.rho = rho.str();
        out.push_back(std::move(b));
    }
    return out;
}

ParsedBinomial parse(const std::string& text,
                     const std::optional<std::vector<std::string>>& order) {
    return parse_all({text}, order)[0];
}

namespace {

std::string monomial_str(const ExponentVector& v, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (v[i] > 1) s += "^" + std::to_string(v[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string render(const ParsedBinomial& b) {
    std::string rho = b.rho;
    std::string op = " - ";
    if (!rho.empty() && rho[0] == '-') {
        op = " + ";
        rho = rho.substr(1);
    }
    std::string second = monomial_str(b.B_raw, b.variables);
    if (rho != "1") second = second == "1" ? rho : rho + "*" + second;
    return monomial_str(b.A_raw, b.variables) + op + second;
}

}  // namespace monoforge

#include "ncplush/ncparse.hpp"

#include <cctype>
#include <limits>

namespace ncplush {

namespace {

// Recursive-descent parser over a character cursor. g == 0 means "no bound":
// indices are collected and validated by the caller.
class Parser {
public:
    Parser(const std::string& text, int g, bool bounded)
        : s_(text), g_(g), bounded_(bounded) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

    int max_index_seen = 0;

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected " + what);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an unsigned integer");
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += s_[pos_++];
        try {
            return std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        std::string num;
        if (accept('-')) num += '-';
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_ = start;
            fail("malformed rational");
        }
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            num += s_[pos_++];
        std::string den = "1";
        skip_ws();
        if (accept('/')) {
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("malformed rational: missing denominator");
            den.clear();
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
                den += s_[pos_++];
            if (mpz_class(den) == 0) fail("malformed rational: zero denominator");
        }
        Rational r{mpq_class(mpz_class(num), mpz_class(den))};
        r.canonicalize();
        return r;
    }

    Letter parse_atom() {
        skip_ws();
        char c = peek();
        Family fam;
        if (c == 'x')
            fam = Family::X;
        else if (c == 'h')
            fam = Family::H;
        else
            fail("expected a variable (x<n> or h<n>)");
        ++pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a variable index");
        std::size_t at = pos_;
        unsigned long idx = parse_uint();
        if (idx < 1) throw ParseError("variable index must be >= 1", at);
        if (bounded_ && static_cast<long>(idx) > g_)
            throw ParseError("variable index " + std::to_string(idx) +
                                 " exceeds variable count " + std::to_string(g_),
                             at);
        max_index_seen = std::max(max_index_seen, static_cast<int>(idx));
        return Letter(fam, static_cast<int>(idx), false);
    }

    // Postfix transpose: either ' or the alias ^T.
    bool accept_transpose() {
        skip_ws();
        if (accept('\'')) return true;
        std::size_t mark = pos_;
        if (accept('^')) {
            skip_ws();
            if (accept('T')) return true;
            pos_ = mark;  // a power; let the caller consume it
        }
        return false;
    }

    Polynomial parse_factor() {
        skip_ws();
        Polynomial base = Polynomial::zero(ctx());
        if (accept('(')) {
            base = parse_poly();
            skip_ws();
            expect(')', "')'");
        } else {
            Letter l = parse_atom();
            base = Polynomial::monomial(1, Word({l}), ctx());
        }
        if (accept_transpose()) base = base.transpose();
        skip_ws();
        if (accept('^')) {
            unsigned long n = parse_uint();
            Polynomial pow = Polynomial::constant(1, ctx());
            for (unsigned long i = 0; i < n; ++i) pow = pow * base;
            base = pow;
        }
        return base;
    }

    bool at_factor_start() {
        skip_ws();
        char c = peek();
        return c == 'x' || c == 'h' || c == '(';
    }

    bool at_rational_start() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
    }

    Polynomial parse_term() {
        skip_ws();
        Rational c(1);
        bool saw_coeff = false;
        bool star_after_coeff = false;
        if (at_rational_start()) {
            c = parse_rational();
            saw_coeff = true;
            skip_ws();
            star_after_coeff = accept('*');
        }
        Polynomial p = Polynomial::constant(c, ctx());
        if (star_after_coeff || at_factor_start()) {
            p = p * parse_factor();
            skip_ws();
            while (accept('*')) {
                p = p * parse_factor();
                skip_ws();
            }
        } else if (!saw_coeff) {
            fail("expected a term");
        }
        return p;
    }

    Polynomial parse_poly() {
        skip_ws();
        bool negate = accept('-');
        Polynomial p = parse_term();
        if (negate) p = -p;
        skip_ws();
        while (!eof()) {
            if (accept('+')) {
                p = p + parse_term();
            } else if (accept('-')) {
                p = p - parse_term();
            } else {
                break;
            }
            skip_ws();
        }
        return p;
    }

    // While parsing we work in an unbounded scratch context and restamp at
    // the end; using a huge g here would defeat the index check in Polynomial.
    int ctx() const { return bounded_ ? g_ : std::numeric_limits<int>::max(); }

    const std::string& s_;
    std::size_t pos_ = 0;
    int g_;
    bool bounded_;
};

Polynomial restamp(const Polynomial& p, int g) {
    TermMap t = p.terms();
    return Polynomial(std::move(t), g);
}

}  // namespace

Polynomial parse(const std::string& text, int g) {
    if (g < 0) throw std::invalid_argument("ncplush: variable count must be >= 0");
    Parser parser(text, g, /*bounded=*/true);
    return restamp(parser.run(), g);
}

Polynomial parse(const std::string& text) {
    Parser parser(text, 0, /*bounded=*/false);
    Polynomial p = parser.run();
    return restamp(p, parser.max_index_seen);
}

std::string print(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (w.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += '*';
            }
            out += w.str();
        }
    }
    return out;
}

}  // namespace ncplush

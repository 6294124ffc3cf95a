#include "toric/io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace toric {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    int line;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    [[noreturn]] void err(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at line " << line << ", column " << (i + 1) << ": " << msg;
        fail(ErrorCode::ParseError, os.str());
    }
};

long long read_integer(Cursor& c) {
    std::size_t start = c.i;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.i;
    std::size_t digits = c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == digits) c.err("expected an integer");
    return std::strtoll(c.s.substr(start, c.i - start).c_str(), nullptr, 10);
}

// coefficient literal: INT or INT/INT
Scalar read_coeff(Cursor& c, std::uint64_t prime) {
    long long num = read_integer(c);
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        long long den = read_integer(c);
        if (den == 0) c.err("zero denominator");
        if (prime == 0) return Scalar::from_rational(Rational(num) / Rational(den));
        return Scalar::gf(prime, num) / Scalar::gf(prime, den);
    }
    return prime == 0 ? Scalar::from_int(num) : Scalar::gf(prime, num);
}

// variable power: xK or xK^E
void read_varpow(Cursor& c, int nvars, std::vector<int>& exps) {
    ++c.i; // 'x'
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
        c.err("expected a variable index after 'x'");
    }
    long long idx = read_integer(c);
    if (idx < 1 || idx > nvars) c.err("variable index out of range");
    long long e = 1;
    if (!c.done() && c.peek() == '^') {
        ++c.i;
        e = read_integer(c);
    }
    exps[static_cast<std::size_t>(idx - 1)] += static_cast<int>(e);
}

// term: factor ('*' factor)*, factor = coefficient | variable power
void read_term(Cursor& c, int nvars, std::uint64_t prime, bool negative, LaurentPoly& out) {
    Scalar coeff = Scalar::one(prime);
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    bool any = false;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        char ch = c.peek();
        if (ch == 'x') {
            read_varpow(c, nvars, exps);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff *= read_coeff(c, prime);
        } else if (!any) {
            c.err("expected a term");
        } else {
            break;
        }
        any = true;
        c.skip_ws();
        if (!c.done() && c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    if (!any) c.err("empty term");
    if (negative) coeff = -coeff;
    out.add_term(Monomial(std::move(exps)), coeff);
}

LaurentPoly parse_line(const std::string& text, int nvars, std::uint64_t prime, int line) {
    Cursor c{text, 0, line};
    LaurentPoly out(nvars);
    c.skip_ws();
    if (c.done()) c.err("empty polynomial");
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
        neg = c.peek() == '-';
        ++c.i;
    }
    for (;;) {
        read_term(c, nvars, prime, neg, out);
        c.skip_ws();
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            neg = ch == '-';
            ++c.i;
            continue;
        }
        c.err(std::string("unexpected character '") + ch + "'");
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    std::size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
    for (char ch : s) {
        if (ch != ' ' && ch != '\t' && ch != '\r') return false;
    }
    return true;
}

} // namespace

LaurentPoly parse_poly(const std::string& text, int nvars, std::uint64_t prime) {
    return parse_line(text, nvars, prime, 1);
}

int scan_max_variable(const std::string& text) {
    int best = 0;
    bool comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '\n') comment = false;
        if (ch == '#') comment = true;
        if (comment || ch != 'x') continue;
        std::size_t j = i + 1;
        long long idx = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            idx = idx * 10 + (text[j] - '0');
            ++j;
        }
        if (j > i + 1 && idx > best) best = static_cast<int>(idx);
    }
    return best;
}

std::vector<LaurentPoly> parse_system(const std::string& text, std::uint64_t prime) {
    int nvars = scan_max_variable(text);
    if (nvars == 0) fail(ErrorCode::NoInput, "no variables found in the input");
    std::vector<LaurentPoly> out;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        LaurentPoly p = parse_line(line, nvars, prime, lineno);
        if (p.is_zero()) {
            fail(ErrorCode::ZeroPolynomialLine,
                 "line " + std::to_string(lineno) + " is the zero polynomial");
        }
        out.push_back(std::move(p));
    }
    if (out.empty()) fail(ErrorCode::NoInput, "no polynomials in the input");
    return out;
}

} // namespace toric

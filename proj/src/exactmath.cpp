#include "taut/exactmath.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace taut {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Rational factorial(int n) {
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(z);
}

Rational double_factorial(int n) {
    if (n <= 0) return 1;
    Integer z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(int nvars, int offset) : nvars_(nvars), offset_(offset) {}

MultiPoly MultiPoly::constant(int nvars, const Rational& c, int offset) {
    MultiPoly p(nvars, offset);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, int offset) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(e, 1, offset);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c, int offset) {
    MultiPoly p(static_cast<int>(e.size()), offset);
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0) d = de;
        else if (d != de) return std::nullopt;
    }
    return d;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_linear_form() const {
    auto d = homogeneous_degree();
    return d && *d == 1;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || offset_ != o.offset_) throw std::invalid_argument("variable-list mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.offset_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
    return nvars_ == o.nvars_ && offset_ == o.offset_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly r = constant(nvars_, 1, offset_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity");
    if (images.empty()) return *this;
    int nv = images[0].nvars(), off = images[0].offset();
    MultiPoly r(nv, off);
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
        MultiPoly m = constant(nv, c, off);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(nv, 1, off));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            m = m * pw[e[i]];
        }
        r += m;
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation arity");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

MultiPoly MultiPoly::component(int deg) const {
    MultiPoly r(nvars_, offset_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == deg) r.terms_.emplace(e, c);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](uint8_t x) { return x == 0; });
        bool wrote = false;
        if (a != 1 || is_const) {
            os << taut::to_string(a);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "a" << (i + offset_);
            if (e[i] > 1) os << "^" << int(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, char op) {
    switch (op) {
        case '+': return p + q;
        case '-': return p - q;
        case '*': return p * q;
        default: throw std::invalid_argument("unknown polynomial operation");
    }
}

DivisionResult exact_divide_linear(const MultiPoly& p, const MultiPoly& l) {
    if (l.is_zero()) throw std::domain_error("division by zero linear form");
    if (!l.is_linear_form()) throw std::invalid_argument("divisor is not a linear form");
    if (p.nvars() != l.nvars() || p.offset() != l.offset()) throw std::invalid_argument("variable-list mismatch");
    int n = l.nvars();
    int j = n;
    Rational lead;
    for (const auto& [e, c] : l.terms())
        for (int i = 0; i < n; ++i)
            if (e[i] && i < j) {
                j = i;
                lead = c;
            }
    MultiPoly quotient(n, p.offset());
    MultiPoly rem = p;
    while (true) {
        const Exponents* pick = nullptr;
        for (const auto& [e, c] : rem.terms())
            if (e[j] > 0 && (!pick || e[j] > (*pick)[j])) pick = &e;
        if (!pick) break;
        Exponents e = *pick;
        Rational c = rem.terms().at(e) / lead;
        e[j] -= 1;
        MultiPoly m = MultiPoly::monomial(e, c, p.offset());
        quotient += m;
        rem -= m * l;
    }
    return {quotient, rem};
}

Rational coefficient_of(const MultiPoly& p, const Exponents& exps) {
    if (static_cast<int>(exps.size()) != p.nvars()) throw std::invalid_argument("exponent length mismatch");
    auto it = p.terms().find(exps);
    return it == p.terms().end() ? Rational(0) : it->second;
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    int nvars, offset;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    Rational number() {
        skip();
        std::size_t st = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        return parse_rational(s.substr(st, i - st));
    }
    int integer() {
        skip();
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) throw std::invalid_argument("expected integer in: " + s);
        return std::stoi(s.substr(st, i - st));
    }
    MultiPoly factor() {
        skip();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            return MultiPoly::constant(nvars, number(), offset);
        if (i < s.size() && s[i] == 'a') {
            ++i;
            int idx = integer() - offset;
            if (idx < 0 || idx >= nvars) throw std::invalid_argument("variable out of range in: " + s);
            MultiPoly v = MultiPoly::variable(nvars, idx, offset);
            if (peek('^')) {
                ++i;
                v = v.pow(integer());
            }
            return v;
        }
        if (i < s.size() && s[i] == '(') {
            ++i;
            MultiPoly r = expr();
            if (!peek(')')) throw std::invalid_argument("unbalanced parenthesis in: " + s);
            ++i;
            return r;
        }
        throw std::invalid_argument("unexpected input in polynomial: " + s);
    }
    MultiPoly term() {
        MultiPoly r = factor();
        while (true) {
            skip();
            if (peek('*')) {
                ++i;
                r = r * factor();
            } else if (i < s.size() && (s[i] == 'a' || s[i] == '(')) {
                r = r * factor();
            } else {
                break;
            }
        }
        return r;
    }
    MultiPoly expr() {
        MultiPoly r(nvars, offset);
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+')) ++i;
            else if (peek('-')) {
                ++i;
                sign = -1;
            } else if (!first) break;
            first = false;
            MultiPoly t = term();
            if (sign < 0) r -= t;
            else r += t;
        }
        return r;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& s, int nvars, int offset) {
    PolyParser p{s, 0, nvars, offset};
    MultiPoly r = p.expr();
    p.skip();
    if (p.i != s.size()) throw std::invalid_argument("trailing input in polynomial: " + s);
    return r;
}

MultiPoly parse_linear_form(const std::string& s, int nvars, int offset) {
    MultiPoly r = parse_poly(s, nvars, offset);
    if (!r.is_zero() && !r.is_linear_form()) throw std::invalid_argument("not a linear form: " + s);
    return r;
}

}  // namespace taut

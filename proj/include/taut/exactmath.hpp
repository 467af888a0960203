#ifndef TAUT_EXACTMATH_HPP
#define TAUT_EXACTMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taut {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);
Rational factorial(int n);
Rational double_factorial(int n);  // (-1)!! = 1

using Exponents = std::vector<uint8_t>;

struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over Rational in variables a_{offset}, ..., a_{offset+nvars-1}.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars, int offset = 0);
    static MultiPoly constant(int nvars, const Rational& c, int offset = 0);
    static MultiPoly variable(int nvars, int index, int offset = 0);
    static MultiPoly monomial(const Exponents& e, const Rational& c, int offset = 0);

    int nvars() const { return nvars_; }
    int offset() const { return offset_; }
    const std::map<Exponents, Rational, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);
    std::optional<int> homogeneous_degree() const;
    int degree() const;  // -1 for zero
    bool is_linear_form() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int k) const;
    // Replace variable i by images[i]; all images share one variable list.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // Homogeneous component of the given degree.
    MultiPoly component(int deg) const;

    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;
    int nvars_ = 0;
    int offset_ = 0;
    std::map<Exponents, Rational, GradedLex> terms_;
};

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, char op);

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

// Reduces p modulo the linear form l by eliminating the lowest-index variable of l.
DivisionResult exact_divide_linear(const MultiPoly& p, const MultiPoly& l);

Rational coefficient_of(const MultiPoly& p, const Exponents& exps);

// Parses "a1", "-a1-a2", "2a1-3a2+1/2a3", "0" into a linear form.
MultiPoly parse_linear_form(const std::string& s, int nvars, int offset);
MultiPoly parse_poly(const std::string& s, int nvars, int offset);

}  // namespace taut

#endif

#ifndef HPAIR_POLY_HPP
#define HPAIR_POLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpair/rational.hpp"

namespace hpair {

// Exponent vector; one slot per variable of the ambient ring.
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with earlier variables greater
// (z0 > z1 > ...). Returns true when a comes strictly before b,
// i.e. a is the larger monomial.
bool gradedLexGreater(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return gradedLexGreater(a, b);
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, size_t index);
    static MultiPoly term(std::vector<std::string> vars, Monomial m, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t varCount() const { return vars_.size(); }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coeff(const Monomial& m) const;
    // Leading (graded-lex greatest) term; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    void addTerm(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const = default;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Formal partial derivative with respect to variable varIndex.
MultiPoly derivative(const MultiPoly& f, size_t varIndex);

// True when all terms have the same total degree (vacuously for 0).
bool isHomogeneous(const MultiPoly& f);

// Divides by the leading coefficient, so the graded-lex greatest
// monomial carries coefficient 1. Zero stays zero.
MultiPoly canonical(const MultiPoly& f);

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<MultiPoly> tryDivideExact(const MultiPoly& f, const MultiPoly& g);

// Greatest common divisor in canonical scaling, via a subresultant
// polynomial-remainder sequence over the last occurring variable.
// gcd(f, 0) = canonical(f); both arguments zero is an error.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

// gcd(f, df/dz_0, ..., df/dz_n); in characteristic 0 this is
// p_1^{a_1-1}...p_s^{a_s-1} for f = c p_1^{a_1}...p_s^{a_s}.
// Returns 1 exactly when f is square-free.
MultiPoly squarefreeQuotient(const MultiPoly& f);

// (mu_1+...+mu_k)! / (mu_1! ... mu_k!)
Rational multinomial(const std::vector<int>& mu);

// Rewrites f over the (super)set of variables `vars`, matching by name.
// Every variable of f that actually occurs must appear in vars.
MultiPoly embedPoly(const MultiPoly& f, std::vector<std::string> vars);

struct PolyParseError : std::runtime_error {
    size_t position;
    PolyParseError(size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*;
// term := coeff | [coeff '*'] factor ('*' factor)*;
// factor := var ['^' posint]; coeff := int | int '/' posint.
// Whitespace is insignificant. Unknown variables are errors.
MultiPoly parsePoly(const std::string& text, const std::vector<std::string>& vars);

// Canonical text: terms in descending graded-lex order, reduced
// fractional coefficients, unit coefficients omitted. parse(render(f)) == f.
std::string renderPoly(const MultiPoly& f);

}  // namespace hpair

#endif

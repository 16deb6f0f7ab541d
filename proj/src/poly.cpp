#include "hpair/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hpair {

bool gradedLexGreater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // Earlier variables greater: the first differing slot decides.
    for (size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return a.exps.size() > b.exps.size();
}

static void requireSameVars(const MultiPoly& f, const MultiPoly& g) {
    if (f.vars() != g.vars())
        throw std::invalid_argument("polynomials over different variable sets");
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.addTerm(Monomial{std::vector<int>(p.vars_.size(), 0)}, c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, size_t index) {
    if (index >= vars.size()) throw std::out_of_range("variable index out of range");
    MultiPoly p(std::move(vars));
    Monomial m{std::vector<int>(p.vars_.size(), 0)};
    m.exps[index] = 1;
    p.addTerm(m, 1);
    return p;
}

MultiPoly MultiPoly::term(std::vector<std::string> vars, Monomial m, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (m.exps.size() != p.vars_.size())
        throw std::invalid_argument("monomial length does not match variable count");
    p.addTerm(m, c);
    return p;
}

bool MultiPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
}

void MultiPoly::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    requireSameVars(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    requireSameVars(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    requireSameVars(*this, o);
    MultiPoly r(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
            r.addTerm(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly derivative(const MultiPoly& f, size_t varIndex) {
    if (varIndex >= f.varCount()) throw std::out_of_range("derivative: variable index out of range");
    MultiPoly r(f.vars());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exps[varIndex];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[varIndex] = e - 1;
        r.addTerm(dm, c * e);
    }
    return r;
}

bool isHomogeneous(const MultiPoly& f) {
    if (f.isZero()) return true;
    int d = f.terms().begin()->first.degree();
    for (const auto& [m, c] : f.terms())
        if (m.degree() != d) return false;
    return true;
}

MultiPoly canonical(const MultiPoly& f) {
    if (f.isZero()) return f;
    return f * (Rational(1) / f.leading().second);
}

std::optional<MultiPoly> tryDivideExact(const MultiPoly& f, const MultiPoly& g) {
    requireSameVars(f, g);
    if (g.isZero()) throw std::invalid_argument("division by zero polynomial");
    MultiPoly q(f.vars());
    MultiPoly r = f;
    const auto& [gm, gc] = g.leading();
    while (!r.isZero()) {
        const auto& [rm, rc] = r.leading();
        Monomial m{std::vector<int>(rm.exps.size(), 0)};
        for (size_t i = 0; i < m.exps.size(); ++i) {
            int e = rm.exps[i] - gm.exps[i];
            if (e < 0) return std::nullopt;
            m.exps[i] = e;
        }
        Rational c = rc / gc;
        q.addTerm(m, c);
        // r -= g * (c * z^m), in place
        for (const auto& [tm, tc] : g.terms()) {
            Monomial shifted = tm;
            for (size_t i = 0; i < shifted.exps.size(); ++i) shifted.exps[i] += m.exps[i];
            r.addTerm(shifted, -c * tc);
        }
    }
    return q;
}

namespace {

// Highest variable index occurring in f or g, or nullopt if both constant.
std::optional<size_t> lastVariable(const MultiPoly& f, const MultiPoly& g) {
    std::optional<size_t> v;
    for (const MultiPoly* p : {&f, &g})
        for (const auto& [m, c] : p->terms())
            for (size_t i = m.exps.size(); i-- > 0;)
                if (m.exps[i] > 0 && (!v || i > *v)) v = i;
    return v;
}

int degreeIn(const MultiPoly& f, size_t v) {
    int d = -1;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.exps[v]);
    return d;
}

// Coefficients of f viewed as a univariate polynomial in variable v,
// indexed by the power of v. Coefficients live in the same ring with
// exponent zero at v.
std::vector<MultiPoly> coeffsIn(const MultiPoly& f, size_t v) {
    int d = degreeIn(f, v);
    std::vector<MultiPoly> cs(static_cast<size_t>(d + 1), MultiPoly(f.vars()));
    for (const auto& [m, c] : f.terms()) {
        Monomial reduced = m;
        int e = reduced.exps[v];
        reduced.exps[v] = 0;
        cs[static_cast<size_t>(e)].addTerm(reduced, c);
    }
    return cs;
}

MultiPoly gcdImpl(const MultiPoly& f, const MultiPoly& g);

// gcd of the v-coefficients of f.
MultiPoly contentIn(const MultiPoly& f, size_t v) {
    auto cs = coeffsIn(f, v);
    MultiPoly acc(f.vars());
    for (const auto& c : cs) {
        if (c.isZero()) continue;
        acc = acc.isZero() ? canonical(c) : gcdImpl(acc, c);
        if (acc.isConstant()) break;
    }
    return acc;
}

// Pseudo-remainder of F by G with respect to variable v:
// lc(G)^(deg F - deg G + 1) * F mod G, the exact power included even when
// intermediate degrees drop by more than one.
MultiPoly prem(MultiPoly F, const MultiPoly& G, size_t v) {
    int e = degreeIn(G, v);
    auto gcs = coeffsIn(G, v);
    const MultiPoly& lcg = gcs.back();
    int needed = degreeIn(F, v) - e + 1;
    int done = 0;
    int dF = 0;
    while (!F.isZero() && (dF = degreeIn(F, v)) >= e) {
        auto fcs = coeffsIn(F, v);
        const MultiPoly& lcf = fcs.back();
        // lcg*F - lcf*G*v^(dF-e)
        MultiPoly shiftG(F.vars());
        for (const auto& [m, c] : G.terms()) {
            Monomial mm = m;
            mm.exps[v] += dF - e;
            shiftG.addTerm(mm, c);
        }
        F = F * lcg - shiftG * lcf;
        ++done;
    }
    for (; done < needed; ++done) F = F * lcg;
    return F;
}

MultiPoly polyPow(const MultiPoly& f, int e) {
    MultiPoly r = MultiPoly::constant(f.vars(), 1);
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

MultiPoly gcdImpl(const MultiPoly& f, const MultiPoly& g) {
    if (f.isZero()) return canonical(g);
    if (g.isZero()) return canonical(f);
    auto vOpt = lastVariable(f, g);
    if (!vOpt) return MultiPoly::constant(f.vars(), 1);
    size_t v = *vOpt;

    MultiPoly cf = contentIn(f, v);
    MultiPoly cg = contentIn(g, v);
    MultiPoly c = gcdImpl(cf, cg);
    MultiPoly F = *tryDivideExact(f, cf);
    MultiPoly G = *tryDivideExact(g, cg);
    if (degreeIn(F, v) < degreeIn(G, v)) std::swap(F, G);

    // Subresultant polynomial-remainder sequence: the pseudo-remainders are
    // divided by predicted factors, so contents are taken only at the end.
    MultiPoly lead = MultiPoly::constant(f.vars(), 1);
    MultiPoly h = lead;
    while (true) {
        int dF = degreeIn(F, v);
        int dG = degreeIn(G, v);
        if (dG == 0) return canonical(c);  // coprime in v
        int delta = dF - dG;
        MultiPoly R = prem(F, G, v);
        if (R.isZero()) {
            MultiPoly pp = *tryDivideExact(G, contentIn(G, v));
            return canonical(c * pp);
        }
        MultiPoly divisor = lead * polyPow(h, delta);
        F = std::move(G);
        auto q = tryDivideExact(R, divisor);
        if (!q) throw std::logic_error("gcd: subresultant division not exact");
        G = std::move(*q);
        lead = coeffsIn(F, v).back();
        if (delta > 0) {
            auto hq = tryDivideExact(polyPow(lead, delta), polyPow(h, delta - 1));
            if (!hq) throw std::logic_error("gcd: subresultant h-update not exact");
            h = std::move(*hq);
        }
    }
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    requireSameVars(f, g);
    if (f.isZero() && g.isZero())
        throw std::invalid_argument("gcd of two zero polynomials");
    return canonical(gcdImpl(f, g));
}

MultiPoly squarefreeQuotient(const MultiPoly& f) {
    if (f.isZero()) throw std::invalid_argument("squarefree quotient of zero polynomial");
    if (f.isConstant()) return MultiPoly::constant(f.vars(), 1);
    MultiPoly acc = f;
    for (size_t v = 0; v < f.varCount(); ++v) {
        MultiPoly d = derivative(f, v);
        if (d.isZero()) continue;
        acc = gcd(acc, d);
        if (acc.isConstant()) break;
    }
    return canonical(acc);
}

Rational multinomial(const std::vector<int>& mu) {
    unsigned total = 0;
    for (int e : mu) {
        if (e < 0) throw std::invalid_argument("multinomial: negative entry");
        total += static_cast<unsigned>(e);
    }
    Integer num = factorial(total);
    Integer den = 1;
    for (int e : mu) den *= factorial(static_cast<unsigned>(e));
    return Rational(num, den);
}

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    void skipWs() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skipWs();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skipWs();
        return pos < text.size() ? text[pos] : '\0';
    }

    Integer parseInt() {
        skipWs();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw PolyParseError(pos, "expected integer");
        return Integer(text.substr(start, pos - start));
    }

    Rational parseCoeff() {
        Integer num = parseInt();
        if (eat('/')) {
            size_t at = pos;
            Integer den = parseInt();
            if (den <= 0) throw PolyParseError(at, "denominator must be positive");
            return Rational(num, den);
        }
        return Rational(num);
    }

    size_t parseVar() {
        skipWs();
        size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            throw PolyParseError(pos, "expected variable");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw PolyParseError(start, "unknown variable '" + name + "'");
        return static_cast<size_t>(it - vars.begin());
    }

    // factor := var ['^' posint]
    void parseFactor(Monomial& m) {
        size_t v = parseVar();
        int e = 1;
        if (eat('^')) {
            size_t at = pos;
            Integer p = parseInt();
            if (p <= 0) throw PolyParseError(at, "exponent must be positive");
            e = static_cast<int>(p);
        }
        m.exps[v] += e;
    }

    void parseTerm(MultiPoly& acc, bool negative) {
        Rational c = 1;
        Monomial m{std::vector<int>(vars.size(), 0)};
        char ch = peek();
        bool sawFactor = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            c = parseCoeff();
            if (!eat('*')) {
                acc.addTerm(m, negative ? -c : c);
                return;
            }
            parseFactor(m);
            sawFactor = true;
        }
        if (!sawFactor) parseFactor(m);
        while (true) {
            size_t save = pos;
            if (!eat('*')) break;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                // coefficients only lead a term
                pos = save;
                break;
            }
            parseFactor(m);
        }
        acc.addTerm(m, negative ? -c : c);
    }

    MultiPoly parseExpr() {
        MultiPoly acc(vars);
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        parseTerm(acc, negative);
        while (true) {
            skipWs();
            if (pos >= text.size()) break;
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                throw PolyParseError(pos, "expected '+' or '-'");
            parseTerm(acc, negative);
        }
        return acc;
    }
};

}  // namespace

MultiPoly parsePoly(const std::string& text, const std::vector<std::string>& vars) {
    Parser p{text, vars};
    MultiPoly r = p.parseExpr();
    return r;
}

std::string renderPoly(const MultiPoly& f) {
    if (f.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += f.vars()[i];
            if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
        }
        if (mono.empty()) {
            out << rationalToString(a);
        } else if (a == 1) {
            out << mono;
        } else {
            out << rationalToString(a) << "*" << mono;
        }
    }
    return out.str();
}

MultiPoly embedPoly(const MultiPoly& f, std::vector<std::string> vars) {
    std::vector<size_t> slot(f.varCount(), vars.size());
    for (size_t i = 0; i < f.varCount(); ++i)
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == f.vars()[i]) {
                slot[i] = j;
                break;
            }
    MultiPoly out(std::move(vars));
    for (const auto& [m, c] : f.terms()) {
        Monomial nm{std::vector<int>(out.varCount(), 0)};
        for (size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (slot[i] >= out.varCount())
                throw std::invalid_argument("embedPoly: variable " + f.vars()[i] +
                                            " missing from the target list");
            nm.exps[slot[i]] = m.exps[i];
        }
        out.addTerm(nm, c);
    }
    return out;
}

}  // namespace hpair

#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "moyal/rational.hpp"

namespace moyal {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rewriting did not reach a fixpoint within the step budget; the rule set of
// the presentation is mis-declared.
struct RewriteBudgetError : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct SubstituteError : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct LatticeError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Generator of a presented algebra. Exponents of the generator range over
/// (1/radical_order)Z; `invertible` gates negative exponents in normalized,
/// user-facing results (intermediates may always go negative).
struct GeneratorDecl {
    std::string name;
    unsigned radical_order = 1;
    bool invertible = false;
};

/// Power product with rational exponents, keyed by generator index.
/// Zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial gen(int id, const Rational& e = Rational(1)) {
        Monomial m;
        m.mul(id, e);
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const std::map<int, Rational>& exponents() const { return e_; }

    Rational exp(int id) const {
        auto it = e_.find(id);
        return it == e_.end() ? Rational(0) : it->second;
    }

    Monomial& mul(int id, const Rational& e) {
        if (e == 0) return *this;
        auto it = e_.find(id);
        if (it == e_.end()) {
            e_.emplace(id, e);
        } else {
            it->second += e;
            if (it->second == 0) e_.erase(it);
        }
        return *this;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (const auto& [id, e] : b.e_) m.mul(id, e);
        return m;
    }

    // Componentwise quotient; exponents may become negative.
    Monomial divided_by(const Monomial& d) const {
        Monomial m = *this;
        for (const auto& [id, e] : d.e_) m.mul(id, -e);
        return m;
    }

    // Divisibility for rewriting. A positive lhs exponent requires at least
    // that much; a negative lhs exponent requires at most that much (used by
    // localization rules such as w^{-1}·atilde·btilde).
    bool rewrite_divisible(const Monomial& lhs) const {
        for (const auto& [id, e] : lhs.e_) {
            Rational have = exp(id);
            if (e > 0 && have < e) return false;
            if (e < 0 && have > e) return false;
        }
        return true;
    }

    Rational total_degree() const {
        Rational d(0);
        for (const auto& [id, e] : e_) d += e;
        return d;
    }

    bool has_negative_exponent() const {
        for (const auto& [id, e] : e_)
            if (e < 0) return true;
        return false;
    }

    Monomial pow(const Rational& e) const {
        Monomial m;
        for (const auto& [id, x] : e_) m.mul(id, x * e);
        return m;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    bool operator<(const Monomial& o) const {
        auto a = e_.begin();
        auto b = o.e_.begin();
        for (; a != e_.end() && b != o.e_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first;
            if (a->second != b->second) return a->second < b->second;
        }
        return b != o.e_.end();
    }

private:
    std::map<int, Rational> e_;
};

/// Multivariate Laurent polynomial with exact rational coefficients and
/// rational exponents. Canonical: no zero coefficients stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) t_.emplace(Monomial::one(), c);
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly gen(int id, const Rational& e = Rational(1)) {
        return term(Monomial::gen(id, e), Rational(1));
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Monomial::one()); }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly p;
        for (const auto& [m, c] : t_) p.t_.emplace(m, -c);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly p;
        if (c == 0) return p;
        for (const auto& [m, x] : a.t_) p.t_.emplace(m, x * c);
        return p;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }
    Poly& operator*=(const Rational& c) { return *this = *this * c; }
    friend Poly operator/(const Poly& a, const Rational& c) {
        return a * (Rational(1) / c);
    }

    Poly pow(unsigned e) const {
        Poly acc(Rational(1));
        for (unsigned i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    // Maximal total degree over the support; 0 for the zero polynomial.
    Rational degree() const {
        Rational d(0);
        bool first = true;
        for (const auto& [m, c] : t_) {
            Rational md = m.total_degree();
            if (first || md > d) d = md;
            first = false;
        }
        return d;
    }

    bool has_negative_exponent() const {
        for (const auto& [m, c] : t_)
            if (m.has_negative_exponent()) return true;
        return false;
    }

    bool has_fractional_exponent() const {
        for (const auto& [m, c] : t_)
            for (const auto& [id, e] : m.exponents())
                if (!is_integer(e)) return true;
        return false;
    }

    // Terms of exact total degree d.
    Poly homogeneous_part(const Rational& d) const {
        Poly p;
        for (const auto& [m, c] : t_)
            if (m.total_degree() == d) p.t_.emplace(m, c);
        return p;
    }

private:
    Terms t_;
};

// Formal partial derivative by generator id: g^a -> a·g^{a-1} on monomials.
// Total; fractional and negative exponents pass through.
Poly partial(const Poly& p, int id);

// Homomorphic substitution generator -> polynomial. Fractional powers of a
// bound generator require the image to be a perfect power (single monomial
// with an exact rational root); otherwise SubstituteError.
Poly substitute(const Poly& p, const std::map<int, Poly>& bind);

/// Finitely presented commutative algebra: named generators with radical
/// lattices plus an ordered, terminating rewrite system. Rules are tried in
/// declaration order on every monomial until no rule applies.
class PresentedAlgebra {
public:
    static constexpr long long kStepBudget = 1'000'000;

    explicit PresentedAlgebra(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    int add_generator(const std::string& g, unsigned radical_order = 1,
                      bool invertible = false);
    void add_rule(const Monomial& lhs, const Poly& rhs, std::string note = {});

    int find(const std::string& g) const; // -1 when absent
    int generator(const std::string& g) const; // throws when absent
    size_t num_generators() const { return gens_.size(); }
    const GeneratorDecl& decl(int id) const { return gens_.at(size_t(id)); }
    const std::vector<GeneratorDecl>& generators() const { return gens_; }
    const std::vector<std::pair<Monomial, Poly>>& rules() const { return rules_; }

    Poly gen_poly(const std::string& g, const Rational& e = Rational(1)) const {
        return Poly::gen(generator(g), e);
    }

    // Fixpoint of the rewrite system; throws RewriteBudgetError past the
    // step budget. Equality in the quotient is identity of normal forms.
    Poly normal_form(const Poly& p) const;

    bool is_zero_mod(const Poly& p) const { return normal_form(p).is_zero(); }
    bool equal(const Poly& p, const Poly& q) const { return is_zero_mod(p - q); }

    // Lattice/invertibility diagnostics for a user-facing normalized value.
    // Empty string when clean.
    std::string validate_output(const Poly& p) const;

    // Canonical text form: terms in descending graded-lex order over the
    // generator declaration order, exact rational exponents.
    std::string to_string(const Poly& p) const;
    std::string monomial_string(const Monomial& m) const;

private:
    const std::pair<Monomial, Poly>* first_match(const Monomial& m) const;

    std::string name_;
    std::vector<GeneratorDecl> gens_;
    std::vector<std::pair<Monomial, Poly>> rules_;
    std::map<std::string, int> index_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

// Numeric evaluation at complex generator values (principal branch for
// fractional exponents).
std::complex<double> eval_complex(const Poly& p,
                                  const std::map<int, std::complex<double>>& vals);
double eval_double(const Poly& p, const std::map<int, double>& vals);

// Exact evaluation: roots[id] is the value of id^{1/radical_order(id)}, so
// every lattice exponent evaluates to an integer power of the root.
Rational eval_exact(const PresentedAlgebra& alg, const Poly& p,
                    const std::map<int, Rational>& roots);

} // namespace moyal

#include "moyal/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace moyal {

Poly partial(const Poly& p, int id) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Rational e = m.exp(id);
        if (e == 0) continue;
        Monomial dm = m;
        dm.mul(id, Rational(-1));
        out.add_term(dm, c * e);
    }
    return out;
}

namespace {

// image^e for a rational exponent. Integer e >= 0 is repeated multiplication;
// anything else requires a single-monomial image with an exact rational root.
Poly image_power(const Poly& image, const Rational& e) {
    if (e == 0) return Poly(Rational(1));
    if (is_integer(e) && e > 0 && num(e) <= 64) {
        return image.pow(num(e).convert_to<unsigned>());
    }
    if (image.size() != 1) {
        throw SubstituteError(
            "substitute: fractional or negative power of a non-monomial image");
    }
    const auto& [m, c] = *image.terms().begin();
    // exponent e = p/q: the coefficient needs an exact q-th root, raised to p
    long p = 0;
    unsigned q = 1;
    if (!is_integer(e)) {
        q = den(e).convert_to<unsigned>();
        p = num(e).convert_to<long>();
    } else {
        p = num(e).convert_to<long>();
    }
    auto root = rational_root(c, q);
    if (!root) {
        throw SubstituteError("substitute: image coefficient " + to_string(c) +
                              " has no exact " + std::to_string(q) + "-th root");
    }
    return Poly::term(m.pow(e), pow_int(*root, p));
}

} // namespace

Poly substitute(const Poly& p, const std::map<int, Poly>& bind) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly acc(c);
        Monomial rest;
        for (const auto& [id, e] : m.exponents()) {
            auto it = bind.find(id);
            if (it == bind.end()) {
                rest.mul(id, e);
            } else {
                acc *= image_power(it->second, e);
            }
        }
        out += acc * Poly::term(rest, Rational(1));
    }
    return out;
}

int PresentedAlgebra::add_generator(const std::string& g, unsigned radical_order,
                                    bool invertible) {
    if (index_.count(g))
        throw AlgebraError("duplicate generator '" + g + "' in " + name_);
    if (radical_order < 1) throw AlgebraError("radical_order must be >= 1");
    int id = int(gens_.size());
    gens_.push_back(GeneratorDecl{g, radical_order, invertible});
    index_.emplace(g, id);
    return id;
}

void PresentedAlgebra::add_rule(const Monomial& lhs, const Poly& rhs,
                                std::string note) {
    (void)note;
    for (const auto& [m, c] : rhs.terms()) {
        if (m.rewrite_divisible(lhs))
            throw AlgebraError("rewrite rule rhs is reducible by its own lhs in " +
                               name_);
    }
    rules_.emplace_back(lhs, rhs);
}

int PresentedAlgebra::find(const std::string& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
}

int PresentedAlgebra::generator(const std::string& g) const {
    int id = find(g);
    if (id < 0) throw AlgebraError("unknown generator '" + g + "' in " + name_);
    return id;
}

const std::pair<Monomial, Poly>* PresentedAlgebra::first_match(
    const Monomial& m) const {
    for (const auto& r : rules_)
        if (m.rewrite_divisible(r.first)) return &r;
    return nullptr;
}

Poly PresentedAlgebra::normal_form(const Poly& p) const {
    if (rules_.empty()) return p;
    long long steps = 0;
    Poly out;
    std::vector<std::pair<Monomial, Rational>> work(p.terms().begin(),
                                                    p.terms().end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (c == 0) continue;
        const auto* rule = first_match(m);
        if (!rule) {
            out.add_term(m, c);
            continue;
        }
        if (++steps > kStepBudget)
            throw RewriteBudgetError("normal_form: step budget exceeded in " +
                                     name_);
        Monomial cof = m.divided_by(rule->first);
        for (const auto& [rm, rc] : rule->second.terms())
            work.emplace_back(cof * rm, c * rc);
    }
    return out;
}

std::string PresentedAlgebra::validate_output(const Poly& p) const {
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [id, e] : m.exponents()) {
            const auto& g = decl(id);
            if (e < 0 && !g.invertible)
                return "negative exponent of non-invertible generator '" + g.name +
                       "' in normalized result";
            Rational scaled = e * g.radical_order;
            if (!is_integer(scaled))
                return "exponent " + moyal::to_string(e) + " of '" + g.name +
                       "' lies outside its (1/" + std::to_string(g.radical_order) +
                       ")Z lattice";
        }
    }
    return {};
}

namespace {

// Descending graded-lex over generator declaration order.
struct SerialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        Rational da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        auto ia = a.exponents().begin(), ea = a.exponents().end();
        auto ib = b.exponents().begin(), eb = b.exponents().end();
        while (ia != ea || ib != eb) {
            int ga = ia == ea ? INT_MAX : ia->first;
            int gb = ib == eb ? INT_MAX : ib->first;
            if (ga != gb) return ga < gb; // earlier generator present => larger
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return false;
    }
};

std::string exponent_string(const Rational& e) {
    if (e == 1) return {};
    if (is_integer(e) && e > 0) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

} // namespace

std::string PresentedAlgebra::monomial_string(const Monomial& m) const {
    std::string s;
    for (const auto& [id, e] : m.exponents()) {
        if (!s.empty()) s += "*";
        s += decl(id).name + exponent_string(e);
    }
    return s;
}

std::string PresentedAlgebra::to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(),
                                                     p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return SerialLess{}(a.first, b.first); });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = rat_abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string ms = monomial_string(m);
        if (ms.empty()) {
            s += moyal::to_string(a);
        } else if (a == 1) {
            s += ms;
        } else {
            s += moyal::to_string(a) + "*" + ms;
        }
    }
    return s;
}

std::complex<double> eval_complex(const Poly& p,
                                  const std::map<int, std::complex<double>>& vals) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> v(to_double(c), 0.0);
        for (const auto& [id, e] : m.exponents()) {
            auto it = vals.find(id);
            if (it == vals.end())
                throw AlgebraError("eval_complex: no value for generator id " +
                                   std::to_string(id));
            v *= std::pow(it->second, to_double(e));
        }
        acc += v;
    }
    return acc;
}

double eval_double(const Poly& p, const std::map<int, double>& vals) {
    std::map<int, std::complex<double>> cv;
    for (const auto& [id, v] : vals) cv.emplace(id, std::complex<double>(v, 0.0));
    return eval_complex(p, cv).real();
}

Rational eval_exact(const PresentedAlgebra& alg, const Poly& p,
                    const std::map<int, Rational>& roots) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (const auto& [id, e] : m.exponents()) {
            auto it = roots.find(id);
            if (it == roots.end())
                throw AlgebraError("eval_exact: no root value for generator '" +
                                   alg.decl(id).name + "'");
            Rational scaled = e * alg.decl(id).radical_order;
            if (!is_integer(scaled))
                throw LatticeError("eval_exact: exponent outside lattice");
            v *= pow_int(it->second, num(scaled).convert_to<long>());
        }
        acc += v;
    }
    return acc;
}

} // namespace moyal

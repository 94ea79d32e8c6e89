#include "moyal/derivation.hpp"

namespace moyal {

Poly Derivation::apply_raw(const Poly& f) const {
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [id, e] : m.exponents()) {
            auto it = images_.find(id);
            if (it == images_.end()) continue;
            Monomial shifted = m;
            shifted.mul(id, Rational(-1));
            out += Poly::term(shifted, c * e) * it->second;
        }
    }
    return out;
}

Poly Derivation::operator()(const Poly& f) const {
    return alg_->normal_form(apply_raw(f));
}

void PoissonStructure::set(int i, int j, const Poly& value) {
    if (i == j) {
        if (!value.is_zero())
            throw AlgebraError("PoissonStructure: q(g,g) must be zero");
        return;
    }
    bool flip = i > j;
    auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    Poly v = flip ? -value : value;
    if (v.is_zero())
        table_.erase(key);
    else
        table_[key] = v;
}

Poly PoissonStructure::entry(int i, int j) const {
    if (i == j) return Poly();
    bool flip = i > j;
    auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    auto it = table_.find(key);
    if (it == table_.end()) return Poly();
    return flip ? -it->second : it->second;
}

Poly PoissonStructure::bracket(const Poly& fin, const Poly& gin) const {
    // Partials are taken on normal forms so that eliminated generators
    // contribute through their images rather than as dead coordinates.
    Poly f = alg_->normal_form(fin);
    Poly g = alg_->normal_form(gin);
    Poly out;
    for (const auto& [key, t] : table_) {
        auto [i, j] = key;
        Poly dif = partial(f, i), djf = partial(f, j);
        Poly dig = partial(g, i), djg = partial(g, j);
        if ((dif.is_zero() || djg.is_zero()) && (djf.is_zero() || dig.is_zero()))
            continue;
        out += t * (dif * djg - djf * dig);
    }
    return alg_->normal_form(out);
}

Poly jacobi_defect(const PoissonStructure& q, const Poly& f, const Poly& g,
                   const Poly& h) {
    Poly d = q.bracket(q.bracket(f, g), h);
    d += q.bracket(q.bracket(g, h), f);
    d += q.bracket(q.bracket(h, f), g);
    return q.algebra()->normal_form(d);
}

Derivation hamiltonian_field(const PoissonStructure& q, const Poly& a,
                             FieldSide side) {
    std::map<int, Poly> images;
    const auto& alg = q.algebra();
    for (int id = 0; id < int(alg->num_generators()); ++id) {
        Poly g = Poly::gen(id);
        Poly v = side == FieldSide::left ? q.bracket(g, a) : q.bracket(a, g);
        if (!v.is_zero()) images.emplace(id, v);
    }
    return Derivation(alg, std::move(images));
}

Poly commutator_defect(const Derivation& d1, const Derivation& d2, const Poly& f) {
    Poly v = d1(d2(f)) - d2(d1(f));
    return d1.algebra()->normal_form(v);
}

namespace {

std::string relation_statement(const std::string& kind, size_t i, size_t j) {
    return "q(" + kind.substr(0, 1) + std::to_string(i + 1) + "," +
           kind.substr(1, 1) + std::to_string(j + 1) + ")";
}

} // namespace

DarbouxReport darboux_verify(const PoissonStructure& q,
                             const std::vector<DarbouxPair>& pairs) {
    DarbouxReport rep;
    const auto& alg = q.algebra();
    auto check = [&](const std::string& label, const Poly& value,
                     const Poly& expected) {
        Poly nf = alg->normal_form(value - expected);
        DarbouxRelation r;
        r.statement = label;
        r.pass = nf.is_zero();
        r.witness = alg->to_string(alg->normal_form(value));
        rep.relations.push_back(std::move(r));
    };
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = i; j < pairs.size(); ++j) {
            if (j > i) {
                check(relation_statement("aa", i, j) + " = 0",
                      q.bracket(pairs[i].a, pairs[j].a), Poly());
                check(relation_statement("bb", i, j) + " = 0",
                      q.bracket(pairs[i].b, pairs[j].b), Poly());
            }
            Poly expected = i == j ? Poly(Rational(1)) : Poly();
            check(relation_statement("ab", i, j) + (i == j ? " = 1" : " = 0"),
                  q.bracket(pairs[i].a, pairs[j].b), expected);
            if (i != j)
                check(relation_statement("ab", j, i) + " = 0",
                      q.bracket(pairs[j].a, pairs[i].b), Poly());
        }
    }
    return rep;
}

DarbouxSystem::DarbouxSystem(PoissonStructure q, std::vector<DarbouxPair> pairs)
    : q_(std::move(q)), pairs_(std::move(pairs)) {
    report_ = darboux_verify(q_, pairs_);
    for (const auto& p : pairs_) {
        A_.push_back(hamiltonian_field(q_, p.b, FieldSide::left));
        B_.push_back(hamiltonian_field(q_, p.a, FieldSide::right));
    }
}

PoissonStructure reconstruct_bracket(const DarbouxSystem& sys) {
    const auto& alg = sys.algebra();
    PoissonStructure out(alg);
    int n = int(alg->num_generators());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Poly gi = Poly::gen(i), gj = Poly::gen(j);
            Poly acc;
            for (size_t k = 0; k < sys.size(); ++k) {
                acc += sys.A(k)(gi) * sys.B(k)(gj);
                acc -= sys.B(k)(gi) * sys.A(k)(gj);
            }
            out.set(i, j, alg->normal_form(acc));
        }
    }
    return out;
}

} // namespace moyal

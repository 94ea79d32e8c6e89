#include "moyal/star.hpp"

#include <functional>

namespace moyal {

namespace {

long long sz(const Poly& p) { return static_cast<long long>(p.size()); }

} // namespace

Poly moyal_term(const DarbouxSystem& sys, int k, const Poly& f, const Poly& g,
                const StarOptions& opts) {
    if (k < 0) throw ResourceError("moyal_term: negative order");
    if (k > opts.max_order)
        throw ResourceError("moyal_term: order " + std::to_string(k) +
                            " beyond configured maximum " +
                            std::to_string(opts.max_order));
    const auto& alg = sys.algebra();
    if (k == 0) return alg->normal_form(f * g);
    const int n = int(sys.size());
    if (n == 0) return Poly();

    long long budget = opts.term_budget;
    auto spend = [&](long long c) {
        budget -= c;
        if (budget < 0) throw ResourceError("moyal_term: term budget exceeded");
    };

    // E[m] = the inner (B ⊗ A) block applied m times to (f,g).
    using PairList = std::vector<std::pair<Poly, Poly>>;
    std::vector<PairList> E(size_t(k) + 1);
    E[0] = PairList{{f, g}};
    for (int m = 1; m <= k; ++m) {
        for (const auto& [u, v] : E[size_t(m) - 1]) {
            for (int i = 0; i < n; ++i) {
                spend(sz(u) + sz(v));
                E[size_t(m)].emplace_back(sys.B(size_t(i))(u), sys.A(size_t(i))(v));
            }
        }
    }

    Poly total;
    for (int j = 0; j <= k; ++j) {
        PairList S = E[size_t(k - j)];
        for (int step = 0; step < j; ++step) {
            PairList next;
            for (const auto& [u, v] : S) {
                for (int i = 0; i < n; ++i) {
                    spend(sz(u) + sz(v));
                    next.emplace_back(sys.A(size_t(i))(u), sys.B(size_t(i))(v));
                }
            }
            S.swap(next);
        }
        Poly sum_j;
        for (const auto& [u, v] : S) {
            spend(sz(u) * std::max<long long>(sz(v), 1));
            sum_j += u * v;
        }
        Rational c = binomial(unsigned(k), unsigned(j));
        if ((k - j) % 2 != 0) c = -c;
        total += sum_j * c;
    }
    return alg->normal_form(total);
}

StarTruncation star_truncated(const DarbouxSystem& sys, int K, const Poly& f,
                              const Poly& g, const StarOptions& opts) {
    if (K > opts.max_order)
        throw ResourceError("star_truncated: order beyond configured maximum");
    StarTruncation s;
    s.order = K;
    s.coeff.reserve(size_t(K) + 1);
    for (int k = 0; k <= K; ++k)
        s.coeff.push_back(moyal_term(sys, k, f, g, opts) / factorial(unsigned(k)));
    return s;
}

StarTruncation associativity_defect(const DarbouxSystem& sys, int K, const Poly& f,
                                    const Poly& g, const Poly& h,
                                    const StarOptions& opts) {
    const auto& alg = sys.algebra();
    StarTruncation fg = star_truncated(sys, K, f, g, opts);
    StarTruncation gh = star_truncated(sys, K, g, h, opts);
    StarTruncation out;
    out.order = K;
    out.coeff.assign(size_t(K) + 1, Poly());
    for (int c = 0; c <= K; ++c) {
        Poly acc;
        for (int a = 0; a <= c; ++a) {
            int b = c - a;
            Rational inv = Rational(1) / factorial(unsigned(b));
            acc += moyal_term(sys, b, fg.coeff[size_t(a)], h, opts) * inv;
            acc -= moyal_term(sys, b, f, gh.coeff[size_t(a)], opts) * inv;
        }
        out.coeff[size_t(c)] = alg->normal_form(acc);
    }
    return out;
}

namespace {

// f under i applications of A and j of B (the fields commute; B innermost).
Poly apply_blocks(const DarbouxSystem& sys, int i, int j, const Poly& f) {
    Poly v = f;
    for (int s = 0; s < j; ++s) v = sys.B(0)(v);
    for (int s = 0; s < i; ++s) v = sys.A(0)(v);
    return v;
}

} // namespace

bool closed_form_crosscheck(const DarbouxSystem& sys, int k, const Poly& f,
                            const Poly& g, const StarOptions& opts) {
    if (sys.size() != 1)
        throw AlgebraError("closed_form_crosscheck needs a one-pair system");
    const auto& alg = sys.algebra();
    Poly general = moyal_term(sys, k, f, g, opts);
    Poly closed;
    if (k == 0) {
        closed = f * g;
    } else if (k % 2 == 0) {
        int half = k / 2;
        for (int i = 0; i <= half; ++i) {
            int j = half - i;
            Rational c = factorial(unsigned(k)) /
                         (factorial(unsigned(2 * i)) * factorial(unsigned(2 * j)));
            closed += c * (apply_blocks(sys, 2 * i, 2 * j, f) *
                           apply_blocks(sys, 2 * j, 2 * i, g));
        }
        for (int i = 0; i <= half - 1; ++i) {
            int j = half - 1 - i;
            Rational c = factorial(unsigned(k)) / (factorial(unsigned(2 * i + 1)) *
                                                   factorial(unsigned(2 * j + 1)));
            Poly lf = apply_blocks(sys, 2 * i + 1, 2 * j + 1, f);
            Poly rg = apply_blocks(sys, 2 * j + 1, 2 * i + 1, g);
            closed -= c * (lf * rg);
        }
    } else {
        for (int i = 0; i <= k - 1; ++i) {
            int j = k - 1 - i;
            Rational c = factorial(unsigned(k - 1)) /
                         (factorial(unsigned(i)) * factorial(unsigned(j)));
            if (j % 2 != 0) c = -c;
            closed += c * sys.structure().bracket(apply_blocks(sys, i, j, f),
                                                  apply_blocks(sys, j, i, g));
        }
    }
    return alg->equal(general, closed);
}

std::pair<int, int> BidiffOp::bidegree() const {
    int dm = 0, dn = 0;
    for (const auto& [key, c] : terms) {
        int a = 0, b = 0;
        for (int x : key.first) a += x;
        for (int x : key.second) b += x;
        dm = std::max(dm, a);
        dn = std::max(dn, b);
    }
    return {dm, dn};
}

namespace {

Poly formal_partial_multi(const Poly& f, const std::vector<int>& coord_ids,
                          const std::vector<int>& mu) {
    Poly v = f;
    for (size_t j = 0; j < mu.size(); ++j)
        for (int s = 0; s < mu[j]; ++s) v = partial(v, coord_ids[j]);
    return v;
}

} // namespace

Poly BidiffOp::apply(const PresentedAlgebra& alg, const std::vector<int>& coord_ids,
                     const Poly& f, const Poly& g) const {
    Poly acc;
    for (const auto& [key, c] : terms) {
        Poly df = formal_partial_multi(f, coord_ids, key.first);
        if (df.is_zero()) continue;
        Poly dg = formal_partial_multi(g, coord_ids, key.second);
        if (dg.is_zero()) continue;
        acc += c * df * dg;
    }
    return alg.normal_form(acc);
}

DiffOp compose_field(const Derivation& D, const std::vector<Poly>& d_coords,
                     const DiffOp& op) {
    DiffOp out;
    for (const auto& [mu, c] : op.terms) {
        out.add(mu, D(c));
        for (size_t j = 0; j < d_coords.size(); ++j) {
            if (d_coords[j].is_zero()) continue;
            std::vector<int> up = mu;
            up[j] += 1;
            out.add(up, D.algebra()->normal_form(c * d_coords[j]));
        }
    }
    return out;
}

BidiffOp moyal_term_operator(const DarbouxSystem& sys,
                             const std::vector<Poly>& coords, int k,
                             const StarOptions& opts) {
    if (k > opts.max_order)
        throw ResourceError("moyal_term_operator: order beyond configured maximum");
    const int n = int(sys.size());
    const size_t nc = coords.size();

    // Field images on the coordinate elements, cached per field.
    std::vector<std::vector<Poly>> Ac(static_cast<size_t>(n));
    std::vector<std::vector<Poly>> Bc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < nc; ++j) {
            Ac[size_t(i)].push_back(sys.A(size_t(i))(coords[j]));
            Bc[size_t(i)].push_back(sys.B(size_t(i))(coords[j]));
        }
    }

    DiffOp identity;
    identity.add(std::vector<int>(nc, 0), Poly(Rational(1)));

    BidiffOp out;
    for (int j = 0; j <= k; ++j) {
        Rational c = binomial(unsigned(k), unsigned(j));
        if ((k - j) % 2 != 0) c = -c;
        // positions k..1; positions <= j contribute (A to f, B to g), the
        // rest (B to f, A to g); position k is innermost.
        std::function<void(int, const DiffOp&, const DiffOp&)> rec =
            [&](int pos, const DiffOp& fop, const DiffOp& gop) {
                if (pos == 0) {
                    for (const auto& [mu, cf] : fop.terms)
                        for (const auto& [nu, cg] : gop.terms)
                            out.add(mu, nu,
                                    sys.algebra()->normal_form(c * cf * cg));
                    return;
                }
                for (int i = 0; i < n; ++i) {
                    const bool ablock = pos <= j;
                    const Derivation& df = ablock ? sys.A(size_t(i)) : sys.B(size_t(i));
                    const Derivation& dg = ablock ? sys.B(size_t(i)) : sys.A(size_t(i));
                    const auto& dfc = ablock ? Ac[size_t(i)] : Bc[size_t(i)];
                    const auto& dgc = ablock ? Bc[size_t(i)] : Ac[size_t(i)];
                    rec(pos - 1, compose_field(df, dfc, fop),
                        compose_field(dg, dgc, gop));
                }
            };
        rec(k, identity, identity);
    }
    return out;
}

} // namespace moyal

#include "moyal/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

namespace moyal {

Rational coeff_sum_exact(const Poly& p) {
    Rational s(0);
    for (const auto& [m, c] : p.terms()) s += rat_abs(c);
    return s;
}

NormEstimate coeff_norm(const Poly& p, const std::map<int, double>& const_gens,
                        int samples, std::uint64_t seed) {
    NormEstimate est;
    est.seed = seed;
    est.sample_count = samples;

    std::vector<int> free_ids;
    for (const auto& [m, c] : p.terms()) {
        double mag = std::fabs(to_double(c));
        for (const auto& [id, e] : m.exponents()) {
            auto it = const_gens.find(id);
            if (it != const_gens.end()) {
                mag *= std::pow(it->second, to_double(e));
            } else if (std::find(free_ids.begin(), free_ids.end(), id) ==
                       free_ids.end()) {
                free_ids.push_back(id);
            }
        }
        est.coeff_sum += mag;
    }

    if (samples <= 0) return est;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        std::map<int, std::complex<double>> vals;
        double norm2 = 0.0;
        std::vector<std::complex<double>> raw;
        for (size_t i = 0; i < free_ids.size(); ++i) {
            std::complex<double> z(gauss(rng), gauss(rng));
            raw.push_back(z);
            norm2 += std::norm(z);
        }
        double scale = norm2 > 0 ? 1.0 / std::sqrt(norm2) : 0.0;
        for (size_t i = 0; i < free_ids.size(); ++i)
            vals[free_ids[i]] = raw[i] * scale;
        for (const auto& [id, v] : const_gens)
            vals[id] = std::complex<double>(v, 0.0);
        est.sample_max = std::max(est.sample_max, std::abs(eval_complex(p, vals)));
    }
    return est;
}

namespace {

using Multi = std::vector<int>;

int multi_order(const Multi& mu) {
    int o = 0;
    for (int x : mu) o += x;
    return o;
}

DiffOp op_sub(const DiffOp& a, const DiffOp& b) {
    DiffOp d = a;
    for (const auto& [mu, c] : b.terms) d.add(mu, -c);
    return d;
}

bool op_equal_mod(const PresentedAlgebra& alg, const DiffOp& a, const DiffOp& b) {
    DiffOp d = op_sub(a, b);
    for (const auto& [mu, c] : d.terms)
        if (!alg.is_zero_mod(c)) return false;
    return true;
}

Rational order_norm(const DiffOp& op, int order) {
    Rational s(0);
    for (const auto& [mu, c] : op.terms)
        if (multi_order(mu) == order) s += coeff_sum_exact(c);
    return s;
}

DiffOp make_op(const PresentedAlgebra& alg, size_t ncoords,
               const std::vector<std::pair<Multi, Poly>>& entries) {
    DiffOp op;
    for (const auto& [mu, c] : entries) {
        Multi m = mu;
        m.resize(ncoords, 0);
        op.add(m, alg.normal_form(c));
    }
    return op;
}

} // namespace

CheckReport operator_constant_check() {
    CheckReport rep("operator-constant");
    ModelDescriptor cone = build_model("cone");
    const auto& alg = cone.algebra;
    const auto& sys = *cone.darboux;
    std::vector<Poly> coords;
    for (const auto& [n, p] : cone.coordinates) coords.push_back(p);

    std::vector<Poly> Ac, Bc;
    for (const Poly& c : coords) {
        Ac.push_back(sys.A(0)(c));
        Bc.push_back(sys.B(0)(c));
    }
    DiffOp identity;
    identity.add(Multi(coords.size(), 0), Poly(Rational(1)));
    DiffOp opA = compose_field(sys.A(0), Ac, identity);
    DiffOp opB = compose_field(sys.B(0), Bc, identity);
    DiffOp A2 = compose_field(sys.A(0), Ac, opA);
    DiffOp B2 = compose_field(sys.B(0), Bc, opB);
    DiffOp AB = compose_field(sys.A(0), Ac, opB);
    DiffOp BA = compose_field(sys.B(0), Bc, opA);

    rep.add("opconst.commute", cone.name, "AB = BA as composed operators",
            op_equal_mod(*alg, AB, BA));

    Rational nq(0);
    for (const auto& [key, v] : cone.structure.table()) nq += coeff_sum_exact(v);
    Rational nA2 = order_norm(A2, 2), nB2 = order_norm(B2, 2),
             nAB = order_norm(AB, 2);
    rep.add("opconst.q", cone.name, "||q|| = 4 + 2 + 2 = 8", nq == 8,
            to_string(nq));
    rep.add("opconst.AB", cone.name,
            "second-order coefficient norm ||AB|| = 9 exactly", nAB == 9,
            to_string(nAB));
    rep.add("opconst.A2", cone.name, "second-order coefficient norm ||A^2|| <= 9",
            nA2 <= 9, to_string(nA2));
    rep.add("opconst.B2", cone.name, "second-order coefficient norm ||B^2|| <= 9",
            nB2 <= 9, to_string(nB2));
    Rational mx = std::max(std::max(nA2, nB2), std::max(nAB, nq));
    rep.add("opconst.max", cone.name, "max(||AB||,||A^2||,||B^2||,||q||) <= 9",
            mx <= 9, to_string(mx));

    // Printed displays, for the record: both squares drop the 4 s3 d1 d3 /
    // 4 s3 d2 d3 cross terms, AB drops its first-order d3 term, and the B^2
    // display writes s1 d3 where composition gives s1 d3^2.
    Poly s1 = coords[0], s2 = coords[1], s3 = coords[2];
    size_t nc = coords.size();
    DiffOp A2p = make_op(*alg, nc,
                         {{{2, 0, 0}, Rational(4) * s1},
                          {{1, 0, 0}, Poly(Rational(2))},
                          {{0, 0, 2}, s2}});
    DiffOp B2p = make_op(*alg, nc,
                         {{{0, 2, 0}, Rational(4) * s2},
                          {{0, 1, 0}, Poly(Rational(2))},
                          {{0, 0, 2}, s1}});
    DiffOp ABp = make_op(*alg, nc,
                         {{{1, 1, 0}, Rational(4) * s3},
                          {{1, 0, 1}, Rational(2) * s1},
                          {{0, 1, 1}, Rational(2) * s2},
                          {{0, 0, 2}, s3}});
    DiffOp crossA = make_op(*alg, nc, {{{1, 0, 1}, Rational(4) * s3}});
    DiffOp crossB = make_op(*alg, nc, {{{0, 1, 1}, Rational(4) * s3}});
    DiffOp d3 = make_op(*alg, nc, {{{0, 0, 1}, Poly(Rational(1))}});
    rep.add("opconst.display.A2", cone.name,
            "composed A^2 minus the printed display is the cross term "
            "4 s3 d1 d3",
            op_equal_mod(*alg, op_sub(A2, A2p), crossA));
    rep.add("opconst.display.B2", cone.name,
            "composed B^2 minus the printed display (with its last term read "
            "as s1 d3^2) is the cross term 4 s3 d2 d3",
            op_equal_mod(*alg, op_sub(B2, B2p), crossB));
    rep.add("opconst.display.AB", cone.name,
            "composed AB minus the printed display is the first-order term d3",
            op_equal_mod(*alg, op_sub(AB, ABp), d3));
    return rep;
}

Poly truncate_entire(const PresentedAlgebra& cone_alg,
                     const std::array<Rational, 3>& lambda, int M) {
    if (M < 0) throw AlgebraError("truncate_entire: M must be >= 0");
    Poly L = lambda[0] * cone_alg.gen_poly("s1") +
             lambda[1] * cone_alg.gen_poly("s2") +
             lambda[2] * cone_alg.gen_poly("s3");
    L = cone_alg.normal_form(L);
    Poly out(Rational(1)), power(Rational(1));
    for (int m = 1; m <= M; ++m) {
        power = cone_alg.normal_form(power * L) / Rational(m);
        out += power;
    }
    return out;
}

namespace {

std::vector<std::pair<double, double>> degree_norm_parts(const Poly& p) {
    std::map<Rational, double> parts;
    for (const auto& [m, c] : p.terms()) {
        Rational d = m.total_degree();
        if (d < 0)
            throw AlgebraError("degree_norm_parts: negative-degree input");
        parts[d] += std::fabs(to_double(c));
    }
    std::vector<std::pair<double, double>> out;
    for (const auto& [d, n] : parts) out.emplace_back(to_double(d), n);
    return out;
}

double field_kappa(const Derivation& D) {
    double k = 0.0;
    for (const auto& [id, img] : D.images()) k += to_double(coeff_sum_exact(img));
    return k;
}

// Product over l < k of kappa*(m - l/2); zero once the degree is exhausted.
double falling_bound(double m, int k, double kappa) {
    double acc = 1.0;
    for (int l = 0; l < k; ++l) {
        double f = m - 0.5 * double(l);
        if (f <= 0.0) return 0.0;
        acc *= kappa * f;
    }
    return acc;
}

} // namespace

Poly SeriesContext::coefficient(int k) const {
    Poly acc;
    for (int j = 0; j <= k; ++j) {
        Rational c = binomial(unsigned(k), unsigned(j));
        if ((k - j) % 2 != 0) c = -c;
        acc += c * (tf[size_t(j)][size_t(k - j)] * tg[size_t(k - j)][size_t(j)]);
    }
    return model.algebra->normal_form(acc) / factorial(unsigned(k));
}

SeriesContext make_series_context(ModelDescriptor cone, const Poly& f,
                                  const Poly& g, int K, double epsilon) {
    SeriesContext ctx;
    ctx.model = std::move(cone);
    ctx.f = f;
    ctx.g = g;
    ctx.K = K;
    ctx.epsilon = epsilon;
    const auto& alg = ctx.model.algebra;
    Poly fn = alg->normal_form(f);
    Poly gn = alg->normal_form(g);
    ctx.M = int(std::ceil(
        std::max(to_double(fn.degree()), to_double(gn.degree()))));
    ctx.f_parts = degree_norm_parts(fn);
    ctx.g_parts = degree_norm_parts(gn);
    ctx.kappa = std::max(field_kappa(ctx.model.darboux->A(0)),
                         field_kappa(ctx.model.darboux->B(0)));

    const Derivation& A = ctx.model.darboux->A(0);
    const Derivation& B = ctx.model.darboux->B(0);
    auto build = [&](const Poly& base) {
        std::vector<std::vector<Poly>> tab(size_t(K) + 1);
        for (int a = 0; a <= K; ++a) tab[size_t(a)].resize(size_t(K - a) + 1);
        tab[0][0] = base;
        for (int b = 1; b <= K; ++b) tab[0][size_t(b)] = B(tab[0][size_t(b - 1)]);
        for (int a = 1; a <= K; ++a)
            for (int b = 0; b + a <= K; ++b)
                tab[size_t(a)][size_t(b)] = A(tab[size_t(a - 1)][size_t(b)]);
        return tab;
    };
    ctx.tf = build(fn);
    ctx.tg = build(gn);
    return ctx;
}

SeriesPoint series_sum_at(const SeriesContext& ctx, double h, double t,
                          double tol) {
    if (h <= 0.0)
        throw AlgebraError("series_sum: the estimates need |s| > 0");
    const auto& alg = ctx.model.algebra;
    SeriesPoint pt;
    pt.K = ctx.K;
    pt.t = t;
    pt.s_norm = h * std::sqrt(3.0);

    std::map<int, double> vals{{alg->generator("s1"), h},
                               {alg->generator("s2"), h},
                               {alg->generator("s3"), h}};

    // Evaluate every table entry once, then assemble the series terms.
    auto eval_table = [&](const std::vector<std::vector<Poly>>& tab) {
        std::vector<std::vector<double>> v(tab.size());
        for (size_t a = 0; a < tab.size(); ++a) {
            v[a].resize(tab[a].size());
            for (size_t b = 0; b < tab[a].size(); ++b)
                v[a][b] = eval_double(tab[a][b], vals);
        }
        return v;
    };
    std::vector<std::vector<double>> ef = eval_table(ctx.tf);
    std::vector<std::vector<double>> eg = eval_table(ctx.tg);

    std::vector<double> terms(size_t(ctx.K) + 1, 0.0);
    double sum = 0.0, tpow = 1.0, kfac = 1.0;
    for (int k = 0; k <= ctx.K; ++k) {
        if (k > 0) kfac *= double(k);
        double ck = 0.0, binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            double sign = ((k - j) % 2 != 0) ? -1.0 : 1.0;
            ck += sign * binom * ef[size_t(j)][size_t(k - j)] *
                  eg[size_t(k - j)][size_t(j)];
            binom = binom * double(k - j) / double(j + 1);
        }
        double term = tpow * ck / kfac;
        sum += term;
        terms[size_t(k)] = std::fabs(term);
        tpow *= t;
    }
    pt.value = sum;

    std::vector<int> nz;
    for (int k = 1; k <= ctx.K; ++k)
        if (terms[size_t(k)] > 0.0) nz.push_back(k);
    pt.last_term = nz.empty() ? 0.0 : terms[size_t(nz.back())];
    if (nz.size() >= 2) {
        std::vector<double> ratios;
        for (size_t i = 1; i < nz.size(); ++i) {
            double r = terms[size_t(nz[i])] / terms[size_t(nz[i - 1])];
            ratios.push_back(std::pow(r, 1.0 / double(nz[i] - nz[i - 1])));
        }
        size_t window = std::min<size_t>(5, ratios.size());
        pt.emp_ratio = 0.0;
        for (size_t i = ratios.size() - window; i < ratios.size(); ++i)
            pt.emp_ratio = std::max(pt.emp_ratio, ratios[i]);
    }

    double theta = pt.s_norm;
    double at = std::fabs(t);
    pt.geo_ratio = 9.0 * at * std::sqrt(4.0 * ctx.epsilon);

    // Certified tail: the inequality chain instantiated with the computed
    // per-degree norms. Terms vanish once either argument's degrees are
    // exhausted, so the sum is finite.
    double maxdf = 0.0, maxdg = 0.0;
    for (const auto& [d, n] : ctx.f_parts) maxdf = std::max(maxdf, d);
    for (const auto& [d, n] : ctx.g_parts) maxdg = std::max(maxdg, d);
    int kmax = int(std::floor(2.0 * std::min(maxdf, maxdg)));
    double tail = 0.0;
    double tfac = 1.0; // |t|^k / k!
    for (int k = 1; k <= kmax; ++k) {
        tfac *= at / double(k);
        if (k <= ctx.K) continue;
        double inner = 0.0;
        for (const auto& [df, nf] : ctx.f_parts) {
            double bf = falling_bound(df, k, ctx.kappa) * nf;
            if (bf == 0.0) continue;
            for (const auto& [dg, ng] : ctx.g_parts) {
                double bg = falling_bound(dg, k, ctx.kappa) * ng;
                if (bg == 0.0) continue;
                inner += bf * bg * std::pow(theta, df + dg - double(k));
            }
        }
        tail += tfac * std::pow(2.0, double(k)) * inner;
    }
    double trunc = std::pow(ctx.epsilon * theta, double(ctx.M + 1));
    for (int i = 1; i <= ctx.M + 1; ++i) trunc /= double(i);
    tail += 2.0 * trunc;
    pt.tail_bound = tail;

    bool settled = nz.empty() || pt.emp_ratio < 1.0 - kRatioTolerance;
    if (pt.tail_bound < tol && pt.last_term < tol && settled) {
        pt.verdict = Verdict::converged;
    } else if (!nz.empty() && pt.emp_ratio >= 1.0 + kRatioTolerance) {
        pt.verdict = Verdict::growing;
    } else {
        pt.verdict = Verdict::inconclusive;
    }
    return pt;
}

SeriesPoint series_sum(ModelDescriptor cone, const Poly& f, const Poly& g,
                       double h, double t, int K, double tol) {
    SeriesContext ctx = make_series_context(std::move(cone), f, g, K, 1.0);
    return series_sum_at(ctx, h, t, tol);
}

namespace {

std::vector<double> parse_axis(const std::string& s) {
    std::vector<double> out;
    if (s.find(',') != std::string::npos || s.find(':') == std::string::npos) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(std::stod(item));
        }
    } else {
        double lo, hi;
        int count;
        char c1, c2;
        std::stringstream ss(s);
        if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
            count < 1)
            throw AlgebraError("grid axis '" + s + "' is not lo:hi:count");
        if (count == 1) {
            out.push_back(lo);
        } else {
            for (int i = 0; i < count; ++i)
                out.push_back(lo + (hi - lo) * double(i) / double(count - 1));
        }
    }
    if (out.empty()) throw AlgebraError("empty grid axis '" + s + "'");
    return out;
}

} // namespace

GridSpec parse_grid(const std::string& spec) {
    auto x = spec.find('x');
    if (x == std::string::npos)
        throw AlgebraError("grid spec needs the form S x T, got '" + spec + "'");
    GridSpec g;
    g.s_norms = parse_axis(spec.substr(0, x));
    g.t_values = parse_axis(spec.substr(x + 1));
    return g;
}

ConvergenceReport radius_scan(double sigma, const GridSpec& grid, int K, int M,
                              double tol) {
    ConvergenceReport rep;
    rep.sigma = sigma;
    rep.K = K;
    rep.M = M;
    rep.epsilon = sigma;
    rep.tol = tol;
    rep.s_norms = grid.s_norms;
    rep.t_values = grid.t_values;

    // sigma enters exactly through the lambda vectors; keep it rational.
    Rational sig(BigInt(std::llround(sigma * 1e6)), BigInt(1000000));
    rep.lambda_f = {sig / 2, sig / 4, sig / 4};
    rep.lambda_g = {sig / 4, sig / 2, sig / 4};

    ModelDescriptor cone = build_model("cone");
    Poly f = truncate_entire(*cone.algebra, rep.lambda_f, M);
    Poly g = truncate_entire(*cone.algebra, rep.lambda_g, M);
    SeriesContext ctx = make_series_context(std::move(cone), f, g, K, sigma);

    for (double s : grid.s_norms) {
        double h = s / std::sqrt(3.0);
        for (double t : grid.t_values)
            rep.points.push_back(series_sum_at(ctx, h, t, tol));
    }
    rep.monotone_ok = verdicts_monotone(rep.points);
    return rep;
}

bool verdicts_monotone(const std::vector<SeriesPoint>& points) {
    for (const auto& p : points) {
        if (p.verdict != Verdict::converged) continue;
        for (const auto& q : points) {
            if (q.verdict == Verdict::growing && q.s_norm <= p.s_norm + 1e-12 &&
                q.t <= p.t + 1e-12)
                return false;
        }
    }
    return true;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%-12.5g", v);
    return buf;
}

} // namespace

std::string to_text(const ConvergenceReport& rep) {
    std::ostringstream os;
    os << "radius scan: sigma=" << rep.sigma << " K=" << rep.K << " M=" << rep.M
       << " tol=" << rep.tol << "\n";
    os << "|s|          t            S_K          last-term    ratio        "
          "tail-bound   verdict\n";
    for (const auto& p : rep.points) {
        os << fmt6(p.s_norm) << " " << fmt6(p.t) << " " << fmt6(p.value) << " "
           << fmt6(p.last_term) << " " << fmt6(p.emp_ratio) << " "
           << fmt6(p.tail_bound) << " " << verdict_name(p.verdict) << "\n";
    }
    os << "monotone verdicts: " << (rep.monotone_ok ? "yes" : "NO") << "\n";
    return os.str();
}

std::string to_json_string(const ConvergenceReport& rep) {
    nlohmann::json j;
    j["sigma"] = fmt(rep.sigma);
    j["K"] = rep.K;
    j["M"] = rep.M;
    j["epsilon"] = fmt(rep.epsilon);
    j["tol"] = fmt(rep.tol);
    j["monotone_ok"] = rep.monotone_ok;
    auto lam = [](const std::array<Rational, 3>& l) {
        return std::vector<std::string>{to_string(l[0]), to_string(l[1]),
                                        to_string(l[2])};
    };
    j["lambda_f"] = lam(rep.lambda_f);
    j["lambda_g"] = lam(rep.lambda_g);
    j["points"] = nlohmann::json::array();
    for (const auto& p : rep.points) {
        nlohmann::json pj;
        pj["s_norm"] = fmt(p.s_norm);
        pj["t"] = fmt(p.t);
        pj["K"] = p.K;
        pj["partial_sum"] = fmt(p.value);
        pj["last_term"] = fmt(p.last_term);
        pj["ratio"] = fmt(p.emp_ratio);
        pj["geo_ratio"] = fmt(p.geo_ratio);
        pj["tail_bound"] = fmt(p.tail_bound);
        pj["verdict"] = verdict_name(p.verdict);
        j["points"].push_back(pj);
    }
    return j.dump(2) + "\n";
}

namespace {

Poly random_homogeneous(std::mt19937_64& rng, const PresentedAlgebra& alg, int m,
                        int terms) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> split(0, m);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        int a = split(rng);
        int b = split(rng) % (m - a + 1);
        int c = m - a - b;
        Monomial mono;
        if (a) mono.mul(alg.generator("s1"), Rational(a));
        if (b) mono.mul(alg.generator("s2"), Rational(b));
        if (c) mono.mul(alg.generator("s3"), Rational(c));
        int cf = coef(rng);
        if (cf == 0) cf = 1;
        p.add_term(mono, Rational(cf));
    }
    return p;
}

} // namespace

CheckReport norm_lemma_checks(std::uint64_t seed) {
    CheckReport rep("norm-lemmas");
    ModelDescriptor cone = build_model("cone");
    const auto& alg = cone.algebra;
    std::mt19937_64 rng(seed);

    // ||d_i a_m|| <= m ||a_m|| for homogeneous a_m (raw coordinates).
    bool deriv_ok = true;
    for (int m = 1; m <= 12 && deriv_ok; ++m) {
        Poly a = random_homogeneous(rng, *alg, m, 4);
        for (const char* gn : {"s1", "s2", "s3"}) {
            Rational lhs = coeff_sum_exact(partial(a, alg->generator(gn)));
            if (lhs > Rational(m) * coeff_sum_exact(a)) deriv_ok = false;
        }
    }
    rep.add("norms.derivative", cone.name,
            "||d_i a_m|| <= m ||a_m|| on random homogeneous inputs, m <= 12",
            deriv_ok);

    bool sub_ok = true, mul_ok = true;
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<int> dm(0, 4);
        Poly p = random_homogeneous(rng, *alg, dm(rng), 3);
        Poly q = random_homogeneous(rng, *alg, dm(rng), 3);
        if (coeff_sum_exact(p + q) > coeff_sum_exact(p) + coeff_sum_exact(q))
            sub_ok = false;
        if (coeff_sum_exact(p * q) > coeff_sum_exact(p) * coeff_sum_exact(q))
            mul_ok = false;
    }
    rep.add("norms.subadditive", cone.name,
            "coeff norm subadditive on 100 random pairs", sub_ok);
    rep.add("norms.submultiplicative", cone.name,
            "coeff norm submultiplicative on 100 random pairs", mul_ok);

    // Q_k(a_m, b_n) = 0 whenever k/2 > min(m,n).
    bool vanish_ok = true;
    StarOptions opts;
    opts.max_order = 26;
    std::vector<std::pair<int, int>> degree_pairs{{1, 3}, {2, 2}, {3, 5},
                                                  {4, 4}, {6, 9}, {12, 12}};
    for (auto [m, n] : degree_pairs) {
        Poly a = random_homogeneous(rng, *alg, m, 3);
        Poly b = random_homogeneous(rng, *alg, n, 3);
        int kmin = 2 * std::min(m, n) + 1;
        for (int k = kmin; k <= kmin + 1; ++k) {
            Poly v = moyal_term(*cone.darboux, k, a, b, opts);
            if (!v.is_zero()) vanish_ok = false;
        }
    }
    rep.add("norms.vanishing", cone.name,
            "Q_k(a_m, b_n) = 0 whenever k/2 > min(m,n), m,n <= 12", vanish_ok);

    // Truncated exponentials: the m-th part's norm is exactly eps^m/m!
    // (all-positive lambda), within the printed growth bound a fortiori.
    std::array<Rational, 3> lam{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    Poly f = truncate_entire(*alg, lam, 24);
    Rational eps = lam[0] + lam[1] + lam[2];
    bool growth_ok = true;
    for (int m = 0; m <= 24; ++m) {
        Rational nm = coeff_sum_exact(f.homogeneous_part(Rational(m)));
        Rational expect = pow_int(eps, m) / factorial(unsigned(m));
        if (nm != expect) growth_ok = false;
        if (nm > pow_int(eps, m) * factorial(unsigned(m))) growth_ok = false;
    }
    rep.add("norms.growth", cone.name,
            "truncated exponential parts have norm exactly eps^m/m!, m <= 24",
            growth_ok);

    // Sphere samples stay below the coefficient-sum bound.
    bool sample_ok = true;
    for (int i = 0; i < 5; ++i) {
        std::uniform_int_distribution<int> dm(0, 5);
        Poly p = random_homogeneous(rng, *alg, dm(rng), 4);
        NormEstimate est = coeff_norm(p, {}, 2000, seed + unsigned(i));
        if (est.sample_max > est.coeff_sum + 1e-9) sample_ok = false;
    }
    rep.add("norms.sample", cone.name,
            "Monte-Carlo sphere samples stay below the coefficient-sum bound",
            sample_ok);
    return rep;
}

} // namespace moyal

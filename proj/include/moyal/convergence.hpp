#pragma once

#include <array>

#include "moyal/models.hpp"

namespace moyal {

inline constexpr double kRatioTolerance = 1e-9;

/// Two-sided bracket for a sup-norm on the unit sphere: the coefficient sum
/// bounds it from above, a seeded Monte-Carlo sample from below.
struct NormEstimate {
    double coeff_sum = 0.0;
    double sample_max = 0.0;
    int sample_count = 0;
    std::uint64_t seed = 0;
};

/// Sum of |coefficients|; exact, defined for any element.
Rational coeff_sum_exact(const Poly& p);

/// coeff_sum with constant-valued generators (the surd r -> sqrt(2)) folded
/// into the coefficients, plus a Monte-Carlo lower bound on the complex unit
/// sphere of the remaining generators.
NormEstimate coeff_norm(const Poly& p,
                        const std::map<int, double>& const_gens = {},
                        int samples = 10000, std::uint64_t seed = 20240901);

/// Composition checks for the cone operators: second-order coefficient norms
/// of A^2, B^2, AB and the table norm of q, all <= 9 with ||AB|| = 9 exactly,
/// plus the reproduced discrepancies against the printed displays.
CheckReport operator_constant_check();

/// Degree-M Taylor truncation of exp(<lambda, s>) in the cone algebra.
Poly truncate_entire(const PresentedAlgebra& cone_alg,
                     const std::array<Rational, 3>& lambda, int M);

enum class Verdict { converged, inconclusive, growing };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::converged: return "converged";
        case Verdict::growing: return "growing";
        default: return "inconclusive";
    }
}

struct SeriesPoint {
    double s_norm = 0.0;
    double t = 0.0;
    double value = 0.0;      // partial sum S_K at the point
    double last_term = 0.0;  // |t^K c_K(s)| of the last nonzero order
    double emp_ratio = 0.0;  // stabilized term ratio; 0 when the tail is zero
    double geo_ratio = 0.0;  // 9|t| |s|^{-1/2} (4 eps |s|)^{1/2}
    double tail_bound = 0.0; // certified bound on the dropped tail
    int K = 0;
    Verdict verdict = Verdict::inconclusive;
};

/// Precomputed data of a fixed cone pair (f,g), reusable across grid points:
/// the exact tables A^a B^b (f), B^a A^b-style blocks feeding
///   Q_k(f,g) = sum_j (-1)^{k-j} C(k,j) [A^j B^{k-j} f][B^j A^{k-j} g],
/// plus the per-degree norms the tail certificate needs.
struct SeriesContext {
    ModelDescriptor model;
    Poly f, g;
    int K = 0;
    int M = 0;              // degree cap (ceiling) of the inputs
    double epsilon = 0.0;   // exponential-type parameter of the certificate
    double kappa = 0.0;     // field application constant (3 for the cone)
    // tf[a][b] = A^a B^b (f) for a+b <= K; same for g.
    std::vector<std::vector<Poly>> tf, tg;
    // (degree, coeff norm) per homogeneous part; degrees may be half-integers.
    std::vector<std::pair<double, double>> f_parts, g_parts;

    /// Exact series coefficient c_k = Q_k(f,g)/k! assembled from the tables.
    Poly coefficient(int k) const;
};

SeriesContext make_series_context(ModelDescriptor cone, const Poly& f,
                                  const Poly& g, int K, double epsilon);

/// Evaluate the truncated star series at s1 = s2 = h on the branch
/// (so |s| = h*sqrt(3)) and deformation value t; tol gates the verdict.
SeriesPoint series_sum_at(const SeriesContext& ctx, double h, double t,
                          double tol);

/// One-call form used by tests: builds the context, evaluates one point.
SeriesPoint series_sum(ModelDescriptor cone, const Poly& f, const Poly& g,
                       double h, double t, int K, double tol);

struct GridSpec {
    std::vector<double> s_norms;
    std::vector<double> t_values;
};

/// "lo:hi:count x lo:hi:count" (inclusive linspace) or comma lists on either
/// side, e.g. "0.05:0.2:4x0.025,0.05,0.1".
GridSpec parse_grid(const std::string& spec);

struct ConvergenceReport {
    double sigma = 0.0;
    int K = 0;
    int M = 0;
    double epsilon = 0.0;
    double tol = 0.0;
    std::array<Rational, 3> lambda_f, lambda_g;
    std::vector<double> s_norms, t_values;
    std::vector<SeriesPoint> points; // row-major over (s_norms, t_values)
    bool monotone_ok = true;
};

/// Truncated-exponential inputs of type sigma on a grid of (|s|, |t|) points.
ConvergenceReport radius_scan(double sigma, const GridSpec& grid, int K,
                              int M = 24, double tol = 1e-6);

/// Growing never strictly inside a converged point's rectangle.
bool verdicts_monotone(const std::vector<SeriesPoint>& points);

std::string to_text(const ConvergenceReport& rep);
std::string to_json_string(const ConvergenceReport& rep);

/// Randomized norm-lemma checks: derivative norm, coeff-norm subadditivity
/// and submultiplicativity, the Q_k vanishing rule, and the growth bound of
/// the truncated exponentials.
CheckReport norm_lemma_checks(std::uint64_t seed);

} // namespace moyal

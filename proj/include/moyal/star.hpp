#pragma once

#include "moyal/derivation.hpp"

namespace moyal {

struct ResourceError : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct StarOptions {
    int max_order = 8;
    long long term_budget = 10'000'000; // monomial operations per Q_k call
};

/// k-th Grönewold–Moyal term for the system's commuting fields:
///   Q_k(f,g) = sum_{j=0}^k (−1)^{k−j} C(k,j)
///              sum_{i_1..i_k} [A-block_j B-block_{k−j}](f)·[B-block_j A-block_{k−j}](g),
/// normalized so that Q_0(f,g) = fg and Q_1 = q. Bilinear, and
/// Q_k(f,g) = (−1)^k Q_k(g,f).
Poly moyal_term(const DarbouxSystem& sys, int k, const Poly& f, const Poly& g,
                const StarOptions& opts = {});

/// Truncated star series: coefficients c_k = Q_k(f,g)/k!, so that
/// (f ∗ g)(t) = sum t^k c_k through order K.
struct StarTruncation {
    int order = 0;
    std::vector<Poly> coeff; // size order+1, c_k already divided by k!

    bool all_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
};

StarTruncation star_truncated(const DarbouxSystem& sys, int K, const Poly& f,
                              const Poly& g, const StarOptions& opts = {});

/// t-coefficients of (f∗g)∗h − f∗(g∗h) through order K; all-zero certifies
/// associativity to that order.
StarTruncation associativity_defect(const DarbouxSystem& sys, int K, const Poly& f,
                                    const Poly& g, const Poly& h,
                                    const StarOptions& opts = {});

/// For one-pair systems, checks moyal_term against the independent closed
/// forms: the even-k regrouped sum over A^{2i}B^{2j} blocks and the odd-k
/// bracket form sum_{i+j=k-1} (−1)^j (k−1)!/(i!j!) q(A^iB^j f, A^jB^i g).
bool closed_form_crosscheck(const DarbouxSystem& sys, int k, const Poly& f,
                            const Poly& g, const StarOptions& opts = {});

/// Differential operator with polynomial coefficients over a fixed coordinate
/// list: sum_mu c_mu ∂^mu, mu a multi-index over the coordinates.
struct DiffOp {
    std::map<std::vector<int>, Poly> terms;

    void add(const std::vector<int>& mu, const Poly& c) {
        if (c.is_zero()) return;
        auto it = terms.find(mu);
        if (it == terms.end()) {
            terms.emplace(mu, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

/// Bidifferential operator: sum_{mu,nu} C_{mu,nu} ∂^mu ⊗ ∂^nu.
struct BidiffOp {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Poly> terms;

    void add(const std::vector<int>& mu, const std::vector<int>& nu,
             const Poly& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(mu, nu);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    // Max derivative order in each slot.
    std::pair<int, int> bidegree() const;

    // Apply to concrete arguments given as raw polynomials in the coordinate
    // generators (formal partials taken before any reduction).
    Poly apply(const PresentedAlgebra& alg, const std::vector<int>& coord_ids,
               const Poly& f, const Poly& g) const;
};

/// D acting after `op` on functions of the given coordinates:
/// D∘(c∂^mu) = D(c)∂^mu + c·sum_j D(x_j) ∂^{mu+e_j}.
/// `d_coords[j]` must be D applied to the j-th coordinate element.
DiffOp compose_field(const Derivation& D, const std::vector<Poly>& d_coords,
                     const DiffOp& op);

/// Q_k extracted as a bidifferential operator over the coordinate elements
/// (valid on polynomials in those coordinates). Coefficients are normalized.
BidiffOp moyal_term_operator(const DarbouxSystem& sys,
                             const std::vector<Poly>& coords, int k,
                             const StarOptions& opts = {});

} // namespace moyal

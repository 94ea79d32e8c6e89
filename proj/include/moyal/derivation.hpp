#pragma once

#include <optional>
#include <utility>

#include "moyal/algebra.hpp"

namespace moyal {

/// Derivation of a presented algebra, given by its images on generators and
/// extended by Leibniz plus the power rule: D(g^a) = a·g^{a-1}·D(g) for any
/// rational a, which is the unique extension to the radical lattice.
class Derivation {
public:
    Derivation(AlgebraPtr alg, std::map<int, Poly> images)
        : alg_(std::move(alg)), images_(std::move(images)) {
        for (auto it = images_.begin(); it != images_.end();)
            it = it->second.is_zero() ? images_.erase(it) : std::next(it);
    }

    static Derivation zero(AlgebraPtr alg) { return Derivation(std::move(alg), {}); }

    const AlgebraPtr& algebra() const { return alg_; }
    Poly image(int id) const {
        auto it = images_.find(id);
        return it == images_.end() ? Poly() : it->second;
    }
    const std::map<int, Poly>& images() const { return images_; }
    bool is_zero() const { return images_.empty(); }

    /// Apply to an element; the result is normalized.
    Poly operator()(const Poly& f) const;

    /// Raw Leibniz application without the final normal form. Used where the
    /// unreduced value matters (tangency of fields to a relation).
    Poly apply_raw(const Poly& f) const;

private:
    AlgebraPtr alg_;
    std::map<int, Poly> images_;
};

/// Antisymmetric structure table on generator pairs, extended to all elements
/// as a biderivation through formal partials:
///   q(f,g) = sum_{i<j} T_ij (∂_i f ∂_j g − ∂_j f ∂_i g).
class PoissonStructure {
public:
    explicit PoissonStructure(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const AlgebraPtr& algebra() const { return alg_; }

    void set(int i, int j, const Poly& value);
    void set(const std::string& gi, const std::string& gj, const Poly& value) {
        set(alg_->generator(gi), alg_->generator(gj), value);
    }
    Poly entry(int i, int j) const; // antisymmetric lookup
    const std::map<std::pair<int, int>, Poly>& table() const { return table_; }

    Poly bracket(const Poly& f, const Poly& g) const;

private:
    AlgebraPtr alg_;
    std::map<std::pair<int, int>, Poly> table_; // keys i < j only
};

inline Poly bracket_eval(const PoissonStructure& q, const Poly& f, const Poly& g) {
    return q.bracket(f, g);
}

/// Cyclic sum q(q(f,g),h) + q(q(g,h),f) + q(q(h,f),g), normalized; zero
/// certifies the Jacobi identity on the triple.
Poly jacobi_defect(const PoissonStructure& q, const Poly& f, const Poly& g,
                   const Poly& h);

enum class FieldSide { left, right };

/// left:  images[g] = q(g, a)   (the field q(·,a))
/// right: images[g] = q(a, g)   (the field q(a,·))
Derivation hamiltonian_field(const PoissonStructure& q, const Poly& a,
                             FieldSide side);

/// D1(D2(f)) − D2(D1(f)), normalized.
Poly commutator_defect(const Derivation& d1, const Derivation& d2, const Poly& f);

struct DarbouxPair {
    Poly a;
    Poly b;
};

struct DarbouxRelation {
    std::string statement; // e.g. "q(a1,b1) = 1"
    bool pass = false;
    std::string witness; // normal form actually obtained
};

struct DarbouxReport {
    std::vector<DarbouxRelation> relations;
    bool all_pass() const {
        for (const auto& r : relations)
            if (!r.pass) return false;
        return true;
    }
};

/// Checks every canonical relation q(a_i,a_j) = q(b_i,b_j) = 0,
/// q(a_i,b_j) = δ_ij; failures are data, not errors.
DarbouxReport darboux_verify(const PoissonStructure& q,
                             const std::vector<DarbouxPair>& pairs);

/// Verified pairs with the induced fields A_k = q(·,b_k), B_k = q(a_k,·)
/// cached at construction.
class DarbouxSystem {
public:
    DarbouxSystem(PoissonStructure q, std::vector<DarbouxPair> pairs);

    const PoissonStructure& structure() const { return q_; }
    const AlgebraPtr& algebra() const { return q_.algebra(); }
    size_t size() const { return pairs_.size(); }
    const std::vector<DarbouxPair>& pairs() const { return pairs_; }
    const Derivation& A(size_t k) const { return A_.at(k); }
    const Derivation& B(size_t k) const { return B_.at(k); }
    const DarbouxReport& report() const { return report_; }

private:
    PoissonStructure q_;
    std::vector<DarbouxPair> pairs_;
    std::vector<Derivation> A_, B_;
    DarbouxReport report_;
};

/// Eq.-1 style wedge sum: table'(g,h) = sum_k A_k(g)B_k(h) − B_k(g)A_k(h)
/// on generator pairs.
PoissonStructure reconstruct_bracket(const DarbouxSystem& sys);

} // namespace moyal

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "wres/polynomial.hpp"

namespace wres {

/// A reduced Groebner basis together with the order it was computed under.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> polys; // reduced, monic, sorted ascending by lead
};

/// Finitely generated ideal. The generator list is fixed at construction;
/// a degrevlex Groebner basis is computed at most once and then shared by
/// all copies, so values stay safe for concurrent reads.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool has_cached_basis() const;
    /// Reduced basis under the given order; computed once per order, then shared.
    const GroebnerBasis& basis(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

    bool is_zero_ideal() const;

    std::string to_string() const; // "(x^2 - y^3, x)"

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::vector<std::unique_ptr<GroebnerBasis>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Reduced Groebner basis computation (Buchberger with the product and
/// chain pair-elimination criteria). `jet` >= 0 works modulo all monomials
/// of total degree > jet, i.e. in the quotient by m^(jet+1) at the origin.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const MonomialOrder& ord, long jet = -1);

/// Remainder of f on division by the basis; deterministic reducer choice.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis, long jet = -1);

/// Returns a copy of I carrying a reduced basis for the given order.
Ideal groebner(const Ideal& I, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// Remainder of f modulo I's cached basis; requires the basis to be present.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, long k);

/// True iff 1 lies in I (empty vanishing locus over the algebraic closure).
bool is_trivial(const Ideal& I);

bool ideal_contains(const Ideal& I, const Ideal& J); // J subseteq I
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Generators replaced by the reduced degrevlex basis (canonical form).
Ideal minimalize(const Ideal& I);

/// Reduced basis of I + m^(jet+1); elements of degree <= jet only.
std::vector<Polynomial> jet_basis(const Ideal& I, long jet);
/// Membership of f in I + m^(jet+1).
bool jet_contains(const std::vector<Polynomial>& jbasis, const Polynomial& f, long jet);

Rat evaluate(const Polynomial& f, const std::vector<Rat>& point);
/// Least total degree of the Taylor expansion of f at p; nullopt iff f = 0.
std::optional<long> vanishing_order_at(const Polynomial& f, const std::vector<Rat>& point);

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      long truncate_deg = -1);
Ideal substitute(const Ideal& I, const std::vector<Polynomial>& images,
                 long truncate_deg = -1);

} // namespace wres

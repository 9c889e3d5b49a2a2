#include "wres/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    if (gens_.empty()) gens_.push_back(Polynomial::zero(ring_));
    for (auto& g : gens_)
        if (!same_ring(g.ring(), ring_)) throw Error("generator ring mismatch");
}

Ideal Ideal::zero(RingPtr ring) {
    return Ideal(ring, {Polynomial::zero(ring)});
}

Ideal Ideal::unit(RingPtr ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
}

bool Ideal::has_cached_basis() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return !cache_->bases.empty();
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    for (auto& b : cache_->bases)
        if (b->order == ord) return *b;
    cache_->bases.push_back(std::make_unique<GroebnerBasis>(buchberger(ring_, gens_, ord)));
    return *cache_->bases.back();
}

bool Ideal::is_zero_ideal() const {
    for (auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& g : gens_) {
        if (!first) os << ", ";
        os << g.to_string();
        first = false;
    }
    os << ")";
    return os.str();
}

Ideal groebner(const Ideal& I, const MonomialOrder& ord) {
    I.basis(ord);
    return I;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
    if (!I.has_cached_basis()) throw Error("normal_form: ideal has no cached basis");
    return reduce(f, I.basis());
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = I.generators();
    for (auto& g : J.generators()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (auto& a : I.generators())
        for (auto& b : J.generators()) {
            Polynomial p = a * b;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, long k) {
    if (k < 0) throw Error("ideal_power: negative exponent");
    Ideal r = Ideal::unit(I.ring());
    for (long i = 0; i < k; ++i) r = minimalize(ideal_product(r, I));
    return r;
}

bool is_trivial(const Ideal& I) {
    const auto& b = I.basis();
    return b.polys.size() == 1 && b.polys[0].is_constant() && !b.polys[0].is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    const auto& b = I.basis();
    for (auto& g : J.generators())
        if (!reduce(g, b).is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

Ideal minimalize(const Ideal& I) {
    const auto& b = I.basis();
    if (b.polys.empty()) return Ideal::zero(I.ring());
    Ideal J(I.ring(), b.polys);
    return J;
}

Rat evaluate(const Polynomial& f, const std::vector<Rat>& point) {
    return f.evaluate(point);
}

std::optional<long> vanishing_order_at(const Polynomial& f, const std::vector<Rat>& point) {
    if (f.is_zero()) return std::nullopt;
    if (point.size() != f.ring()->size()) throw Error("point dimension mismatch");
    bool origin = true;
    for (auto& c : point)
        if (c != 0) origin = false;
    if (origin) return f.min_degree();
    std::vector<Polynomial> shift;
    for (size_t i = 0; i < point.size(); ++i)
        shift.push_back(Polynomial::variable(f.ring(), i) + Polynomial::constant(f.ring(), point[i]));
    return f.substitute(shift).min_degree();
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      long truncate_deg) {
    return f.substitute(images, truncate_deg);
}

Ideal substitute(const Ideal& I, const std::vector<Polynomial>& images, long truncate_deg) {
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) gens.push_back(g.substitute(images, truncate_deg));
    RingPtr target = images.empty() ? I.ring() : images[0].ring();
    return Ideal(target, std::move(gens));
}

} // namespace wres

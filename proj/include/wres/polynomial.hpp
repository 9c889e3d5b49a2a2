#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/monomial.hpp"
#include "wres/rat.hpp"
#include "wres/ring.hpp"

namespace wres {

struct Term {
    Monomial m;
    Rat c;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted descending under degrevlex, with no zero
/// coefficients and no duplicate monomials, so equal polynomials have
/// identical representations.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial variable(RingPtr ring, size_t idx);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rat& c);
    /// Normalizes an arbitrary term list (merges duplicates, drops zeros).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    /// Largest term under degrevlex (representation order).
    const Term& lead() const { return terms_.front(); }
    /// Largest term under an arbitrary order.
    const Term& lead(const MonomialOrder& ord) const;

    long total_degree() const; // -1 for the zero polynomial
    /// Least total degree of a term; nullopt for zero (order at the origin).
    std::optional<long> min_degree() const;

    Rat constant_term() const;
    /// Coefficients of the degree-1 homogeneous part.
    std::vector<Rat> linear_coefficients() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(long k) const;

    /// d/dx_i, or x_i * d/dx_i when logarithmic.
    Polynomial derivative(size_t var, bool logarithmic = false) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    /// Ring homomorphism: variable i maps to images[i]. All images must live
    /// in one common ring, which becomes the result's ring. A nonnegative
    /// `truncate_deg` drops result terms of higher total degree.
    Polynomial substitute(const std::vector<Polynomial>& images, long truncate_deg = -1) const;

    /// Drops terms of total degree > deg.
    Polynomial truncate(long deg) const;

    /// Divides by the (degrevlex) leading coefficient.
    Polynomial monic() const;

    /// True when every term is divisible by x_var^k.
    bool divisible_by_var_power(size_t var, uint32_t k) const;
    Polynomial divide_by_var_power(size_t var, uint32_t k) const;
    /// Smallest exponent of x_var over all terms (0 for the zero polynomial).
    uint32_t var_order(size_t var) const;

    /// Canonical text form, e.g. "2*x^2*y - 3/5*z". Terms print in
    /// descending lex order over the ring's variable list.
    std::string to_string() const;

    /// Total order on polynomials of one ring, for deterministic sorting.
    static int compare(const Polynomial& a, const Polynomial& b);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

} // namespace wres

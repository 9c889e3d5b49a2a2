#include "wres/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wres {

namespace {
const MonomialOrder kRepr = MonomialOrder::degrevlex();

struct ReprGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return kRepr.compare(a, b) > 0;
    }
};
} // namespace

bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t idx) {
    Monomial m(ring->size());
    m.e[idx] = 1;
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rat& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kRepr.compare(a.m, b.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

const Term& Polynomial::lead(const MonomialOrder& ord) const {
    if (ord == kRepr) return terms_.front();
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i].m, terms_[best].m) > 0) best = i;
    return terms_[best];
}

long Polynomial::total_degree() const {
    long d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

std::optional<long> Polynomial::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = terms_[0].m.degree();
    for (auto& t : terms_) d = std::min(d, t.m.degree());
    return d;
}

Rat Polynomial::constant_term() const {
    for (auto& t : terms_)
        if (t.m.is_one()) return t.c;
    return Rat(0);
}

std::vector<Rat> Polynomial::linear_coefficients() const {
    std::vector<Rat> lin(ring_->size(), Rat(0));
    for (auto& t : terms_) {
        if (t.m.degree() != 1) continue;
        for (size_t i = 0; i < lin.size(); ++i)
            if (t.m.e[i] == 1) lin[i] = t.c;
    }
    return lin;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kRepr.compare(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::map<Monomial, Rat, ReprGreater> acc;
    for (auto& a : terms_)
        for (auto& b : o.terms_) acc[a.m * b.m] += a.c * b.c;
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::pow(long k) const {
    if (k < 0) throw Error("negative polynomial power");
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(size_t var, bool logarithmic) const {
    Polynomial r(ring_);
    for (auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d = t;
        d.c *= Rat(static_cast<long>(t.m.e[var]));
        if (!logarithmic) d.m.e[var] -= 1;
        r.terms_.push_back(std::move(d));
    }
    // term order is preserved by d/dx_i only up to ties; re-sort to be safe
    r.normalize();
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != ring_->size()) throw Error("point dimension mismatch");
    Rat sum = 0;
    for (auto& t : terms_) {
        Rat v = t.c;
        for (size_t i = 0; i < point.size(); ++i) {
            for (uint32_t k = 0; k < t.m.e[i]; ++k) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, long truncate_deg) const {
    if (images.size() != ring_->size()) throw Error("substitution map incomplete");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    Polynomial result = zero(target);
    // progressive powers per variable, cached across terms
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](size_t var, uint32_t k) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (cache.size() <= k) {
            Polynomial next = cache.back() * images[var];
            if (truncate_deg >= 0) next = next.truncate(truncate_deg);
            cache.push_back(std::move(next));
        }
        return cache[k];
    };
    for (auto& t : terms_) {
        Polynomial term = constant(target, t.c);
        for (size_t i = 0; i < images.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            term = term * power(i, t.m.e[i]);
            if (truncate_deg >= 0) term = term.truncate(truncate_deg);
        }
        result = result + term;
    }
    if (truncate_deg >= 0) result = result.truncate(truncate_deg);
    return result;
}

Polynomial Polynomial::truncate(long deg) const {
    Polynomial r(ring_);
    for (auto& t : terms_)
        if (t.m.degree() <= deg) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rat inv = Rat(1) / lead().c;
    return *this * inv;
}

bool Polynomial::divisible_by_var_power(size_t var, uint32_t k) const {
    for (auto& t : terms_)
        if (t.m.e[var] < k) return false;
    return true;
}

Polynomial Polynomial::divide_by_var_power(size_t var, uint32_t k) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) {
        if (t.m.e[var] < k) throw Error("not divisible by variable power");
        t.m.e[var] -= k;
    }
    r.normalize();
    return r;
}

uint32_t Polynomial::var_order(size_t var) const {
    uint32_t v = 0;
    bool first = true;
    for (auto& t : terms_) {
        if (first || t.m.e[var] < v) v = t.m.e[var];
        first = false;
    }
    return v;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) ts.push_back(&t);
    MonomialOrder lex = MonomialOrder::lex();
    std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
        return lex.compare(a->m, b->m) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : ts) {
        Rat c = t->c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1) && !t->m.is_one();
        if (!unit_coeff) os << wres::to_string(c);
        bool printed = !unit_coeff;
        for (size_t i = 0; i < t->m.e.size(); ++i) {
            if (t->m.e[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t->m.e[i] > 1) os << "^" << t->m.e[i];
            printed = true;
        }
    }
    return os.str();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (int c = kRepr.compare(a.terms_[i].m, b.terms_[i].m)) return c;
        if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

} // namespace wres

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wres/rat.hpp"

namespace wres {

/// Ordered list of variable names. Every Polynomial holds a pointer to the
/// ring it lives in; rings compare by variable-list content.
struct Ring {
    std::vector<std::string> vars;

    size_t size() const { return vars.size(); }

    long index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<long>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(Ring{std::move(vars)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || a->vars == b->vars;
}

} // namespace wres

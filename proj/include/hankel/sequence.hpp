#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"

namespace hankel {

// Finite prefix of an infinite sequence, indexed from 0. Operations that
// need more terms than are present must signal rather than extrapolate.
struct Seq {
    std::vector<Rat> values;
    std::string label;

    Seq() = default;
    explicit Seq(std::vector<Rat> v, std::string lab = {})
        : values(std::move(v)), label(std::move(lab)) {}

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    const Rat& operator[](std::size_t i) const { return values[i]; }
    Rat& operator[](std::size_t i) { return values[i]; }

    // Throws unless at least `count` prefix terms are known.
    void need(std::size_t count) const {
        if (values.size() < count)
            throw InsufficientPrefix(label.empty()
                ? "sequence has " + std::to_string(values.size()) +
                      " terms, needs " + std::to_string(count)
                : "'" + label + "' has " + std::to_string(values.size()) +
                      " terms, needs " + std::to_string(count));
    }
};

inline bool same_values(const Seq& a, const Seq& b) {
    return a.values == b.values;
}

// (s_k, s_{k+1}, ...); length decreases by k.
inline Seq shift(const Seq& s, std::size_t k) {
    s.need(k);
    Seq out;
    out.values.assign(s.values.begin() + static_cast<std::ptrdiff_t>(k),
                      s.values.end());
    out.label = s.label.empty() ? "" : s.label + ">>" + std::to_string(k);
    return out;
}

} // namespace hankel

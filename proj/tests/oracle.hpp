#pragma once

// Test-only helpers: an independent sign-tracking oracle for tensor-factor
// application, and a small deterministic generator for random elements.
// The oracle walks the operation across the prefix one factor at a time,
// flipping the sign per odd-degree transposition, instead of computing the
// (-1)^{pq} exponent in one step.

#include <random>
#include <vector>

#include "ainf/operation.hpp"
#include "ainf/polygon.hpp"

namespace ainf::testing {

inline Tensor apply_at_oracle(const GradedOperation& f, std::size_t pos,
                              const TensorWord& w) {
    int sign = 1;
    for (std::size_t i = 0; i < pos; ++i)
        if (f.degree % 2 != 0 && w.factors[i].dim % 2 != 0) sign = -sign;
    Tensor out;
    for (const auto& [u, k] : f.at(w.factors[pos]).terms()) {
        TensorWord nw;
        nw.factors.insert(nw.factors.end(), w.factors.begin(),
                          w.factors.begin() + static_cast<long>(pos));
        nw.factors.insert(nw.factors.end(), u.factors.begin(), u.factors.end());
        nw.factors.insert(nw.factors.end(),
                          w.factors.begin() + static_cast<long>(pos) + 1,
                          w.factors.end());
        out.add(std::move(nw), k * Integer(sign));
    }
    return out;
}

// All words of the given length over the complex's cells.
inline std::vector<TensorWord> all_words(const PolygonComplex& poly, int length) {
    std::vector<TensorWord> words{TensorWord{}};
    for (int i = 0; i < length; ++i) {
        std::vector<TensorWord> next;
        next.reserve(words.size() * poly.cells().size());
        for (const TensorWord& w : words)
            for (const Cell& c : poly.cells()) {
                TensorWord nw = w;
                nw.factors.push_back(c);
                next.push_back(std::move(nw));
            }
        words = std::move(next);
    }
    return words;
}

inline Tensor random_tensor(const PolygonComplex& poly, std::mt19937& rng) {
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> terms_dist(1, 5);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<std::size_t> cell_dist(0, poly.cells().size() - 1);
    const int length = len_dist(rng);
    Tensor out;
    for (int term = terms_dist(rng); term > 0; --term) {
        TensorWord w;
        for (int i = 0; i < length; ++i) w.factors.push_back(poly.cells()[cell_dist(rng)]);
        out.add(std::move(w), Integer(coeff_dist(rng)));
    }
    return out;
}

}  // namespace ainf::testing

#include "ainf/operation.hpp"

#include <stdexcept>

namespace ainf {

namespace {
const Tensor kZeroTensor{};

bool odd(int x) { return (x % 2) != 0; }
}  // namespace

GradedOperation GradedOperation::zero(int degree, int arity) {
    return GradedOperation{degree, arity, {}};
}

const Tensor& GradedOperation::at(const Cell& c) const {
    auto it = values.find(c);
    return it == values.end() ? kZeroTensor : it->second;
}

void GradedOperation::set(const Cell& c, Tensor value) {
    if (value.is_zero()) {
        values.erase(c);
        return;
    }
    for (const auto& [w, k] : value.terms()) {
        if (static_cast<int>(w.size()) != arity)
            throw std::logic_error("operation value has wrong arity at " + label(c));
        if (w.degree() != c.dim + degree)
            throw std::logic_error("operation value is not homogeneous at " + label(c));
    }
    values[c] = std::move(value);
}

Tensor GradedOperation::apply(const Chain& c) const {
    Tensor out;
    for (const auto& [cell, k] : c.terms()) out.add_scaled(at(cell), k);
    return out;
}

Tensor apply_at(const GradedOperation& f, std::size_t pos, const TensorWord& w) {
    if (pos >= w.size()) throw std::out_of_range("apply_at position out of range");
    const Tensor& image = f.at(w.factors[pos]);
    Tensor out;
    if (image.is_zero()) return out;
    int prefix_degree = 0;
    for (std::size_t i = 0; i < pos; ++i) prefix_degree += w.factors[i].dim;
    const bool negate = odd(f.degree) && odd(prefix_degree);
    for (const auto& [u, k] : image.terms()) {
        TensorWord nw;
        nw.factors.reserve(w.size() + u.size() - 1);
        nw.factors.insert(nw.factors.end(), w.factors.begin(), w.factors.begin() + pos);
        nw.factors.insert(nw.factors.end(), u.factors.begin(), u.factors.end());
        nw.factors.insert(nw.factors.end(), w.factors.begin() + pos + 1, w.factors.end());
        out.add(std::move(nw), negate ? -k : k);
    }
    return out;
}

Tensor apply_at(const GradedOperation& f, std::size_t pos, const Tensor& t) {
    Tensor out;
    for (const auto& [w, k] : t.terms()) out.add_scaled(apply_at(f, pos, w), k);
    return out;
}

Tensor extend_sum(const GradedOperation& f, const Tensor& t) {
    Tensor out;
    auto len = t.word_length();
    if (!len) return out;
    for (std::size_t pos = 0; pos < *len; ++pos)
        for (const auto& [w, k] : t.terms()) out.add_scaled(apply_at(f, pos, w), k);
    return out;
}

Tensor hom_differential(const GradedOperation& f, const GradedOperation& boundary,
                        const Cell& c) {
    Tensor out = f.apply(chain_from_tensor(boundary.at(c)));
    Tensor es = extend_sum(boundary, f.at(c));
    if (odd(f.degree))
        out += es;
    else
        out -= es;
    return out;
}

GradedOperation Coalgebra::diagonal(int k) const {
    if (k < 2) throw std::invalid_argument("diagonal index must be >= 2");
    auto it = diagonals.find(k);
    if (it != diagonals.end()) return it->second;
    return GradedOperation::zero(k - 2, k);
}

}  // namespace ainf

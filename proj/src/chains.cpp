#include "ainf/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainf {

Cell vertex(int i) {
    if (i < 1) throw std::invalid_argument("vertex index must be >= 1");
    return Cell{0, 'v', static_cast<std::int16_t>(i)};
}

Cell edge(int i) {
    if (i < 0) throw std::invalid_argument("edge index must be >= 0");
    return Cell{1, 'e', static_cast<std::int16_t>(i)};
}

Cell face(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("face index must be 0, 1 or 2");
    return Cell{2, 'P', static_cast<std::int16_t>(i)};
}

Cell point() { return Cell{0, 'v', 0}; }

Cell letter_edge(char c) {
    if (c < 'a' || c > 'z') throw std::invalid_argument("edge letter must be a..z");
    return Cell{1, c, 0};
}

Cell surface_cell() { return Cell{2, 'X', 0}; }

std::string label(const Cell& c) {
    switch (c.kind) {
        case 'v':
            return c.index == 0 ? "v" : "v" + std::to_string(c.index);
        case 'e':
            return "e" + std::to_string(c.index);
        case 'P':
            return c.index == 0 ? "P" : "P" + std::to_string(c.index);
        case 'X':
            return "X";
        default:
            return std::string(1, c.kind);
    }
}

Chain Chain::unit(const Cell& c, Integer coeff) {
    Chain out;
    out.add(c, coeff);
    return out;
}

std::optional<int> Chain::dim() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.dim;
}

Integer Chain::coeff(const Cell& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Integer() : it->second;
}

Chain& Chain::add(const Cell& c, const Integer& coeff) {
    if (coeff.is_zero()) return *this;
    if (!terms_.empty() && terms_.begin()->first.dim != c.dim)
        throw std::logic_error("chain element mixes dimensions");
    Integer& slot = terms_[c];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(c);
    return *this;
}

Chain& Chain::operator+=(const Chain& rhs) {
    for (const auto& [c, k] : rhs.terms_) add(c, k);
    return *this;
}

Chain& Chain::operator-=(const Chain& rhs) {
    for (const auto& [c, k] : rhs.terms_) add(c, -k);
    return *this;
}

Chain& Chain::scale(const Integer& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= k;
    return *this;
}

Chain Chain::operator-() const {
    Chain out = *this;
    for (auto& [c, v] : out.terms_) v = -v;
    return out;
}

Chain Chain::reduced_mod2() const {
    Chain out;
    for (const auto& [c, v] : terms_)
        if (!v.is_even()) out.add(c, Integer(1));
    return out;
}

bool Chain::is_zero_mod2() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_even(); });
}

int TensorWord::degree() const {
    int d = 0;
    for (const Cell& c : factors) d += c.dim;
    return d;
}

std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
    if (a.factors.size() != b.factors.size())
        return a.factors.size() <=> b.factors.size();
    return std::lexicographical_compare_three_way(
        a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end());
}

Tensor Tensor::unit(TensorWord w, Integer coeff) {
    Tensor out;
    out.add(std::move(w), coeff);
    return out;
}

std::optional<std::size_t> Tensor::word_length() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
}

Integer Tensor::coeff(const TensorWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer() : it->second;
}

Tensor& Tensor::add(TensorWord w, const Integer& coeff) {
    if (coeff.is_zero()) return *this;
    if (w.factors.empty()) throw std::logic_error("tensor word must be nonempty");
    if (!terms_.empty() && terms_.begin()->first.size() != w.size())
        throw std::logic_error("tensor element mixes word lengths");
    Integer& slot = terms_[w];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(w);
    return *this;
}

Tensor& Tensor::add_scaled(const Tensor& rhs, const Integer& k) {
    if (k.is_zero()) return *this;
    for (const auto& [w, v] : rhs.terms_) add(w, v * k);
    return *this;
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    for (const auto& [w, v] : rhs.terms_) add(w, v);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    for (const auto& [w, v] : rhs.terms_) add(w, -v);
    return *this;
}

Tensor& Tensor::scale(const Integer& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= k;
    return *this;
}

Tensor Tensor::operator-() const {
    Tensor out = *this;
    for (auto& [w, v] : out.terms_) v = -v;
    return out;
}

Tensor Tensor::reduced_mod2() const {
    Tensor out;
    for (const auto& [w, v] : terms_)
        if (!v.is_even()) out.add(w, Integer(1));
    return out;
}

bool Tensor::is_zero_mod2() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_even(); });
}

Tensor tensor_from_chain(const Chain& c) {
    Tensor out;
    for (const auto& [cell, k] : c.terms()) out.add(TensorWord{cell}, k);
    return out;
}

Chain chain_from_tensor(const Tensor& t) {
    Chain out;
    for (const auto& [w, k] : t.terms()) {
        if (w.size() != 1)
            throw std::logic_error("tensor element is not a chain (word length != 1)");
        out.add(w.factors[0], k);
    }
    return out;
}

}  // namespace ainf

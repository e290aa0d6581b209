#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainf/integer.hpp"

namespace ainf {

// A basis cell of a complex: dimension plus a compact (kind, index) label.
// Renders as v1, e3, P, P1, X, v, a, ... Two cells are equal iff dimension
// and label agree; ordering is (dim, kind, index), which is the canonical
// term order everywhere.
struct Cell {
    std::uint8_t dim = 0;
    char kind = 'v';
    std::int16_t index = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

Cell vertex(int i);        // v_i, dim 0, i >= 1
Cell edge(int i);          // e_i, dim 1, i >= 0 (e0 is a splitting edge)
Cell face(int i = 0);      // P (i=0), P1, P2, dim 2
Cell point();              // v, the single surface vertex
Cell letter_edge(char c);  // a, b, ... surface 1-cell named by a word letter
Cell surface_cell();       // X, the surface 2-cell

std::string label(const Cell& c);

// A finite integer combination of cells of one common dimension.
class Chain {
public:
    using Terms = std::map<Cell, Integer>;

    Chain() = default;
    static Chain unit(const Cell& c, Integer coeff = Integer(1));

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> dim() const;
    const Terms& terms() const { return terms_; }
    Integer coeff(const Cell& c) const;
    std::size_t term_count() const { return terms_.size(); }

    Chain& add(const Cell& c, const Integer& coeff);
    Chain& operator+=(const Chain& rhs);
    Chain& operator-=(const Chain& rhs);
    Chain& scale(const Integer& k);
    Chain operator-() const;

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(Chain a, const Integer& k) { return a.scale(k); }

    Chain reduced_mod2() const;
    bool is_zero_mod2() const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    Terms terms_;
};

// A nonempty ordered tuple of cells; the degree is the sum of factor
// dimensions. Ordered by length, then factorwise.
struct TensorWord {
    std::vector<Cell> factors;

    TensorWord() = default;
    TensorWord(std::initializer_list<Cell> cs) : factors(cs) {}
    explicit TensorWord(std::vector<Cell> cs) : factors(std::move(cs)) {}

    std::size_t size() const { return factors.size(); }
    int degree() const;

    friend bool operator==(const TensorWord& a, const TensorWord& b) {
        return a.factors == b.factors;
    }
    friend std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b);
};

// A finite integer combination of tensor words, all of one length.
class Tensor {
public:
    using Terms = std::map<TensorWord, Integer>;

    Tensor() = default;
    static Tensor unit(TensorWord w, Integer coeff = Integer(1));

    bool is_zero() const { return terms_.empty(); }
    std::optional<std::size_t> word_length() const;
    const Terms& terms() const { return terms_; }
    Integer coeff(const TensorWord& w) const;
    std::size_t term_count() const { return terms_.size(); }

    Tensor& add(TensorWord w, const Integer& coeff);
    Tensor& add_scaled(const Tensor& rhs, const Integer& k);
    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& scale(const Integer& k);
    Tensor operator-() const;

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Integer& k) { return a.scale(k); }

    Tensor reduced_mod2() const;
    bool is_zero_mod2() const;

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    Terms terms_;
};

Tensor tensor_from_chain(const Chain& c);
Chain chain_from_tensor(const Tensor& t);  // requires words of length 1

}  // namespace ainf

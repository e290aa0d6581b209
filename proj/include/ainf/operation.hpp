#pragma once

#include <map>
#include <vector>

#include "ainf/chains.hpp"

namespace ainf {

// A degree-carrying linear map given by its values on basis cells.
// arity is the number of output tensor factors (1 for a boundary operator).
// Cells absent from the table map to zero. Every stored value must be
// homogeneous: each word has length == arity and degree == cell dim + degree.
struct GradedOperation {
    int degree = 0;
    int arity = 1;
    std::map<Cell, Tensor> values;

    static GradedOperation zero(int degree, int arity);

    const Tensor& at(const Cell& c) const;
    void set(const Cell& c, Tensor value);

    // Linear extension to chains. No sign is involved: the argument is a
    // single tensor factor.
    Tensor apply(const Chain& c) const;

    bool is_zero() const { return values.empty(); }
};

// (1^{⊗pos} ⊗ f ⊗ 1^{⊗rest}) w with the Koszul sign (-1)^{p·q}, where p is
// the degree of f and q the total degree of the factors before pos.
Tensor apply_at(const GradedOperation& f, std::size_t pos, const TensorWord& w);
Tensor apply_at(const GradedOperation& f, std::size_t pos, const Tensor& t);

// Sum of apply_at over every position of every word of t.
Tensor extend_sum(const GradedOperation& f, const Tensor& t);

// Hom-differential delta(f) = f∘∂ - (-1)^{|f|} ∂∘f evaluated at c, with the
// codomain-side boundary acting through extend_sum.
Tensor hom_differential(const GradedOperation& f, const GradedOperation& boundary,
                        const Cell& c);

// A chain complex together with its family of diagonals: the common input
// shape of the structure-relation checker. Diagonals absent from the map
// are zero.
struct Coalgebra {
    std::vector<Cell> cells;
    GradedOperation boundary;                  // degree -1, arity 1
    std::map<int, GradedOperation> diagonals;  // k -> Delta_k, k >= 2

    GradedOperation diagonal(int k) const;
};

}  // namespace ainf

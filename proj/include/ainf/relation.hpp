#pragma once

#include <map>
#include <vector>

#include "ainf/operation.hpp"

namespace ainf {

enum class CoefficientView { integral, mod2 };

// Outcome of checking one structure relation over every generator.
struct RelationReport {
    int n = 2;
    CoefficientView view = CoefficientView::integral;
    std::map<Cell, Tensor> defects;  // integral defect per generator
    bool holds = false;              // all defects vanish in the chosen view
    long long lhs_terms = 0;         // words generated before cancellation
    long long rhs_terms = 0;
};

// LHS - RHS of the structure relation of index n at generator c:
//
//   Delta_n ∂ - (-1)^{n-2} Σ_i (1^{⊗i} ⊗ ∂ ⊗ 1^{⊗n-i-1}) Delta_n
//     = Σ_{i=1}^{n-2} Σ_{j=0}^{n-i-1} (-1)^{i(j+n+1)}
//         (1^{⊗j} ⊗ Delta_{i+1} ⊗ 1^{⊗n-i-j-1}) Delta_{n-i}
//
// with every inner tensor-factor application carrying its Koszul sign.
Tensor relation_defect(const Coalgebra& coalg, int n, const Cell& c,
                       long long* lhs_terms = nullptr,
                       long long* rhs_terms = nullptr);

// The three-term reduction of the relation at the top cell for k >= 4:
// the boundary part plus the Delta_2-into-Delta_{k-1} and
// Delta_{k-1}-into-Delta_2 parts, each with the sign it carries inside
// relation_defect. The dropped terms vanish identically on a polygon-shaped
// complex, so this must equal the full defect at the top cell.
Tensor reduced_defect(const Coalgebra& coalg, int k, const Cell& top);

RelationReport check_relation(const Coalgebra& coalg, int n,
                              CoefficientView view = CoefficientView::integral);

std::vector<RelationReport> verify_all(const Coalgebra& coalg, int n_max,
                                       CoefficientView view = CoefficientView::integral);

// Full verification of one complex: every relation up to n_max, plus the
// consistency of the reduced form at the top cell and the termwise vanishing
// of every relation piece on the other generators (both for n >= 4).
struct StructureVerification {
    std::vector<RelationReport> reports;
    bool reduced_form_consistent = true;
    bool off_top_termwise_zero = true;

    bool holds() const;
};

StructureVerification verify_structure(const Coalgebra& coalg, const Cell& top,
                                       int n_max,
                                       CoefficientView view = CoefficientView::integral);

}  // namespace ainf

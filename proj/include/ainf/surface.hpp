#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ainf/polygon.hpp"

namespace ainf {

// An edge-identification scheme on a polygon: every 1-cell label sits on
// exactly two boundary edges, and gluing aligns the directing arrows. For
// the canonical schemes the arrows coincide with the polygon's vertex-poset
// directions, so every quotient sign is +1.
struct SurfaceScheme {
    int genus = 0;
    bool orientable = false;
    bool canonical = false;
    PolygonComplex polygon;
    std::vector<std::pair<Cell, int>> word;  // ccw tokens (1-cell, exponent)
    std::vector<Cell> edge_class;            // per ccw position (0-based store)
    std::vector<int> edge_sign;              // quotient sign per position
    std::vector<Cell> edges;                 // distinct 1-cells, canonical order
    Cell vertex_cell;
    Cell top_cell;
    int vertex_classes = 0;

    const Cell& class_of(int pos) const { return edge_class.at(pos - 1); }
    int sign_of(int pos) const { return edge_sign.at(pos - 1); }
};

// Canonical decompositions: a 4g-gon (orientable, genus >= 1) with the two
// edge paths identified pairwise-swapped, or a 2g-gon (unorientable,
// genus >= 2) with adjacent same-direction pairs; odd-numbered 1-cells lie
// on the long path, even-numbered on the short one.
SurfaceScheme build_scheme(int genus, bool orientable);

// Scheme from a word such as "a a b b c c" or "a b A B" (uppercase means
// exponent -1). The arrows must single out one initial and one terminal
// vertex.
SurfaceScheme build_scheme_from_word(const std::string& word);

Chain quotient(const SurfaceScheme& s, const Cell& polygon_cell);
Tensor quotient_tensor(const SurfaceScheme& s, const Tensor& t);

// Diagonal of the quotient complex, defined through a chosen section and
// verified to be independent of the representative on every call.
Tensor projected_diagonal(const SurfaceScheme& s, int k, const Cell& c);
GradedOperation projected_diagonal_op(const SurfaceScheme& s, int k);

// Closed-form operation tables for the canonical schemes.
GradedOperation closed_form_operation(int k, int genus, bool orientable);
Tensor closed_form_diagonal(int k, int genus, bool orientable);  // value at X

struct SurfaceComplex {
    std::vector<Cell> cells;  // v, 1-cells, X
    std::vector<Cell> edges;
    Cell vertex_cell;
    Cell top_cell;
    GradedOperation boundary;
    std::map<int, GradedOperation> diagonals;
    bool mod2_only = false;  // projective plane: structure valid over Z2 only

    Coalgebra coalgebra() const;
};

// Assembles the quotient complex with projected diagonals. Requires the
// gluing to identify all polygon vertices.
SurfaceComplex build_surface(const SurfaceScheme& s);

struct HomologyRanks {
    int h0 = 0;
    int h1 = 0;
    int h2 = 0;
    std::vector<Cell> basis;
};

// Checks that the boundary vanishes mod 2 and returns the cell basis as a
// homology basis; refuses with a diagnostic otherwise.
HomologyRanks mod2_homology(const SurfaceComplex& s);

// Mod-2 pairing on degree-1 classes, read off the e_i ⊗ e_j components of
// the top cell's coproduct.
std::vector<std::vector<int>> cup_matrix(const SurfaceComplex& s);

enum class SpecialSurface { sphere, projective_plane, torus, klein_bottle };

SurfaceComplex build_special(SpecialSurface kind);

}  // namespace ainf

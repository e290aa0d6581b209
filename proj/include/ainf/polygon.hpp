#pragma once

#include <vector>

#include "ainf/operation.hpp"

namespace ainf {

// Cellular chain complex of an oriented n-gon with initial vertex at ccw
// position 1 and terminal vertex at position t (1 < t <= n). Edges form two
// monotone directed paths from the initial to the terminal vertex: positions
// 1..t-1 run forward along the ccw boundary, positions t..n run backward,
// with the edge at position n directed away from the initial vertex.
//
// Labels are decoupled from positions so that split parts and gluing schemes
// can reuse the parent polygon's cell names.
class PolygonComplex {
public:
    static PolygonComplex with_labels(std::vector<Cell> vertices_ccw,
                                      std::vector<Cell> edges_ccw, int t,
                                      Cell face_cell);

    int n() const { return n_; }
    int t() const { return t_; }
    const Cell& face() const { return face_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const GradedOperation& boundary() const { return boundary_; }

    const Cell& vertex_at(int pos) const;  // 1-based ccw position
    const Cell& edge_at(int pos) const;    // 1-based ccw position
    const Cell& edge_start(int pos) const;
    const Cell& edge_end(int pos) const;

    // Delta_k value on a cell (the generalized family when t < n).
    Tensor diagonal(int k, const Cell& c) const;
    GradedOperation diagonal_op(int k) const;

    // Smallest k with Delta_k identically zero: max{t, n-t+2}.
    int vanishing_threshold() const { return t_ > n_ - t_ + 2 ? t_ : n_ - t_ + 2; }

    // Checker view with diagonals materialized for 2 <= k <= max_k.
    Coalgebra coalgebra(int max_k) const;

private:
    int n_ = 0;
    int t_ = 0;
    Cell face_;
    std::vector<Cell> vertices_;  // ccw, [0] is the initial vertex
    std::vector<Cell> edges_;     // ccw, [0] joins positions 1 and 2
    std::vector<Cell> cells_;
    GradedOperation boundary_;

    int position_of_edge(const Cell& c) const;  // -1 if not an edge
    int position_of_vertex(const Cell& c) const;
};

// The n-gon with standard labels v1..vn, e1..en, P and terminal vertex vt.
PolygonComplex build_polygon(int n, int t);

// The two sub-polygons obtained by drawing the extra edge e0 from the
// initial to the terminal vertex. Cell labels are shared with the parent:
// p1 is a t-gon on v1..vt with edges e1..e_{t-1}, e0 and face P1; p2 is an
// (n-t+2)-gon on v1, vt..vn with edges e0, e_t..e_n and face P2.
struct SplitPolygons {
    PolygonComplex parent;
    PolygonComplex p1;
    PolygonComplex p2;
    Cell e0;
};

SplitPolygons split_polygons(int n, int t);

// Multilinear substitution of one face cell by a sum of two, used to compare
// chains over a polygon with chains over its split parts.
Tensor substitute_face(const Tensor& t, const Cell& parent_face, const Cell& f1,
                       const Cell& f2);

}  // namespace ainf

#include "ainf/polygon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ainf {

namespace {

// Visit all k-element subsets of {lo, ..., hi} in lexicographic order.
template <typename Fn>
void for_each_subset(int lo, int hi, int k, Fn&& fn) {
    if (k <= 0 || hi - lo + 1 < k) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = lo + i;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == hi - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

PolygonComplex build_polygon(int n, int t) {
    if (n < 3) throw std::invalid_argument("polygon needs n >= 3 sides");
    std::vector<Cell> vs, es;
    vs.reserve(n);
    es.reserve(n);
    for (int i = 1; i <= n; ++i) {
        vs.push_back(vertex(i));
        es.push_back(edge(i));
    }
    return PolygonComplex::with_labels(std::move(vs), std::move(es), t, ainf::face());
}

PolygonComplex PolygonComplex::with_labels(std::vector<Cell> vertices_ccw,
                                           std::vector<Cell> edges_ccw, int t,
                                           Cell face_cell) {
    const int n = static_cast<int>(vertices_ccw.size());
    // n = 2 is the degenerate digon that shows up as the short part of a
    // split along the chord when the terminal vertex is adjacent to the
    // initial one; the structural formulas all specialize to it.
    if (n < 2) throw std::invalid_argument("polygon needs at least 2 sides");
    if (static_cast<int>(edges_ccw.size()) != n)
        throw std::invalid_argument("polygon needs as many edges as vertices");
    if (t <= 1 || t > n)
        throw std::invalid_argument("terminal vertex index must satisfy 1 < t <= n");
    for (const Cell& c : vertices_ccw)
        if (c.dim != 0) throw std::invalid_argument("vertex label of wrong dimension");
    for (const Cell& c : edges_ccw)
        if (c.dim != 1) throw std::invalid_argument("edge label of wrong dimension");
    if (face_cell.dim != 2) throw std::invalid_argument("face label of wrong dimension");
    std::set<Cell> distinct(vertices_ccw.begin(), vertices_ccw.end());
    distinct.insert(edges_ccw.begin(), edges_ccw.end());
    distinct.insert(face_cell);
    if (static_cast<int>(distinct.size()) != 2 * n + 1)
        throw std::invalid_argument("polygon cell labels must be distinct");

    PolygonComplex out;
    out.n_ = n;
    out.t_ = t;
    out.face_ = face_cell;
    out.vertices_ = std::move(vertices_ccw);
    out.edges_ = std::move(edges_ccw);
    out.cells_ = out.vertices_;
    out.cells_.insert(out.cells_.end(), out.edges_.begin(), out.edges_.end());
    out.cells_.push_back(out.face_);

    GradedOperation bnd{-1, 1, {}};
    for (int p = 1; p <= n; ++p) {
        Chain v = Chain::unit(out.edge_end(p)) - Chain::unit(out.edge_start(p));
        bnd.set(out.edge_at(p), tensor_from_chain(v));
    }
    Tensor dp;
    for (int p = 1; p <= n; ++p)
        dp.add(TensorWord{out.edge_at(p)}, Integer(p < t ? 1 : -1));
    bnd.set(out.face_, dp);
    out.boundary_ = std::move(bnd);
    return out;
}

const Cell& PolygonComplex::vertex_at(int pos) const {
    if (pos < 1 || pos > n_) throw std::out_of_range("vertex position out of range");
    return vertices_[pos - 1];
}

const Cell& PolygonComplex::edge_at(int pos) const {
    if (pos < 1 || pos > n_) throw std::out_of_range("edge position out of range");
    return edges_[pos - 1];
}

const Cell& PolygonComplex::edge_start(int pos) const {
    if (pos < t_) return vertex_at(pos);
    if (pos < n_) return vertex_at(pos + 1);
    return vertex_at(1);
}

const Cell& PolygonComplex::edge_end(int pos) const {
    if (pos < t_) return vertex_at(pos + 1);
    if (pos < n_) return vertex_at(pos);
    return vertex_at(n_);
}

int PolygonComplex::position_of_edge(const Cell& c) const {
    auto it = std::find(edges_.begin(), edges_.end(), c);
    return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin()) + 1;
}

int PolygonComplex::position_of_vertex(const Cell& c) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), c);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin()) + 1;
}

Tensor PolygonComplex::diagonal(int k, const Cell& c) const {
    if (k < 2) throw std::invalid_argument("diagonal index must be >= 2");
    Tensor out;
    if (c.dim == 0) {
        if (position_of_vertex(c) < 0)
            throw std::invalid_argument("unknown cell " + label(c));
        if (k == 2) out.add(TensorWord{c, c}, Integer(1));
        return out;
    }
    if (c.dim == 1) {
        int p = position_of_edge(c);
        if (p < 0) throw std::invalid_argument("unknown cell " + label(c));
        if (k == 2) {
            out.add(TensorWord{edge_start(p), c}, Integer(1));
            out.add(TensorWord{c, edge_end(p)}, Integer(1));
        }
        return out;
    }
    if (c != face_) throw std::invalid_argument("unknown cell " + label(c));

    // Ascending words over positions 1..t-1, descending over t..n.
    for_each_subset(1, t_ - 1, k, [&](const std::vector<int>& pick) {
        TensorWord w;
        w.factors.reserve(k);
        for (int p : pick) w.factors.push_back(edge_at(p));
        out.add(std::move(w), Integer(1));
    });
    for_each_subset(t_, n_, k, [&](const std::vector<int>& pick) {
        TensorWord w;
        w.factors.reserve(k);
        for (auto it = pick.rbegin(); it != pick.rend(); ++it)
            w.factors.push_back(edge_at(*it));
        out.add(std::move(w), Integer(-1));
    });
    if (k == 2) {
        out.add(TensorWord{vertex_at(1), face_}, Integer(1));
        out.add(TensorWord{face_, vertex_at(t_)}, Integer(1));
    }
    return out;
}

GradedOperation PolygonComplex::diagonal_op(int k) const {
    GradedOperation op{k - 2, k, {}};
    for (const Cell& c : cells_) op.set(c, diagonal(k, c));
    return op;
}

Coalgebra PolygonComplex::coalgebra(int max_k) const {
    Coalgebra out;
    out.cells = cells_;
    out.boundary = boundary_;
    for (int k = 2; k <= max_k; ++k) {
        GradedOperation op = diagonal_op(k);
        if (!op.is_zero()) out.diagonals.emplace(k, std::move(op));
    }
    return out;
}

SplitPolygons split_polygons(int n, int t) {
    if (t <= 1 || t >= n)
        throw std::invalid_argument("splitting needs 1 < t < n");
    SplitPolygons out;
    out.parent = build_polygon(n, t);
    out.e0 = edge(0);

    std::vector<Cell> v1, e1;
    for (int i = 1; i <= t; ++i) v1.push_back(vertex(i));
    for (int i = 1; i < t; ++i) e1.push_back(edge(i));
    e1.push_back(out.e0);
    out.p1 = PolygonComplex::with_labels(std::move(v1), std::move(e1), t, face(1));

    std::vector<Cell> v2, e2;
    v2.push_back(vertex(1));
    for (int i = t; i <= n; ++i) v2.push_back(vertex(i));
    e2.push_back(out.e0);
    for (int i = t; i <= n; ++i) e2.push_back(edge(i));
    out.p2 = PolygonComplex::with_labels(std::move(v2), std::move(e2), 2, face(2));
    return out;
}

Tensor substitute_face(const Tensor& t, const Cell& parent_face, const Cell& f1,
                       const Cell& f2) {
    Tensor out;
    for (const auto& [w, k] : t.terms()) {
        std::vector<TensorWord> expanded{TensorWord{}};
        for (const Cell& c : w.factors) {
            if (c == parent_face) {
                std::vector<TensorWord> next;
                next.reserve(expanded.size() * 2);
                for (const TensorWord& partial : expanded)
                    for (const Cell& rep : {f1, f2}) {
                        TensorWord copy = partial;
                        copy.factors.push_back(rep);
                        next.push_back(std::move(copy));
                    }
                expanded = std::move(next);
            } else {
                for (TensorWord& partial : expanded) partial.factors.push_back(c);
            }
        }
        for (TensorWord& nw : expanded) out.add(std::move(nw), k);
    }
    return out;
}

}  // namespace ainf

#include "ainf/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ainf {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        std::set<int> roots;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) roots.insert(find(i));
        return static_cast<int>(roots.size());
    }
};

// ccw vertex positions at the ends of boundary edge position p, for an n-gon
// whose vertices are numbered ccw starting at the initial vertex.
int ccw_tail(int p) { return p; }
int ccw_head(int p, int n) { return p == n ? 1 : p + 1; }

// Count vertex classes produced by gluing arrow-aligned edge pairs. The
// arrow of position p points ccw iff arrow_ccw[p-1].
int glued_vertex_classes(const std::vector<Cell>& cls,
                         const std::vector<bool>& arrow_ccw) {
    const int n = static_cast<int>(cls.size());
    UnionFind uf(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            if (cls[p - 1] != cls[q - 1]) continue;
            int tp = arrow_ccw[p - 1] ? ccw_tail(p) : ccw_head(p, n);
            int hp = arrow_ccw[p - 1] ? ccw_head(p, n) : ccw_tail(p);
            int tq = arrow_ccw[q - 1] ? ccw_tail(q) : ccw_head(q, n);
            int hq = arrow_ccw[q - 1] ? ccw_head(q, n) : ccw_tail(q);
            uf.unite(tp - 1, tq - 1);
            uf.unite(hp - 1, hq - 1);
        }
    return uf.classes();
}

void finish_scheme(SurfaceScheme& s) {
    const int n = s.polygon.n();
    const int t = s.polygon.t();
    s.vertex_cell = point();
    s.top_cell = surface_cell();
    s.word.clear();
    std::vector<bool> arrow_ccw(n);
    for (int p = 1; p <= n; ++p) {
        // arrow = poset direction composed with the quotient sign
        bool poset_ccw = p < t;
        bool ccw = s.sign_of(p) > 0 ? poset_ccw : !poset_ccw;
        arrow_ccw[p - 1] = ccw;
        s.word.emplace_back(s.class_of(p), ccw ? 1 : -1);
    }
    std::map<Cell, int> uses;
    for (const Cell& c : s.edge_class) ++uses[c];
    for (const auto& [c, count] : uses)
        if (count != 2)
            throw std::invalid_argument("label " + label(c) +
                                        " must appear exactly twice");
    s.edges.clear();
    for (const auto& [c, count] : uses) s.edges.push_back(c);
    s.vertex_classes = glued_vertex_classes(s.edge_class, arrow_ccw);
}

}  // namespace

SurfaceScheme build_scheme(int genus, bool orientable) {
    if (orientable ? genus < 1 : genus < 2)
        throw std::invalid_argument(
            orientable ? "orientable schemes need genus >= 1"
                       : "unorientable schemes need genus >= 2 (projective plane is special-cased)");
    SurfaceScheme s;
    s.genus = genus;
    s.orientable = orientable;
    s.canonical = true;
    const int n = orientable ? 4 * genus : 2 * genus;
    const int t = orientable ? 2 * genus + 1 : 2 * ((genus + 1) / 2) + 1;
    s.polygon = build_polygon(n, t);
    s.edge_class.assign(n, Cell{});
    s.edge_sign.assign(n, 1);
    if (orientable) {
        for (int m = 1; m <= 2 * genus; ++m) {
            s.edge_class[m - 1] = edge(m);
            // hat pairing: the m-th edge of the second path carries the
            // label of its partner, with adjacent indices swapped
            int partner = (m % 2 == 1) ? m + 1 : m - 1;
            s.edge_class[n - m] = edge(partner);  // position n+1-m
        }
    } else {
        for (int m = 1; m <= t - 1; ++m)
            s.edge_class[m - 1] = edge(2 * ((m + 1) / 2) - 1);
        for (int r = 1; r <= n - t + 1; ++r)
            s.edge_class[n - r] = edge(2 * ((r + 1) / 2));  // position n+1-r
    }
    finish_scheme(s);
    if (s.vertex_classes != 1)
        throw std::logic_error("canonical scheme failed to identify all vertices");
    return s;
}

SurfaceScheme build_scheme_from_word(const std::string& word) {
    std::istringstream in(word);
    std::vector<std::pair<char, int>> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok.size() != 1 || !std::isalpha(static_cast<unsigned char>(tok[0])))
            throw std::invalid_argument("word tokens must be single letters, got '" +
                                        tok + "'");
        char c = tok[0];
        bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        tokens.emplace_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))),
                            upper ? -1 : 1);
    }
    const int n = static_cast<int>(tokens.size());
    if (n < 3) throw std::invalid_argument("word must have at least 3 letters");
    std::map<char, int> uses;
    for (const auto& [c, e] : tokens) ++uses[c];
    for (const auto& [c, count] : uses)
        if (count != 2)
            throw std::invalid_argument(std::string("letter '") + c +
                                        "' must appear exactly twice");
    std::vector<char> letters;
    for (const auto& [c, count] : uses) letters.push_back(c);

    // The arrows must give the boundary cycle a unique source and sink.
    // Reversing both arrows of one pair leaves the gluing unchanged, so that
    // freedom is searched (deterministically) before giving up.
    auto find_poset = [&](const std::vector<bool>& arrow_ccw, int& source, int& sink) {
        int sources = 0, sinks = 0;
        for (int p = 1; p <= n; ++p) {
            int prev = p == 1 ? n : p - 1;
            bool out_next = arrow_ccw[p - 1];
            bool in_prev = arrow_ccw[prev - 1];
            if (out_next && !in_prev) {
                source = p;
                ++sources;
            }
            if (!out_next && in_prev) {
                sink = p;
                ++sinks;
            }
        }
        return sources == 1 && sinks == 1;
    };

    std::vector<bool> arrow_ccw(n);
    int source = 0, sink = 0;
    bool found = false;
    for (unsigned long mask = 0; mask < (1UL << letters.size()) && !found; ++mask) {
        for (int p = 1; p <= n; ++p) {
            bool ccw = tokens[p - 1].second > 0;
            auto pos = std::find(letters.begin(), letters.end(), tokens[p - 1].first) -
                       letters.begin();
            if (mask & (1UL << pos)) ccw = !ccw;
            arrow_ccw[p - 1] = ccw;
        }
        found = find_poset(arrow_ccw, source, sink);
    }
    if (!found)
        throw std::invalid_argument(
            "word arrows do not define a unique initial and terminal vertex "
            "under any pair orientation");

    SurfaceScheme s;
    s.canonical = false;
    const int t = ((sink - source + n) % n) + 1;
    s.polygon = build_polygon(n, t);
    s.edge_class.assign(n, Cell{});
    s.edge_sign.assign(n, 1);
    for (int i = 1; i <= n; ++i) {
        int boundary_pos = ((source - 1) + (i - 1)) % n;  // 0-based token index
        s.edge_class[i - 1] = letter_edge(tokens[boundary_pos].first);
        bool poset_ccw = i < t;
        bool arrow = arrow_ccw[boundary_pos];
        s.edge_sign[i - 1] = (arrow == poset_ccw) ? 1 : -1;
    }
    finish_scheme(s);

    // A pair glued with matching exponents is a cross-cap; the surface is
    // orientable iff there is none. Pair flips do not change this.
    bool orientable = true;
    std::map<char, int> exponent_sum;
    for (const auto& [c, e] : tokens) exponent_sum[c] += e;
    for (const auto& [c, sum] : exponent_sum)
        if (sum != 0) orientable = false;
    s.orientable = orientable;
    const int letter_count = static_cast<int>(uses.size());
    const int chi = s.vertex_classes - letter_count + 1;
    s.genus = orientable ? (2 - chi) / 2 : 2 - chi;
    return s;
}

Chain quotient(const SurfaceScheme& s, const Cell& c) {
    if (s.vertex_classes != 1)
        throw std::runtime_error(
            "quotient is defined here only for schemes identifying all vertices");
    if (c == s.polygon.face()) return Chain::unit(s.top_cell);
    if (c.dim == 0) {
        for (int p = 1; p <= s.polygon.n(); ++p)
            if (s.polygon.vertex_at(p) == c) return Chain::unit(s.vertex_cell);
    }
    if (c.dim == 1) {
        for (int p = 1; p <= s.polygon.n(); ++p)
            if (s.polygon.edge_at(p) == c)
                return Chain::unit(s.class_of(p), Integer(s.sign_of(p)));
    }
    throw std::invalid_argument("cell " + label(c) + " is not in the scheme's polygon");
}

Tensor quotient_tensor(const SurfaceScheme& s, const Tensor& t) {
    Tensor out;
    for (const auto& [w, k] : t.terms()) {
        TensorWord nw;
        nw.factors.reserve(w.size());
        Integer coeff = k;
        for (const Cell& c : w.factors) {
            Chain image = quotient(s, c);
            // images of cells are single signed cells
            const auto& [cell, sign] = *image.terms().begin();
            nw.factors.push_back(cell);
            coeff *= sign;
        }
        out.add(std::move(nw), coeff);
    }
    return out;
}

Tensor projected_diagonal(const SurfaceScheme& s, int k, const Cell& c) {
    if (k < 2) throw std::invalid_argument("diagonal index must be >= 2");
    if (c == s.top_cell)
        return quotient_tensor(s, s.polygon.diagonal(k, s.polygon.face()));
    if (c == s.vertex_cell) {
        Tensor first = quotient_tensor(s, s.polygon.diagonal(k, s.polygon.vertex_at(1)));
        for (int p = 2; p <= s.polygon.n(); ++p)
            if (quotient_tensor(s, s.polygon.diagonal(k, s.polygon.vertex_at(p))) != first)
                throw std::runtime_error("projected diagonal is ill-defined at v");
        return first;
    }
    bool found = false;
    Tensor value;
    for (int p = 1; p <= s.polygon.n(); ++p) {
        if (s.class_of(p) != c) continue;
        Tensor candidate =
            quotient_tensor(s, s.polygon.diagonal(k, s.polygon.edge_at(p)));
        candidate.scale(Integer(s.sign_of(p)));
        if (!found) {
            value = std::move(candidate);
            found = true;
        } else if (candidate != value) {
            throw std::runtime_error("projected diagonal is ill-defined at " + label(c));
        }
    }
    if (!found) throw std::invalid_argument("cell " + label(c) + " is not in the surface");
    return value;
}

GradedOperation projected_diagonal_op(const SurfaceScheme& s, int k) {
    GradedOperation op{k - 2, k, {}};
    op.set(s.vertex_cell, projected_diagonal(s, k, s.vertex_cell));
    for (const Cell& e : s.edges) op.set(e, projected_diagonal(s, k, e));
    op.set(s.top_cell, projected_diagonal(s, k, s.top_cell));
    return op;
}

namespace {

template <typename Fn>
void for_each_subset(int count, int k, Fn&& fn) {
    if (k <= 0 || count < k) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == count - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

int hat(int i) { return (i % 2 == 1) ? i + 1 : i - 1; }

}  // namespace

Tensor closed_form_diagonal(int k, int genus, bool orientable) {
    if (orientable ? genus < 1 : genus < 2)
        throw std::invalid_argument("unsupported genus/orientability combination");
    if (k < 2) throw std::invalid_argument("diagonal index must be >= 2");
    const Cell v = point();
    const Cell x = surface_cell();
    Tensor out;
    if (k == 2) {
        out.add(TensorWord{v, x}, Integer(1));
        out.add(TensorWord{x, v}, Integer(1));
        if (orientable) {
            for (int i = 1; i <= genus; ++i) {
                out.add(TensorWord{edge(2 * i - 1), edge(2 * i)}, Integer(1));
                out.add(TensorWord{edge(2 * i), edge(2 * i - 1)}, Integer(-1));
            }
        } else {
            for (int i = 1; i <= (genus + 1) / 2; ++i)
                out.add(TensorWord{edge(2 * i - 1), edge(2 * i - 1)}, Integer(1));
            for (int j = 1; j <= genus / 2; ++j)
                out.add(TensorWord{edge(2 * j), edge(2 * j)}, Integer(-1));
        }
        return out;
    }
    if (orientable) {
        for_each_subset(2 * genus, k, [&](const std::vector<int>& pick) {
            TensorWord plain, hatted;
            for (int i : pick) {
                plain.factors.push_back(edge(i));
                hatted.factors.push_back(edge(hat(i)));
            }
            out.add(std::move(plain), Integer(1));
            out.add(std::move(hatted), Integer(-1));
        });
    } else {
        const int s1 = (genus + 1) / 2;  // odd-label sequence 1,1,3,3,...
        for_each_subset(2 * s1, k, [&](const std::vector<int>& pick) {
            TensorWord w;
            for (int p : pick) w.factors.push_back(edge(2 * ((p + 1) / 2) - 1));
            out.add(std::move(w), Integer(1));
        });
        const int s2 = genus / 2;  // even-label sequence 2,2,4,4,...
        for_each_subset(2 * s2, k, [&](const std::vector<int>& pick) {
            TensorWord w;
            for (int p : pick) w.factors.push_back(edge(2 * ((p + 1) / 2)));
            out.add(std::move(w), Integer(-1));
        });
    }
    return out;
}

GradedOperation closed_form_operation(int k, int genus, bool orientable) {
    GradedOperation op{k - 2, k, {}};
    const Cell v = point();
    const int m = orientable ? 2 * genus : genus;
    if (k == 2) {
        op.set(v, Tensor::unit(TensorWord{v, v}));
        for (int i = 1; i <= m; ++i) {
            Tensor e_val;
            e_val.add(TensorWord{v, edge(i)}, Integer(1));
            e_val.add(TensorWord{edge(i), v}, Integer(1));
            op.set(edge(i), std::move(e_val));
        }
    }
    op.set(surface_cell(), closed_form_diagonal(k, genus, orientable));
    return op;
}

Coalgebra SurfaceComplex::coalgebra() const {
    return Coalgebra{cells, boundary, diagonals};
}

SurfaceComplex build_surface(const SurfaceScheme& s) {
    if (s.vertex_classes != 1)
        throw std::runtime_error(
            "scheme does not identify all vertices; surface complex not built");
    SurfaceComplex out;
    out.vertex_cell = s.vertex_cell;
    out.top_cell = s.top_cell;
    out.edges = s.edges;
    out.cells.push_back(s.vertex_cell);
    out.cells.insert(out.cells.end(), s.edges.begin(), s.edges.end());
    out.cells.push_back(s.top_cell);

    GradedOperation bnd{-1, 1, {}};
    Chain dx;
    for (const auto& [w, k] : s.polygon.boundary().at(s.polygon.face()).terms()) {
        Chain image = quotient(s, w.factors[0]);
        image.scale(k);
        dx += image;
    }
    bnd.set(s.top_cell, tensor_from_chain(dx));
    out.boundary = std::move(bnd);

    for (int k = 2; k <= s.polygon.vanishing_threshold() + 2; ++k) {
        GradedOperation op = projected_diagonal_op(s, k);
        if (!op.is_zero()) out.diagonals.emplace(k, std::move(op));
    }
    return out;
}

HomologyRanks mod2_homology(const SurfaceComplex& s) {
    for (const Cell& c : s.cells)
        if (!s.boundary.at(c).is_zero_mod2())
            throw std::runtime_error("mod-2 boundary does not vanish at " + label(c) +
                                     "; not a mod-2 cycle basis");
    HomologyRanks out;
    out.h0 = 1;
    out.h1 = static_cast<int>(s.edges.size());
    out.h2 = 1;
    out.basis = s.cells;
    return out;
}

std::vector<std::vector<int>> cup_matrix(const SurfaceComplex& s) {
    mod2_homology(s);  // precondition, throws with a diagnostic
    const std::size_t m = s.edges.size();
    auto it = s.diagonals.find(2);
    if (it == s.diagonals.end())
        throw std::logic_error("surface complex has no coproduct table");
    const Tensor& d2x = it->second.at(s.top_cell);
    std::vector<std::vector<int>> out(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i][j] = d2x.coeff(TensorWord{s.edges[i], s.edges[j]}).mod2();
    return out;
}

SurfaceComplex build_special(SpecialSurface kind) {
    switch (kind) {
        case SpecialSurface::torus:
            return build_surface(build_scheme(1, true));
        case SpecialSurface::klein_bottle:
            return build_surface(build_scheme(2, false));
        case SpecialSurface::sphere: {
            SurfaceComplex out;
            out.vertex_cell = point();
            out.top_cell = surface_cell();
            out.cells = {out.vertex_cell, out.top_cell};
            out.boundary = GradedOperation{-1, 1, {}};
            GradedOperation d2{0, 2, {}};
            d2.set(out.vertex_cell, Tensor::unit(TensorWord{point(), point()}));
            Tensor dx;
            dx.add(TensorWord{point(), surface_cell()}, Integer(1));
            dx.add(TensorWord{surface_cell(), point()}, Integer(1));
            d2.set(out.top_cell, std::move(dx));
            out.diagonals.emplace(2, std::move(d2));
            return out;
        }
        case SpecialSurface::projective_plane: {
            SurfaceComplex out;
            out.vertex_cell = point();
            out.top_cell = surface_cell();
            out.edges = {edge(1)};
            out.cells = {out.vertex_cell, edge(1), out.top_cell};
            GradedOperation bnd{-1, 1, {}};
            bnd.set(out.top_cell, tensor_from_chain(Chain::unit(edge(1), Integer(2))));
            out.boundary = std::move(bnd);
            GradedOperation d2{0, 2, {}};
            d2.set(out.vertex_cell, Tensor::unit(TensorWord{point(), point()}));
            Tensor de;
            de.add(TensorWord{point(), edge(1)}, Integer(1));
            de.add(TensorWord{edge(1), point()}, Integer(1));
            d2.set(edge(1), std::move(de));
            Tensor dx;
            dx.add(TensorWord{point(), surface_cell()}, Integer(1));
            dx.add(TensorWord{surface_cell(), point()}, Integer(1));
            dx.add(TensorWord{edge(1), edge(1)}, Integer(1));
            d2.set(out.top_cell, std::move(dx));
            out.diagonals.emplace(2, std::move(d2));
            out.mod2_only = true;
            return out;
        }
    }
    throw std::invalid_argument("unknown special surface");
}

}  // namespace ainf

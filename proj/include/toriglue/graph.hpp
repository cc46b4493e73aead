#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toriglue/gluing.hpp>
#include <toriglue/linalg.hpp>
#include <toriglue/matrix.hpp>
#include <toriglue/toric.hpp>

namespace toriglue {

/// Simple labeled graph: vertices 0..n-1, edges as unordered pairs.  No loops,
/// no multi-edges; edge labels are unique and become ring variables.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;

    std::size_t p() const { return edges.size(); }

    void add_edge(std::size_t u, std::size_t v, std::string label = "") {
        if (u == v) throw std::invalid_argument("graph: loops are not allowed");
        if (u >= n || v >= n) throw std::invalid_argument("graph: vertex out of range");
        auto e = std::minmax(u, v);
        for (const auto& f : edges)
            if (f == std::pair<std::size_t, std::size_t>(e.first, e.second))
                throw std::invalid_argument("graph: duplicate edge");
        if (label.empty()) label = "e" + std::to_string(edges.size() + 1);
        if (std::find(labels.begin(), labels.end(), label) != labels.end())
            throw std::invalid_argument("graph: duplicate edge label '" + label + "'");
        edges.emplace_back(e.first, e.second);
        labels.push_back(std::move(label));
    }

    std::size_t edge_index(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw std::invalid_argument("graph: unknown edge label '" + label + "'");
    }
};

/// Graph file format: first line `vertices`, then one `u v [label]` edge per
/// line (1-based); '#' starts a comment.
inline Graph read_graph(std::istream& in) {
    Graph g;
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos || line[k] == '#') continue;
        std::istringstream ss(line);
        if (!have_n) {
            if (!(ss >> g.n) || g.n == 0) throw std::runtime_error("graph: bad vertex count");
            have_n = true;
            continue;
        }
        std::size_t u, v;
        std::string label;
        if (!(ss >> u >> v)) throw std::runtime_error("graph: bad edge line '" + line + "'");
        ss >> label;
        if (u < 1 || v < 1 || u > g.n || v > g.n)
            throw std::runtime_error("graph: vertex out of range in '" + line + "'");
        g.add_edge(u - 1, v - 1, label);
    }
    if (!have_n) throw std::runtime_error("graph: empty input");
    return g;
}

inline std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (std::size_t i = 0; i < g.p(); ++i)
        out << g.edges[i].first + 1 << ' ' << g.edges[i].second + 1 << ' ' << g.labels[i] << '\n';
    return out.str();
}

/// Vertex x edge incidence matrix; every column has exactly two ones, so the
/// matrix is homogeneous of degree 2 (all-ones multipliers).
inline IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix m(g.n, g.p());
    for (std::size_t j = 0; j < g.p(); ++j) {
        m(g.edges[j].first, j) = 1;
        m(g.edges[j].second, j) = 1;
    }
    return m;
}

inline std::vector<std::vector<std::size_t>> adjacency(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    auto adj = adjacency(g);
    std::vector<bool> seen(g.n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                queue.push_back(v);
            }
    }
    return count == g.n;
}

/// Two-colorability by breadth-first search.
inline bool is_bipartite(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> color(g.n, -1);
    for (std::size_t s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline RingContext graph_ring(const Graph& g) {
    RingContext r;
    r.vars = g.labels;
    r.validate();
    return r;
}

inline BinomialIdeal toric_ideal_of_graph(const Graph& g, Budget budget = {}) {
    return toric_ideal(incidence_matrix(g), graph_ring(g), budget);
}

/// Which endpoint of e1 is identified with which endpoint of e2.
struct EdgeGluingSpec {
    std::size_t e1 = 0, e2 = 0;
    bool flip = false;  // false: first->first; true: first->second
};

struct GluedGraph {
    Graph graph;
    std::vector<std::size_t> edges_from_g1, edges_from_g2;  // edge indices in `graph`
    std::size_t glue_edge = 0;
};

/// Identify one edge of G1 with one edge of G2.  The result has
/// n1 + n2 - 2 vertices and p1 + p2 - 1 edges; both inputs become induced
/// subgraphs.
inline GluedGraph glue_graphs_along_edge(const Graph& g1, const Graph& g2,
                                         const EdgeGluingSpec& spec) {
    if (spec.e1 >= g1.p() || spec.e2 >= g2.p())
        throw std::invalid_argument("graph glue: edge index out of range");
    if (!is_connected(g1) || !is_connected(g2))
        throw std::invalid_argument("graph glue: both graphs must be connected");

    const auto [a, b] = g1.edges[spec.e1];
    const auto [c, d] = g2.edges[spec.e2];
    GluedGraph out;
    out.graph.n = g1.n + g2.n - 2;

    // vertex map for g2: c,d land on a,b (per orientation), others get fresh ids
    std::vector<std::size_t> vmap(g2.n, 0);
    vmap[c] = spec.flip ? b : a;
    vmap[d] = spec.flip ? a : b;
    std::size_t next = g1.n;
    for (std::size_t v = 0; v < g2.n; ++v)
        if (v != c && v != d) vmap[v] = next++;

    std::set<std::string> used(g1.labels.begin(), g1.labels.end());
    for (std::size_t i = 0; i < g1.p(); ++i) {
        out.graph.add_edge(g1.edges[i].first, g1.edges[i].second, g1.labels[i]);
        out.edges_from_g1.push_back(i);
    }
    out.glue_edge = spec.e1;
    for (std::size_t i = 0; i < g2.p(); ++i) {
        if (i == spec.e2) {
            out.edges_from_g2.push_back(spec.e1);
            continue;
        }
        std::string label = g2.labels[i];
        while (used.count(label)) label += "'";
        used.insert(label);
        out.edges_from_g2.push_back(out.graph.p());
        out.graph.add_edge(vmap[g2.edges[i].first], vmap[g2.edges[i].second], label);
    }
    return out;
}

/// Split G along edge e = {u,v}: possible iff G - {u,v} has at least two
/// connected components; the components are regrouped into two parts, each
/// keeping a copy of e.  Returns the unique deterministic split (the first
/// component against the rest).
inline std::optional<std::pair<Graph, Graph>> split_along_edge(const Graph& g, std::size_t edge) {
    if (edge >= g.p()) throw std::invalid_argument("graph split: edge index out of range");
    const auto [u, v] = g.edges[edge];

    // connected components of G - {u, v}
    auto adj = adjacency(g);
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < g.n; ++s) {
        if (s == u || s == v || comp[s] != -1) continue;
        std::deque<std::size_t> queue{s};
        comp[s] = ncomp;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y : adj[x])
                if (y != u && y != v && comp[y] == -1) {
                    comp[y] = ncomp;
                    queue.push_back(y);
                }
        }
        ++ncomp;
    }
    if (ncomp < 2) return std::nullopt;

    auto side_of_edge = [&](std::size_t i) -> int {
        const auto [x, y] = g.edges[i];
        if (x != u && x != v) return comp[x] == 0 ? 0 : 1;
        if (y != u && y != v) return comp[y] == 0 ? 0 : 1;
        return -1;  // the split edge itself
    };

    auto build_side = [&](int side) {
        // vertices: members of the chosen components plus u, v
        std::vector<std::size_t> vmap(g.n, static_cast<std::size_t>(-1));
        std::size_t count = 0;
        for (std::size_t x = 0; x < g.n; ++x) {
            bool in_side = (x == u || x == v) ||
                           (comp[x] != -1 && (side == 0 ? comp[x] == 0 : comp[x] != 0));
            if (in_side) vmap[x] = count++;
        }
        Graph part;
        part.n = count;
        part.add_edge(vmap[u], vmap[v], g.labels[edge]);
        for (std::size_t i = 0; i < g.p(); ++i)
            if (i != edge && side_of_edge(i) == side)
                part.add_edge(vmap[g.edges[i].first], vmap[g.edges[i].second], g.labels[i]);
        return part;
    };
    return std::make_pair(build_side(0), build_side(1));
}

/// Convenience scan: all edges along which G splits.
inline std::vector<std::size_t> splittable_edges(const Graph& g) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.p(); ++e)
        if (split_along_edge(g, e)) out.push_back(e);
    return out;
}

/// Brute-force graph isomorphism for small graphs (round-trip tests).
inline bool isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n || g1.p() != g2.p()) return false;
    auto degseq = [](const Graph& g) {
        std::vector<std::size_t> d(g.n, 0);
        for (const auto& [u, v] : g.edges) {
            ++d[u];
            ++d[v];
        }
        return d;
    };
    auto d1 = degseq(g1), d2 = degseq(g2);
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    std::set<std::pair<std::size_t, std::size_t>> e2(g2.edges.begin(), g2.edges.end());
    std::vector<std::size_t> perm(g1.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t v = 0; v < g1.n && ok; ++v) ok = d1[v] == d2[perm[v]];
        for (std::size_t i = 0; i < g1.p() && ok; ++i) {
            auto [u, v] = g1.edges[i];
            auto e = std::minmax(perm[u], perm[v]);
            ok = e2.count({e.first, e.second}) != 0;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// 3-uniform hypergraphs from gluing incidence matrices.
// ---------------------------------------------------------------------------

struct Hypergraph3 {
    std::size_t n = 0;
    std::vector<std::array<std::size_t, 3>> edges;
    std::vector<std::string> labels;

    std::size_t p() const { return edges.size(); }
};

inline IntMatrix hypergraph_incidence(const Hypergraph3& h) {
    IntMatrix m(h.n, h.p());
    for (std::size_t j = 0; j < h.p(); ++j)
        for (std::size_t v : h.edges[j]) m(v, j) = 1;
    return m;
}

inline RingContext hypergraph_ring(const Hypergraph3& h) {
    RingContext r;
    r.vars = h.labels;
    r.validate();
    return r;
}

inline BinomialIdeal toric_ideal_of_hypergraph(const Hypergraph3& h, Budget budget = {}) {
    return toric_ideal(hypergraph_incidence(h), hypergraph_ring(h), budget);
}

/// Glue the incidence matrices of two graphs (Theorem thm:A+B=C applied to
/// incidence matrices).  The result is 0/1 with exactly three ones per
/// column, i.e. the incidence matrix of a 3-uniform hypergraph on
/// n1 + n2 - 1 vertices with p1 + p2 - 1 edges.
inline Hypergraph3 graphs_to_hypergraph(const Graph& g1, const Graph& g2, std::size_t e1,
                                        std::size_t e2) {
    if (e1 >= g1.p() || e2 >= g2.p())
        throw std::invalid_argument("hypergraph glue: edge index out of range");
    GluingSpec spec;
    spec.col_a = e1;
    spec.col_b = e2;
    GluedResult g = glue_homogeneous(incidence_matrix(g1), incidence_matrix(g2), spec);

    Hypergraph3 h;
    h.n = g.c.rows();
    for (std::size_t j = 0; j < g.c.cols(); ++j) {
        std::array<std::size_t, 3> triple{};
        std::size_t found = 0;
        for (std::size_t i = 0; i < g.c.rows(); ++i) {
            if (g.c(i, j) == 0) continue;
            if (g.c(i, j) != 1 || found == 3)
                throw std::logic_error("hypergraph glue: glued matrix is not 3-uniform 0/1");
            triple[found++] = i;
        }
        if (found != 3) throw std::logic_error("hypergraph glue: column does not have three ones");
        h.edges.push_back(triple);
        h.labels.push_back(g.ring_c.vars[j]);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Theorem thm:gluingGraphs, all three parts.
// ---------------------------------------------------------------------------

enum class GraphSplitKind { split, no_split };

struct GraphSplitCheck {
    bool bipartite1 = false, bipartite2 = false;
    GraphSplitKind kind = GraphSplitKind::no_split;  // what actually happened
    bool matches_theorem = false;       // split <=> at least one part bipartite
    bool rank_additivity = false;       // rank A(G) = rank1 + rank2 - 1
    bool rank_matches_bipartite = false;
    GluedGraph glued;
    SplitReport graph_report;
    std::optional<Hypergraph3> hypergraph;
    std::optional<SplitReport> hypergraph_report;
};

/// Glue two graphs along an edge, test whether I_G = I_G1 + I_G2, compare
/// the outcome against the bipartiteness criterion, and when neither part is
/// bipartite build the 3-uniform hypergraph whose ideal does split.
inline GraphSplitCheck check_graph_splitting(const Graph& g1, const Graph& g2,
                                             const EdgeGluingSpec& spec, Budget budget = {},
                                             int jobs = 1, bool force_hypergraph = false) {
    GraphSplitCheck out;
    out.bipartite1 = is_bipartite(g1);
    out.bipartite2 = is_bipartite(g2);
    out.glued = glue_graphs_along_edge(g1, g2, spec);

    const Graph& g = out.glued.graph;
    IntMatrix inc = incidence_matrix(g);
    RingContext ring = graph_ring(g);

    SplitReport& rep = out.graph_report;
    rep.rank_a = rank(incidence_matrix(g1));
    rep.rank_b = rank(incidence_matrix(g2));
    rep.rank_c = rank(inc);
    rep.rank_ok = rep.rank_c == rep.rank_a + rep.rank_b - 1;
    rep.height_a = g1.p() - rep.rank_a;
    rep.height_b = g2.p() - rep.rank_b;
    rep.height_c = g.p() - rep.rank_c;
    rep.height_ok = rep.height_c == rep.height_a + rep.height_b;
    out.rank_additivity = rep.rank_ok;
    out.rank_matches_bipartite = rep.rank_ok == (out.bipartite1 || out.bipartite2);

    try {
        auto lhs_task =
            detail::run_maybe_async([&] { return toric_ideal(inc, ring, budget); }, jobs);
        // embedded part ideals: toric ideals of the edge-column submatrices
        auto embed = [&](const std::vector<std::size_t>& cols) {
            BinomialIdeal part = toric_ideal(select_columns(inc, cols), budget);
            return extend_ring(part, ring, cols);
        };
        BinomialIdeal rhs = ideal_sum(embed(out.glued.edges_from_g1),
                                      embed(out.glued.edges_from_g2));
        BinomialIdeal lhs = lhs_task.get();
        rep.ideal_ok = ideal_equals(lhs, rhs, budget);
        rep.lhs = groebner_basis(lhs, budget);
        rep.rhs = groebner_basis(rhs, budget);
        // the sum is always contained in I_G; a failed split must still contain
        for (const auto& gen : rep.rhs->elements)
            if (!normal_form(gen, *rep.lhs).is_zero())
                throw std::logic_error("graph check: part ideal not contained in I_G");
        out.kind = rep.ideal_ok ? GraphSplitKind::split : GraphSplitKind::no_split;
        out.matches_theorem = rep.ideal_ok == (out.bipartite1 || out.bipartite2);
        rep.status = out.matches_theorem ? SplitStatus::ok : SplitStatus::fail;
    } catch (const BudgetExceeded& e) {
        rep.status = SplitStatus::unverified_budget;
        rep.note = e.what();
        return out;
    }

    if ((!out.bipartite1 && !out.bipartite2) || force_hypergraph) {
        out.hypergraph = graphs_to_hypergraph(g1, g2, spec.e1, spec.e2);
        SplitReport hrep;
        const Hypergraph3& h = *out.hypergraph;
        IntMatrix hinc = hypergraph_incidence(h);
        RingContext hring = hypergraph_ring(h);
        hrep.rank_a = rank(incidence_matrix(g1));
        hrep.rank_b = rank(incidence_matrix(g2));
        hrep.rank_c = rank(hinc);
        hrep.rank_ok = hrep.rank_c == hrep.rank_a + hrep.rank_b - 1;
        hrep.height_a = g1.p() - hrep.rank_a;
        hrep.height_b = g2.p() - hrep.rank_b;
        hrep.height_c = h.p() - hrep.rank_c;
        hrep.height_ok = hrep.height_c == hrep.height_a + hrep.height_b;
        try {
            auto lhs_task = detail::run_maybe_async(
                [&] { return toric_ideal(hinc, hring, budget); }, jobs);
            // positions of each part's edges inside the hypergraph: G1's edges
            // fill the x block with e1 landing on z, G2's fill z and the y block
            const std::size_t p1 = g1.p();
            std::vector<std::size_t> cols1(g1.p()), cols2(g2.p());
            for (std::size_t j = 0; j < g1.p(); ++j)
                cols1[j] = j == spec.e1 ? p1 - 1 : (j < spec.e1 ? j : j - 1);
            for (std::size_t j = 0; j < g2.p(); ++j)
                cols2[j] = j == spec.e2 ? p1 - 1 : p1 + (j < spec.e2 ? j : j - 1);
            auto embed = [&](const std::vector<std::size_t>& cols) {
                BinomialIdeal part = toric_ideal(select_columns(hinc, cols), budget);
                return extend_ring(part, hring, cols);
            };
            BinomialIdeal rhs = ideal_sum(embed(cols1), embed(cols2));
            BinomialIdeal lhs = lhs_task.get();
            hrep.ideal_ok = ideal_equals(lhs, rhs, budget);
            hrep.lhs = groebner_basis(lhs, budget);
            hrep.rhs = groebner_basis(rhs, budget);
            hrep.status = hrep.ideal_ok && hrep.rank_ok ? SplitStatus::ok : SplitStatus::fail;
        } catch (const BudgetExceeded& e) {
            hrep.status = SplitStatus::unverified_budget;
            hrep.note = e.what();
        }
        out.hypergraph_report = hrep;
    }
    return out;
}

}  // namespace toriglue

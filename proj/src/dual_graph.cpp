#include "moduli/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace moduli {

namespace {

std::pair<int, int> normalized_edge(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

} // namespace

DualGraph::DualGraph(std::vector<Vertex> vs, std::vector<std::pair<int, int>> es,
                     std::map<int, int> ls)
    : vertices(std::move(vs)), edges(std::move(es)), legs(std::move(ls)) {
    if (vertices.empty()) throw Error("dual graph needs at least one vertex");
    std::set<int> ids;
    for (const auto& v : vertices) {
        if (v.genus < 0) throw Error("vertex genus must be nonnegative");
        if (!ids.insert(v.id).second) throw InvalidIndexError("duplicate vertex id");
    }
    for (auto& e : edges) {
        e = normalized_edge(e);
        if (!ids.count(e.first) || !ids.count(e.second))
            throw InvalidIndexError("edge endpoint is not a vertex id");
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [mark, vid] : legs) {
        (void)mark;
        if (!ids.count(vid)) throw InvalidIndexError("leg attaches to unknown vertex id");
    }
}

const DualGraph::Vertex& DualGraph::vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw InvalidIndexError("no vertex with the requested id");
}

long long DualGraph::degree(int id) const {
    vertex(id);
    long long d = 0;
    for (const auto& e : edges) {
        if (e.first == id) ++d;
        if (e.second == id) ++d;
    }
    return d;
}

long long DualGraph::leg_count(int id) const {
    vertex(id);
    long long c = 0;
    for (const auto& [mark, vid] : legs) {
        (void)mark;
        if (vid == id) ++c;
    }
    return c;
}

long long arithmetic_genus(const DualGraph& g) {
    std::set<int> seen;
    std::queue<int> frontier;
    frontier.push(g.vertices.front().id);
    seen.insert(g.vertices.front().id);
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (const auto& e : g.edges) {
            int other = -1;
            if (e.first == cur) other = e.second;
            else if (e.second == cur) other = e.first;
            else continue;
            if (seen.insert(other).second) frontier.push(other);
        }
    }
    if (seen.size() != g.vertices.size())
        throw DisconnectedError("dual graph is not connected");
    long long total = 0;
    for (const auto& v : g.vertices) total += v.genus;
    return total + static_cast<long long>(g.edges.size()) -
           static_cast<long long>(g.vertices.size()) + 1;
}

bool is_stable(const DualGraph& g) {
    for (const auto& v : g.vertices)
        if (2 * v.genus - 2 + g.degree(v.id) + g.leg_count(v.id) <= 0) return false;
    return true;
}

DualGraph smooth_edge(const DualGraph& g, std::pair<int, int> e) {
    e = normalized_edge(e);
    auto it = std::find(g.edges.begin(), g.edges.end(), e);
    if (it == g.edges.end()) throw EdgeNotFoundError("no such edge to smooth");

    std::vector<std::pair<int, int>> rest;
    rest.reserve(g.edges.size() - 1);
    bool removed = false;
    for (const auto& f : g.edges) {
        if (!removed && f == e) {
            removed = true;
            continue;
        }
        rest.push_back(f);
    }

    if (e.first == e.second) {
        std::vector<DualGraph::Vertex> vs = g.vertices;
        for (auto& v : vs)
            if (v.id == e.first) v.genus += 1;
        return DualGraph(std::move(vs), std::move(rest), g.legs);
    }

    int keep = e.first;
    int drop = e.second;
    std::vector<DualGraph::Vertex> vs;
    vs.reserve(g.vertices.size() - 1);
    long long merged_genus = g.vertex(keep).genus + g.vertex(drop).genus;
    for (const auto& v : g.vertices) {
        if (v.id == drop) continue;
        if (v.id == keep) vs.push_back({keep, merged_genus});
        else vs.push_back(v);
    }
    for (auto& f : rest) {
        if (f.first == drop) f.first = keep;
        if (f.second == drop) f.second = keep;
    }
    std::map<int, int> ls = g.legs;
    for (auto& [mark, vid] : ls) {
        (void)mark;
        if (vid == drop) vid = keep;
    }
    return DualGraph(std::move(vs), std::move(rest), std::move(ls));
}

GraphKey canonical_key(const DualGraph& g) {
    const std::size_t n = g.vertices.size();
    if (n > 8) throw TooLargeError("canonical form is brute force; at most 8 vertices");

    std::map<int, int> pos;
    for (std::size_t p = 0; p < n; ++p) pos[g.vertices[p].id] = static_cast<int>(p);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    bool have_best = false;
    GraphKey best;
    do {
        GraphKey cand;
        cand.genus.resize(n);
        for (std::size_t p = 0; p < n; ++p) cand.genus[perm[p]] = g.vertices[p].genus;
        cand.edges.reserve(g.edges.size());
        for (const auto& e : g.edges) {
            int a = perm[pos[e.first]];
            int b = perm[pos[e.second]];
            if (a > b) std::swap(a, b);
            cand.edges.emplace_back(a, b);
        }
        std::sort(cand.edges.begin(), cand.edges.end());
        cand.legs.reserve(g.legs.size());
        for (const auto& [mark, vid] : g.legs) cand.legs.emplace_back(mark, perm[pos[vid]]);
        if (!have_best || cand < best) {
            best = std::move(cand);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<DualGraph> all_smoothings(const DualGraph& g) {
    if (g.edges.size() > 16)
        throw TooLargeError("smoothing closure is exhaustive; at most 16 edges");
    arithmetic_genus(g); // connectivity check up front

    std::map<GraphKey, DualGraph> closure;
    std::queue<DualGraph> frontier;
    closure.emplace(canonical_key(g), g);
    frontier.push(g);
    while (!frontier.empty()) {
        DualGraph cur = std::move(frontier.front());
        frontier.pop();
        std::set<std::pair<int, int>> distinct(cur.edges.begin(), cur.edges.end());
        for (const auto& e : distinct) {
            DualGraph next = smooth_edge(cur, e);
            GraphKey key = canonical_key(next);
            if (closure.emplace(key, next).second) frontier.push(std::move(next));
        }
    }

    std::vector<DualGraph> out;
    out.reserve(closure.size());
    for (auto& [key, graph] : closure) {
        (void)key;
        out.push_back(std::move(graph));
    }
    return out;
}

Stratum Stratum::irr() { return Stratum{Kind::Irr, 0, {}}; }

Stratum Stratum::split(long long i, std::vector<int> S) {
    return Stratum{Kind::Split, i, std::move(S)};
}

bool lies_in_boundary(const DualGraph& g, const Stratum& stratum) {
    const long long genus = arithmetic_genus(g);
    std::set<int> marks;
    for (const auto& [mark, vid] : g.legs) {
        (void)mark;
        marks.insert(mark);
    }

    DualGraph target = [&]() -> DualGraph {
        if (stratum.kind == Stratum::Kind::Irr) {
            if (genus < 1)
                throw InvalidStratumError("irreducible-node stratum needs genus >= 1");
            std::map<int, int> ls;
            for (int m : marks) ls[m] = 0;
            return DualGraph({{0, genus - 1}}, {{0, 0}}, std::move(ls));
        }
        if (stratum.i < 0 || stratum.i > genus)
            throw InvalidStratumError("splitting genus out of range");
        std::set<int> side(stratum.S.begin(), stratum.S.end());
        if (side.size() != stratum.S.size())
            throw InvalidStratumError("repeated marking in stratum");
        for (int m : side)
            if (!marks.count(m)) throw InvalidStratumError("stratum marking is not a leg");
        const long long on_i = static_cast<long long>(side.size());
        const long long on_rest = static_cast<long long>(marks.size()) - on_i;
        if (stratum.i == 0 && on_i < 2)
            throw InvalidStratumError("genus-0 side needs at least two markings");
        if (stratum.i == genus && on_rest < 2)
            throw InvalidStratumError("genus-0 side needs at least two markings");
        std::map<int, int> ls;
        for (int m : marks) ls[m] = side.count(m) ? 0 : 1;
        return DualGraph({{0, stratum.i}, {1, genus - stratum.i}}, {{0, 1}}, std::move(ls));
    }();

    const GraphKey wanted = canonical_key(target);
    for (const DualGraph& h : all_smoothings(g))
        if (canonical_key(h) == wanted) return true;
    return false;
}

std::vector<std::pair<std::string, DualGraph>> genus13_pencil_graphs() {
    std::vector<std::pair<std::string, DualGraph>> out;

    {
        std::vector<std::pair<int, int>> es(8, {0, 1});
        out.emplace_back("family1", DualGraph({{0, 0}, {1, 6}}, std::move(es)));
    }
    {
        std::vector<std::pair<int, int>> es(8, {0, 1});
        es.emplace_back(1, 1);
        out.emplace_back("family2", DualGraph({{0, 0}, {1, 5}}, std::move(es)));
    }
    for (int a = 0; a <= 8; ++a) {
        const int b = 8 - a;
        std::vector<std::pair<int, int>> es;
        for (int k = 0; k < a; ++k) es.emplace_back(0, 1);
        for (int k = 0; k < b; ++k) es.emplace_back(0, 2);
        es.emplace_back(1, 2);
        std::ostringstream name;
        name << "family3_a" << a << "_b" << b;
        out.emplace_back(name.str(), DualGraph({{0, 6}, {1, 0}, {2, 0}}, std::move(es)));
    }
    for (int a = 0; a <= 8; ++a) {
        const int b = 8 - a;
        std::vector<std::pair<int, int>> es;
        es.emplace_back(0, 0);
        for (int k = 0; k < a; ++k) es.emplace_back(0, 1);
        for (int k = 0; k < b; ++k) es.emplace_back(0, 2);
        es.emplace_back(1, 2);
        std::ostringstream name;
        name << "family4_a" << a << "_b" << b;
        out.emplace_back(name.str(), DualGraph({{0, 5}, {1, 0}, {2, 0}}, std::move(es)));
    }
    return out;
}

} // namespace moduli

#include "densitometer/digraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsm::nbrw {

namespace {

Digraph from_pairs(const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) throw std::invalid_argument("edge list: empty input");
    int n = 0;
    for (auto [s, t] : edges) {
        if (s < 0 || t < 0) throw std::invalid_argument("edge list: negative vertex id");
        n = std::max({n, s + 1, t + 1});
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [s, t] : edges) adj[s].push_back(t);
    const int d = static_cast<int>(adj[0].size());
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(adj[v].size()) != d)
            throw std::invalid_argument(
                "edge list: vertex " + std::to_string(v) + " has out-degree " +
                std::to_string(adj[v].size()) + ", expected " + std::to_string(d));
    if (d == 0) throw std::invalid_argument("edge list: zero out-degree");
    Digraph g;
    g.n = n;
    g.d = d;
    g.out.reserve(static_cast<std::size_t>(n) * d);
    for (const auto& nb : adj) g.out.insert(g.out.end(), nb.begin(), nb.end());
    return g;
}

std::vector<std::pair<int, int>> parse_pairs(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long s, t;
        if (!(ls >> s)) continue;  // blank line
        if (!(ls >> t)) throw std::invalid_argument("edge list: malformed line '" + line + "'");
        edges.emplace_back(static_cast<int>(s), static_cast<int>(t));
    }
    return edges;
}

}  // namespace

Digraph from_edge_list(std::istream& in) { return from_pairs(parse_pairs(in)); }

Digraph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

Digraph read_graph_file(std::istream& in) {
    long long n, d;
    if (!(in >> n >> d)) throw std::invalid_argument("graph file: missing 'n d' header");
    std::string rest;
    std::getline(in, rest);
    auto edges = parse_pairs(in);
    for (auto [s, t] : edges)
        if (s >= n || t >= n)
            throw std::invalid_argument("graph file: vertex id out of range");
    Digraph g = from_pairs(edges);
    if (g.n > n) throw std::invalid_argument("graph file: header n too small");
    if (g.n < n) {
        // isolated trailing vertices are impossible in a d-out-regular graph
        throw std::invalid_argument("graph file: vertex without out-edges");
    }
    if (g.d != d) throw std::invalid_argument("graph file: header d mismatch");
    return g;
}

void write_graph_file(std::ostream& out, const Digraph& g) {
    out << g.n << " " << g.d << "\n";
    for (int v = 0; v < g.n; ++v)
        for (int k = 0; k < g.d; ++k) out << v << " " << g.out_neighbor(v, k) << "\n";
}

int lift_vertex_id(const UndirectedGraph& base, int from, int to) {
    int id = 0;
    for (int u = 0; u < base.n; ++u)
        for (int v : base.adj[u]) {
            if (u == from && v == to) return id;
            ++id;
        }
    throw std::invalid_argument("lift_vertex_id: no such directed edge");
}

Digraph nonbacktracking_lift(const UndirectedGraph& base, bool transitive_hint) {
    if (base.k < 2)
        throw std::invalid_argument("nonbacktracking_lift: base degree must be >= 2");
    for (int v = 0; v < base.n; ++v)
        if (static_cast<int>(base.adj[v].size()) != base.k)
            throw std::invalid_argument("nonbacktracking_lift: base graph not regular");

    std::map<std::pair<int, int>, int> id;
    int next = 0;
    for (int u = 0; u < base.n; ++u)
        for (int v : base.adj[u]) id[{u, v}] = next++;

    Digraph g;
    g.n = next;
    g.d = base.k - 1;
    g.out.resize(static_cast<std::size_t>(g.n) * g.d);
    for (const auto& [edge, eid] : id) {
        auto [u, v] = edge;
        int slot = 0;
        for (int w : base.adj[v]) {
            if (w == u) continue;
            g.out[static_cast<std::size_t>(eid) * g.d + slot++] = id.at({v, w});
        }
        if (slot != g.d)
            throw std::logic_error("nonbacktracking_lift: backtrack slot mismatch");
    }
    if (transitive_hint) g.symmetry = {true, 1};
    return g;
}

Digraph cayley_digraph(const std::vector<std::vector<int>>& generators,
                       std::size_t closure_cap) {
    if (generators.empty())
        throw std::invalid_argument("cayley_digraph: no generators");
    const std::size_t deg = generators[0].size();
    for (const auto& s : generators) {
        if (s.size() != deg)
            throw std::invalid_argument("cayley_digraph: generators act on different sets");
        std::vector<char> seen(deg, 0);
        for (int img : s) {
            if (img < 0 || static_cast<std::size_t>(img) >= deg || seen[img])
                throw std::invalid_argument("cayley_digraph: generator is not a permutation");
            seen[img] = 1;
        }
    }

    std::vector<int> identity(deg);
    std::iota(identity.begin(), identity.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elements;
    index[identity] = 0;
    elements.push_back(identity);
    std::vector<int> out_edges;

    for (std::size_t head = 0; head < elements.size(); ++head) {
        std::vector<int> g = elements[head];
        for (const auto& s : generators) {
            std::vector<int> h(deg);
            for (std::size_t i = 0; i < deg; ++i) h[i] = s[g[i]];  // g then s
            auto [it, inserted] = index.try_emplace(h, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(std::move(h));
                if (elements.size() > closure_cap)
                    throw std::invalid_argument("cayley_digraph: closure exceeds cap");
            }
            out_edges.push_back(it->second);
        }
    }

    Digraph dg;
    dg.n = static_cast<int>(elements.size());
    dg.d = static_cast<int>(generators.size());
    dg.out = std::move(out_edges);
    dg.symmetry = {true, 1};
    return dg;
}

Digraph directed_cycle(int n) {
    if (n < 1) throw std::invalid_argument("directed_cycle: n must be >= 1");
    Digraph g;
    g.n = n;
    g.d = 1;
    g.out.resize(n);
    for (int v = 0; v < n; ++v) g.out[v] = (v + 1) % n;
    g.symmetry = {true, 1};
    return g;
}

Digraph complete_with_loops(int n) {
    if (n < 1) throw std::invalid_argument("complete_with_loops: n must be >= 1");
    Digraph g;
    g.n = n;
    g.d = n;
    g.out.resize(static_cast<std::size_t>(n) * n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) g.out[static_cast<std::size_t>(v) * n + w] = w;
    g.symmetry = {true, 1};
    return g;
}

UndirectedGraph complete_graph(int n) {
    UndirectedGraph g{n, n - 1, std::vector<std::vector<int>>(n)};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.adj[u].push_back(v);
    return g;
}

UndirectedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    UndirectedGraph g{n, 2, std::vector<std::vector<int>>(n)};
    for (int v = 0; v < n; ++v) {
        g.adj[v].push_back((v + 1) % n);
        g.adj[v].push_back((v + n - 1) % n);
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    return g;
}

UndirectedGraph petersen_graph() {
    UndirectedGraph g{10, 3, std::vector<std::vector<int>>(10)};
    auto link = [&](int a, int b) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    };
    for (int i = 0; i < 5; ++i) {
        link(i, (i + 1) % 5);        // outer pentagon
        link(5 + i, 5 + (i + 2) % 5); // inner pentagram
        link(i, 5 + i);               // spokes
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

UndirectedGraph random_regular_graph(int n, int k, std::uint64_t seed) {
    if (k < 2 || k >= n) throw std::invalid_argument("random_regular_graph: need 2 <= k < n");
    if (k % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("random_regular_graph: odd k needs even n");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::set<std::pair<int, int>> edges;
        bool ok = true;

        auto add_edge = [&](int a, int b) {
            if (a == b) return false;
            auto e = std::minmax(a, b);
            return edges.insert({e.first, e.second}).second;
        };

        for (int rep = 0; rep < k / 2 && ok; ++rep) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            // edges of a random cyclic arrangement: a Hamilton cycle
            for (int i = 0; i < n && ok; ++i)
                ok = add_edge(perm[i], perm[(i + 1) % n]);
        }
        if (ok && k % 2 == 1) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < n && ok; i += 2) ok = add_edge(perm[i], perm[i + 1]);
        }
        if (!ok) continue;

        UndirectedGraph g{n, k, std::vector<std::vector<int>>(n)};
        for (auto [a, b] : edges) {
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
        }
        for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
        bool regular = std::all_of(g.adj.begin(), g.adj.end(), [&](const auto& nb) {
            return static_cast<int>(nb.size()) == k;
        });
        if (regular) return g;
    }
    throw std::runtime_error("random_regular_graph: sampling did not produce a simple graph");
}

std::vector<int> bfs_distances(const Digraph& g, int source) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int k = 0; k < g.d; ++k) {
            int w = g.out_neighbor(v, k);
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool strongly_connected(const Digraph& g) {
    auto fwd = bfs_distances(g, 0);
    if (std::any_of(fwd.begin(), fwd.end(), [](int d) { return d < 0; })) return false;
    // reverse graph reachability
    std::vector<std::vector<int>> rin(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int k = 0; k < g.d; ++k) rin[g.out_neighbor(v, k)].push_back(v);
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : rin[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

int period(const Digraph& g) {
    std::vector<int> level = bfs_distances(g, 0);
    long long gcd = 0;
    for (int v = 0; v < g.n; ++v) {
        if (level[v] < 0)
            throw std::invalid_argument("period: graph is not strongly connected from 0");
        for (int k = 0; k < g.d; ++k) {
            int w = g.out_neighbor(v, k);
            gcd = std::gcd(gcd, static_cast<long long>(level[v] + 1 - level[w]));
        }
    }
    return static_cast<int>(gcd == 0 ? 1 : gcd);
}

int undirected_girth(const UndirectedGraph& g) {
    int best = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int cyc = dist[v] + dist[w] + 1;
                    if (best == -1 || cyc < best) best = cyc;
                }
            }
        }
    }
    return best;
}

}  // namespace dsm::nbrw

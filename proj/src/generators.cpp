#include "bipartify/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bipartify {

const char* model_name(Model m) {
    switch (m) {
        case Model::ER: return "ER";
        case Model::WS: return "WS";
        case Model::RG: return "RG";
        case Model::BA: return "BA";
    }
    return "?";
}

int model_tag(Model m) { return static_cast<int>(m); }

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string ModelSpec::params_str() const {
    switch (model) {
        case Model::ER: return "p=" + fmt_double(p);
        case Model::WS: return "psi=" + fmt_double(psi) + ";k=" + std::to_string(k);
        case Model::RG: return "r=" + fmt_double(r) + ";l=" + std::to_string(norm_l);
        case Model::BA: return "m=" + std::to_string(m);
    }
    return "";
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p outside [0,1]");
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

Graph watts_strogatz(int n, int k, double psi, Rng& rng) {
    if (k % 2 != 0 || k >= n || k < 0) throw InvalidKError("watts_strogatz: need even k < n");
    if (psi < 0.0 || psi > 1.0) throw std::invalid_argument("watts_strogatz: psi outside [0,1]");

    std::vector<VertexPair> lattice;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k / 2; ++j) {
            const int w = (i + j) % n;
            lattice.emplace_back(std::min(i, w), std::max(i, w));
        }
    std::sort(lattice.begin(), lattice.end());
    lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<VertexPair> edges = lattice;
    for (auto [u, v] : lattice) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }

    for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
        if (rng.uniform() >= psi) continue;
        const auto [u, v] = lattice[idx];
        // valid replacements: not u itself and not an existing neighbor of u
        if (n - 1 - deg[static_cast<std::size_t>(u)] == 0) continue;  // keep original edge
        int w;
        do {
            w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        } while (w == u || adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]);

        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 0;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 0;
        --deg[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = 1;
        adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = 1;
        ++deg[static_cast<std::size_t>(w)];
        edges[idx] = {std::min(u, w), std::max(u, w)};
    }
    return from_edge_list(n, edges);
}

Graph random_geometric(int n, double r, Rng& rng) {
    if (!(r > 0.0)) throw std::invalid_argument("random_geometric: r must be positive");
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = rng.uniform();
        y[static_cast<std::size_t>(i)] = rng.uniform();
    }
    const double r2 = r * r;
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double dx = x[static_cast<std::size_t>(u)] - x[static_cast<std::size_t>(v)];
            const double dy = y[static_cast<std::size_t>(u)] - y[static_cast<std::size_t>(v)];
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    return from_edge_list(n, edges);
}

Graph barabasi_albert(int n, int m, Rng& rng) {
    if (m < 1 || m >= n) throw InvalidMError("barabasi_albert: need 1 <= m < n");

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<VertexPair> edges;
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    std::vector<int> targets;
    long total_deg = 0;

    for (int t = m; t < n; ++t) {
        targets.clear();
        std::fill(chosen.begin(), chosen.begin() + t, 0);
        for (int pick = 0; pick < m; ++pick) {
            int w;
            if (total_deg == 0) {
                do {
                    w = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
                } while (chosen[static_cast<std::size_t>(w)]);
            } else {
                do {
                    long x = static_cast<long>(rng.below(static_cast<std::uint64_t>(total_deg)));
                    w = 0;
                    while (x >= deg[static_cast<std::size_t>(w)]) {
                        x -= deg[static_cast<std::size_t>(w)];
                        ++w;
                    }
                } while (chosen[static_cast<std::size_t>(w)]);
            }
            chosen[static_cast<std::size_t>(w)] = 1;
            targets.push_back(w);
        }
        for (int w : targets) {
            edges.emplace_back(w, t);
            ++deg[static_cast<std::size_t>(w)];
            ++deg[static_cast<std::size_t>(t)];
            total_deg += 2;
        }
    }
    return from_edge_list(n, edges);
}

std::pair<Graph, ModelSpec> sample_instance(Model model, int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("sample_instance: need n >= 3");
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ModelSpec spec;
        spec.model = model;
        spec.n = n;
        Graph g;
        switch (model) {
            case Model::ER:
                spec.p = 0.2 + 0.8 * rng.uniform();
                g = erdos_renyi(n, spec.p, rng);
                break;
            case Model::WS:
                spec.psi = 0.3 * rng.uniform();
                spec.k = 8;
                g = watts_strogatz(n, spec.k, spec.psi, rng);
                break;
            case Model::RG:
                spec.r = 0.5 + 0.5 * rng.uniform();
                spec.norm_l = 2;
                g = random_geometric(n, spec.r, rng);
                break;
            case Model::BA:
                spec.m = 1 + static_cast<int>(rng.below(10));
                if (spec.m >= n) continue;  // unrealizable draw counts as a rejection
                g = barabasi_albert(n, spec.m, rng);
                break;
        }
        if (is_connected(g) && !two_color(g).has_value()) return {std::move(g), spec};
    }
    throw ExhaustedResamplingError("sample_instance: no acceptable " +
                                   std::string(model_name(model)) + " instance in " +
                                   std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace bipartify

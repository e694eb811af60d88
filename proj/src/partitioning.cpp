#include "bipartify/partitioning.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bipartify {

const char* method_name(Method m) {
    switch (m) {
        case Method::LocalSwitching: return "LocalSwitching";
        case Method::EigenA: return "EigenA";
        case Method::EigenQ: return "EigenQ";
        case Method::EigenL: return "EigenL";
        case Method::EigenNL: return "EigenNL";
        case Method::GreedyBetaNew: return "GreedyBetaNew";
        case Method::GreedyPhiA: return "GreedyPhiA";
        case Method::GreedyPhiNL: return "GreedyPhiNL";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& token) {
    std::string key;
    for (char c : token) {
        if (c == '-' || c == '_') continue;
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (Method m : kAllMethods) {
        std::string name;
        for (char c : std::string(method_name(m)))
            name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (key == name) return m;
    }
    return std::nullopt;
}

bool is_greedy_method(Method m) {
    return m == Method::GreedyBetaNew || m == Method::GreedyPhiA || m == Method::GreedyPhiNL;
}

int method_tag(Method m) { return static_cast<int>(m); }

Bipartition movement_routine(const Graph& g, Bipartition part, Side start_part,
                             std::vector<VertexMove>* trace) {
    const int n = g.vertex_count();
    if (part.size() != n)
        throw std::invalid_argument("movement_routine: partition does not label this graph");

    std::vector<char> moved(static_cast<std::size_t>(n), 0);
    Side active = start_part;
    int quiet_scans = 1;
    int crossing = cut_report(g, part).crossing;

    while (quiet_scans <= 2) {
        bool moved_this_scan = false;
        for (int u = 0; u < n; ++u) {
            if (part.side[static_cast<std::size_t>(u)] != active || moved[static_cast<std::size_t>(u)])
                continue;
            const auto [ext, internal] = ext_int_degrees(g, part, u);
            if (2 * internal > ext + internal) {
                const int before = crossing;
                part.side[static_cast<std::size_t>(u)] = other(active);
                moved[static_cast<std::size_t>(u)] = 1;
                crossing += internal - ext;
                if (trace) trace->push_back({u, active, before, crossing});
                moved_this_scan = true;
                break;
            }
        }
        if (moved_this_scan)
            quiet_scans = 1;
        else
            ++quiet_scans;
        active = other(active);
    }
    return part;
}

MethodResult local_switching(const Graph& g, int restarts, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (restarts < 1) throw std::invalid_argument("local_switching: restarts must be >= 1");
    if (g.edge_count() < 1) throw std::invalid_argument("local_switching: graph has no edges");

    MethodResult best;
    best.method = Method::LocalSwitching;
    best.restarts_used = restarts;
    best.rng_seed = seed;
    bool have_best = false;

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < restarts; ++k) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(k)));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i >= 1; --i) {
            const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        Bipartition part(n, Side::Y);
        for (int i = 0; i < n / 2; ++i)
            part.side[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = Side::X;
        const Side start = rng.coin() ? Side::X : Side::Y;

        part = movement_routine(g, std::move(part), start);
        const CutReport cr = cut_report(g, part);
        if (!have_best || cr.r_b > best.r_b) {
            best.partition = part;
            best.retained_edges = cr.crossing;
            best.r_b = cr.r_b;
            have_best = true;
        }
    }
    return best;
}

Bipartition sign_partition(const std::vector<double>& vec, double tau, Rng& rng) {
    Bipartition part(static_cast<int>(vec.size()));
    for (std::size_t v = 0; v < vec.size(); ++v) {
        if (vec[v] > tau)
            part.side[v] = Side::X;
        else if (vec[v] < -tau)
            part.side[v] = Side::Y;
        else
            part.side[v] = rng.coin() ? Side::X : Side::Y;
    }
    return part;
}

MethodResult eigen_sign_partition(const Graph& g, MatrixKind kind, std::uint64_t seed) {
    if (g.edge_count() < 1)
        throw std::invalid_argument("eigen_sign_partition: graph has no edges");
    if (!is_connected(g))
        throw std::invalid_argument("eigen_sign_partition: graph not connected");

    const std::vector<double> vec = extremal_vector(g, kind);
    double max_abs = 0.0;
    for (double x : vec) max_abs = std::max(max_abs, std::abs(x));
    const double tau = 1e-8 * max_abs;

    Rng rng(seed);
    Bipartition part = sign_partition(vec, tau, rng);
    part = movement_routine(g, std::move(part), Side::X);

    const CutReport cr = cut_report(g, part);
    MethodResult res;
    switch (kind) {
        case MatrixKind::Adjacency: res.method = Method::EigenA; break;
        case MatrixKind::SignlessLaplacian: res.method = Method::EigenQ; break;
        case MatrixKind::Laplacian: res.method = Method::EigenL; break;
        case MatrixKind::NormalizedLaplacian: res.method = Method::EigenNL; break;
    }
    res.partition = part;
    res.retained_edges = cr.crossing;
    res.r_b = cr.r_b;
    res.restarts_used = 1;
    res.rng_seed = seed;
    return res;
}

}  // namespace bipartify

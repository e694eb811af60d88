#include "bipartify/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bipartify {

const char* matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::SignlessLaplacian: return "signless-laplacian";
        case MatrixKind::NormalizedLaplacian: return "normalized-laplacian";
    }
    return "?";
}

GraphMatrix build_matrix(const Graph& g, MatrixKind kind) {
    const int n = g.vertex_count();
    GraphMatrix m;
    m.kind = kind;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0.0);

    std::vector<double> inv_sqrt_deg;
    if (kind == MatrixKind::NormalizedLaplacian) {
        inv_sqrt_deg.resize(static_cast<std::size_t>(n), 0.0);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 0) inv_sqrt_deg[static_cast<std::size_t>(v)] = 1.0 / std::sqrt(double(g.degree(v)));
    }

    for (int v = 0; v < n; ++v) {
        switch (kind) {
            case MatrixKind::Adjacency: break;
            case MatrixKind::Laplacian:
            case MatrixKind::SignlessLaplacian: m.at(v, v) = double(g.degree(v)); break;
            case MatrixKind::NormalizedLaplacian:
                // Isolated vertices keep an all-zero row, contributing eigenvalue 0.
                m.at(v, v) = g.degree(v) > 0 ? 1.0 : 0.0;
                break;
        }
    }
    for (auto [u, v] : g.edges()) {
        double off = 0.0;
        switch (kind) {
            case MatrixKind::Adjacency: off = 1.0; break;
            case MatrixKind::Laplacian: off = -1.0; break;
            case MatrixKind::SignlessLaplacian: off = 1.0; break;
            case MatrixKind::NormalizedLaplacian:
                off = -inv_sqrt_deg[static_cast<std::size_t>(u)] *
                      inv_sqrt_deg[static_cast<std::size_t>(v)];
                break;
        }
        m.at(u, v) = off;
        m.at(v, u) = off;
    }
    return m;
}

double matrix_inf_norm(const GraphMatrix& m) {
    double norm = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) row += std::abs(m.at(i, j));
        norm = std::max(norm, row);
    }
    return norm;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double x = a[static_cast<std::size_t>(p) * n + q];
            sum += x * x;
        }
    return std::sqrt(2.0 * sum);
}

void canonicalize_sign(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-8) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

// Householder reduction of a symmetric matrix to tridiagonal form,
// values-only variant: eigenvector bookkeeping dropped.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[static_cast<std::size_t>(i) * n + k]);
            if (scale == 0.0) {
                e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[static_cast<std::size_t>(i) * n + k] /= scale;
                    h += a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(i) * n + k];
                }
                double f = a[static_cast<std::size_t>(i) * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<std::size_t>(i)] = scale * g;
                h -= f * g;
                a[static_cast<std::size_t>(i) * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += a[static_cast<std::size_t>(j) * n + k] * a[static_cast<std::size_t>(i) * n + k];
                    for (int k = j + 1; k <= l; ++k)
                        g += a[static_cast<std::size_t>(k) * n + j] * a[static_cast<std::size_t>(i) * n + k];
                    e[static_cast<std::size_t>(j)] = g / h;
                    f += e[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i) * n + j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[static_cast<std::size_t>(i) * n + j];
                    e[static_cast<std::size_t>(j)] = g = e[static_cast<std::size_t>(j)] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a[static_cast<std::size_t>(j) * n + k] -=
                            f * e[static_cast<std::size_t>(k)] + g * a[static_cast<std::size_t>(i) * n + k];
                }
            }
        } else {
            e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + l];
        }
        d[static_cast<std::size_t>(i)] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
}

// Implicit QL with shifts on a tridiagonal (d, e); d receives eigenvalues.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr int kMaxIter = 50;
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(n - 1)] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<std::size_t>(m)]) +
                                  std::abs(d[static_cast<std::size_t>(m + 1)]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <= 1e-16 * dd + 1e-300) break;
            }
            if (m != l) {
                if (++iter > kMaxIter)
                    throw NoConvergenceError("ql: eigenvalue " + std::to_string(l) +
                                             " not converged after " + std::to_string(kMaxIter) +
                                             " iterations");
                double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                           (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                    e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[static_cast<std::size_t>(i)];
                    const double b = c * e[static_cast<std::size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<std::size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<std::size_t>(i + 1)] -= p;
                        e[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<std::size_t>(i + 1)] - p;
                    r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<std::size_t>(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<std::size_t>(l)] -= p;
                e[static_cast<std::size_t>(l)] = g;
                e[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum sym_eigen(const GraphMatrix& m) {
    const int n = m.n;
    Spectrum out;
    if (n == 0) return out;

    std::vector<double> a = m.entries;
    std::vector<double> vec(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i) * n + i] = 1.0;

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double conv_tol = 1e-13 * std::max(1.0, frob);
    const long max_sweeps = 100L * n * n;

    long sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= conv_tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (std::abs(apq) < 1e-300) {
                    a[static_cast<std::size_t>(p) * n + q] = 0.0;
                    a[static_cast<std::size_t>(q) * n + p] = 0.0;
                    continue;
                }
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[static_cast<std::size_t>(r) * n + p];
                    const double arq = a[static_cast<std::size_t>(r) * n + q];
                    a[static_cast<std::size_t>(r) * n + p] = c * arp - s * arq;
                    a[static_cast<std::size_t>(p) * n + r] = c * arp - s * arq;
                    a[static_cast<std::size_t>(r) * n + q] = s * arp + c * arq;
                    a[static_cast<std::size_t>(q) * n + r] = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = vec[static_cast<std::size_t>(r) * n + p];
                    const double vrq = vec[static_cast<std::size_t>(r) * n + q];
                    vec[static_cast<std::size_t>(r) * n + p] = c * vrp - s * vrq;
                    vec[static_cast<std::size_t>(r) * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    if (sweep >= max_sweeps)
        throw NoConvergenceError("jacobi: sweep budget exhausted at n=" + std::to_string(n));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] < a[static_cast<std::size_t>(j) * n + j];
    });

    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
        const int col = order[static_cast<std::size_t>(k)];
        out.eigenvalues[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(col) * n + col];
        for (int r = 0; r < n; ++r)
            out.eigenvectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                vec[static_cast<std::size_t>(r) * n + col];
        canonicalize_sign(out.eigenvectors[static_cast<std::size_t>(k)]);
    }

    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto& v = out.eigenvectors[static_cast<std::size_t>(k)];
        const double lambda = out.eigenvalues[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
            double mv = 0.0;
            for (int j = 0; j < n; ++j) mv += m.at(i, j) * v[static_cast<std::size_t>(j)];
            residual = std::max(residual, std::abs(mv - lambda * v[static_cast<std::size_t>(i)]));
        }
    }
    out.residual = residual;
    return out;
}

std::vector<double> sym_eigenvalues(const GraphMatrix& m) {
    const int n = m.n;
    if (n == 0) return {};
    if (n == 1) return {m.entries[0]};
    std::vector<double> a = m.entries;
    std::vector<double> d(static_cast<std::size_t>(n), 0.0), e(static_cast<std::size_t>(n), 0.0);
    tridiagonalize(a, n, d, e);
    ql_implicit(d, e, n);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> extremal_vector(const Graph& g, MatrixKind kind) {
    const Spectrum spec = sym_eigen(build_matrix(g, kind));
    const bool smallest = kind == MatrixKind::Adjacency || kind == MatrixKind::SignlessLaplacian;
    return smallest ? spec.eigenvectors.front() : spec.eigenvectors.back();
}

std::vector<double> perron_vector(const Graph& g) {
    const Spectrum spec = sym_eigen(build_matrix(g, MatrixKind::Adjacency));
    std::vector<double> v = spec.eigenvectors.back();
    for (double x : v)
        if (x <= 1e-10)
            throw NotPositiveError("perron vector entry not strictly positive; input not connected?");
    return v;
}

}  // namespace bipartify

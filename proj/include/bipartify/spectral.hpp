#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bipartify/graph.hpp"

namespace bipartify {

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};
struct NotPositiveError : std::runtime_error {
    explicit NotPositiveError(const std::string& what) : std::runtime_error(what) {}
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, NormalizedLaplacian };

const char* matrix_kind_name(MatrixKind kind);

/// Dense symmetric n-by-n matrix of one of the four graph-matrix kinds.
/// Entries are built symmetrically, never symmetrized by tolerance.
struct GraphMatrix {
    MatrixKind kind = MatrixKind::Adjacency;
    int n = 0;
    std::vector<double> entries;  // row-major

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// Full symmetric eigendecomposition. Eigenvalues ascend (ties broken by
/// pre-sort index); eigenvectors[k] pairs with eigenvalues[k], the set is
/// orthonormal, and each vector is sign-canonicalized: its first entry of
/// magnitude above 1e-8 is positive. residual is max_k of the infinity norm
/// of M v_k - lambda_k v_k.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    double residual = 0.0;
};

GraphMatrix build_matrix(const Graph& g, MatrixKind kind);

/// Cyclic Jacobi rotations on a copy of m. Unconditionally convergent for
/// symmetric input; throws NoConvergenceError if the sweep budget (100*n^2)
/// is somehow exhausted first.
Spectrum sym_eigen(const GraphMatrix& m);

/// Eigenvalues only (ascending), via Householder tridiagonalization and
/// implicit QL. A cheaper route than sym_eigen for spectrum-only measures;
/// the two are cross-checked in the test suite.
std::vector<double> sym_eigenvalues(const GraphMatrix& m);

/// The eigenvector the sign-pattern methods consume: paired with the
/// smallest eigenvalue for Adjacency and SignlessLaplacian, with the largest
/// for Laplacian and NormalizedLaplacian. Sign-canonicalized.
std::vector<double> extremal_vector(const Graph& g, MatrixKind kind);

/// Eigenvector of the largest adjacency eigenvalue of a connected graph.
/// All entries strictly positive; throws NotPositiveError if any entry is
/// <= 1e-10 after canonicalization (a disconnected input slipped through).
std::vector<double> perron_vector(const Graph& g);

double matrix_inf_norm(const GraphMatrix& m);

}  // namespace bipartify

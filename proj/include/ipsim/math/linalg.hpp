#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ipsim {

/// Dense symmetric matrix stored row-major, n x n.
struct SymEigenResult {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column j (row-major storage) is eigenvector j
};

SymEigenResult sym_eigen(const std::vector<double>& a, std::size_t n);

/// Lower-triangular Cholesky factor (row-major); nullopt when the matrix is
/// not numerically positive definite.
std::optional<std::vector<double>> cholesky_lower(const std::vector<double>& a, std::size_t n);

double min_eigenvalue(const std::vector<double>& a, std::size_t n);

/// Repairs a symmetric matrix into a valid correlation matrix: symmetrize,
/// clip eigenvalues at `eig_floor`, rebuild, and renormalize to unit
/// diagonal. Idempotent on matrices that are already valid.
void psd_repair_correlation(std::vector<double>& a, std::size_t n, double eig_floor = 1e-8);

}  // namespace ipsim

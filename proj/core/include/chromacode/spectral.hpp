#pragma once

#include "chromacode/graph.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromacode {

constexpr double kDistinctTol = 1e-6;
constexpr std::size_t kDefaultSpectralGuard = 10000;

struct DistinctEigenvalue {
    double value = 0;
    std::size_t multiplicity = 0;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending, with multiplicity

    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
    // Ascending clusters of values closer than tol.
    std::vector<DistinctEigenvalue> distinct(double tol = kDistinctTol) const;
};

struct EigenDecomposition {
    Spectrum spectrum;
    Eigen::MatrixXd vectors;  // column k pairs with spectrum.eigenvalues[k]
    std::size_t sweeps = 0;
    double max_residual = 0;  // over the spot-checked pairs
};

// Cyclic Jacobi rotations; throws InvalidArgument when m is not symmetric within symmetry_tol.
EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& m, double tol = 1e-12, double symmetry_tol = 1e-9,
                                   std::size_t guard = kDefaultSpectralGuard);
Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-12, double symmetry_tol = 1e-9,
                               std::size_t guard = kDefaultSpectralGuard);
Spectrum graph_spectrum(const Graph& g);

struct Interval {
    double lo = 0;
    double hi = 0;
    bool contains(double x, double tol = 1e-9) const { return x >= lo - tol && x <= hi + tol; }
    bool operator==(const Interval&) const = default;
};

enum class GershgorinMode {
    scalar,
    block,         // centers: eigenvalues of the diagonal blocks
    block_nested,  // centers: scalar discs of the diagonal blocks
};

struct GershgorinIntervals {
    std::vector<Interval> intervals;
    GershgorinMode mode = GershgorinMode::scalar;
    std::size_t block_size = 1;

    Interval envelope() const;
    bool covers(double x, double tol = 1e-9) const;
};

GershgorinIntervals gershgorin(const Eigen::MatrixXd& m, GershgorinMode mode = GershgorinMode::scalar,
                               std::size_t block_size = 1);

// 2 + sum_{j=1}^{n-1} 2 V^j.
double cycle_power_largest_eig(std::size_t v, std::size_t n);
Spectrum all_ones_spectrum(std::size_t v);

struct SplitDecomposition {
    Eigen::MatrixXd a_gr;  // block diagonal, copies of the previous power
    Eigen::MatrixXd a_fc;  // cross-block remainder
    std::size_t block_size = 0;
};

struct SplitReport {
    SplitDecomposition split;
    Spectrum full;
    Spectrum gr;
    Spectrum fc;
    std::vector<double> index_sum;   // sorted gr[k] + sorted fc[k]
    std::vector<double> deviation;   // index_sum[k] - full[k]
    double lambda1_sum = 0;          // lambda_1(A_gr) + lambda_1(A_fc)
    double lambda1_iterative = 0;    // lambda_1(A) + sum_{j=2}^n lambda_1(A_fc^j)
};

SplitDecomposition split_decomposition(const Graph& gn);
SplitReport split_report(const Graph& gn, const Graph* base = nullptr);

struct SmallestEigBounds {
    double brigham = 0;
    double hong = 0;
    double das = 0;
};

SmallestEigBounds smallest_eig_lower_bounds(std::size_t v, std::size_t e, const std::vector<std::size_t>& degrees);
SmallestEigBounds smallest_eig_lower_bounds(std::size_t v, std::size_t e, std::size_t min_degree, std::size_t max_degree);
double hong_bound(double v);

enum class BoundVariant { hoffman_direct, cycle_power, degree, general, lambda1_window, gct_split };

std::string to_string(BoundVariant v);
BoundVariant bound_variant_from_string(const std::string& s);

struct BoundReport {
    std::string name;
    std::string source;
    double lower = 0;
    double upper = 0;
    std::optional<double> exact;
    std::map<std::string, double> details;
};

// floor that absorbs round-off just below an integer.
double robust_floor(double x);

// Bounds on χ(G^n). cycle_power requires g to be a cycle; the other variants
// accept any graph and materialize G^n where the equation needs its spectrum.
BoundReport chromatic_bounds_spectral(BoundVariant variant, const Graph& g, std::size_t n,
                                      std::size_t guard = kDefaultSpectralGuard);
BoundReport chromatic_bounds_cycle_power(std::size_t v, std::size_t n);

// Number of distinct eigenvalues of g^t for t = 1..n_max.
std::vector<std::size_t> distinct_eigenvalue_counts(const Graph& g, std::size_t n_max, double tol = kDistinctTol,
                                                    std::size_t guard = kDefaultSpectralGuard);

// Spectrum of the n-fold power of a connected regular graph from the spectrum of g alone.
Spectrum regular_power_spectrum(const Spectrum& base, std::size_t v, std::size_t n);

}  // namespace chromacode

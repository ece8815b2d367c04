#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sepsisrl/matrix.hpp"

// Compute kernels behind the training and clustering inner loops.
//
// Each kernel exists twice: a plain serial reference under kernels::serial
// and an OpenMP version under kernels::omp. Every output element is owned by
// exactly one thread and accumulated in a fixed order, so the two variants
// produce bitwise-identical results; tests assert that and the bench tool
// compares their throughput. The unqualified entry points dispatch on the
// process-wide parallel switch.

namespace sepsisrl::kernels {

// Global switch. Defaults to parallel when compiled with OpenMP.
bool parallel_enabled();
void set_parallel(bool enabled);
int max_threads();

namespace serial {

// C = A * B            (m x k) * (k x n)
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
// C = A^T * B          (k x m)^T * (k x n)
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
// C = A * B^T          (m x k) * (n x k)^T
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);

// For each row of `points`, index of the nearest row of `centroids` by
// squared Euclidean distance (ties to the lowest index), plus that distance.
void nearest_centroid(const Matrix& points, const Matrix& centroids,
                      std::vector<int>& assign, std::vector<double>& dist2);

}  // namespace serial

namespace omp {

void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
void nearest_centroid(const Matrix& points, const Matrix& centroids,
                      std::vector<int>& assign, std::vector<double>& dist2);

}  // namespace omp

void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
void nearest_centroid(const Matrix& points, const Matrix& centroids,
                      std::vector<int>& assign, std::vector<double>& dist2);

// Squared Euclidean distance between two equal-length vectors.
double dist2(std::span<const double> a, std::span<const double> b);

}  // namespace sepsisrl::kernels

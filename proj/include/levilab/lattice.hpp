#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace levilab {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Basis (as rows, in Hermite normal form) of the integer kernel
/// {v in Z^n : A v = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

} // namespace levilab

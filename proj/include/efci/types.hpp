#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace efci {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Row n of a trajectory holds u^n over every node, so rows are contiguous.
template <typename Scalar>
using RowMatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vector = VectorX<double>;
using RowMatrix = RowMatrixX<double>;
using VectorRef = Eigen::Ref<const Vector>;

/// Raised for violated preconditions and numerical failures. The message names
/// the offending quantity (residual, node index, step index, config field).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace efci

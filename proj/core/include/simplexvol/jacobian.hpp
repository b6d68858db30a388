#pragma once

#include "simplexvol/simplex.hpp"

#include <Eigen/Dense>

#include <optional>

namespace simplexvol {

/// Rows: (n-2)-faces keyed by complementary pairs. Columns: edges. Both lexicographic.
struct JacobianMatrix {
  int n = 0;
  Eigen::MatrixXd entries;
};

enum class EdgeVariable { length, squared_length };

/// Gradient of one face volume with respect to every edge of the simplex.
///
/// d(det C)/d(l_e^2) is twice the symmetric cofactor at the edge's position;
/// the chain rule through V = sqrt(V^2) and, for plain lengths, l_e^2 gives
/// dV/dl_e = (l_e / V) * dV^2/d(l_e^2). Entries for edges outside the face are 0.
/// Throws SingularityError if the face has zero volume.
Eigen::VectorXd face_volume_gradient(const SimplexSpec& spec, const Subset& face_vertices,
                                     EdgeVariable variable = EdgeVariable::length);

/// Jacobian of the codimension-2 face volumes with respect to edge lengths. Requires n >= 2.
JacobianMatrix analytic_jacobian(const SimplexSpec& spec,
                                 EdgeVariable variable = EdgeVariable::length);

/// Central differences in the plain edge lengths; default step is 1e-6 * mean edge length.
JacobianMatrix fd_jacobian(const SimplexSpec& spec, std::optional<double> step = std::nullopt);

struct RegularPointConstants {
  double nu = 0.0;  ///< volume of the unit regular (n-2)-simplex
  double c = 0.0;   ///< J(p1) = c * M
};

RegularPointConstants regular_point_constants(int n);

struct RankReport {
  int rank = 0;
  double sv_ratio = 0.0;  ///< smallest / largest singular value
  double smallest = 0.0;
  double largest = 0.0;
};

RankReport jacobian_rank(const JacobianMatrix& jacobian, double rel_threshold = 1e-8);
RankReport jacobian_rank(const SimplexSpec& spec, double rel_threshold = 1e-8);

struct RegularPointReport {
  int n = 0;
  double c = 0.0;
  double max_abs_deviation = 0.0;  ///< max |J(p1) - c M|
  int rank = 0;
  double sv_ratio = 0.0;

  bool passed(double tol) const;
};

RegularPointReport verify_regular_point(int n);

/// max over d-faces F of |sum_e l_e dV_F/dl_e - d V_F|.
double euler_identity_check(const SimplexSpec& spec, int face_dim);

}  // namespace simplexvol

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace simplexvol {

/// Argument outside an operation's mathematical domain (bad n, k, t, x, step, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Vertex label outside 1..n+1.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Wrong number of points, coordinates or entries.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Error tied to a specific face, reported by its sorted vertex labels.
class FaceError : public std::runtime_error {
public:
  FaceError(const std::string& what, std::vector<int> face);
  const std::vector<int>& face() const noexcept { return face_; }

private:
  std::vector<int> face_;
};

/// Squared distances that do not embed in Euclidean space.
class RealizabilityError : public FaceError {
public:
  using FaceError::FaceError;
};

/// Derivative requested at a face of zero volume.
class SingularityError : public FaceError {
public:
  using FaceError::FaceError;
};

/// Finite-difference perturbation left the realizable region.
class BoundaryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact certificate could not be produced (non-integral solve, overflow, ...).
class CertificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string format_face(const std::vector<int>& face);

}  // namespace simplexvol

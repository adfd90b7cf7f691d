#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rulekin {

/// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- dual arithmetic -------------------------------------------------------

/// Division by a dual scalar whose real part is (numerically) zero.
struct DivisionByPureDual : Error {
  using Error::Error;
};

/// Lifted function evaluated outside its real domain (artanh, sqrt, ...).
struct DomainError : Error {
  using Error::Error;
};

// ---- Minkowski / line geometry ---------------------------------------------

/// Operation requires a non-null direction vector.
struct NullDirection : Error {
  using Error::Error;
};

/// Dual vector does not represent a line: <real, dual> != 0.
struct NotALine : Error {
  using Error::Error;
};

// ---- curve sampling ---------------------------------------------------------

/// Director fails to be timelike at some node.
struct NonTimelikeDirector : Error {
  NonTimelikeDirector(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// Structurally invalid curve description (period, sample count, coefficients).
struct BadSpec : Error {
  using Error::Error;
};

// ---- frame construction ------------------------------------------------------

/// ||u'|| ~ 0 at a node; the spherical image stalls and no frame exists there.
struct DegenerateSpeed : Error {
  DegenerateSpeed(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// <u', u'> < 0 at a node; the tangent image must be spacelike.
struct NonSpacelikeTangentImage : Error {
  NonSpacelikeTangentImage(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// |kappa| = |tau| within tolerance at a node: the rotation vector is null.
struct NullPfaffian : Error {
  NullPfaffian(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// |P| = |Q| within tolerance at a node (parallel-frame analogue).
struct NullPfaffianBar : Error {
  NullPfaffianBar(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// The causal class of the rotation vector changes along the curve.
struct MixedCase : Error {
  using Error::Error;
};

// ---- invariants --------------------------------------------------------------

/// A drall denominator vanished at a node.
struct DrallSingularity : Error {
  DrallSingularity(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

/// Closed-form pitch of the central axis requires a constant dual angle omega.
struct VaryingOmega : Error {
  using Error::Error;
};

/// Same requirement for the parallel-surface axis angle theta.
struct VaryingTheta : Error {
  using Error::Error;
};

/// Frame-coefficient vectors from different frames were combined.
struct FrameMismatch : Error {
  using Error::Error;
};

// ---- parallel frame -----------------------------------------------------------

/// P.real = 0 at a node: V2 is undefined for this offset angle.
struct DegenerateParallel : Error {
  DegenerateParallel(const std::string& what, std::size_t node_index)
      : Error(what), node(node_index) {}
  std::size_t node;
};

// ---- file I/O ------------------------------------------------------------------

/// Input is not valid JSON.
struct ParseError : Error {
  using Error::Error;
};

/// JSON is well formed but violates the curve-file schema (types, unknown keys).
struct SchemaError : Error {
  using Error::Error;
};

/// Schema-valid value outside its legal range (period <= 0, ...).
struct ValueError : Error {
  using Error::Error;
};

/// Filesystem failure (unreadable input, unwritable output).
struct IOError : Error {
  using Error::Error;
};

/// Internal numerical consistency check failed (never expected on valid input).
struct NumericalFailure : Error {
  using Error::Error;
};

}  // namespace rulekin

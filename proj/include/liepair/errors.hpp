#pragma once

#include <stdexcept>
#include <string>

namespace liepair {

class LiePairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The first dim_g basis vectors are not closed under the bracket.
class SubalgebraNotClosed : public LiePairError {
 public:
  SubalgebraNotClosed(int i, int j, const std::string& what) : LiePairError(what), i(i), j(j) {}
  int i;
  int j;
};

class NotASubalgebra : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

class MatchedPairAxiomsFail : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

/// Raised when a cochain the theory guarantees to be closed is not; this
/// always points at an internal bug or corrupted input.
class NotACocycle : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

class ArityBeyondTower : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

class NotCommutativeAlgebra : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

class NotABialgebra : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

/// Structurally invalid input (bad shapes, Jacobi failure, non-flat action).
class ValidationError : public LiePairError {
 public:
  using LiePairError::LiePairError;
};

}  // namespace liepair

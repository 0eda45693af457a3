#pragma once

#include <stdexcept>
#include <string>

namespace paracolor {

enum class ErrorKind {
  ArityMismatch,
  NotSymmetric,
  LeibnizViolation,
  UnknownPreset,
  ParseError,
  InhomogeneousMatrix,
  DimensionMismatch,
  GradeMismatch,
  NonLinearEnergy,
  UnknownLabel,
  NotPrimitive,
  NotNilpotent,
  UnknownPair,
  LevelNotFound,
  DegenerateLevel,
  NoSignDifference,
  ZeroVector,
  NotProjector,
  NotEigenstate,
  SupportError,
  PatternViolation,
  CollisionAtLambda,
  TrialsOutOfRange,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void ensure(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace paracolor

#pragma once

#include <stdexcept>
#include <string>

namespace geofrechet {

// Rejected input; the CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooFewVertices : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SelfIntersecting : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateArea : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PointOutsidePolygon : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeEpsilon : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MonotonicityViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptySlab : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Internal iteration guard tripped; the CLI maps this to exit code 3.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geofrechet

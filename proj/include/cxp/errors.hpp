#pragma once

#include <stdexcept>
#include <string>

namespace cxp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonVectorInput : public Error {
 public:
  using Error::Error;
};

/// No root-sign assignment reproduces the tabulated Cartan matrix.
class ConstructionInconsistency : public Error {
 public:
  using Error::Error;
};

class ClosureOverflow : public Error {
 public:
  using Error::Error;
};

class UnsupportedSubgroup : public Error {
 public:
  using Error::Error;
};

class InvalidIndices : public Error {
 public:
  using Error::Error;
};

class DegenerateOrbit : public Error {
 public:
  using Error::Error;
};

class NonPlanarFace : public Error {
 public:
  using Error::Error;
};

class NonConvexFace : public Error {
 public:
  using Error::Error;
};

class DegenerateHull : public Error {
 public:
  using Error::Error;
};

class ZeroProjection : public Error {
 public:
  using Error::Error;
};

class NonCoplanarDualFace : public Error {
 public:
  using Error::Error;
};

}  // namespace cxp

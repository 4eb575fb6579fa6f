#pragma once

#include <stdexcept>
#include <string>

namespace linusd {

/// Bad argument to a library call (wrong dimension, out-of-range value, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Code is degenerate in phase space; a single-detection receiver without
/// displacement cannot separate it.
class RequiresClass2or3 : public std::runtime_error {
 public:
  explicit RequiresClass2or3(const std::string& msg) : std::runtime_error(msg) {}
};

/// Code has degeneracy two or higher; displacement alone is not enough.
class RequiresClass3 : public std::runtime_error {
 public:
  explicit RequiresClass3(const std::string& msg) : std::runtime_error(msg) {}
};

/// Double-detection designs are implemented for c = 3 states on one mode only.
class UnsupportedShape : public std::runtime_error {
 public:
  explicit UnsupportedShape(const std::string& msg) : std::runtime_error(msg) {}
};

/// Hilbert-space Gram matrix is singular; the states cannot be unambiguously
/// discriminated at all.
class StatesNotLinearlyIndependent : public std::runtime_error {
 public:
  explicit StatesNotLinearlyIndependent(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix has a singular value above one and admits no unitary extension.
class InfeasibleExtension : public std::runtime_error {
 public:
  explicit InfeasibleExtension(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical solver failed to produce a certified result.
class SolverFailure : public std::runtime_error {
 public:
  explicit SolverFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace linusd

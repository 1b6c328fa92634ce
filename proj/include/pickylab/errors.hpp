#pragma once

#include <stdexcept>
#include <string>

namespace pickylab {

/// Precondition of an operation violated by the caller.
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (permutations, group specs, catalogs).
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured scale bound was exceeded.
class ResourceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug in the engine.
class EngineError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace pickylab

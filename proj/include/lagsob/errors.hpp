#pragma once

#include <stdexcept>

namespace lagsob {

/// Root of the library's exception hierarchy.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the declared domain of a field or grid.
class domain_error : public error {
 public:
  using error::error;
};

/// A derivative order above the field's declared maximum was requested.
class unsupported_order : public error {
 public:
  using error::error;
};

class argument_error : public error {
 public:
  using error::error;
};

/// Parameters are individually valid but cannot be realized together.
class config_error : public error {
 public:
  using error::error;
};

class degenerate_nodes : public error {
 public:
  using error::error;
};

class geometry_error : public error {
 public:
  using error::error;
};

class degenerate_pair : public error {
 public:
  using error::error;
};

/// A scan produced no admissible pairs.
class empty_scan : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace lagsob

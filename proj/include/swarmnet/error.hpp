#pragma once

#include <stdexcept>
#include <string>

namespace swarmnet {

enum class ErrorKind {
  invalid_argument,
  config,
  io,
  schema,
  numeric,
  schema_drift,
};

// Base of every exception the core throws. The C API maps kind() onto a
// status code, the CLI onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(ErrorKind::schema, what) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

struct SchemaDriftError : Error {
  explicit SchemaDriftError(const std::string& what) : Error(ErrorKind::schema_drift, what) {}
};

}  // namespace swarmnet

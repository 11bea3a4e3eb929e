#pragma once
// Shared plumbing: the error type thrown by every validating constructor and
// operation (machine-readable code + a JSON witness that reproduces the
// failure), and the global search budget.

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace moorekit {

using json = nlohmann::json;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, json witness = json::object())
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const json& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  json witness_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              json witness = json::object()) {
  throw Error(std::move(code), message, std::move(witness));
}

// Candidate ceiling for enumerative searches (hom enumeration, simplicial
// kernels, ...). Defaults to 10^7; the MOORE_KIT_BUDGET environment variable
// overrides it. Read once per process.
long long search_budget();

}  // namespace moorekit

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace matchlat {

using Json = nlohmann::ordered_json;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or graph violates an operation's precondition. The `reason`
/// tag is a short machine-readable token such as "bvn" or "not_near_brick".
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(std::string reason, const std::string& message)
      : Error(message), reason_(std::move(reason)) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

/// An exhaustive scan would exceed the configured vertex cap.
class CapExceeded : public PreconditionViolated {
 public:
  CapExceeded(int vertices, int cap)
      : PreconditionViolated("cap_exceeded",
                             "graph has " + std::to_string(vertices) +
                                 " vertices, above the scan cap of " + std::to_string(cap)),
        vertices_(vertices),
        cap_(cap) {}

  int vertices() const { return vertices_; }
  int cap() const { return cap_; }

 private:
  int vertices_;
  int cap_;
};

/// A claim guaranteed by theory did not hold. Carries the evidence.
class TheoremFalsified : public Error {
 public:
  TheoremFalsified(const std::string& message, Json certificate)
      : Error(message), certificate_(std::move(certificate)) {}

  const Json& certificate() const { return certificate_; }

 private:
  Json certificate_;
};

}  // namespace matchlat

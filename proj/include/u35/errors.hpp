#pragma once

#include <stdexcept>
#include <string>

namespace u35 {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& m) : std::runtime_error(m) {}
};

struct MembershipError : std::runtime_error {
  explicit MembershipError(const std::string& m) : std::runtime_error(m) {}
};

struct NotConjugateError : std::runtime_error {
  explicit NotConjugateError(const std::string& m) : std::runtime_error(m) {}
};

struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& m) : std::runtime_error(m) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& m) : std::runtime_error(m) {}
};

struct SpectrumError : std::runtime_error {
  explicit SpectrumError(const std::string& m) : std::runtime_error(m) {}
};

struct ClassificationError : std::runtime_error {
  explicit ClassificationError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace u35

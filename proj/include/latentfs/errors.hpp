#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latentfs {

// Every recoverable failure carries a stable name so callers (and the command
// line tool, which emits "error:<Name>: detail" lines) can match on it
// without parsing prose. The detail text is free-form.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string &detail)
      : std::runtime_error(detail), name_(std::move(name)) {}

  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace latentfs

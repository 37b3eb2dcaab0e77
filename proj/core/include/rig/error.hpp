#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rig {

// A weight vector could not be realized, e.g. a normalized entry exceeds 1.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// An exhaustive computation was asked to run beyond its hard size limit.
class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace rig

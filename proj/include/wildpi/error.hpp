#pragma once

#include <stdexcept>
#include <string>

namespace wildpi {

/// Base of every domain error raised by the toolkit.
///
/// `kind()` is the stable error name (e.g. "IncoherentAt") that the CLI
/// surfaces verbatim; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/// Error tied to a level or position (IncoherentAt(n), IndexTooLarge(n), ...).
class IndexedError : public Error {
public:
  IndexedError(std::string kind, long index, const std::string &detail)
      : Error(std::move(kind), detail), index_(index) {}

  long index() const noexcept { return index_; }

private:
  long index_;
};

} // namespace wildpi

#pragma once

#include <stdexcept>
#include <string>

namespace gmpn {

/** Semantic error: inputs are well-formed but outside an operation's domain
 *  (wrong group, not a reflection, not shortest, invalid partition, ...). */
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/** Syntactic error while reading the textual grammar. */
struct parse_error : domain_error {
  explicit parse_error(const std::string& what) : domain_error(what) {}
};

/** A configurable resource guard (state cap, enumeration cap, ...) was hit.
 *  Distinct from domain_error so callers can map it to a separate exit code. */
struct guard_exceeded : std::runtime_error {
  explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gmpn

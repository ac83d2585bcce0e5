#pragma once

#include <stdexcept>
#include <string>

namespace wos2net {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable/unwritable streams and files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input content (WoS exports, CSV, pair files, Pajek files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A document or table violates its own invariants; raised before any
// bytes are written.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A projection (or similar) exceeded its configured resource cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace wos2net

#pragma once

#include <stdexcept>
#include <string>

namespace tashkeel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class Utf8Error : public Error {
 public:
  Utf8Error(std::size_t line, std::size_t byte_offset)
      : Error("invalid UTF-8 at line " + std::to_string(line) + ", byte " +
              std::to_string(byte_offset)),
        line_(line),
        byte_offset_(byte_offset) {}
  std::size_t line() const { return line_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t line_;
  std::size_t byte_offset_;
};

class MismatchedPair : public Error {
 public:
  using Error::Error;
};

class SentinelCollision : public Error {
 public:
  using Error::Error;
};

class InvalidFractions : public Error {
 public:
  using Error::Error;
};

class LineCountMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tashkeel

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inka {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Graph construction rejected an edge.
class GraphError : public Error {
 public:
  GraphError(const std::string& what, std::size_t edge_index)
      : Error(what), edge_index_(edge_index) {}
  std::size_t edge_index() const { return edge_index_; }

 private:
  std::size_t edge_index_;
};

// A bound or constraint has no feasible solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Line numbers are 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}
  // "source:line: message", or "source: message" for line 0.
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + (line == 0 ? "" : ":" + std::to_string(line)) + ": " + message),
        line_(line),
        message_(message) {}
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Numerical failure inside an iterative layout.
class LayoutError : public Error {
 public:
  LayoutError(const std::string& what, int iteration)
      : Error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace inka

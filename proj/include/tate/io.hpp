#pragma once

#include <stdexcept>
#include <string>

#include "tate/module.hpp"

namespace tate {

// Malformed input; `line` is 1-based, 0 when the problem is not tied to a line.
struct InputError : std::runtime_error {
  InputError(int line, const std::string& what);
  int line;
};

// Well-formed input describing an object that fails validation.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Field declared by an algebra file, so callers can pick the scalar type.
FieldDescriptor peek_field(const std::string& text);
// Algebra named by a module file's `module <name> over <algebra>` line.
std::string peek_module_ring(const std::string& text);

template <class F>
AlgebraPtr<F> parse_algebra(const std::string& text);
template <class F>
Module<F> parse_module(const std::string& text, const AlgebraPtr<F>& ring);

template <class F>
std::string serialize_algebra(const Algebra<F>& a);
template <class F>
std::string serialize_module(const Module<F>& m);

}  // namespace tate

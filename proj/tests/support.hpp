#pragma once

#include <string>

#include "tate/io.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

template <class F>
tate::AlgebraPtr<F> algebra(const std::string& name) {
  return tate::parse_algebra<F>(tate::read_file(path(name + ".alg")));
}

template <class F>
tate::Module<F> module(const tate::AlgebraPtr<F>& ring, const std::string& name) {
  return tate::parse_module<F>(tate::read_file(path(ring->name + "_" + name + ".mod")), ring);
}

}  // namespace fixture

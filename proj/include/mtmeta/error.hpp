// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MTMETA_ERROR_HPP
#define MTMETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mtmeta {

// Malformed or inconsistent user input (files, flags). CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant. CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mtmeta

#endif  // MTMETA_ERROR_HPP

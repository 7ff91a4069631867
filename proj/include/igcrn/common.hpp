// Copyright (c) 2026 IGCRN Authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>

namespace igcrn {

// Bad shapes, bad hyperparameters, mismatched checkpoints.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or malformed files, unusable audio (wrong rate, silent source, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf escaping a numeric computation.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

#define IGCRN_CHECK(cond, msg)                       \
  do {                                               \
    if (!(cond)) throw ::igcrn::ConfigError(msg);    \
  } while (0)

#define IGCRN_CHECK_DATA(cond, msg)                  \
  do {                                               \
    if (!(cond)) throw ::igcrn::DataError(msg);      \
  } while (0)

}  // namespace igcrn

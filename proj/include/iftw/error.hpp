// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace iftw {

//! Raised when an input violates a documented precondition. `field()` names
//! the offending parameter so callers can report it without parsing text.
class ValidationError : public std::invalid_argument
{
  public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

//! Degenerate geometry, e.g. coincident node positions.
class GeometryError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace iftw

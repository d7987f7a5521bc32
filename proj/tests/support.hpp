#pragma once

#include <doctest.h>

#include <functional>

#include "stringy/error.hpp"

/// Kind of the Error thrown by f; fails the test when nothing is thrown.
inline stringy::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const stringy::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return stringy::ErrorKind::InvalidArgument;
}

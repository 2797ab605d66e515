#pragma once

#include "doctest.h"
#include "properties.hpp"

#define CHECK_PROPERTY(fn)          \
  do {                              \
    const auto report_ = props::fn(); \
    INFO(report_.summary());        \
    CHECK(report_.ok());            \
  } while (0)

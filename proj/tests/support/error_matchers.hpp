#pragma once

#include <gtest/gtest.h>

#include "mimicnet/errors.hpp"

#define EXPECT_MIMICNET_ERROR(statement, expected_code)                                  \
  do {                                                                                   \
    try {                                                                                \
      statement;                                                                         \
      ADD_FAILURE() << "expected mimicnet::Error from " #statement;                     \
    } catch (const ::mimicnet::Error& mimicnet_error_) {                                 \
      EXPECT_EQ(mimicnet_error_.code(), expected_code) << mimicnet_error_.what();        \
    }                                                                                    \
  } while (false)

#pragma once

#include <stdexcept>
#include <string>

namespace ryd {

// Error taxonomy maps 1:1 onto process exit codes (see rydssh.h):
// config/schema/path problems -> 2, numerical/precondition failures -> 3.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ryd

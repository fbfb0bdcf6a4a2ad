#pragma once

#include <stdexcept>

namespace sirnet {

// raised when a truncation budget cannot meet its error bound
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sirnet

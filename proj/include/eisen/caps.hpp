#pragma once

#include <cstddef>

namespace eisen {

/// Default bound on the dimension of the ambient field for exact linear algebra.
inline constexpr std::size_t kDefaultDimensionCap = 400;

}  // namespace eisen

#pragma once

namespace sidon::detail {

// Products of two 64-bit operands.
__extension__ using Wide = unsigned __int128;

}  // namespace sidon::detail

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace uniflip {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);
/// Lower-case, zero-padded 16-digit hex form of fnv1a64.
std::string fnv1a64_hex(std::string_view data);

}  // namespace uniflip

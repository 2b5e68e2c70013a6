// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace evoprune {

// CRC-64/XZ (reflected ECMA-182). Used for database entry checksums and
// provenance hashes.
std::uint64_t crc64(const void* data, std::size_t len, std::uint64_t seed = 0);

}  // namespace evoprune

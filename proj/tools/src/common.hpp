// Copyright 2026 The fdelta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>

#include "fdelta/friable.hpp"

namespace fdelta::cli::detail {

// Below this bound sieving is cheaper than reading a cache file.
inline constexpr std::uint64_t kCacheThreshold = 1'000'000;

inline friable::PrimeTable primes_for(double y, const std::filesystem::path& cache_dir) {
  const auto bound = static_cast<std::uint64_t>(std::max(2.0, std::floor(y)));
  if (bound < kCacheThreshold) return friable::sieve(bound);
  return friable::cached_sieve(bound, cache_dir);
}

}  // namespace fdelta::cli::detail

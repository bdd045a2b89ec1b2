// Copyright 2026 The qec-energy Authors
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

#include <cstdint>
#include <random>
#include <string_view>

namespace qec {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t cell_seed(std::uint64_t master_seed, std::string_view code_id,
                                  std::uint64_t grid_index, std::uint64_t p_x_index) {
  std::uint64_t s = splitmix64(master_seed ^ fnv1a64(code_id));
  s = splitmix64(s ^ grid_index);
  return splitmix64(s ^ (p_x_index + 0x51ed270b27e1c3f1ULL));
}

constexpr std::uint64_t shot_seed(std::uint64_t cell, std::uint64_t shot_index) {
  return splitmix64(cell ^ splitmix64(shot_index));
}

}  // namespace qec

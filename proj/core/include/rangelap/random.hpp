// Copyright 2026 The rangelap Authors
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

#ifndef RANGELAP_RANDOM_HPP_
#define RANGELAP_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace rangelap {

// Seeded uniform deviates on [0, 1): std::mt19937_64 mapped through its
// top 53 bits. The engine's output sequence is pinned by the standard, so
// a seed reproduces the same stream on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rangelap

#endif  // RANGELAP_RANDOM_HPP_

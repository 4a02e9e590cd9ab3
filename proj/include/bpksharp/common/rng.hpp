/*
 * Copyright 2026 The bpksharp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <openssl/rand.h>

#include <array>
#include <cstring>
#include <stdexcept>

#include "bpksharp/algebra/hashing.hpp"
#include "bpksharp/common/bytes.hpp"

namespace bpksharp {

// Randomness is always passed explicitly so tests and the CLI --seed flag
// can substitute a deterministic stream.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

class SystemRng final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override {
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
      throw std::runtime_error("system rng failure");
  }
};

// SHA-256 counter stream. The block layout (seed || le64 counter) is frozen:
// golden fixtures depend on it.
class DeterministicRng final : public RandomSource {
 public:
  explicit DeterministicRng(std::span<const std::uint8_t> seed)
      : seed_(seed.begin(), seed.end()) {}

  static DeterministicRng from_string(const std::string& s) {
    Bytes b(s.begin(), s.end());
    auto h = sha256(b);
    return DeterministicRng(h);
  }

  void fill(std::span<std::uint8_t> out) override {
    std::size_t done = 0;
    while (done < out.size()) {
      if (pos_ == 32) refill();
      std::size_t take = std::min<std::size_t>(32 - pos_, out.size() - done);
      std::memcpy(out.data() + done, block_.data() + pos_, take);
      pos_ += take;
      done += take;
    }
  }

 private:
  void refill() {
    Bytes in = seed_;
    for (int i = 0; i < 8; ++i) in.push_back(static_cast<std::uint8_t>(counter_ >> (8 * i)));
    block_ = sha256(in);
    ++counter_;
    pos_ = 0;
  }

  Bytes seed_;
  std::array<std::uint8_t, 32> block_{};
  std::uint64_t counter_ = 0;
  std::size_t pos_ = 32;
};

}  // namespace bpksharp

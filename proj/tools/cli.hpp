/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdsarray/code.hpp"
#include "mdsarray/error.hpp"

namespace mdsarray::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 2,
  kNotSuperregular = 3,
  kNotPrimitive = 4,
  kIo = 5,
  kDecodeFailure = 6,
};

int exit_code_for(Errc code);

/// {"b", "m", "k", "poly", "matrix": {"kind", ...}, "trusted"}. Throws
/// InvalidConfig on shape errors and the build_code errors otherwise.
CodeParams params_from_json(const nlohmann::json& doc);
nlohmann::json params_to_json(const CodeParams& params);
CodeParams load_config(const std::filesystem::path& path);

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);

struct Manifest {
  static constexpr const char* kMagic = "MDSA1";
  static constexpr int kVersion = 1;
  nlohmann::json code;
  std::uint64_t original_length = 0;
  std::uint64_t stripe_rows = 0;
  std::vector<std::uint64_t> checksums;  // one per shard, FNV-1a 64

  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& doc);
};

std::string shard_name(std::size_t j);  // 1-based shard index

/// Stripe rows of k symbols from a byte string: bit i of the stream is bit
/// i % 8 of byte i / 8, row r symbol j coefficient c is stream bit
/// r*k*b + j*b + c. The tail is zero-padded.
std::vector<Word> split_rows(const std::vector<std::uint8_t>& data, std::size_t k, unsigned b);
std::vector<std::uint8_t> join_rows(const std::vector<Word>& rows, std::size_t k, unsigned b,
                                    std::uint64_t length);

/// Shard j (0-based) holds symbol j of every row: row r coefficient c is bit r*b + c.
std::vector<std::uint8_t> pack_shard(const std::vector<Word>& rows, std::size_t j, unsigned b);
void unpack_shard(const std::vector<std::uint8_t>& bytes, std::vector<Word>& rows, std::size_t j,
                  unsigned b);

/// Entry point; writes normal output to `out` and "error:"/"warning:" lines to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdsarray::cli

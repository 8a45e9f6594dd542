// Copyright 2026 The prs-lab Authors
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
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace prslab::wire {

inline constexpr int kVersion = 1;

struct Message {
    int version = kVersion;
    std::string role;
    nlohmann::json payload;

    bool operator==(const Message&) const = default;
};

/// 4-byte big-endian length followed by the compact JSON body.
std::vector<std::uint8_t> encode(const Message& m);
/// Decodes one frame; `consumed` receives the frame size.
Message decode(const std::vector<std::uint8_t>& bytes, std::size_t* consumed = nullptr);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

std::string sha256_hex(const std::string& data);

/// Bidirectional in-process channel over a UNIX socketpair.
class Loopback {
   public:
    Loopback();
    ~Loopback();
    Loopback(const Loopback&) = delete;
    Loopback& operator=(const Loopback&) = delete;

    /// side is 0 or 1; send on one side, receive on the other.
    void send(int side, const Message& m);
    Message receive(int side);

   private:
    int fds_[2] = {-1, -1};
};

}  // namespace prslab::wire

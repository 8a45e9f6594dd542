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

#include "prslab/wire.hpp"

#include <openssl/evp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "prslab/bits.hpp"
#include "prslab/errors.hpp"

namespace prslab::wire {

namespace {

constexpr std::size_t kMaxFrame = std::size_t{1} << 30;

void write_all(int fd, const std::uint8_t* data, std::size_t len) {
    while (len > 0) {
        ssize_t w = ::write(fd, data, len);
        if (w < 0) {
            if (errno == EINTR) continue;
            throw ResourceError(std::string("socket write failed: ") + std::strerror(errno));
        }
        data += w;
        len -= static_cast<std::size_t>(w);
    }
}

void read_all(int fd, std::uint8_t* data, std::size_t len) {
    while (len > 0) {
        ssize_t r = ::read(fd, data, len);
        if (r < 0 && errno == EINTR) continue;
        if (r <= 0) {
            throw ResourceError("socket closed while reading a frame");
        }
        data += r;
        len -= static_cast<std::size_t>(r);
    }
}

}  // namespace

std::vector<std::uint8_t> encode(const Message& m) {
    nlohmann::json j = {{"version", m.version}, {"role", m.role}, {"payload", m.payload}};
    std::string body = j.dump();
    if (body.size() > kMaxFrame) {
        throw ResourceError("wire message too large");
    }
    std::vector<std::uint8_t> out(4);
    auto len = static_cast<std::uint32_t>(body.size());
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(len >> (24 - 8 * i));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

Message decode(const std::vector<std::uint8_t>& bytes, std::size_t* consumed) {
    if (bytes.size() < 4) {
        throw ShapeError("wire frame shorter than its length prefix");
    }
    std::size_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | bytes[static_cast<std::size_t>(i)];
    if (bytes.size() < 4 + len) {
        throw ShapeError("wire frame truncated");
    }
    auto j = nlohmann::json::parse(bytes.begin() + 4, bytes.begin() + 4 + static_cast<std::ptrdiff_t>(len));
    Message m;
    m.version = j.at("version").get<int>();
    if (m.version != kVersion) {
        throw DomainError("unsupported wire version " + std::to_string(m.version));
    }
    m.role = j.at("role").get<std::string>();
    m.payload = j.at("payload");
    if (consumed != nullptr) *consumed = 4 + len;
    return m;
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    std::string out(4 * ((bytes.size() + 2) / 3), '\0');
    int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(), static_cast<int>(bytes.size()));
    out.resize(static_cast<std::size_t>(n));
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    if (text.size() % 4 != 0) {
        throw DomainError("base64 text length is not a multiple of 4");
    }
    std::vector<std::uint8_t> out(3 * text.size() / 4);
    int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()), static_cast<int>(text.size()));
    if (n < 0) {
        throw DomainError("invalid base64 text");
    }
    std::size_t pad = 0;
    if (!text.empty() && text.back() == '=') ++pad;
    if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
    out.resize(static_cast<std::size_t>(n) - pad);
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw NumericError("SHA-256 failed");
    }
    return to_hex(std::vector<std::uint8_t>(md, md + len));
}

Loopback::Loopback() {
    if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds_) != 0) {
        throw ResourceError(std::string("socketpair failed: ") + std::strerror(errno));
    }
}

Loopback::~Loopback() {
    for (int fd : fds_) {
        if (fd >= 0) ::close(fd);
    }
}

void Loopback::send(int side, const Message& m) {
    auto frame = encode(m);
    write_all(fds_[side & 1], frame.data(), frame.size());
}

Message Loopback::receive(int side) {
    std::vector<std::uint8_t> frame(4);
    read_all(fds_[side & 1], frame.data(), 4);
    std::size_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | frame[static_cast<std::size_t>(i)];
    if (len > kMaxFrame) {
        throw ResourceError("incoming wire frame too large");
    }
    frame.resize(4 + len);
    read_all(fds_[side & 1], frame.data() + 4, len);
    return decode(frame);
}

}  // namespace prslab::wire

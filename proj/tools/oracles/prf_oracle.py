#!/usr/bin/env python3
# Copyright 2026 The prs-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent PRF vectors (hashlib/hmac and a pure-Python mixer)."""

import hashlib
import hmac
import sys

MASK = (1 << 64) - 1


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


def bits_to_bytes(value, nbits):
    nbytes = (nbits + 7) // 8
    return (value << (8 * nbytes - nbits)).to_bytes(nbytes, "big") if nbits else b""


def encode(domain, key, key_bits, inp, in_bits, out_bits, include_key):
    msg = bytes([domain]) + key_bits.to_bytes(8, "big")
    if include_key:
        msg += bits_to_bytes(key, key_bits)
    msg += in_bits.to_bytes(8, "big") + bits_to_bytes(inp, in_bits) + out_bits.to_bytes(8, "big")
    return msg


def truncate(stream, out_bits):
    value = int.from_bytes(stream, "big") >> (8 * len(stream) - out_bits)
    return bits_to_bytes(value, out_bits)


def hmac_prf(key, key_bits, inp, in_bits, out_bits, domain):
    msg = encode(domain, key, key_bits, inp, in_bits, out_bits, False)
    kb = bits_to_bytes(key, key_bits)
    stream = b""
    block = 0
    while len(stream) * 8 < out_bits:
        stream += hmac.new(kb, msg + block.to_bytes(8, "big"), hashlib.sha256).digest()
        block += 1
    return truncate(stream, out_bits)


def test_prf(key, key_bits, inp, in_bits, out_bits, domain, seed):
    msg = encode(domain, key, key_bits, inp, in_bits, out_bits, True)
    h = splitmix64(seed ^ 0x5052462D54455354)
    for byte in msg:
        h = splitmix64(h ^ byte)
    stream = b""
    block = 0
    while len(stream) * 8 < out_bits:
        stream += splitmix64((h + splitmix64(block)) & MASK).to_bytes(8, "big")
        block += 1
    return truncate(stream, out_bits)


def main(out_dir):
    key, key_bits, in_bits, domain, seed = 0x0123, 16, 4, 7, 0x0123
    for name, out_bits, fn in (
        ("prf_hmac_0123_oracle.txt", 300, lambda x: hmac_prf(key, key_bits, x, in_bits, 300, domain)),
        ("prf_test_0123_oracle.txt", 24, lambda x: test_prf(key, key_bits, x, in_bits, 24, domain, seed)),
    ):
        with open(f"{out_dir}/{name}", "w") as f:
            f.write("# independent oracle vectors\n")
            for x in range(16):
                f.write(f"{key_bits} {bits_to_bytes(key, key_bits).hex()} {in_bits} "
                        f"{bits_to_bytes(x, in_bits).hex()} {out_bits} {fn(x).hex()}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")

#!/usr/bin/env python3
# Copyright 2026 The medsim Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values for tests/unit/crypto_test.cpp.

Uses eth-account (RFC 6979 secp256k1 + personal-message signing),
pycryptodome (Keccak-256), hashlib and pyca/cryptography (Ed25519).
Run: pip install eth-account pycryptodome cryptography && python3 crypto_vectors.py
"""
import hashlib

from Crypto.Hash import keccak
from cryptography.hazmat.primitives.asymmetric.ed25519 import Ed25519PrivateKey
from eth_account import Account
from eth_account.messages import encode_defunct


def kek(data: bytes) -> str:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.hexdigest()


print("keccak('')     ", kek(b""))
print("keccak('abc')  ", kek(b"abc"))
print("keccak(200*a)  ", kek(b"a" * 200))
print("sha256('hello')", hashlib.sha256(b"hello").hexdigest())

for sk in (1, 2, 0xDEADBEEF):
    print(f"eoa(secret={sk:#x})", Account.from_key(sk.to_bytes(32, "big")).address.lower())

cases = [
    (1, b"medsim challenge"),
    (0xDEADBEEF, b"9f" * 32),
    (int.from_bytes(hashlib.sha256(b"medsim-wallet").digest(), "big"), b"x"),
]
for sk, msg in cases:
    acct = Account.from_key(sk.to_bytes(32, "big"))
    sig = acct.sign_message(encode_defunct(msg)).signature.hex()
    print(f"sign(secret={sk:#x}, {msg!r})", sig.removeprefix("0x"))

key = Ed25519PrivateKey.from_private_bytes(bytes(32))
pub = key.public_key().public_bytes_raw()
print("ed25519 pub(seed=0)", pub.hex())
print("ed25519 sig(seed=0,'x')", key.sign(b"x").hex())

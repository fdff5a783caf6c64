// Copyright 2026 The medsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medsim/crypto/wallet_key.hpp"

#include <memory>

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>
#include <sodium.h>

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"

namespace medsim::crypto {
namespace {

struct BnFree {
    void operator()(BIGNUM* p) const { BN_clear_free(p); }
};
struct CtxFree {
    void operator()(BN_CTX* p) const { BN_CTX_free(p); }
};
struct PointFree {
    void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};
using Bn = std::unique_ptr<BIGNUM, BnFree>;
using BnCtx = std::unique_ptr<BN_CTX, CtxFree>;
using Point = std::unique_ptr<EC_POINT, PointFree>;

[[noreturn]] void fail(const char* what) { throw Error(Errc::internal, what); }

Bn bn_new() {
    Bn b(BN_new());
    if (!b) fail("BN_new");
    return b;
}

Bn bn_from(ByteView be) {
    Bn b(BN_bin2bn(be.data(), static_cast<int>(be.size()), nullptr));
    if (!b) fail("BN_bin2bn");
    return b;
}

std::array<std::uint8_t, 32> bn_to32(const BIGNUM* b) {
    std::array<std::uint8_t, 32> out{};
    if (BN_bn2binpad(b, out.data(), 32) != 32) fail("BN_bn2binpad");
    return out;
}

BnCtx ctx_new() {
    BnCtx c(BN_CTX_new());
    if (!c) fail("BN_CTX_new");
    return c;
}

// Immutable after construction; shared read-only across threads.
struct Curve {
    EC_GROUP* group = nullptr;
    BIGNUM* n = nullptr;
    BIGNUM* p = nullptr;
    BIGNUM* half_n = nullptr;

    Curve() {
        group = EC_GROUP_new_by_curve_name(NID_secp256k1);
        n = BN_new();
        p = BN_new();
        half_n = BN_new();
        auto ctx = ctx_new();
        if (!group || !n || !p || !half_n || !EC_GROUP_get_order(group, n, ctx.get()) ||
            !EC_GROUP_get_curve(group, p, nullptr, nullptr, ctx.get()) || !BN_rshift1(half_n, n)) {
            fail("secp256k1 group setup");
        }
    }
    Curve(const Curve&) = delete;
    Curve& operator=(const Curve&) = delete;
    ~Curve() {
        BN_free(half_n);
        BN_free(p);
        BN_free(n);
        EC_GROUP_free(group);
    }

    static const Curve& get() {
        static const Curve curve;
        return curve;
    }
};

Point point_new(const Curve& c) {
    Point pt(EC_POINT_new(c.group));
    if (!pt) fail("EC_POINT_new");
    return pt;
}

WalletPublicKey point_to_key(const Curve& c, const EC_POINT* pt, BN_CTX* ctx) {
    auto x = bn_new();
    auto y = bn_new();
    if (!EC_POINT_get_affine_coordinates(c.group, pt, x.get(), y.get(), ctx)) {
        fail("EC_POINT_get_affine_coordinates");
    }
    WalletPublicKey key;
    auto xb = bn_to32(x.get());
    auto yb = bn_to32(y.get());
    std::copy(xb.begin(), xb.end(), key.xy.begin());
    std::copy(yb.begin(), yb.end(), key.xy.begin() + 32);
    return key;
}

bool scalar_in_range(const Curve& c, const BIGNUM* k) {
    return !BN_is_zero(k) && !BN_is_negative(k) && BN_cmp(k, c.n) < 0;
}

using Hmac = std::array<std::uint8_t, 32>;

Hmac hmac(const Hmac& key, std::initializer_list<ByteView> parts) {
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, key.data(), key.size());
    for (auto part : parts) {
        crypto_auth_hmacsha256_update(&st, part.data(), part.size());
    }
    Hmac out{};
    crypto_auth_hmacsha256_final(&st, out.data());
    return out;
}

// RFC 6979 section 3.2 with HMAC-SHA256; qlen == hlen == 256 so bits2int is
// the identity on 32-byte strings.
class NonceGenerator {
public:
    NonceGenerator(const std::array<std::uint8_t, 32>& secret, const Hash32& digest) {
        const Curve& c = Curve::get();
        auto ctx = ctx_new();
        auto h = bn_from(digest);
        if (BN_cmp(h.get(), c.n) >= 0 && !BN_sub(h.get(), h.get(), c.n)) fail("BN_sub");
        auto h_octets = bn_to32(h.get());
        v_.fill(0x01);
        k_.fill(0x00);
        const std::uint8_t zero = 0x00;
        const std::uint8_t one = 0x01;
        k_ = hmac(k_, {v_, {&zero, 1}, secret, h_octets});
        v_ = hmac(k_, {v_});
        k_ = hmac(k_, {v_, {&one, 1}, secret, h_octets});
        v_ = hmac(k_, {v_});
    }

    std::array<std::uint8_t, 32> next() {
        if (started_) {
            const std::uint8_t zero = 0x00;
            k_ = hmac(k_, {v_, {&zero, 1}});
            v_ = hmac(k_, {v_});
        }
        started_ = true;
        v_ = hmac(k_, {v_});
        return v_;
    }

private:
    Hmac v_{};
    Hmac k_{};
    bool started_ = false;
};

}  // namespace

Signature sign_digest(const std::array<std::uint8_t, 32>& secret, const Hash32& digest) {
    const Curve& c = Curve::get();
    auto ctx = ctx_new();
    auto d = bn_from(secret);
    if (!scalar_in_range(c, d.get())) {
        throw Error(Errc::invalid_argument, "wallet secret out of range");
    }
    auto z = bn_from(digest);
    NonceGenerator nonces(secret, digest);
    auto r_point = point_new(c);
    auto rx = bn_new();
    auto ry = bn_new();
    auto r = bn_new();
    auto s = bn_new();
    auto tmp = bn_new();
    for (;;) {
        auto k = bn_from(nonces.next());
        if (!scalar_in_range(c, k.get())) {
            continue;
        }
        if (!EC_POINT_mul(c.group, r_point.get(), k.get(), nullptr, nullptr, ctx.get()) ||
            !EC_POINT_get_affine_coordinates(c.group, r_point.get(), rx.get(), ry.get(), ctx.get()) ||
            !BN_nnmod(r.get(), rx.get(), c.n, ctx.get())) {
            fail("nonce point");
        }
        if (BN_is_zero(r.get())) {
            continue;
        }
        int recid = (BN_is_odd(ry.get()) ? 1 : 0) | (BN_cmp(rx.get(), c.n) >= 0 ? 2 : 0);
        // s = k^-1 (z + r d) mod n
        if (!BN_mod_mul(tmp.get(), r.get(), d.get(), c.n, ctx.get()) ||
            !BN_mod_add(tmp.get(), tmp.get(), z.get(), c.n, ctx.get()) ||
            !BN_mod_inverse(k.get(), k.get(), c.n, ctx.get()) ||
            !BN_mod_mul(s.get(), tmp.get(), k.get(), c.n, ctx.get())) {
            fail("signature scalar");
        }
        if (BN_is_zero(s.get())) {
            continue;
        }
        if (BN_cmp(s.get(), c.half_n) > 0) {
            if (!BN_sub(s.get(), c.n, s.get())) fail("BN_sub");
            recid ^= 1;
        }
        Bytes out(Signature::kWalletSize);
        auto rb = bn_to32(r.get());
        auto sb = bn_to32(s.get());
        std::copy(rb.begin(), rb.end(), out.begin());
        std::copy(sb.begin(), sb.end(), out.begin() + 32);
        out[64] = static_cast<std::uint8_t>(27 + recid);
        return Signature(Scheme::wallet, std::move(out));
    }
}

std::optional<WalletPublicKey> recover_digest(const Hash32& digest, const Signature& sig) {
    if (sig.scheme() != Scheme::wallet) {
        throw Error(Errc::malformed, "expected a wallet-scheme signature");
    }
    const Curve& c = Curve::get();
    const Bytes& raw = sig.bytes();
    int v = raw[64];
    if (!(v == 27 || v == 28 || v == 0 || v == 1)) {
        throw Error(Errc::malformed, "wallet signature v must be 27 or 28");
    }
    int recid = v >= 27 ? v - 27 : v;
    auto r = bn_from(ByteView(raw).first(32));
    auto s = bn_from(ByteView(raw).subspan(32, 32));
    if (!scalar_in_range(c, r.get()) || !scalar_in_range(c, s.get())) {
        throw Error(Errc::malformed, "wallet signature r or s out of range");
    }
    if (BN_cmp(s.get(), c.half_n) > 0) {
        throw Error(Errc::malformed, "wallet signature s is not normalised");
    }
    auto ctx = ctx_new();
    // The recovery id's high bit is never set by sign_digest; r + n >= p for
    // all but a negligible set of r, so only recid 0/1 reach this point.
    auto big_r = point_new(c);
    if (!EC_POINT_set_compressed_coordinates(c.group, big_r.get(), r.get(), recid & 1, ctx.get())) {
        return std::nullopt;
    }
    auto e = bn_from(digest);
    auto r_inv = bn_new();
    auto u1 = bn_new();
    auto u2 = bn_new();
    if (!BN_nnmod(e.get(), e.get(), c.n, ctx.get()) ||
        !BN_mod_inverse(r_inv.get(), r.get(), c.n, ctx.get()) ||
        !BN_mod_mul(u1.get(), e.get(), r_inv.get(), c.n, ctx.get()) ||
        !BN_mod_sub(u1.get(), c.n, u1.get(), c.n, ctx.get()) ||
        !BN_mod_mul(u2.get(), s.get(), r_inv.get(), c.n, ctx.get())) {
        fail("recovery scalars");
    }
    // Q = r^-1 (s R - e G)
    auto q = point_new(c);
    if (!EC_POINT_mul(c.group, q.get(), u1.get(), big_r.get(), u2.get(), ctx.get())) {
        fail("recovery point");
    }
    if (EC_POINT_is_at_infinity(c.group, q.get())) {
        return std::nullopt;
    }
    return point_to_key(c, q.get(), ctx.get());
}

Eoa derive_eoa(const WalletPublicKey& key) {
    const Curve& c = Curve::get();
    auto ctx = ctx_new();
    auto x = bn_from(ByteView(key.xy).first(32));
    auto y = bn_from(ByteView(key.xy).subspan(32, 32));
    auto pt = point_new(c);
    if (BN_cmp(x.get(), c.p) >= 0 || BN_cmp(y.get(), c.p) >= 0 ||
        !EC_POINT_set_affine_coordinates(c.group, pt.get(), x.get(), y.get(), ctx.get()) ||
        EC_POINT_is_on_curve(c.group, pt.get(), ctx.get()) != 1) {
        throw Error(Errc::malformed, "public key is not a secp256k1 point");
    }
    return Address::from_digest(keccak256(key.xy));
}

WalletKeyPair WalletKeyPair::from_secret(ByteView secret) {
    const Curve& c = Curve::get();
    if (secret.size() != 32) {
        throw Error(Errc::invalid_argument, "wallet secret must be 32 bytes");
    }
    auto ctx = ctx_new();
    auto d = bn_from(secret);
    if (!scalar_in_range(c, d.get())) {
        throw Error(Errc::invalid_argument, "wallet secret out of range");
    }
    WalletKeyPair kp;
    std::copy(secret.begin(), secret.end(), kp.secret_.begin());
    auto pt = point_new(c);
    if (!EC_POINT_mul(c.group, pt.get(), d.get(), nullptr, nullptr, ctx.get())) {
        fail("public key");
    }
    kp.public_ = point_to_key(c, pt.get(), ctx.get());
    kp.eoa_ = derive_eoa(kp.public_);
    return kp;
}

WalletKeyPair WalletKeyPair::generate(std::optional<ByteView> seed) {
    std::array<std::uint8_t, 32> candidate{};
    if (seed) {
        if (seed->size() != 32) {
            throw Error(Errc::invalid_argument, "wallet seed must be 32 bytes");
        }
        std::copy(seed->begin(), seed->end(), candidate.begin());
    } else {
        SystemEntropy().fill(candidate);
    }
    for (;;) {
        try {
            return from_secret(candidate);
        } catch (const Error& e) {
            if (e.code() != Errc::invalid_argument) throw;
            candidate = sha256(candidate);
        }
    }
}

WalletKeyPair WalletKeyPair::generate(Entropy& entropy) {
    auto seed = entropy.draw<32>();
    return generate(ByteView(seed));
}

Signature WalletKeyPair::sign(ByteView message) const { return sign_wallet(*this, message); }

Signature sign_wallet(const WalletKeyPair& key, ByteView message) {
    if (message.empty()) {
        throw Error(Errc::invalid_argument, "refusing to sign an empty message");
    }
    return sign_digest(key.secret(), personal_message_hash(message));
}

std::optional<WalletPublicKey> recover_wallet(ByteView message, const Signature& sig) {
    return recover_digest(personal_message_hash(message), sig);
}

bool verify_wallet(const Eoa& eoa, ByteView message, const Signature& sig) {
    auto key = recover_wallet(message, sig);
    return key && derive_eoa(*key) == eoa;
}

}  // namespace medsim::crypto

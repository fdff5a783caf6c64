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

#include "medsim/wallet/keystore.hpp"

#include <sodium.h>

#include <fstream>
#include <sstream>

#include "medsim/common/error.hpp"
#include "medsim/common/json.hpp"

namespace medsim::wallet {

namespace {

constexpr std::string_view kKdfName = "argon2id13";
constexpr std::string_view kCipherName = "xchacha20poly1305-ietf";

using Key = std::array<std::uint8_t, crypto_aead_xchacha20poly1305_ietf_KEYBYTES>;

Key derive_key(std::string_view passphrase, ByteView salt, KdfParams kdf) {
    if (salt.size() != crypto_pwhash_SALTBYTES) throw Error(Errc::malformed, "bad keystore salt");
    Key key{};
    if (crypto_pwhash(key.data(), key.size(), passphrase.data(), passphrase.size(), salt.data(),
                      kdf.opslimit, kdf.memlimit, crypto_pwhash_ALG_ARGON2ID13) != 0) {
        throw Error(Errc::internal, "key derivation ran out of memory");
    }
    return key;
}

}  // namespace

Identity Identity::generate(Entropy& entropy) {
    auto identity = crypto::IdentityKeyPair::generate(entropy);
    auto wallet = crypto::WalletKeyPair::generate(entropy);
    auto doc = vdr::DidDocument::for_member(identity.public_key(), wallet.eoa());
    return {std::move(identity), std::move(wallet), std::move(doc), std::nullopt};
}

KdfParams KdfParams::interactive() {
    return {crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE};
}

KdfParams KdfParams::minimal() { return {crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN}; }

std::string seal_keystore(const Identity& id, std::string_view passphrase, Entropy& entropy,
                          KdfParams kdf) {
    ensure_sodium();
    Json secret{{"identity_seed", to_hex(id.identity.seed())},
                {"wallet_secret", to_hex(id.wallet.secret())},
                {"document", id.document.to_json()},
                {"credential", id.credential ? Json(*id.credential) : Json(nullptr)}};
    std::string plain = canonical(secret);

    auto salt = entropy.draw<crypto_pwhash_SALTBYTES>();
    auto nonce = entropy.draw<crypto_aead_xchacha20poly1305_ietf_NPUBBYTES>();
    Key key = derive_key(passphrase, salt, kdf);
    Json pub{{"did", id.did().str()}, {"eoa", id.wallet.eoa().str()}};
    std::string ad = canonical(pub);

    Bytes cipher(plain.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
    unsigned long long clen = 0;
    crypto_aead_xchacha20poly1305_ietf_encrypt(
        cipher.data(), &clen, reinterpret_cast<const unsigned char*>(plain.data()), plain.size(),
        reinterpret_cast<const unsigned char*>(ad.data()), ad.size(), nullptr, nonce.data(), key.data());
    sodium_memzero(key.data(), key.size());
    sodium_memzero(plain.data(), plain.size());
    cipher.resize(clen);

    Json file{{"version", kKeystoreVersion},
              {"public", std::move(pub)},
              {"kdf", {{"alg", kKdfName},
                       {"salt", to_hex(salt)},
                       {"opslimit", kdf.opslimit},
                       {"memlimit", kdf.memlimit}}},
              {"cipher", {{"alg", kCipherName}, {"nonce", to_hex(nonce)}, {"ciphertext", to_hex(cipher)}}}};
    return file.dump(2) + "\n";
}

Identity open_keystore(std::string_view text, std::string_view passphrase) {
    ensure_sodium();
    Json file = parse_json(text);
    if (require_int(file, "version") != kKeystoreVersion) {
        throw Error(Errc::malformed, "unsupported keystore version");
    }
    const Json& pub = require_field(file, "public");
    const Json& kdf = require_field(file, "kdf");
    const Json& cipher = require_field(file, "cipher");
    if (require_string(kdf, "alg") != kKdfName || require_string(cipher, "alg") != kCipherName) {
        throw Error(Errc::malformed, "unsupported keystore algorithms");
    }
    KdfParams params{static_cast<unsigned long long>(require_int(kdf, "opslimit")),
                     static_cast<std::size_t>(require_int(kdf, "memlimit"))};
    Bytes salt = from_hex(require_string(kdf, "salt"));
    Bytes nonce = from_hex(require_string(cipher, "nonce"));
    Bytes ct = from_hex(require_string(cipher, "ciphertext"));
    if (nonce.size() != crypto_aead_xchacha20poly1305_ietf_NPUBBYTES ||
        ct.size() < crypto_aead_xchacha20poly1305_ietf_ABYTES) {
        throw Error(Errc::malformed, "truncated keystore");
    }
    std::string ad = canonical(pub);
    Key key = derive_key(passphrase, salt, params);
    std::string plain(ct.size() - crypto_aead_xchacha20poly1305_ietf_ABYTES, '\0');
    unsigned long long plen = 0;
    int rc = crypto_aead_xchacha20poly1305_ietf_decrypt(
        reinterpret_cast<unsigned char*>(plain.data()), &plen, nullptr, ct.data(), ct.size(),
        reinterpret_cast<const unsigned char*>(ad.data()), ad.size(), nonce.data(), key.data());
    sodium_memzero(key.data(), key.size());
    if (rc != 0) throw Error(Errc::unauthorized, "wrong passphrase or corrupted keystore");
    plain.resize(plen);

    Json secret = parse_json(plain);
    sodium_memzero(plain.data(), plain.size());
    auto seed = fixed_from_hex<32>(require_string(secret, "identity_seed"));
    auto wsecret = fixed_from_hex<32>(require_string(secret, "wallet_secret"));
    Identity id{crypto::IdentityKeyPair::generate(ByteView(seed)),
                crypto::WalletKeyPair::from_secret(ByteView(wsecret)),
                vdr::DidDocument::from_json(require_field(secret, "document")), std::nullopt};
    const Json& vc = require_field(secret, "credential");
    if (vc.is_string()) id.credential = vc.get<std::string>();
    if (id.document.identity_key() != id.identity.public_key() || id.document.wallet_eoa() != id.wallet.eoa()) {
        throw Error(Errc::malformed, "keystore document does not match its keys");
    }
    return id;
}

void save_keystore(const std::filesystem::path& path, const Identity& id, std::string_view passphrase,
                   Entropy& entropy, KdfParams kdf) {
    std::string text = seal_keystore(id, passphrase, entropy, kdf);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::unavailable, "cannot write keystore " + tmp.string());
        std::filesystem::permissions(tmp, std::filesystem::perms::owner_read | std::filesystem::perms::owner_write,
                                     std::filesystem::perm_options::replace);
        out << text;
        if (!out.flush()) throw Error(Errc::unavailable, "cannot write keystore " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Identity load_keystore(const std::filesystem::path& path, std::string_view passphrase) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::not_found, "no keystore at " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return open_keystore(ss.str(), passphrase);
}

}  // namespace medsim::wallet

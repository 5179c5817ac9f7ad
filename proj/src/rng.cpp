#include "fracmart/rng.hpp"

#include "fracmart/normal.hpp"

namespace fracmart {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        round_once(ctr, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t blk = pos_ >> 1;
    const unsigned half = static_cast<unsigned>(pos_ & 1u);
    ++pos_;
    if (blk != cached_block_) {
        // 56 bits of block index, 8 bits of channel, 64 bits of stream index.
        const std::uint64_t mixed = blk | (static_cast<std::uint64_t>(channel_) << 56);
        const std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(mixed), static_cast<std::uint32_t>(mixed >> 32),
            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                                  static_cast<std::uint32_t>(seed_ >> 32)};
        cached_ = Philox4x32::block(ctr, key);
        cached_block_ = blk;
    }
    const std::uint32_t lo = cached_[2 * half];
    const std::uint32_t hi = cached_[2 * half + 1];
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

double RandomStream::next_uniform() {
    // 53 significant bits, offset half an ulp away from both 0 and 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() { return normal_quantile(next_uniform()); }

void RandomStream::fill_normals(std::span<double> out) {
    for (double& v : out) v = next_normal();
}

}  // namespace fracmart

#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace fracmart {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). One block maps a 128-bit counter and a
// 64-bit key to 128 output bits; there is no sequential state to carry
// between draws, so any (seed, stream, position) tuple can be evaluated
// independently and in any order.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key);
};

// A reproducible random stream keyed by (seed, stream index, channel).
// Output is a pure function of the key and the draw position: two streams
// with the same key produce bit-identical sequences regardless of chunking,
// thread, or host. Distinct stream indices (one per Monte Carlo replicate)
// and distinct channels (e.g. the driving noise vs. an auxiliary process)
// are mutually independent.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), channel_(0) {}

    // Same (seed, stream) but a disjoint counter range; used when one
    // replicate needs several independent noise sources.
    RandomStream substream(std::uint8_t channel) const {
        RandomStream s(seed_, stream_);
        s.channel_ = channel;
        return s;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    double next_uniform();  // strictly inside (0, 1)
    double next_normal();   // N(0,1) via inverse CDF, identical on every platform
    void fill_normals(std::span<double> out);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint8_t channel_;
    std::uint64_t pos_ = 0;  // count of u64 draws so far
    std::array<std::uint32_t, 4> cached_{};
    std::uint64_t cached_block_ = ~0ULL;
};

// Replicate channels used by the experiment engine. Keeping them in one
// place guards against two consumers reusing the same counter range.
namespace channel {
inline constexpr std::uint8_t driving_noise = 0;  // the dW draws
inline constexpr std::uint8_t integrand = 1;      // fBm driving xi
inline constexpr std::uint8_t side_sample = 2;    // auxiliary samples (local time reference)
}  // namespace channel

// Stream indices for pilot runs live in their own range so they never
// collide with replicate indices 0..N-1.
inline constexpr std::uint64_t pilot_stream_base = 1ULL << 32;

}  // namespace fracmart

#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace graphscan {

/// Philox4x32-10 counter-based generator.
///
/// Stream layout (documented so parallel and serial replicate loops agree
/// bit-for-bit): key = (seed_lo32, seed_hi32); counter word 0 counts draws
/// within a stream, words 1-2 hold the stream id (replicate index), word 3
/// is zero. Each block yields four 32-bit words consumed as two 64-bit
/// values.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed & 0xffffffffu),
               static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, static_cast<std::uint32_t>(stream & 0xffffffffu),
               static_cast<std::uint32_t>(stream >> 32), 0} {}

    std::uint64_t next_u64() {
        if (have_ == 0) refill();
        --have_;
        std::uint64_t lo = buf_[2 * have_];
        std::uint64_t hi = buf_[2 * have_ + 1];
        return (hi << 32) | lo;
    }

    /// Uniform draw in [0, bound) by 64-bit rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    double next_unit() {  // [0,1) with 53 random bits
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;

    void refill() {
        std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
            std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
            std::uint32_t h0 = static_cast<std::uint32_t>(p0 >> 32);
            std::uint32_t l0 = static_cast<std::uint32_t>(p0);
            std::uint32_t h1 = static_cast<std::uint32_t>(p1 >> 32);
            std::uint32_t l1 = static_cast<std::uint32_t>(p1);
            std::uint32_t n0 = h1 ^ c1 ^ k0;
            std::uint32_t n1 = l1;
            std::uint32_t n2 = h0 ^ c3 ^ k1;
            std::uint32_t n3 = l0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        buf_ = {c0, c1, c2, c3};
        have_ = 2;
        if (++ctr_[0] == 0) ++ctr_[3];  // carry into the spare word
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> buf_{};
    int have_ = 0;
};

/// Fisher-Yates shuffle of 1..n driven by the given stream; returns
/// positions[node] for nodes 1..n (index 0 unused).
inline std::vector<int> random_positions(int n, std::uint64_t seed, std::uint64_t stream) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Philox rng(seed, stream);
    for (int i = n - 1; i >= 1; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i + 1;
    return pos;
}

}  // namespace graphscan

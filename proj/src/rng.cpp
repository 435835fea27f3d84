#include "gsw/rng.hpp"

#include <cmath>

namespace gsw {

std::uint64_t mix64(std::uint64_t x) noexcept {
    // SplitMix64 finaliser: a bijection on 64-bit words.
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

RngHandle derive_stream(const RngHandle& parent, std::string_view label, std::uint64_t index) {
    const std::uint64_t base = mix64(parent.stream_id ^ mix64(fnv1a(label)));
    // base + odd * index is injective in index, and mix64 is a bijection.
    return {parent.master_seed, mix64(base + 0x9e3779b97f4a7c15ULL * index)};
}

Engine make_engine(const RngHandle& handle) {
    std::seed_seq seq{static_cast<std::uint32_t>(handle.master_seed),
                      static_cast<std::uint32_t>(handle.master_seed >> 32),
                      static_cast<std::uint32_t>(handle.stream_id),
                      static_cast<std::uint32_t>(handle.stream_id >> 32)};
    return Engine(seq);
}

void fill_normal(std::span<double> out, double variance, const RngHandle& handle) {
    Engine engine = make_engine(handle);
    std::normal_distribution<double> normal(0.0, std::sqrt(variance));
    for (double& v : out) {
        v = normal(engine);
    }
}

}  // namespace gsw

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace gsw {

// Identifies one reproducible random stream. Equal handles always yield
// identical sequences; children are derived by hashing (label, index), so
// results never depend on the order in which streams are consumed.
struct RngHandle {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    friend bool operator==(const RngHandle&, const RngHandle&) = default;
};

using Engine = std::mt19937_64;

inline RngHandle root_stream(std::uint64_t seed) { return {seed, 0}; }

RngHandle derive_stream(const RngHandle& parent, std::string_view label, std::uint64_t index);

// Fresh engine positioned at the start of the stream.
Engine make_engine(const RngHandle& handle);

// Fills `out` with i.i.d. N(0, variance) draws from the stream.
void fill_normal(std::span<double> out, double variance, const RngHandle& handle);

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace gsw

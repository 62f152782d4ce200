#pragma once

#include <cstdint>
#include <string_view>

#include "tinytalker/tensor.hpp"

namespace tt {

// Counter-based random stream: every draw is a pure function of
// (seed, stream, counter), so results are reproducible independent of the
// order in which other streams are consumed. Streams are named; forking
// derives a child stream with its counter reset to zero.
class Rng {
public:
    Rng(uint64_t seed, std::string_view stream_label);
    Rng(uint64_t seed, uint64_t stream, uint64_t counter);

    Rng fork(std::string_view substream_label) const;

    uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    double normal();                        // N(0, 1), consumes two counters

    Tensor normal_tensor(std::vector<int> shape);
    Tensor uniform_tensor(std::vector<int> shape);

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }
    uint64_t counter() const { return counter_; }
    void set_counter(uint64_t c) { counter_ = c; }

    static uint64_t hash_label(std::string_view label);

private:
    uint64_t seed_ = 0;
    uint64_t stream_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace tt

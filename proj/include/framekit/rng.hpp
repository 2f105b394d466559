// Copyright 2026 The framekit authors
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

#ifndef FRAMEKIT_RNG_HPP
#define FRAMEKIT_RNG_HPP

// Counter-free splittable RNG built on the SplitMix64 finalizer.  Every
// (seed, stream, lane) triple owns an independent substream, so trial i of a
// simulation can draw from stream i regardless of which worker executes it,
// and parallel runs reproduce the sequential results bit for bit.
//
// Derivation, fixed by contract so published results stay reproducible:
//   state0 = mix64(seed) ^ mix64(stream * 0xA24BAED4963EE407
//                                + lane * 0x9FB21C651E98DF25
//                                + 0xD6E8FEB86659FD93)
// and the output sequence is SplitMix64 advanced from state0.

#include <cstdint>

namespace framekit {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

class SplitRng {
public:
    SplitRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t lane = 0)
        : state_(mix64(seed) ^ mix64(stream * 0xA24BAED4963EE407ull +
                                     lane * 0x9FB21C651E98DF25ull +
                                     0xD6E8FEB86659FD93ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // uniform in [0, 1) with 53 random bits
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound); multiply-high range reduction, one draw
    // per call so lane schedules never depend on the bound
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace framekit

#endif  // FRAMEKIT_RNG_HPP

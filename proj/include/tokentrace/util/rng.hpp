/*
   Copyright 2026 The tokentrace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cstdint>
#include <string_view>

namespace tokentrace {

// splitmix64 finalizer (Steele, Lea, Flood 2014). The synthetic-chain
// generator derives every pseudo-random value from (seed, domain, counter)
// so unrelated record streams never share state.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix_domain(uint64_t seed, std::string_view domain) {
    uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc908ULL);
    for (char c : domain) h = splitmix64(h ^ static_cast<uint8_t>(c));
    return h;
}

/// Counter-based stream: value i of a named domain under a seed.
struct rng_stream {
    uint64_t base;

    rng_stream(uint64_t seed, std::string_view domain) : base(mix_domain(seed, domain)) {}

    uint64_t at(uint64_t i) const { return splitmix64(base ^ (i * 0x9e3779b97f4a7c15ULL + 1)); }

    /// Uniform in [lo, hi], both inclusive. Bias from the modulo is
    /// irrelevant for scenario synthesis.
    uint64_t range(uint64_t i, uint64_t lo, uint64_t hi) const {
        return lo + at(i) % (hi - lo + 1);
    }
};

} // namespace tokentrace

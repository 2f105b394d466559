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

#ifndef FRAMEKIT_WALK_HPP
#define FRAMEKIT_WALK_HPP

// Closed-form analysis of the T-correction random walk.  The walk starts at
// level 1, steps up with probability p and down with probability 1 - p, and
// terminates when it first reaches level 0.  First returns happen at odd
// step counts t = 2j+1, with probability K_j p^j (1-p)^{j+1} where K_j is
// the j'th Catalan number.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace framekit {

struct WalkParameters {
    double p = 0.0;     // upward step probability
    long n = 0;         // cutoff, in units of walk segments (t = 2n+1 steps)
    double q = 0.5;     // target success probability
    double epsilon() const { return 1.0 - q; }

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("walk: p outside [0,1]");
        if (n < 0) throw std::domain_error("walk: negative cutoff");
        if (!(q > 0.0 && q < 1.0)) throw std::domain_error("walk: q outside (0,1)");
    }
};

// Exact Catalan number K_j.  The recurrence K_{j+1} = K_j * 2(2j+1)/(j+2)
// stays integral at every step; 128-bit intermediates make the division
// safe.  K_36 is the largest value that fits in 64 bits.
inline std::uint64_t catalan(long j) {
    if (j < 0) throw std::domain_error("catalan: negative index");
    if (j > 36) throw std::overflow_error("catalan: result exceeds 64 bits");
    unsigned __int128 k = 1;
    for (long i = 0; i < j; ++i) {
        k = k * static_cast<unsigned __int128>(2 * (2 * i + 1));
        k /= static_cast<unsigned __int128>(i + 2);
    }
    return static_cast<std::uint64_t>(k);
}

inline double log_catalan(long j) {
    if (j < 0) throw std::domain_error("log_catalan: negative index");
    // K_j = (2j)! / (j! (j+1)!)
    return std::lgamma(2.0 * j + 1.0) - std::lgamma(j + 1.0) - std::lgamma(j + 2.0);
}

// Probability that the walk first reaches 0 at step t = 2j+1.
inline double return_probability(double p, long j) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("return_probability: p outside [0,1]");
    if (j < 0) throw std::domain_error("return_probability: negative index");
    if (p == 0.0) return j == 0 ? 1.0 : 0.0;
    if (p == 1.0) return 0.0;
    if (j <= 36) {
        return static_cast<double>(catalan(j)) * std::pow(p, static_cast<double>(j)) *
               std::pow(1.0 - p, static_cast<double>(j + 1));
    }
    double lg = log_catalan(j) + j * std::log(p) + (j + 1) * std::log1p(-p);
    return std::exp(lg);
}

// Total termination probability of the walk: 1 for p <= 1/2, else (1-p)/p.
inline double termination_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("termination_probability: p outside [0,1]");
    if (p <= 0.5) return 1.0;
    return (1.0 - p) / p;
}

// 2F1(1, 3/2+n; 3+n; z) by forward term recurrence.  The parameter balance
// c-a-b = 1/2 makes the series converge on [0,1]; at z = 1 the Gauss sum
// gives Gamma(c)Gamma(1/2) / (Gamma(c-1)Gamma(3/2)) = 2(n+2) exactly, which
// is returned directly since the series itself is too slow there.
inline double hyp2f1_special(long n, double z) {
    if (n < 0) throw std::domain_error("hyp2f1_special: negative n");
    if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("hyp2f1_special: z outside [0,1]");
    if (z == 1.0) return 2.0 * (n + 2);
    double term = 1.0;
    double sum = 1.0;
    for (long k = 0; k < 1000000; ++k) {
        term *= (1.5 + n + k) / (3.0 + n + k) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1_special: series did not converge");
}

// Direct partial sum of the first-return series up to t = 2n+1.  Always
// available as ground truth; O(n) via the Catalan ratio.
inline double cutoff_probability_partial_sum(double p, long n) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("cutoff: p outside [0,1]");
    if (n < 0) throw std::domain_error("cutoff: negative n");
    if (p == 0.0) return 1.0;
    if (p == 1.0) return 0.0;
    double y = p * (1.0 - p);
    double term = 1.0 - p;     // j = 0
    double sum = term;
    for (long j = 0; j < n; ++j) {
        term *= 2.0 * (2 * j + 1) / (j + 2.0) * y;
        sum += term;
    }
    return sum;
}

// Tail mass of the first-return series beyond the cutoff:
//   f(p,n) = (1-p)/(n+2) * binom(2(n+1), n+1) * [p(1-p)]^{n+1} * 2F1(1, 3/2+n; 3+n; 4p(1-p)).
// Computed in log space so large n cannot underflow the Catalan product.
inline double tail_probability(double p, long n) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("tail: p outside [0,1]");
    if (n < 0) throw std::domain_error("tail: negative n");
    if (p == 0.0 || p == 1.0) return 0.0;
    double y = p * (1.0 - p);
    double hyp = hyp2f1_special(n, 4.0 * y);
    double lg = std::log1p(-p) + log_catalan(n + 1) + (n + 1) * std::log(y) + std::log(hyp);
    return std::exp(lg);
}

// Probability the walk terminates within 2n+1 steps.  Equals the partial
// sum of the first-return series; evaluated through the closed-form tail
// except near p = 1/2 where the hypergeometric series stalls (z -> 1) and
// the partial sum takes over.
inline double cutoff_probability(double p, long n) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("cutoff: p outside [0,1]");
    if (n < 0) throw std::domain_error("cutoff: negative n");
    if (p == 0.0) return 1.0;
    if (p == 1.0) return 0.0;
    if (std::abs(p - 0.5) < 0.005) return cutoff_probability_partial_sum(p, n);
    return termination_probability(p) - tail_probability(p, n);
}

// Smallest n with F(p,n) > q, or nothing when the target exceeds the total
// termination probability.  Exponential bracketing then binary search; F is
// monotone in n.
inline std::optional<long> min_steps_for_target(double p, double q) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("min_steps: p outside [0,1]");
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("min_steps: q outside (0,1)");
    if (q >= termination_probability(p)) return std::nullopt;
    if (cutoff_probability(p, 0) > q) return 0;
    long lo = 0, hi = 1;
    while (!(cutoff_probability(p, hi) > q)) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) throw std::runtime_error("min_steps: target not reached");
    }
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (cutoff_probability(p, mid) > q) hi = mid; else lo = mid;
    }
    return hi;
}

// Checks the analytic upper bound
//   F(p,n) <= 1 - (1-p)(2p+1)/(n+2) * [2p(1-p)]^{n+1}
// together with the central-binomial inequality binom(2(n+1), n+1) >= 2^{n+1}
// that feeds into it.  Needs n >= 1.
inline bool upper_bound_check(double p, long n) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("upper_bound_check: p outside [0,1]");
    if (n < 1) throw std::domain_error("upper_bound_check: needs n >= 1");
    long m = n + 1;
    bool binom_ok;
    if (m <= 33) {
        unsigned __int128 central = static_cast<unsigned __int128>(catalan(m)) *
                                    static_cast<unsigned __int128>(m + 1);
        binom_ok = central >= (static_cast<unsigned __int128>(1) << m);
    } else {
        double log_central = log_catalan(m) + std::log(m + 1.0);
        binom_ok = log_central >= m * std::log(2.0);
    }
    double f = cutoff_probability(p, n);
    double bound = 1.0 - (1.0 - p) * (2.0 * p + 1.0) / (n + 2.0) *
                             std::pow(2.0 * p * (1.0 - p), static_cast<double>(n + 1));
    return binom_ok && f <= bound + 1e-12;
}

}  // namespace framekit

#endif  // FRAMEKIT_WALK_HPP

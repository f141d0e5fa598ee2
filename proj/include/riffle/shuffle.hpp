#pragma once

// Riffle-shuffle sample space (Gilbert-Shannon-Reeds), the optimal no-feedback
// guessing strategy, brute-force distribution enumeration and a seeded Monte
// Carlo sampler.
//
// After k shuffles the deck is a union of C = 2^k increasing sequences. The
// C^n outcomes correspond one-to-one with words over {1..C}: letter m at
// position j means the card at j is drawn from the m-th sequence. The
// identity permutation arises from several words and each counts separately.

#include <cstdint>
#include <vector>

#include "riffle/core.hpp"

namespace riffle {

/// Card labels 1..n, each exactly once. entries()[j] is the card at position j+1.
class Permutation {
 public:
  explicit Permutation(std::vector<long> entries);
  const std::vector<long>& entries() const { return entries_; }
  long size() const { return static_cast<long>(entries_.size()); }
  long at(long position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<long> entries_;
};

/// A word over the alphabet {1..C}; letter m selects the m-th increasing sequence.
class SequenceWord {
 public:
  SequenceWord(std::vector<long> letters, long sequences);
  const std::vector<long>& letters() const { return letters_; }
  long sequences() const { return sequences_; }
  long size() const { return static_cast<long>(letters_.size()); }

 private:
  std::vector<long> letters_;
  long sequences_;
};

inline constexpr long kSlowMaxN = 20;
inline constexpr std::uint64_t kSlowMaxOutcomes = 10'000'000;

/// Guess at position i (1-based): floor(i/C) + 1 in the top half, mirrored
/// (n + 1 - guess(n + 1 - i)) in the bottom half.
long optimal_guess(const ShuffleSpec& spec, long position);
std::vector<long> optimal_strategy(const ShuffleSpec& spec);

Permutation word_to_permutation(const SequenceWord& word);

long count_correct(const Permutation& p, const ShuffleSpec& spec);

/// Distribution of correct guesses after one shuffle by enumerating all 2^n
/// words. Requires C = 2 and n <= kSlowMaxN.
GFPoly gen_slow(const ShuffleSpec& spec);

struct WordEnumeration {
  GFPoly distribution;  ///< coefficient of q^i: outcomes with i correct guesses
  Rat mean;
  Rat second_moment;
};

/// Same enumeration over all C^n words for any C. Requires C^n <= kSlowMaxOutcomes.
WordEnumeration gen_slow_c(const ShuffleSpec& spec);

/// Counter-based stream: SplitMix64 outputs from a state keyed by
/// (seed, trial), so trial t draws the same numbers however trials are
/// scheduled.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();
  /// Uniform in [0, bound) by Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct SampleReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Rat mean;
  Rat second_moment;
  /// histogram[i] = number of trials with i correct guesses.
  std::vector<std::uint64_t> histogram;
  /// sqrt(sample variance / trials); 0 for a single trial.
  double standard_error = 0.0;
};

/// Samples `trials` uniform words over {1..C}^n (k GSR shuffles when C = 2^k)
/// and scores each under the optimal strategy.
SampleReport gsr_sample(const ShuffleSpec& spec, std::uint64_t trials, std::uint64_t seed);

}  // namespace riffle

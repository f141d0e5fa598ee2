#include "riffle/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace riffle {

Permutation::Permutation(std::vector<long> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (long e : entries_) {
    if (e < 1 || e > static_cast<long>(entries_.size()) || seen[static_cast<std::size_t>(e)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(e)] = true;
  }
}

SequenceWord::SequenceWord(std::vector<long> letters, long sequences)
    : letters_(std::move(letters)), sequences_(sequences) {
  if (sequences_ < 1) throw std::invalid_argument("word alphabet must be nonempty");
  for (long l : letters_)
    if (l < 1 || l > sequences_) throw std::invalid_argument("word letter outside 1..C");
}

long optimal_guess(const ShuffleSpec& spec, long position) {
  const long n = spec.n();
  if (position < 1 || position > n)
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." + std::to_string(n));
  if (position <= spec.half()) return position / spec.sequences() + 1;
  return n + 1 - optimal_guess(spec, n + 1 - position);
}

std::vector<long> optimal_strategy(const ShuffleSpec& spec) {
  std::vector<long> out(static_cast<std::size_t>(spec.n()));
  for (long i = 1; i <= spec.n(); ++i) out[static_cast<std::size_t>(i - 1)] = optimal_guess(spec, i);
  return out;
}

namespace {

// Fills `perm` (size n) from a word given as raw letters; `next` is scratch of size C+1.
void fill_permutation(const long* letters, std::size_t n, long sequences, std::vector<long>& next,
                      long* perm) {
  std::fill(next.begin(), next.end(), 0);
  for (std::size_t j = 0; j < n; ++j) ++next[static_cast<std::size_t>(letters[j])];
  // next[m] becomes the first label of pile m.
  long start = 1;
  for (long m = 1; m <= sequences; ++m) {
    long c = next[static_cast<std::size_t>(m)];
    next[static_cast<std::size_t>(m)] = start;
    start += c;
  }
  for (std::size_t j = 0; j < n; ++j) perm[j] = next[static_cast<std::size_t>(letters[j])]++;
}

long score(const long* perm, const std::vector<long>& guesses) {
  long hits = 0;
  for (std::size_t j = 0; j < guesses.size(); ++j) hits += (perm[j] == guesses[j]);
  return hits;
}

}  // namespace

Permutation word_to_permutation(const SequenceWord& word) {
  std::vector<long> next(static_cast<std::size_t>(word.sequences()) + 1);
  std::vector<long> perm(word.letters().size());
  fill_permutation(word.letters().data(), perm.size(), word.sequences(), next, perm.data());
  return Permutation(std::move(perm));
}

long count_correct(const Permutation& p, const ShuffleSpec& spec) {
  if (p.size() != spec.n()) throw std::invalid_argument("permutation length differs from deck size");
  return score(p.entries().data(), optimal_strategy(spec));
}

WordEnumeration gen_slow_c(const ShuffleSpec& spec) {
  const long n = spec.n();
  const long c = spec.sequences();
  double outcomes = std::pow(static_cast<double>(c), static_cast<double>(n));
  if (outcomes > static_cast<double>(kSlowMaxOutcomes))
    throw GuardError("exhaustive enumeration refused: C^n = " + std::to_string(c) + "^" + std::to_string(n) +
                     " exceeds " + std::to_string(kSlowMaxOutcomes));

  const auto guesses = optimal_strategy(spec);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long> word(static_cast<std::size_t>(n), 1);
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::vector<long> scratch(static_cast<std::size_t>(c) + 1);
  for (;;) {
    fill_permutation(word.data(), word.size(), c, scratch, perm.data());
    ++tally[static_cast<std::size_t>(score(perm.data(), guesses))];
    // odometer increment, last position fastest
    std::size_t j = word.size();
    while (j > 0 && word[j - 1] == c) word[--j] = 1;
    if (j == 0) break;
    ++word[j - 1];
  }

  std::vector<BigInt> coeffs(tally.size());
  for (std::size_t i = 0; i < tally.size(); ++i) coeffs[i] = static_cast<unsigned long>(tally[i]);
  WordEnumeration out{GFPoly(std::move(coeffs)), Rat(0), Rat(0)};
  const BigInt total = eval_at_one(out.distribution);
  out.mean = make_rat(d_eval_at_one(out.distribution, 1), total);
  out.second_moment = make_rat(d_eval_at_one(out.distribution, 2), total);
  return out;
}

GFPoly gen_slow(const ShuffleSpec& spec) {
  if (spec.sequences() != 2) throw std::invalid_argument("gen_slow covers one shuffle (C = 2)");
  if (spec.n() > kSlowMaxN)
    throw GuardError("slow tier refused: n = " + std::to_string(spec.n()) + " exceeds " + std::to_string(kSlowMaxN));
  return gen_slow_c(spec).distribution;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : state_(mix64(seed ^ mix64(trial + kGolden))) {}

std::uint64_t TrialRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

SampleReport gsr_sample(const ShuffleSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  const long n = spec.n();
  const long c = spec.sequences();
  const auto guesses = optimal_strategy(spec);

  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.histogram.assign(static_cast<std::size_t>(n) + 1, 0);

  std::vector<long> word(static_cast<std::size_t>(n));
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::vector<long> scratch(static_cast<std::size_t>(c) + 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    for (auto& letter : word) letter = static_cast<long>(rng.below(static_cast<std::uint64_t>(c))) + 1;
    fill_permutation(word.data(), word.size(), c, scratch, perm.data());
    ++rep.histogram[static_cast<std::size_t>(score(perm.data(), guesses))];
  }
  while (rep.histogram.size() > 1 && rep.histogram.back() == 0) rep.histogram.pop_back();

  BigInt s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < rep.histogram.size(); ++i) {
    BigInt cnt = static_cast<unsigned long>(rep.histogram[i]);
    s1 += cnt * static_cast<unsigned long>(i);
    s2 += cnt * static_cast<unsigned long>(i * i);
  }
  const BigInt t = static_cast<unsigned long>(trials);
  rep.mean = make_rat(s1, t);
  rep.second_moment = make_rat(s2, t);
  if (trials > 1) {
    // unbiased sample variance
    Rat var = (rep.second_moment - rep.mean * rep.mean) * make_rat(t, t - 1);
    rep.standard_error = std::sqrt(var.get_d() / static_cast<double>(trials));
  }
  return rep;
}

}  // namespace riffle

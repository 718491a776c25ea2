#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ineq/checkers.hpp"
#include "ineq/instances.hpp"

namespace ineq {

/// SplitMix64: the fixed 64-bit pseudo-random source. The algorithm is
/// pinned by output test vectors in the test suite, so instance streams are
/// reproducible bit-for-bit across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;  output z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound) by reduction; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  Statement statement = Statement::Holder;
  std::size_t n_min = 1, n_max = 8;  // rows (polygon vertices for the transversal identity)
  std::size_t m_min = 2, m_max = 5;  // columns
  unsigned numer_bits = 16;          // entry numerators in [0, 2^numer_bits)
  unsigned denom_bits = 8;           // entry denominators in [1, 2^denom_bits]
  enum class ExponentMode { IntegerTuples, RationalWeights };
  ExponentMode exponent_mode = ExponentMode::IntegerTuples;
  std::vector<Rational> minkowski_p_pool = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  /// Reject transversal configurations whose diagonal-cut decomposition
  /// degenerates (only relevant to the transversal identity).
  bool require_decomposable = true;

  void validate() const;
};

/// All nondecreasing integer tuples p_1 <= .. <= p_m, each >= 2, with
/// sum 1/p_k = 1; complete and duplicate-free, sorted lexicographically.
std::vector<std::vector<long>> enumerate_integer_conjugate_tuples(unsigned m);

/// Conjugate exponents from integer weights: draw g_1..g_m >= 1, set
/// G = sum g_k and p_k = G / g_k, so sum 1/p_k = 1 exactly.
ExponentVector gen_conjugate_exponents_rational(unsigned m, SplitMix64& rng);

Rational gen_value(SplitMix64& rng, unsigned numer_bits, unsigned denom_bits);
NonNegMatrix gen_matrix(std::size_t n, std::size_t m, SplitMix64& rng, const GenSpec& spec);
SortedMatrix gen_sorted_matrix(std::size_t n, std::size_t m, SplitMix64& rng, const GenSpec& spec);

/// Rejection-sampled valid configuration: no side parallel to the line, the
/// line through no vertex; with `require_decomposable`, the diagonal-cut
/// recursion must also succeed. Throws after a fixed attempt budget.
std::pair<Polygon, Line> gen_polygon_and_transversal(std::size_t n, SplitMix64& rng,
                                                     bool require_decomposable = true);

/// Deterministic campaign currency: instance `index` of stream `seed` is a
/// pure function of (spec, seed + index).
Instance gen_instance(const GenSpec& spec, std::uint64_t seed, std::uint64_t index);
Instance gen_instance_rng(const GenSpec& spec, SplitMix64& rng);

enum class MutationKind { ConjugacyDefect, DirectionFlip, SortViolation, PointDisplaced };

const char* mutation_kind_name(MutationKind k);
std::optional<MutationKind> mutation_kind_from_name(const std::string& name);

/// An instance with exactly one named hypothesis broken, plus how to judge
/// it: flipped mutations reverse the claimed direction, the others are
/// evaluated by the hypothesis-skipping raw checkers. `kind` is empty for
/// unmutated instances (counterexample search over a valid stream).
struct MutatedInstance {
  Instance instance;
  std::optional<MutationKind> kind;
  std::string broken_hypothesis;
  bool flipped = false;
};

MutatedInstance mutate_to_false(MutationKind kind, const Instance& inst, SplitMix64& rng);

Verdict check_mutated(const MutatedInstance& mut, const CheckConfig& cfg);

struct SearchSpec {
  GenSpec gen;
  std::optional<MutationKind> mutation;  // absent: search the valid stream
};

struct CounterexampleResult {
  std::optional<MutatedInstance> witness;  // first Violated instance, shrunk
  Verdict verdict = Verdict::undetermined(std::nullopt);
  std::size_t trials_used = 0;
  std::size_t shrink_steps = 0;
};

/// Scans the (optionally mutated) stream for a Violated verdict and greedily
/// shrinks the witness (drop rows/columns, simplify entries), re-checking
/// Violated after every accepted shrink. Finding nothing is the expected
/// outcome for valid generators.
CounterexampleResult counterexample_search(const SearchSpec& spec, std::size_t budget,
                                           std::uint64_t seed, const CheckConfig& cfg);

struct TightnessResult {
  Instance best;
  Slack slack;
  std::size_t evaluations = 0;
};

/// Random restarts plus coordinate-wise multiplicative hill climbing that
/// pushes the slack ratio toward 1. `budget` counts slack evaluations.
TightnessResult tightness_search(const GenSpec& spec, std::size_t budget, std::uint64_t seed,
                                 const CheckConfig& cfg);

}  // namespace ineq

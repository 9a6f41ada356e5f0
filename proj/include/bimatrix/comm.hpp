#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/matrix.hpp"
#include "bimatrix/outcome.hpp"
#include "bimatrix/rng.hpp"

namespace bimatrix {

struct ResampleLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One side of the two-party protocol. An endpoint only ever holds its own
// payoff matrix: the row player's R, or the column player's C, in the
// game's natural orientation.
struct Endpoint {
  enum class Side { kRow, kCol };
  Side side;
  Matrix own;
  std::uint64_t rng_seed = 0;
};

Endpoint row_endpoint(const BimatrixGame& game, std::uint64_t seed);
Endpoint col_endpoint(const BimatrixGame& game, std::uint64_t seed);

struct Message {
  std::string sender;  // "row" or "col"
  std::string tag;
  std::uint64_t bits;  // total, including framing
};

// Every message is framed as (4-bit tag, 32-bit length, payload); the
// framing bits are counted.
inline constexpr std::uint64_t kFramingBits = 4 + 32;

struct Transcript {
  std::vector<Message> messages;
  std::uint64_t total_bits = 0;

  void add(const std::string& sender, const std::string& tag, std::uint64_t payload_bits) {
    messages.push_back({sender, tag, payload_bits + kFramingBits});
    total_bits += payload_bits + kFramingBits;
  }

  std::string to_text() const;
};

// Smallest b with 2^b >= v (at least 1): width of an index field.
int bits_for_index(int v);

struct CommConfig {
  double sample_c = 2.0;   // k = ceil(sample_c * ln(max(n,2)) / eps^2)
  int value_bits = 32;     // fixed-point width for exchanged payoff values
  double budget_k = 24.0;  // budget = budget_k * ceil(log2 n)^2 / eps^2
  int max_resample = 64;
};

std::uint64_t comm_bit_budget(int n, double eps, const CommConfig& config);

// Empirical distribution of k i.i.d. draws; weights are multiples of 1/k.
struct SampledStrategy {
  std::vector<int> support;
  std::vector<int> counts;
  int k = 0;

  MixedStrategy to_mixed(int n) const;
};

int sample_count(int n, double eps, const CommConfig& config);

// Largest |(x^T M) - (xs^T M)| (strategy_on_rows) or |(M x) - (M xs)|
// deviation over pure opposing strategies.
double max_payoff_deviation(const Matrix& m, const MixedStrategy& x, const MixedStrategy& xs,
                            bool strategy_on_rows);

// Sampled-strategy transmission: draw k samples from x, locally verify the
// payoff deviation against the sender's own matrix along the strategy's
// axis, resample on failure (up to config.max_resample), then charge
// support indices and counts to the transcript.
SampledStrategy transmit_sampled(const Endpoint& sender, const MixedStrategy& x,
                                 bool strategy_on_rows, double eps, const CommConfig& config,
                                 Rng& rng, Transcript& transcript, const std::string& tag);

// Convenience overload for a strategy of the sender's own side.
SampledStrategy transmit_sampled(const Endpoint& sender, const MixedStrategy& x, double eps,
                                 const CommConfig& config, Rng& rng, Transcript& transcript,
                                 const std::string& tag);

struct ProtocolResult {
  SolveOutcome outcome;
  Transcript transcript;
};

// Modified 0.6528-WSNE algorithm over sampled strategies; thresholds are
// shifted by eps. Claims 2/3 - z* + eps (or the step-5 bound).
ProtocolResult protocol_wsne(const Endpoint& row, const Endpoint& col, double eps,
                             const CommConfig& config = {});

// (3 - sqrt(5))/2 + eps expected-regret protocol.
ProtocolResult protocol_ne(const Endpoint& row, const Endpoint& col, double eps,
                           const CommConfig& config = {});

// (0.5 + eps)-WSNE protocol for win-lose games.
ProtocolResult protocol_winlose(const Endpoint& row, const Endpoint& col, double eps,
                                const CommConfig& config = {});

}  // namespace bimatrix

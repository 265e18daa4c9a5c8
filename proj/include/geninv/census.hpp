#pragma once

// Whole-ring classification and theorem verification over finite rings.

#include "geninv/element.hpp"
#include "geninv/ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geninv {

inline constexpr std::uint64_t kDefaultMaxRingSize = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1234'abcd'0001ull;

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t nilpotent = 0;
  std::uint64_t idempotent = 0;
  std::uint64_t tripotent = 0;
  std::uint64_t unit = 0;
  std::uint64_t drazin = 0;
  std::uint64_t strongly_drazin = 0;
  std::uint64_t hirano = 0;

  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

/// First element (by enumeration index) separating two nested classes.
struct StrictnessWitness {
  std::string inclusion;  // e.g. "strongly_drazin < hirano"
  Element element;
  std::string reason;
};

struct CensusReport {
  RingSpec ring;
  CensusCounts counts;
  std::vector<StrictnessWitness> witnesses;
  bool is_strongly_2_nil_clean = false;
  // Brute-force cross-check of the fast criteria.
  bool cross_check_exhaustive = true;
  std::uint64_t cross_check_seed = 0;
  std::uint64_t cross_checked = 0;
};

struct CensusOptions {
  unsigned workers = 1;
  std::uint64_t max_ring_size = kDefaultMaxRingSize;
  /// Rings up to this size are cross-checked element by element against the
  /// brute-force oracle; larger rings are sampled.
  std::uint64_t exhaustive_cross_check_limit = 10'000;
  std::uint64_t sampled_cross_checks = 256;
  std::uint64_t seed = kDefaultSeed;
};

/// Classifies every element. A disagreement between the fast criteria and the
/// brute-force oracle throws InternalDefect naming the element.
CensusReport run_census(const RingSpec& ring, const CensusOptions& options = {});

nlohmann::json to_json(const CensusReport& report);

// -- theorem verification ----------------------------------------------------

enum class StrategyKind { exhaustive, sampled };

struct Strategy {
  StrategyKind kind = StrategyKind::exhaustive;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 10'000;
};

struct Violation {
  std::string instance;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  RingSpec ring;
  Strategy strategy;
  /// Tuples drawn from the hypothesis space, and those satisfying the
  /// hypotheses (the ones actually checked).
  std::uint64_t candidates = 0;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
  /// Observations that are not violations, e.g. two candidate formulas
  /// disagreeing while one of them verifies.
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool verified() const { return violations.empty(); }
};

struct VerifyOptions {
  /// Empty picks exhaustive when the hypothesis space has at most
  /// `auto_exhaustive_limit` tuples, else sampled with the default seed.
  std::optional<Strategy> strategy;
  std::uint64_t auto_exhaustive_limit = 100'000;
  std::uint64_t max_ring_size = kDefaultMaxRingSize;
  std::uint64_t max_exhaustive_tuples = 20'000'000;
  /// Brute-force oracles are consulted on rings up to this size.
  std::uint64_t oracle_limit = 1'000;
  unsigned workers = 1;
};

/// Identifiers accepted by verify_theorem.
const std::vector<std::string>& theorem_ids();

/// Throws PreconditionError for unknown ids or theorems whose standing
/// hypotheses the ring fails (3.3 and 3.4 need 2 invertible), CapExceeded for
/// oversized scans.
TheoremReport verify_theorem(std::string_view id, const RingSpec& ring, const VerifyOptions& options = {});

nlohmann::json to_json(const TheoremReport& report);

}  // namespace geninv

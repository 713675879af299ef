#pragma once

#include <cstdint>
#include <vector>

#include "ontodp/laplace.hpp"
#include "ontodp/query.hpp"
#include "ontodp/sensitivity.hpp"
#include "ontodp/spaces.hpp"

namespace ontodp {

struct GameConfig {
  Graph true_db;
  Graph prior;
  CountQuery query;
  double epsilon = 1.0;
  /// Semantics the curator calibrates noise under.
  Semantics semantics = Semantics::classical;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool record_trials = false;
};

struct TrialRow {
  std::uint64_t index = 0;
  double noisy_value = 0.0;
  /// Index of the guessed candidate in the canonically ordered attack space.
  std::size_t guess = 0;
  bool correct = false;
};

struct GameReport {
  double success_rate = 0.0;
  /// Chance level: 1 / |attack space|.
  double baseline = 0.0;
  std::uint64_t sensitivity_used = 0;
  /// The (0-rules) curator view and the attacker-perceived value, for the
  /// mismatch comparison.
  std::uint64_t classical_value = 0;
  std::uint64_t perceived_value = 0;
  std::size_t attack_space_size = 0;
  std::uint64_t trials = 0;
  std::vector<TrialRow> rows;
};

/// Identification game: per trial the curator releases a noisy answer on
/// the true database (sensitivity anchored there, under cfg semantics);
/// the attacker picks a maximum-likelihood candidate from its attack space
/// (exact answer match when the release was raw), ties broken uniformly
/// from the trial's seeded stream. Throws DegenerateGame when the attack
/// space has fewer than two candidates, the truth is not in it, or trials
/// is zero.
GameReport run_game(const GameConfig& game, const SpaceConfig& cfg,
                    std::size_t cap = kDefaultAntecedentCap);

}  // namespace ontodp

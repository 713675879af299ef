#include "ontodp/adversary.hpp"

#include <cmath>
#include <vector>

#include "ontodp/errors.hpp"

namespace ontodp {

GameReport run_game(const GameConfig& game, const SpaceConfig& cfg, std::size_t cap) {
  if (game.trials == 0) throw DegenerateGame("at least one trial is required");

  const std::set<Graph> space_set = attack_space({game.prior}, cfg);
  if (space_set.size() < 2)
    throw DegenerateGame("attack space has " + std::to_string(space_set.size()) +
                         " candidate(s); the game needs at least two");
  if (space_set.count(game.true_db) == 0)
    throw DegenerateGame("the true database is not in the attacker's space");

  const std::vector<Graph> space(space_set.begin(), space_set.end());
  std::vector<double> answers(space.size());
  std::size_t truth_index = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    answers[i] = static_cast<double>(evaluate(game.query, space[i]));
    if (space[i] == game.true_db) truth_index = i;
  }
  const double truth_answer = answers[truth_index];

  // Curator-side calibration, anchored at the truth.
  const std::uint64_t classical_value =
      classical_sensitivity(game.query, game.true_db, cfg).value;
  const std::uint64_t perceived_value =
      perceived_sensitivity(game.query, game.true_db, cfg, cap).value;
  std::uint64_t delta = 0;
  switch (game.semantics) {
    case Semantics::classical: delta = classical_value; break;
    case Semantics::onto: delta = onto_sensitivity(game.query, game.true_db, cfg, cap).value; break;
    case Semantics::perceived: delta = perceived_value; break;
  }
  const double scale = delta == 0 ? 0.0 : static_cast<double>(delta) / game.epsilon;

  GameReport report;
  report.baseline = 1.0 / static_cast<double>(space.size());
  report.sensitivity_used = delta;
  report.classical_value = classical_value;
  report.perceived_value = perceived_value;
  report.attack_space_size = space.size();
  report.trials = game.trials;
  if (game.record_trials) report.rows.reserve(game.trials);

  std::uint64_t successes = 0;
  for (std::uint64_t trial = 0; trial < game.trials; ++trial) {
    RngStream rng(derive_stream_seed(game.seed, trial));
    const double observed =
        delta == 0 ? truth_answer : truth_answer + sample_laplace(scale, rng);

    // Maximum-likelihood guess: the mechanism (scale included) is public.
    // Raw releases identify by exact answer match; noisy releases minimize
    // the distance to a candidate answer.
    std::vector<std::size_t> best;
    if (delta == 0) {
      for (std::size_t i = 0; i < space.size(); ++i)
        if (answers[i] == observed) best.push_back(i);
    } else {
      double best_distance = 0.0;
      for (std::size_t i = 0; i < space.size(); ++i) {
        const double distance = std::abs(observed - answers[i]);
        if (best.empty() || distance < best_distance) {
          best.assign(1, i);
          best_distance = distance;
        } else if (distance == best_distance) {
          best.push_back(i);
        }
      }
    }
    const std::size_t guess =
        best.size() == 1 ? best.front() : best[rng.next_u64() % best.size()];
    const bool correct = guess == truth_index;
    if (correct) ++successes;
    if (game.record_trials) report.rows.push_back({trial, observed, guess, correct});
  }
  report.success_rate = static_cast<double>(successes) / static_cast<double>(game.trials);
  return report;
}

}  // namespace ontodp

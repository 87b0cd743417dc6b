#ifndef OPENGAMES_CLASSICAL_RANDOM_HPP_
#define OPENGAMES_CLASSICAL_RANDOM_HPP_

#include <string>
#include <vector>

#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/game/random.hpp"

namespace og {

namespace detail {

inline std::vector<FiniteSet> random_choice_sets(Rng& rng, std::size_t players,
                                                 std::size_t max_choices) {
  std::vector<FiniteSet> out;
  for (std::size_t i = 0; i < players; ++i)
    out.push_back(random_set(rng, 1, max_choices, std::string(1, static_cast<char>('a' + i))));
  return out;
}

inline TotalFn random_payoff_table(Rng& rng, const std::vector<FiniteSet>& sets) {
  FiniteSet plays = tuple_set(sets);
  std::vector<Value> table;
  for (std::size_t i = 0; i < plays.size(); ++i) table.push_back(Value::vector(rng.rationals(sets.size())));
  return TotalFn(plays, Carrier::payoff(sets.size()), std::move(table));
}

}  // namespace detail

// 1..max_players players, 1..max_choices choices each, payoffs in [−5, 5]
// with denominators ≤ 4.
inline NormalFormGame random_normal_form(Rng& rng, std::size_t max_players = 3,
                                         std::size_t max_choices = 3) {
  auto sets = detail::random_choice_sets(rng, rng.between(1, max_players), max_choices);
  return NormalFormGame(sets, detail::random_payoff_table(rng, sets));
}

inline SequentialGame random_sequential(Rng& rng, std::size_t max_players = 3,
                                        std::size_t max_choices = 2) {
  auto sets = detail::random_choice_sets(rng, rng.between(1, max_players), max_choices);
  return SequentialGame(sets, detail::random_payoff_table(rng, sets));
}

}  // namespace og

#endif  // OPENGAMES_CLASSICAL_RANDOM_HPP_

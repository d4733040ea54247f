#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace socreval {

/// The thirteen prompting variants: the base judge prompt, the three Socratic
/// strategies and their combination, the three leave-one-out ablations, and
/// five rephrasings of the combined prompt.
enum class Strategy {
    Base,
    Definition,
    Maieutics,
    Dialectic,
    All,
    AllMinusDefinition,
    AllMinusMaieutics,
    AllMinusDialectic,
    RephraseV1,
    RephraseV2,
    RephraseV3,
    RephraseV4,
    RephraseV5,
};

/// All variants in stable declaration order.
const std::vector<Strategy>& list_strategies();

std::string strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// Whether the variant asks the judge to draft its own response / to run a
/// qualitative analysis before scoring. Determines the representation shape.
bool strategy_wants_own_response(Strategy s);
bool strategy_wants_analysis(Strategy s);

}  // namespace socreval

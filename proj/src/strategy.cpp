#include "socreval/strategy.hpp"

#include <algorithm>

#include "socreval/error.hpp"

namespace socreval {

const std::vector<Strategy>& list_strategies() {
    static const std::vector<Strategy> all{
        Strategy::Base,
        Strategy::Definition,
        Strategy::Maieutics,
        Strategy::Dialectic,
        Strategy::All,
        Strategy::AllMinusDefinition,
        Strategy::AllMinusMaieutics,
        Strategy::AllMinusDialectic,
        Strategy::RephraseV1,
        Strategy::RephraseV2,
        Strategy::RephraseV3,
        Strategy::RephraseV4,
        Strategy::RephraseV5,
    };
    return all;
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Base: return "base";
        case Strategy::Definition: return "definition";
        case Strategy::Maieutics: return "maieutics";
        case Strategy::Dialectic: return "dialectic";
        case Strategy::All: return "all";
        case Strategy::AllMinusDefinition: return "all-minus-definition";
        case Strategy::AllMinusMaieutics: return "all-minus-maieutics";
        case Strategy::AllMinusDialectic: return "all-minus-dialectic";
        case Strategy::RephraseV1: return "rephrase-v1";
        case Strategy::RephraseV2: return "rephrase-v2";
        case Strategy::RephraseV3: return "rephrase-v3";
        case Strategy::RephraseV4: return "rephrase-v4";
        case Strategy::RephraseV5: return "rephrase-v5";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(key.begin(), key.end(), '_', '-');
    for (Strategy s : list_strategies()) {
        if (strategy_name(s) == key) return s;
    }
    throw Error(ErrorCode::UnknownStrategy, "no strategy named '" + std::string(name) + "'");
}

bool strategy_wants_own_response(Strategy s) {
    switch (s) {
        case Strategy::Dialectic:
        case Strategy::All:
        case Strategy::AllMinusDefinition:
        case Strategy::AllMinusMaieutics:
        case Strategy::RephraseV1:
        case Strategy::RephraseV2:
        case Strategy::RephraseV3:
        case Strategy::RephraseV4:
        case Strategy::RephraseV5:
            return true;
        default:
            return false;
    }
}

bool strategy_wants_analysis(Strategy s) {
    switch (s) {
        case Strategy::Maieutics:
        case Strategy::All:
        case Strategy::AllMinusDefinition:
        case Strategy::AllMinusDialectic:
        case Strategy::RephraseV1:
        case Strategy::RephraseV2:
        case Strategy::RephraseV3:
        case Strategy::RephraseV4:
        case Strategy::RephraseV5:
            return true;
        default:
            return false;
    }
}

}  // namespace socreval

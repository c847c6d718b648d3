#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fmkr {

// Kill-chain stage of a sample. Codes double as severity rank:
// NT < RN < EF < LM < DE.
enum class StageLabel : std::uint8_t {
    NT = 0,  // normal traffic
    RN = 1,  // reconnaissance
    EF = 2,  // establish foothold
    LM = 3,  // lateral movement
    DE = 4,  // data exfiltration
};

inline constexpr std::size_t kStageCount = 5;

inline constexpr std::array<StageLabel, kStageCount> all_stages() {
    return {StageLabel::NT, StageLabel::RN, StageLabel::EF, StageLabel::LM,
            StageLabel::DE};
}

inline constexpr int stage_code(StageLabel s) { return static_cast<int>(s); }

std::string_view stage_name(StageLabel s);

// Case-insensitive parse of one of {NT,RN,EF,LM,DE}; nullopt otherwise.
std::optional<StageLabel> parse_stage(std::string_view token);

StageLabel stage_from_code(int code);

inline StageLabel max_severity(StageLabel a, StageLabel b) {
    return stage_code(a) >= stage_code(b) ? a : b;
}

}  // namespace fmkr

#include "ks/trajectory.hpp"

namespace ks {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::outside_window: return "outside-window";
    }
    return "unknown";
}

} // namespace ks

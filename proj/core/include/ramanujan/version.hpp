#pragma once

namespace ramanujan {

inline constexpr const char* toolkit_version = "1.0.0";

}

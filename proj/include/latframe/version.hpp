#pragma once

#define LATFRAME_VERSION "0.1.0"

namespace latframe {

inline const char* version() { return LATFRAME_VERSION; }

} // namespace latframe

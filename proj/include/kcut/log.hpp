#ifndef KCUT_LOG_HPP
#define KCUT_LOG_HPP

#include <spdlog/spdlog.h>

namespace kcut {

/// Library logger: writes to stderr, level taken from KCUT_LOG
/// (error, info or debug; default error) on first use.
spdlog::logger& logger();

/// Re-reads KCUT_LOG.
void reload_log_level();

}  // namespace kcut

#endif  // KCUT_LOG_HPP

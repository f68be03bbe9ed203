#include "kcut/log.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>

namespace kcut {
namespace {

spdlog::level::level_enum env_level() {
  const char* env = std::getenv("KCUT_LOG");
  const std::string level = env ? env : "";
  if (level == "debug") return spdlog::level::debug;
  if (level == "info") return spdlog::level::info;
  return spdlog::level::err;
}

}  // namespace

spdlog::logger& logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto l = spdlog::stderr_color_mt("kcut");
    l->set_level(env_level());
    return l;
  }();
  return *instance;
}

void reload_log_level() { logger().set_level(env_level()); }

}  // namespace kcut

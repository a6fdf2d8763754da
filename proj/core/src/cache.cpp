#include "smoothsum/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace smoothsum {

std::optional<std::filesystem::path> cache_dir() {
  const char* env = std::getenv(kCacheEnvVar);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::optional<std::string> cache_load(const std::string& name) {
  const auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / name, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void cache_store(const std::string& name, const std::string& contents) {
  const auto dir = cache_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;
  const auto tmp = *dir / (name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << contents;
    if (!out) return;
  }
  std::filesystem::rename(tmp, *dir / name, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace smoothsum

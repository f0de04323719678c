#include "lozenge/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

constexpr const char* kMagic = "lozenge-words 1";

std::string header_line(const GroupSpec& group, int depth, const EnumerationOptions& options, std::size_t count) {
  char eps[40];
  std::snprintf(eps, sizeof eps, "%.17g", options.tol.eps);
  return std::string(kMagic) + " " + fingerprint(group) + " " + std::to_string(depth) + " " + eps + " " +
         std::to_string(count);
}

}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCache::file_for(const GroupSpec& group, int depth) const {
  return dir_ / (fingerprint(group) + "-d" + std::to_string(depth) + ".words");
}

std::optional<std::vector<MobiusElement>> DiskCache::load(const GroupSpec& group, int depth,
                                                          const EnumerationOptions& options) const {
  std::ifstream in(file_for(group, depth));
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::istringstream fields(header.substr(std::min(header.size(), std::string(kMagic).size())));
  std::size_t count = 0;
  {
    std::string fp, eps;
    int d = -1;
    if (!(fields >> fp >> d >> eps >> count)) return std::nullopt;
    if (header != header_line(group, depth, options, count)) return std::nullopt;
  }
  std::vector<MobiusElement> elements;
  elements.reserve(count);
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      elements.push_back(element_from_word(group, parse_word(line, group.rank())));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (elements.size() != count) return std::nullopt;
  return elements;
}

void DiskCache::store(const GroupSpec& group, int depth, const EnumerationOptions& options,
                      const std::vector<MobiusElement>& elements) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create cache directory '" + dir_.string() + "': " + ec.message());
  const auto target = file_for(group, depth);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write cache file '" + temp.string() + "'");
    out << header_line(group, depth, options, elements.size()) << '\n';
    for (const auto& e : elements) out << format_word(e.word()) << '\n';
    if (!out) fail(ErrorCode::IoError, "cannot write cache file '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) fail(ErrorCode::IoError, "cannot move cache file into place: " + ec.message());
}

std::vector<MobiusElement> DiskCache::load_or_build(const GroupSpec& group, int depth,
                                                    const EnumerationOptions& options) {
  if (projected_count(group.rank(), depth) > options.cap)
    fail(ErrorCode::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds the enumeration cap");
  if (auto cached = load(group, depth, options)) {
    ++hits_;
    return std::move(*cached);
  }
  ++misses_;
  auto elements = enumerate_elements(group, depth, options);
  store(group, depth, options, elements);
  return elements;
}

ElementCache::Provider DiskCache::provider() {
  return [this](const GroupSpec& group, int depth, const EnumerationOptions& options) {
    return load_or_build(group, depth, options);
  };
}

std::optional<std::string> cache_dir_from_env() {
  const char* value = std::getenv(kCacheEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

}  // namespace lozenge

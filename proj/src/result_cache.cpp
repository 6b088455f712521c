#include "turan/result_cache.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "turan/graph_io.hpp"

namespace turan {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records_.push_back(from_record(line));
    } catch (const Error&) {
      ++skipped_;
    }
  }
}

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("TURAN_CACHE"); env != nullptr && *env != '\0') return env;
  return "turan-cache.jsonl";
}

std::optional<ExtremalResult> ResultCache::lookup(const Instance& instance) const {
  const auto key = instance.canonical();
  std::lock_guard lock(mutex_);
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    if (it->instance == key) return *it;
  }
  return std::nullopt;
}

void ResultCache::store(const ExtremalResult& result) {
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ParameterError("cannot append to cache " + path_.string());
  out << to_record(result) << '\n';
  records_.push_back(result);
}

std::string ResultCache::to_record(const ExtremalResult& result) {
  json j;
  j["parts"] = result.instance.parts.sizes();
  j["r"] = result.instance.r;
  j["k"] = result.instance.k;
  j["max_edges"] = result.max_edges;
  j["witness"] = to_text(result.witness);
  j["nodes"] = result.nodes_explored;
  j["elapsed_ms"] = result.elapsed.count();
  return j.dump();
}

ExtremalResult ResultCache::from_record(const std::string& line) {
  try {
    const auto j = json::parse(line);
    ExtremalResult r;
    r.instance = Instance(PartSizes(j.at("parts").get<std::vector<int>>()), j.at("r").get<int>(), j.at("k").get<int>());
    r.max_edges = j.at("max_edges").get<std::int64_t>();
    r.witness = parse_graph(j.at("witness").get<std::string>());
    r.nodes_explored = j.at("nodes").get<std::uint64_t>();
    r.elapsed = std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  }
}

}  // namespace turan

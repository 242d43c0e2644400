#include "fermat/app/trace_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "fermat/error.hpp"

namespace fermat {

std::optional<long> TraceCache::lookup(std::uint64_t p) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), p, [](const TraceEntry& e, std::uint64_t q) { return e.p < q; });
  if (it == entries.end() || it->p != p) return std::nullopt;
  return it->t;
}

namespace {

std::string header(int m) {
  return std::string(trace_cache_magic) + " v" + std::to_string(trace_cache_version) + " m=" + std::to_string(m);
}

}  // namespace

TraceCache read_trace_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::FormatMismatch, path.string() + ": empty file");
  std::istringstream hs(line);
  std::string magic, version, mfield;
  hs >> magic >> version >> mfield;
  if (magic != trace_cache_magic || version != "v" + std::to_string(trace_cache_version) || mfield.rfind("m=", 0) != 0)
    throw Error(ErrorCode::FormatMismatch, path.string() + ": bad header '" + line + "'");
  TraceCache cache;
  try {
    cache.m = std::stoi(mfield.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::FormatMismatch, path.string() + ": bad modulus in header");
  }
  if (header(cache.m) != line) throw Error(ErrorCode::FormatMismatch, path.string() + ": bad header '" + line + "'");

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    TraceEntry e;
    std::string rest;
    if (!(ls >> e.p >> e.t) || (ls >> rest))
      throw Error(ErrorCode::FormatMismatch, path.string() + ":" + std::to_string(lineno) + ": malformed line");
    if (!cache.entries.empty() && cache.entries.back().p >= e.p)
      throw Error(ErrorCode::FormatMismatch, path.string() + ":" + std::to_string(lineno) + ": entries not sorted");
    cache.entries.push_back(e);
  }
  return cache;
}

void write_trace_cache(const std::filesystem::path& path, const TraceCache& cache) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << header(cache.m) << '\n';
    for (const auto& e : cache.entries) out << e.p << ' ' << e.t << '\n';
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

TraceCache merge_trace_caches(const std::vector<TraceCache>& caches) {
  if (caches.empty()) throw Error(ErrorCode::FormatMismatch, "nothing to merge");
  TraceCache out;
  out.m = caches.front().m;
  for (const auto& c : caches) {
    if (c.m != out.m) throw Error(ErrorCode::FormatMismatch, "caches for m=" + std::to_string(out.m) + " and m=" + std::to_string(c.m));
    std::vector<TraceEntry> merged;
    merged.reserve(out.entries.size() + c.entries.size());
    auto a = out.entries.begin();
    auto b = c.entries.begin();
    while (a != out.entries.end() || b != c.entries.end()) {
      if (b == c.entries.end() || (a != out.entries.end() && a->p < b->p)) merged.push_back(*a++);
      else if (a == out.entries.end() || b->p < a->p) merged.push_back(*b++);
      else {
        if (a->t != b->t)
          throw Error(ErrorCode::ConflictingEntry, "p=" + std::to_string(a->p) + ": t=" + std::to_string(a->t) + " vs t=" + std::to_string(b->t));
        merged.push_back(*a++);
        ++b;
      }
    }
    out.entries = std::move(merged);
  }
  return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int m) {
  return dir / ("traces-m" + std::to_string(m) + ".txt");
}

CachedSweep cached_sweep(int m, std::uint64_t bound, const std::filesystem::path& dir, const SweepOptions& options) {
  const auto file = cache_file(dir, m);
  TraceCache cache;
  cache.m = m;
  if (std::filesystem::exists(file)) {
    cache = read_trace_cache(file);
    if (cache.m != m) throw Error(ErrorCode::FormatMismatch, file.string() + " holds m=" + std::to_string(cache.m));
  }
  CachedSweep out;
  out.traces = sweep_traces(m, 0, bound, options, cache.entries);
  for (const auto& e : out.traces) {
    if (cache.lookup(e.p)) ++out.reused;
    else ++out.computed;
  }
  if (out.computed > 0) write_trace_cache(file, merge_trace_caches({cache, TraceCache{m, out.traces}}));
  return out;
}

}  // namespace fermat

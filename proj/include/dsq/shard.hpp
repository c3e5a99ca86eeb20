// Sharded execution with an optional resumable cursor.
//
// Cursor file: one line per event, `shard_prefix=<word> completed=<bool>`,
// append-only; the last line for a shard wins. Results of completed shards
// are kept next to it in `<cursor>.payload` as JSON lines, the first line
// holding the run signature so a cursor is never reused for another run.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dsq {

struct ShardOptions {
  std::size_t jobs = 0;  // 0: one per logical processor
  std::optional<std::string> resume_path;
};

std::size_t effective_jobs(std::size_t requested);

// Runs work(i) for every shard i not already completed in the cursor and
// returns all results in shard order. Throws std::invalid_argument if the
// cursor belongs to a run with a different signature, std::runtime_error
// on I/O failure; exceptions from work are rethrown after workers stop.
std::vector<nlohmann::json> run_shards(
    const std::vector<std::string>& shard_ids,
    const nlohmann::json& signature,
    const std::function<nlohmann::json(std::size_t)>& work,
    const ShardOptions& options);

struct CursorState {
  std::vector<std::pair<std::string, bool>> lines;
  // Shard prefix -> completed, last line wins.
  std::vector<std::string> completed() const;
};

CursorState read_cursor(const std::string& path);

}  // namespace dsq

#include "dsq/shard.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <thread>

namespace dsq {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t effective_jobs(std::size_t requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<std::string> CursorState::completed() const {
  std::map<std::string, bool> last;
  for (const auto& [prefix, done] : lines) last[prefix] = done;
  std::vector<std::string> out;
  for (const auto& [prefix, done] : last) {
    if (done) out.push_back(prefix);
  }
  return out;
}

CursorState read_cursor(const std::string& path) {
  CursorState state;
  std::ifstream in(path);
  if (!in) return state;
  static const std::regex line_re("^shard_prefix=([a-z]*) completed=(true|false)$");
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) {
      throw std::invalid_argument("malformed cursor line " +
                                  std::to_string(number) + " in " + path);
    }
    state.lines.emplace_back(m[1].str(), m[2].str() == "true");
  }
  return state;
}

namespace {

class Journal {
 public:
  Journal(const std::string& path, const json& signature) : path_(path) {
    const std::string payload_path = path + ".payload";
    const bool resuming = fs::exists(payload_path);
    if (resuming) {
      std::ifstream in(payload_path);
      std::string line;
      if (!std::getline(in, line) ||
          json::parse(line, nullptr, false).value("signature", json()) !=
              signature) {
        throw std::invalid_argument("resume file " + path +
                                    " was written for a different run");
      }
      while (std::getline(in, line)) {
        // A torn last line from an interrupted run is ignored.
        json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.contains("shard")) continue;
        stored_[entry["shard"].get<std::string>()] = entry["result"];
      }
    } else if (fs::exists(path)) {
      throw std::invalid_argument("resume file " + path +
                                  " has no payload sidecar");
    }
    cursor_.open(path, std::ios::app);
    payload_.open(payload_path, std::ios::app);
    if (!cursor_ || !payload_) {
      throw std::runtime_error("cannot open resume file " + path);
    }
    if (!resuming) {
      payload_ << json{{"signature", signature}}.dump() << '\n' << std::flush;
    }
    for (const auto& prefix : read_cursor(path).completed()) {
      done_.insert({prefix, true});
    }
  }

  std::optional<json> stored(const std::string& shard) const {
    if (!done_.count(shard)) return std::nullopt;
    auto it = stored_.find(shard);
    if (it == stored_.end()) return std::nullopt;
    return it->second;
  }

  void started(const std::string& shard) {
    cursor_ << "shard_prefix=" << shard << " completed=false\n" << std::flush;
  }

  void finished(const std::string& shard, const json& result) {
    payload_ << json{{"shard", shard}, {"result", result}}.dump() << '\n'
             << std::flush;
    cursor_ << "shard_prefix=" << shard << " completed=true\n" << std::flush;
    if (!cursor_ || !payload_) {
      throw std::runtime_error("cannot write resume file " + path_);
    }
  }

 private:
  std::string path_;
  std::ofstream cursor_;
  std::ofstream payload_;
  std::map<std::string, json> stored_;
  std::map<std::string, bool> done_;
};

struct Event {
  std::size_t shard;
  bool finished;
};

}  // namespace

std::vector<json> run_shards(const std::vector<std::string>& shard_ids,
                             const json& signature,
                             const std::function<json(std::size_t)>& work,
                             const ShardOptions& options) {
  std::vector<json> results(shard_ids.size());
  std::optional<Journal> journal;
  if (options.resume_path) journal.emplace(*options.resume_path, signature);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < shard_ids.size(); ++i) {
    if (journal) {
      if (auto r = journal->stored(shard_ids[i])) {
        results[i] = std::move(*r);
        continue;
      }
    }
    pending.push_back(i);
  }

  const std::size_t jobs =
      std::min(effective_jobs(options.jobs), std::max<std::size_t>(1, pending.size()));
  if (jobs == 1) {
    for (std::size_t i : pending) {
      if (journal) journal->started(shard_ids[i]);
      results[i] = work(i);
      if (journal) journal->finished(shard_ids[i], results[i]);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;
  std::deque<Event> events;
  std::exception_ptr failure;
  std::size_t running = jobs;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pending.size()) break;
      const std::size_t i = pending[k];
      {
        std::lock_guard lock(mu);
        events.push_back({i, false});
      }
      cv.notify_one();
      try {
        json r = work(i);
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        events.push_back({i, true});
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop.store(true);
      }
      cv.notify_one();
    }
    {
      std::lock_guard lock(mu);
      --running;
    }
    cv.notify_one();
  };

  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);

  std::unique_lock lock(mu);
  while (true) {
    cv.wait(lock, [&] { return !events.empty() || running == 0; });
    while (!events.empty()) {
      const Event e = events.front();
      events.pop_front();
      if (!journal) continue;
      try {
        if (e.finished) {
          journal->finished(shard_ids[e.shard], results[e.shard]);
        } else {
          journal->started(shard_ids[e.shard]);
        }
      } catch (...) {
        if (!failure) failure = std::current_exception();
        stop.store(true);
      }
    }
    if (running == 0) break;
  }
  lock.unlock();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace dsq

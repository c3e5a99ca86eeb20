#include "dsq/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dsq/doublesq.hpp"
#include "dsq/families.hpp"
#include "dsq/inversion.hpp"
#include "dsq/mates.hpp"

namespace dsq {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string word_label(std::string_view w) {
  if (w.size() <= max_echoed_length) return std::string(w);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(w)));
  return std::string("fnv1a64:") + buf;
}

AnalysisReport analyze(const Word& w) {
  const RightmostTable table(w);
  const auto fs = find_fs_double_squares(table);

  AnalysisReport r;
  r.word = word_label(w.view());
  r.length = w.size();
  r.bounds = check_bounds(table);
  r.delta = r.bounds.delta;
  r.distinct_squares = r.bounds.distinct;

  for (const auto& d : fs) {
    const auto iv = intervals(d.factors);
    const std::size_t off = d.square.start - 1;
    r.fs_double_squares.push_back(FsEntry{
        d.square.start, d.square.u_len, d.square.U_len, d.factors.u1,
        d.factors.u2, d.factors.e1, d.factors.e2, off + iv.N1, off + iv.N2,
        off + iv.L1, off + iv.R1, off + iv.L2, off + iv.R2});
  }
  for (std::size_t i = 1; i < fs.size(); ++i) {
    r.mates.push_back(MateEntry{fs.front().square.start, fs[i].square.start,
                                std::string(to_string(classify_mate(fs.front(), fs[i])))});
  }
  if (!fs.empty()) {
    const Family fam = decompose_family(fs);
    FamilyEntry fe;
    fe.kind = to_string(fam.kind);
    fe.size = fam.size();
    fe.size_bound = family_size_bound(fam);
    for (const auto& s : fam.segments) {
      SegmentEntry se{std::string(to_string(s.kind)), s.type_pair.first,
                      s.type_pair.second, {}};
      for (std::size_t m : s.members) {
        se.member_starts.push_back(fam.members[m].square.square.start);
      }
      fe.segments.push_back(std::move(se));
    }
    r.family = std::move(fe);
  }
  return r;
}

json to_json(const AnalysisReport& r) {
  json fs = json::array();
  for (const auto& e : r.fs_double_squares) {
    fs.push_back({{"start", e.start}, {"u_len", e.u_len}, {"U_len", e.U_len},
                  {"u1", e.u1}, {"u2", e.u2}, {"e1", e.e1}, {"e2", e.e2},
                  {"N1", e.N1}, {"N2", e.N2}, {"L1", e.L1}, {"R1", e.R1},
                  {"L2", e.L2}, {"R2", e.R2}});
  }
  json mates = json::array();
  for (const auto& m : r.mates) {
    mates.push_back({{"from_start", m.from_start}, {"to_start", m.to_start},
                     {"kind", m.kind}});
  }
  json family = nullptr;
  if (r.family) {
    json segs = json::array();
    for (const auto& s : r.family->segments) {
      segs.push_back({{"kind", s.kind},
                      {"type_pair", {s.p, s.q}},
                      {"member_starts", s.member_starts}});
    }
    family = {{"kind", r.family->kind}, {"segments", segs},
              {"size", r.family->size}, {"size_bound", r.family->size_bound}};
  }
  json checks = json::array();
  for (const auto& c : r.bounds.checks) {
    checks.push_back({{"name", c.name}, {"bound", c.bound}, {"observed", c.observed},
                      {"scale", c.scale}, {"pass", c.pass}});
  }
  return json{{"schema_version", schema_version},
              {"word", r.word},
              {"length", r.length},
              {"delta", r.delta},
              {"distinct_squares", r.distinct_squares},
              {"fs_double_squares", fs},
              {"mates", mates},
              {"family", family},
              {"bounds", {{"n", r.bounds.n},
                          {"delta", r.bounds.delta},
                          {"distinct", r.bounds.distinct},
                          {"checks", checks}}}};
}

AnalysisReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != schema_version) {
      throw std::invalid_argument("unsupported schema_version");
    }
    AnalysisReport r;
    j.at("word").get_to(r.word);
    j.at("length").get_to(r.length);
    j.at("delta").get_to(r.delta);
    j.at("distinct_squares").get_to(r.distinct_squares);
    for (const auto& e : j.at("fs_double_squares")) {
      FsEntry f;
      e.at("start").get_to(f.start);
      e.at("u_len").get_to(f.u_len);
      e.at("U_len").get_to(f.U_len);
      e.at("u1").get_to(f.u1);
      e.at("u2").get_to(f.u2);
      e.at("e1").get_to(f.e1);
      e.at("e2").get_to(f.e2);
      e.at("N1").get_to(f.N1);
      e.at("N2").get_to(f.N2);
      e.at("L1").get_to(f.L1);
      e.at("R1").get_to(f.R1);
      e.at("L2").get_to(f.L2);
      e.at("R2").get_to(f.R2);
      r.fs_double_squares.push_back(std::move(f));
    }
    for (const auto& m : j.at("mates")) {
      r.mates.push_back(MateEntry{m.at("from_start").get<std::size_t>(),
                                  m.at("to_start").get<std::size_t>(),
                                  m.at("kind").get<std::string>()});
    }
    if (const auto& fam = j.at("family"); !fam.is_null()) {
      FamilyEntry fe;
      fam.at("kind").get_to(fe.kind);
      fam.at("size").get_to(fe.size);
      fam.at("size_bound").get_to(fe.size_bound);
      for (const auto& s : fam.at("segments")) {
        SegmentEntry se;
        s.at("kind").get_to(se.kind);
        se.p = s.at("type_pair").at(0).get<std::size_t>();
        se.q = s.at("type_pair").at(1).get<std::size_t>();
        s.at("member_starts").get_to(se.member_starts);
        fe.segments.push_back(std::move(se));
      }
      r.family = std::move(fe);
    }
    const auto& b = j.at("bounds");
    b.at("n").get_to(r.bounds.n);
    b.at("delta").get_to(r.bounds.delta);
    b.at("distinct").get_to(r.bounds.distinct);
    for (const auto& c : b.at("checks")) {
      BoundCheck bc;
      c.at("name").get_to(bc.name);
      c.at("bound").get_to(bc.bound);
      c.at("observed").get_to(bc.observed);
      c.at("scale").get_to(bc.scale);
      c.at("pass").get_to(bc.pass);
      r.bounds.checks.push_back(std::move(bc));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const AnalysisReport& r, bool color) {
  const auto paint = [color](std::string_view text, const char* code) {
    if (!color) return std::string(text);
    return std::string("\x1b[") + code + "m" + std::string(text) + "\x1b[0m";
  };
  std::ostringstream out;
  out << paint(r.word, "1") << '\n';
  out << "  length " << r.length << ", delta " << r.delta << ", distinct squares "
      << r.distinct_squares << '\n';
  for (const auto& e : r.fs_double_squares) {
    out << "  fs " << e.start << ": |u|=" << e.u_len << " |U|=" << e.U_len
        << " u1=" << e.u1 << " u2=" << e.u2 << " e1=" << e.e1 << " e2=" << e.e2
        << " inversion [" << e.L1 << ".." << e.R1 << "] [" << e.L2 << ".."
        << e.R2 << "]\n";
  }
  for (const auto& m : r.mates) {
    out << "  mate " << m.from_start << " -> " << m.to_start << ": " << m.kind
        << '\n';
  }
  if (r.family) {
    out << "  family " << r.family->kind << ", size " << r.family->size
        << " (bound " << r.family->size_bound << ")\n";
    for (const auto& s : r.family->segments) {
      out << "    " << s.kind << " (" << s.p << ',' << s.q << "):";
      for (std::size_t st : s.member_starts) out << ' ' << st;
      out << '\n';
    }
  }
  for (const auto& c : r.bounds.checks) {
    out << "  bound " << c.name << ": ";
    if (c.scale != 1) out << c.scale << '*';
    out << c.observed << " <= " << c.bound << ' '
        << (c.pass ? paint("ok", "32") : paint("FAIL", "31")) << '\n';
  }
  return out.str();
}

}  // namespace dsq

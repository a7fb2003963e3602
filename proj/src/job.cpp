#include "zipk/job.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "zipk/error.hpp"

namespace zipk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw ParseError("invalid integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

std::int64_t json_int(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> json_int_list(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(json_int(x, what));
  return out;
}

std::vector<std::vector<std::int64_t>> json_int_matrix(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : j) out.push_back(json_int_list(row, what));
  return out;
}

RootDatum explicit_group(const Json& j) {
  RootDatum rd;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      if (!value.is_string()) throw ParseError("group.name must be a string");
      rd.name = value.get<std::string>();
    } else if (key == "rank") {
      const auto r = json_int(value, "group.rank");
      if (r < 0) throw ParseError("group.rank must be non-negative");
      rd.rank = static_cast<std::size_t>(r);
    } else if (key == "roots") {
      rd.roots = json_int_matrix(value, "group.roots");
    } else if (key == "coroots") {
      rd.coroots = json_int_matrix(value, "group.coroots");
    } else if (key == "simple_roots") {
      for (auto i : json_int_list(value, "group.simple_roots")) {
        if (i < 0) throw ParseError("group.simple_roots entries must be non-negative indices");
        rd.simple_roots.push_back(static_cast<std::size_t>(i));
      }
    } else if (key != "twist") {
      throw ParseError("unknown group field '" + key + "'");
    }
  }
  if (!j.contains("rank")) throw ParseError("explicit group needs a rank");
  if (rd.roots.size() != rd.coroots.size())
    throw ParseError("group has " + std::to_string(rd.roots.size()) + " roots but " +
                     std::to_string(rd.coroots.size()) + " coroots");
  for (const auto* list : {&rd.roots, &rd.coroots})
    for (const auto& v : *list)
      if (v.size() != rd.rank)
        throw ParseError("root vector " + to_string(v) + " does not have length " +
                         std::to_string(rd.rank));
  for (auto i : rd.simple_roots)
    if (i >= rd.roots.size()) throw ParseError("simple root index " + std::to_string(i) + " out of range");
  return rd;
}

Json toml_node_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    Json out = Json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = toml_node_to_json(v);
    return out;
  }
  if (const auto* a = node.as_array()) {
    Json out = Json::array();
    for (const auto& v : *a) out.push_back(toml_node_to_json(v));
    return out;
  }
  if (const auto* v = node.as_integer()) return v->get();
  if (const auto* v = node.as_string()) return v->get();
  if (const auto* v = node.as_boolean()) return v->get();
  if (const auto* v = node.as_floating_point()) return v->get();
  throw ParseError("unsupported TOML value type");
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) return {};
  std::vector<std::int64_t> out;
  for (auto part : split(s, ',')) out.push_back(parse_int(part, "integer list '" + std::string(s) + "'"));
  return out;
}

std::vector<std::vector<std::int64_t>> parse_int_matrix(std::string_view text) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto row : split(trim(text), ';')) out.push_back(parse_int_list(row));
  return out;
}

Integer parse_module(std::string_view text) {
  const auto s = trim(text);
  if (s == "Z") return 0;
  if (s.starts_with("Z/")) {
    const auto n = parse_int(s.substr(2), "module '" + std::string(s) + "'");
    if (n < 1) throw ParseError("module modulus must be positive");
    return Integer(static_cast<long>(n));
  }
  throw ParseError("module must be Z or Z/n, got '" + std::string(s) + "'");
}

std::vector<std::string> parse_checks(std::string_view text) {
  const auto s = trim(text);
  if (s.empty() || s == "none") return {};
  if (s == "all") return kCheckNames;
  std::vector<std::string> out;
  for (auto part : split(s, ',')) {
    const std::string name(trim(part));
    if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end())
      throw ParseError("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

void apply_job_json(JobSpec& job, const Json& j) {
  if (!j.is_object()) throw ParseError("job must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "group") {
      if (value.is_string()) {
        job.preset = value.get<std::string>();
        job.explicit_group.reset();
      } else if (value.is_object()) {
        job.explicit_group = explicit_group(value);
        job.preset.reset();
        if (value.contains("twist")) job.twist = json_int_matrix(value["twist"], "group.twist");
      } else {
        throw ParseError("group must be a preset name or an object");
      }
    } else if (key == "cocharacter" || key == "mu") {
      job.mu = json_int_list(value, key);
    } else if (key == "p") {
      job.p = json_int(value, "p");
    } else if (key == "checks") {
      if (value.is_string()) {
        job.checks = parse_checks(value.get<std::string>());
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& c : value) {
          if (!c.is_string()) throw ParseError("checks must be strings");
          joined += (joined.empty() ? "" : ",") + c.get<std::string>();
        }
        job.checks = parse_checks(joined);
      } else {
        throw ParseError("checks must be a list of names");
      }
    } else if (key == "window") {
      job.window = json_int(value, "window");
      if (*job.window < 0) throw ParseError("window must be non-negative");
    } else if (key == "output") {
      if (!value.is_string()) throw ParseError("output must be a path");
      job.output = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) throw ParseError("format must be json or text");
      job.format = value.get<std::string>();
      if (job.format != "json" && job.format != "text") throw ParseError("format must be json or text");
    } else if (key == "max_degree") {
      const auto d = json_int(value, "max_degree");
      if (d < 1 || d > 65535) throw ParseError("max_degree out of range");
      job.max_degree = static_cast<std::uint32_t>(d);
    } else if (key == "twist") {
      job.twist = json_int_matrix(value, "twist");
    } else if (key == "module") {
      if (!value.is_string()) throw ParseError("module must be \"Z\" or \"Z/n\"");
      job.module = parse_module(value.get<std::string>());
    } else {
      throw ParseError("unknown job field '" + key + "'");
    }
  }
}

Json toml_to_json(std::string_view text) {
  try {
    return toml_node_to_json(toml::parse(text));
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "TOML: " << e.description() << " at line " << e.source().begin.line;
    throw ParseError(msg.str());
  }
}

JobSpec load_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read job file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  Json j;
  if (path.ends_with(".toml")) {
    j = toml_to_json(text);
  } else {
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError("JSON: " + std::string(e.what()));
    }
  }
  JobSpec job;
  apply_job_json(job, j);
  return job;
}

RootDatum resolve_group(const JobSpec& job) {
  RootDatum rd;
  if (job.preset && job.explicit_group) throw ParseError("give either a preset or an explicit group");
  if (job.preset) {
    rd = preset(*job.preset);
  } else if (job.explicit_group) {
    rd = *job.explicit_group;
  } else {
    throw ParseError("no group given");
  }
  if (job.twist) {
    const auto& rows = *job.twist;
    if (rows.size() != rd.rank) throw ParseError("twist must be a " + std::to_string(rd.rank) + "x" +
                                                 std::to_string(rd.rank) + " matrix");
    std::vector<std::int64_t> entries;
    for (const auto& r : rows) {
      if (r.size() != rd.rank) throw ParseError("twist row has length " + std::to_string(r.size()) +
                                                ", expected " + std::to_string(rd.rank));
      entries.insert(entries.end(), r.begin(), r.end());
    }
    rd.twist = LatticeMap(rd.rank, std::move(entries));
  }
  if (job.mu && job.mu->size() != rd.rank)
    throw ParseError("cocharacter has length " + std::to_string(job.mu->size()) + ", expected " +
                     std::to_string(rd.rank));
  return rd;
}

}  // namespace zipk

#include "tfs/jobfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Line {
  std::size_t number;
  std::string key;    // empty for section open/close
  std::string value;
};

struct Section {
  std::string name;
  std::size_t line;
  std::vector<Line> entries;
};

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections;
  Section* open = nullptr;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.back() == '{') {
      if (open) throw ParseError("line " + std::to_string(number) + ": nested section", number);
      sections.push_back({trim(line.substr(0, line.size() - 1)), number, {}});
      open = &sections.back();
      continue;
    }
    if (line == "}") {
      if (!open) throw ParseError("line " + std::to_string(number) + ": stray '}'", number);
      open = nullptr;
      continue;
    }
    if (!open)
      throw ParseError("line " + std::to_string(number) + ": expected a section header", number);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(number) + ": expected 'key = value'", number);
    open->entries.push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
  }
  if (open)
    throw ParseError("unterminated section '" + open->name + "'", open->line);
  return sections;
}

std::vector<Perm> parse_generator_list(const std::string& value, std::size_t degree,
                                       std::size_t line) {
  std::vector<Perm> gens;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t semi = value.find(';', start);
    std::string item = trim(value.substr(start, semi == std::string::npos ? semi : semi - start));
    if (!item.empty()) {
      try {
        gens.push_back(Perm::parse(item, degree));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
      }
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return gens;
}

PermGroup parse_subgroup(const std::string& value, const PermGroup& ambient, std::size_t line) {
  std::vector<Perm> gens = parse_generator_list(value, ambient.degree(), line);
  for (const auto& g : gens)
    if (!ambient.contains(g))
      throw DomainError("line " + std::to_string(line) + ": generator " + format(g) +
                        " is not an element of the declared group");
  return PermGroup::generate(std::move(gens), ambient.degree());
}

PermGroup parse_perm_group(const Section& section) {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<std::pair<std::string, std::size_t>> pending;
  for (const auto& entry : section.entries) {
    if (entry.key == "kind") continue;
    if (entry.key == "degree") {
      try {
        degree = static_cast<std::size_t>(std::stoul(entry.value));
      } catch (...) {
        throw ParseError("line " + std::to_string(entry.number) + ": degree must be a number",
                         entry.number);
      }
      if (degree == 0 || degree > 255)
        throw ParseError("line " + std::to_string(entry.number) +
                             ": degree must be between 1 and 255",
                         entry.number);
    } else if (entry.key == "gen") {
      pending.emplace_back(entry.value, entry.number);
    } else {
      throw ParseError("line " + std::to_string(entry.number) + ": unknown group key '" +
                           entry.key + "'",
                       entry.number);
    }
  }
  if (degree == 0)
    throw ParseError("group section needs 'degree'", section.line);
  for (const auto& [value, line] : pending) {
    auto more = parse_generator_list(value, degree, line);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  return PermGroup::generate(std::move(gens), degree);
}

TowerGroup parse_tower_group(const Section& section) {
  std::optional<Ordinal> bound;
  std::vector<std::pair<OrdinalInterval, SimpleLabel>> pieces;
  for (const auto& entry : section.entries) {
    if (entry.key == "kind") continue;
    if (entry.key == "bound") {
      bound = parse_ordinal(entry.value);
    } else if (entry.key == "label") {
      std::size_t space = entry.value.rfind(' ');
      if (space == std::string::npos)
        throw ParseError("line " + std::to_string(entry.number) +
                             ": label needs '[lo,hi) NAME'",
                         entry.number);
      IntervalSet iv = parse_interval_set(entry.value.substr(0, space));
      if (iv.intervals().size() != 1)
        throw ParseError("line " + std::to_string(entry.number) +
                             ": label piece must be a single interval",
                         entry.number);
      pieces.emplace_back(iv.intervals()[0],
                          SimpleLabel::parse(trim(entry.value.substr(space + 1))));
    } else {
      throw ParseError("line " + std::to_string(entry.number) + ": unknown group key '" +
                           entry.key + "'",
                       entry.number);
    }
  }
  if (!bound) throw ParseError("tower group section needs 'bound'", section.line);
  if (pieces.empty())
    throw ParseError("tower group section needs at least one 'label'", section.line);
  return TowerGroup(*bound, std::move(pieces));
}

Series parse_series_section(const Section& section, const JobSpec& job) {
  bool has_steps = false, has_bijection = false;
  for (const auto& entry : section.entries) {
    if (entry.key == "step") has_steps = true;
    if (entry.key == "bijection" || entry.key == "move") has_bijection = true;
  }
  if (has_steps && has_bijection)
    throw ParseError("series section mixes 'step' lines with a bijection clause", section.line);
  if (!has_steps && !has_bijection)
    throw ParseError("series section needs 'step' lines or a bijection clause", section.line);

  if (job.is_perm()) {
    if (has_bijection)
      throw ParseError("bijection clauses require a tower group", section.line);
    std::vector<PermGroup> chain;
    for (const auto& entry : section.entries)
      if (entry.key == "step")
        chain.push_back(parse_subgroup(entry.value, job.perm_group(), entry.number));
      else
        throw ParseError("line " + std::to_string(entry.number) + ": unknown series key '" +
                             entry.key + "'",
                         entry.number);
    if (chain.empty()) throw ParseError("series section needs 'step' lines", section.line);
    return FiniteSeries(job.perm_group(), std::move(chain));
  }

  const TowerGroup& group = job.tower_group();
  if (has_steps) {
    std::vector<IntervalSet> chain;
    for (const auto& entry : section.entries)
      if (entry.key == "step")
        chain.push_back(parse_interval_set(entry.value));
      else
        throw ParseError("line " + std::to_string(entry.number) + ": unknown series key '" +
                             entry.key + "'",
                         entry.number);
    return series_from_supports(group, std::move(chain));
  }
  std::vector<TowerMove> moves;
  for (const auto& entry : section.entries) {
    if (entry.key == "bijection") {
      if (entry.value != "identity")
        throw ParseError("line " + std::to_string(entry.number) +
                             ": 'bijection' accepts only 'identity'; use 'move' lines",
                         entry.number);
    } else if (entry.key == "move") {
      moves.push_back(parse_tower_move(entry.value));
    } else {
      throw ParseError("line " + std::to_string(entry.number) + ": unknown series key '" +
                           entry.key + "'",
                       entry.number);
    }
  }
  return series_from_bijection(group, PositionBijection::from_moves(group.bound(), moves));
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  auto sections = split_sections(text);
  const Section* group_section = nullptr;
  for (const auto& s : sections)
    if (s.name == "group") {
      if (group_section) throw ParseError("multiple group sections", s.line);
      group_section = &s;
    }
  if (!group_section) throw ParseError("job needs a group section", 0);

  std::string kind = "perm";
  for (const auto& entry : group_section->entries)
    if (entry.key == "kind") kind = entry.value;

  JobSpec job{PermGroup::trivial(1), {}, {}};
  if (kind == "perm")
    job.group = parse_perm_group(*group_section);
  else if (kind == "tower")
    job.group = parse_tower_group(*group_section);
  else
    throw ParseError("unknown group kind '" + kind + "'", group_section->line);

  for (const auto& section : sections) {
    if (section.name == "group") continue;
    if (section.name == "series") {
      job.series.push_back(parse_series_section(section, job));
    } else if (section.name == "zassenhaus") {
      if (!job.is_perm())
        throw ParseError("zassenhaus sections require a permutation group", section.line);
      std::map<std::string, PermGroup> parts;
      for (const auto& entry : section.entries) {
        if (entry.key != "first_outer" && entry.key != "first_inner" &&
            entry.key != "second_outer" && entry.key != "second_inner")
          throw ParseError("line " + std::to_string(entry.number) +
                               ": unknown zassenhaus key '" + entry.key + "'",
                           entry.number);
        parts.insert_or_assign(entry.key,
                               parse_subgroup(entry.value, job.perm_group(), entry.number));
      }
      for (const char* key : {"first_outer", "first_inner", "second_outer", "second_inner"})
        if (!parts.count(key))
          throw ParseError("zassenhaus section is missing '" + std::string(key) + "'",
                           section.line);
      job.zassenhaus = JobSpec::ZassenhausSpec{parts.at("first_outer"), parts.at("first_inner"),
                                               parts.at("second_outer"),
                                               parts.at("second_inner")};
    } else {
      throw ParseError("unknown section '" + section.name + "'", section.line);
    }
  }
  return job;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read job file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_job(buffer.str());
}

}  // namespace tfs

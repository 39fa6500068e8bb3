#include "progsat/varmap.hpp"

#include "progsat/types.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace progsat {

const char *const kGeneratorVersion = "progsat-0.1";

void VarMap::set_meta(std::string function, int rounds) {
  function_ = std::move(function);
  rounds_ = rounds;
}

void VarMap::add(const std::string &name, const std::vector<int> &ids) {
  if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
    throw BuildError("invalid variable-map name '" + name + "'");
  if (entries_.count(name))
    throw BuildError("duplicate variable-map name '" + name + "'");
  for (int id : ids) {
    if (id < 1) throw BuildError("variable-map id must be positive");
    if (!used_ids_.insert(id).second)
      throw BuildError("variable id " + std::to_string(id) +
                       " registered under two names");
  }
  entries_[name] = ids;
}

bool VarMap::contains(const std::string &name) const {
  return entries_.count(name) > 0;
}

const std::vector<int> &VarMap::resolve(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw BuildError("unknown variable-map name '" + name + "'");
  return it->second;
}

void VarMap::save(std::ostream &out) const {
  out << "varmap " << function_ << " " << rounds_ << " " << kGeneratorVersion
      << "\n";
  for (const auto &[name, ids] : entries_) {
    out << name << " " << ids.size();
    for (int id : ids) out << " " << id;
    out << "\n";
  }
}

VarMap VarMap::load(std::istream &in) {
  VarMap map;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    std::istringstream row(line);
    if (!header_seen) {
      std::string tag, fn, version;
      int rounds;
      if (!(row >> tag >> fn >> rounds >> version) || tag != "varmap")
        throw ParseError("expected 'varmap <function> <rounds> <version>' header",
                         line_no);
      map.set_meta(fn, rounds);
      header_seen = true;
      continue;
    }
    std::string name;
    size_t count;
    if (!(row >> name >> count))
      throw ParseError("malformed variable-map record", line_no);
    std::vector<int> ids(count);
    for (size_t i = 0; i < count; i++)
      if (!(row >> ids[i]))
        throw ParseError("variable-map record shorter than its count", line_no);
    map.add(name, ids);
  }
  if (!header_seen) throw ParseError("empty variable-map file", 1);
  return map;
}

} // namespace progsat

#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace progsat {

// Maps high-level names ("W[3]", "digest[0]", ...) to the DIMACS variable
// ids of their bits, least significant first. Ids are unique across all
// names of one instance.
class VarMap {
public:
  void set_meta(std::string function, int rounds);
  const std::string &function() const { return function_; }
  int rounds() const { return rounds_; }

  void add(const std::string &name, const std::vector<int> &ids);
  bool contains(const std::string &name) const;
  const std::vector<int> &resolve(const std::string &name) const;
  const std::map<std::string, std::vector<int>> &entries() const {
    return entries_;
  }

  void save(std::ostream &out) const;
  static VarMap load(std::istream &in);

  bool operator==(const VarMap &o) const {
    return entries_ == o.entries_ && function_ == o.function_ &&
           rounds_ == o.rounds_;
  }

private:
  std::map<std::string, std::vector<int>> entries_;
  std::set<int> used_ids_;
  std::string function_ = "none";
  int rounds_ = 0;
};

extern const char *const kGeneratorVersion;

} // namespace progsat

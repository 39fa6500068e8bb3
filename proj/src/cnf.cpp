#include "progsat/cnf.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace progsat {

namespace {

struct Tokenizer {
  std::istream &in;
  int line = 1;
  bool at_line_start = true;

  // Reads the next whitespace-separated token, tracking line numbers and
  // skipping comment lines (a 'c' before any token on the line).
  bool next(std::string &tok) {
    tok.clear();
    int c;
    while ((c = in.get()) != EOF) {
      if (c == '\n') {
        line++;
        at_line_start = true;
        continue;
      }
      if (std::isspace(c)) continue;
      if (c == 'c' && at_line_start) {
        while ((c = in.get()) != EOF && c != '\n')
          ;
        if (c == '\n') line++;
        continue;
      }
      at_line_start = false;
      tok.push_back(static_cast<char>(c));
      while ((c = in.get()) != EOF && !std::isspace(c))
        tok.push_back(static_cast<char>(c));
      if (c == '\n') {
        line++;
        at_line_start = true;
      }
      return true;
    }
    return false;
  }
};

int to_int(const std::string &tok, int line, const char *what) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return static_cast<int>(v);
  } catch (const std::exception &) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'",
                     line);
  }
}

} // namespace

Cnf parse_dimacs(std::istream &in) {
  Tokenizer tz{in};
  std::string tok;

  if (!tz.next(tok)) throw ParseError("missing 'p cnf' header", tz.line);
  if (tok != "p") throw ParseError("expected 'p cnf' header", tz.line);
  if (!tz.next(tok) || tok != "cnf")
    throw ParseError("malformed header: expected 'cnf'", tz.line);
  if (!tz.next(tok)) throw ParseError("malformed header: missing counts", tz.line);
  int nvars = to_int(tok, tz.line, "variable count");
  if (!tz.next(tok)) throw ParseError("malformed header: missing clause count", tz.line);
  int nclauses = to_int(tok, tz.line, "clause count");
  if (nvars < 0 || nclauses < 0)
    throw ParseError("negative counts in header", tz.line);

  Cnf cnf;
  cnf.num_vars = nvars;
  std::vector<Lit> cur;
  bool in_clause = false;
  int clause_line = tz.line;

  while (tz.next(tok)) {
    int lit = to_int(tok, tz.line, "literal");
    if (lit == 0) {
      cnf.add_clause(cur);
      cur.clear();
      in_clause = false;
      continue;
    }
    if (!in_clause) {
      in_clause = true;
      clause_line = tz.line;
    }
    if (std::abs(lit) > nvars)
      throw ParseError("literal " + std::to_string(lit) + " exceeds declared " +
                           std::to_string(nvars) + " variable" +
                           (nvars == 1 ? "" : "s"),
                       tz.line);
    cur.push_back(Lit::from_dimacs(lit));
  }
  if (in_clause)
    throw ParseError("clause missing terminating 0", clause_line);
  if (static_cast<int>(cnf.clauses.size()) != nclauses)
    throw ParseError("header declared " + std::to_string(nclauses) +
                         " clauses but found " +
                         std::to_string(cnf.clauses.size()),
                     tz.line);
  return cnf;
}

Cnf parse_dimacs(const std::string &text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream &out, const Cnf &cnf,
                  const std::vector<std::string> &comments) {
  for (const auto &c : comments) out << "c " << c << "\n";
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto &cl : cnf.clauses) {
    for (Lit l : cl) out << l.to_dimacs() << " ";
    out << "0\n";
  }
}

bool model_satisfies(const Cnf &cnf, const std::vector<lbool> &model) {
  for (const auto &cl : cnf.clauses) {
    bool sat = false;
    for (Lit l : cl) {
      if (l.var() >= static_cast<Var>(model.size())) return false;
      if ((model[l.var()] ^ l.sign()) == lbool::True) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

} // namespace progsat

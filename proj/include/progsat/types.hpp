#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace progsat {

// Internal variables are 0-based; the DIMACS-facing API is 1-based.
using Var = int32_t;
constexpr Var var_undef = -1;

// Literal encoded as 2*var + sign, sign 1 = negated.
class Lit {
public:
  Lit() : code_(-2) {}
  Lit(Var v, bool negated) : code_(2 * v + (negated ? 1 : 0)) {}

  static Lit from_dimacs(int lit) {
    return Lit(std::abs(lit) - 1, lit < 0);
  }

  Var var() const { return code_ >> 1; }
  bool sign() const { return code_ & 1; }
  int index() const { return code_; }
  int to_dimacs() const { return sign() ? -(var() + 1) : var() + 1; }

  Lit operator~() const {
    Lit q;
    q.code_ = code_ ^ 1;
    return q;
  }
  bool operator==(const Lit &o) const { return code_ == o.code_; }
  bool operator!=(const Lit &o) const { return code_ != o.code_; }
  bool operator<(const Lit &o) const { return code_ < o.code_; }

private:
  int32_t code_;
};

constexpr int lit_undef_index = -2;

// Three-valued assignment.
enum class lbool : uint8_t { False = 0, True = 1, Undef = 2 };

inline lbool lbool_from(bool b) { return b ? lbool::True : lbool::False; }
inline lbool operator^(lbool v, bool flip) {
  if (v == lbool::Undef) return v;
  return lbool_from((v == lbool::True) != flip);
}

struct ParseError : std::runtime_error {
  ParseError(const std::string &what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_no(line) {}
  int line_no;
};

// An extension returned a clause that violates the hook contract.
struct ContractViolation : std::runtime_error {
  ContractViolation(const std::string &extension, const std::string &what)
      : std::runtime_error("extension '" + extension + "': " + what),
        extension_name(extension) {}
  std::string extension_name;
};

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace progsat

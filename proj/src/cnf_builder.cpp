#include "progsat/cnf_builder.hpp"

#include <cassert>
#include <deque>

namespace progsat {

Word CnfBuilder::new_word(int width) {
  Word w(width);
  for (auto &b : w) b = new_bit();
  return w;
}

Word CnfBuilder::constant_word(uint64_t value, int width) const {
  Word w(width);
  for (int i = 0; i < width; i++) w[i] = Bit::constant((value >> i) & 1);
  return w;
}

void CnfBuilder::add_clause(std::span<const Bit> lits) {
  std::vector<int> out;
  out.reserve(lits.size());
  for (Bit b : lits) {
    if (b.is_const()) {
      if (b.const_value()) return; // clause satisfied
      continue;                    // false literal dropped
    }
    assert(b.var_id() < next_var_);
    out.push_back(b.dimacs());
  }
  clauses_.push_back(std::move(out));
}

void CnfBuilder::fix_bit(Bit b, bool value) {
  if (b.is_const()) {
    if (b.const_value() != value)
      throw BuildError("fixing a constant bit to the opposite value");
    return;
  }
  add_clause({value ? b : ~b});
}

void CnfBuilder::fix_word(const Word &w, uint32_t value) {
  for (size_t i = 0; i < w.size(); i++) fix_bit(w[i], (value >> i) & 1);
}

// --- gates -------------------------------------------------------------------

Bit CnfBuilder::band(Bit a, Bit b) {
  if (a.is_const()) return a.const_value() ? b : Bit::falsum();
  if (b.is_const()) return b.const_value() ? a : Bit::falsum();
  if (a == b) return a;
  if (a == ~b) return Bit::falsum();
  Bit t = new_bit();
  add_clause({~t, a});
  add_clause({~t, b});
  add_clause({t, ~a, ~b});
  return t;
}

Bit CnfBuilder::bor(Bit a, Bit b) { return ~band(~a, ~b); }

Bit CnfBuilder::bxor(Bit a, Bit b) {
  if (a.is_const()) return a.const_value() ? ~b : b;
  if (b.is_const()) return b.const_value() ? ~a : a;
  if (a == b) return Bit::falsum();
  if (a == ~b) return Bit::verum();
  Bit t = new_bit();
  add_clause({~t, a, b});
  add_clause({~t, ~a, ~b});
  add_clause({t, ~a, b});
  add_clause({t, a, ~b});
  return t;
}

Bit CnfBuilder::bxor3(Bit a, Bit b, Bit c) {
  if (a.is_const() || b.is_const() || c.is_const() || a == b || a == ~b ||
      b == c || b == ~c || a == c || a == ~c)
    return bxor(bxor(a, b), c); // folds without allocating
  Bit t = new_bit();
  // t <-> a ^ b ^ c, all eight parity clauses
  add_clause({~t, a, b, c});
  add_clause({~t, a, ~b, ~c});
  add_clause({~t, ~a, b, ~c});
  add_clause({~t, ~a, ~b, c});
  add_clause({t, ~a, b, c});
  add_clause({t, a, ~b, c});
  add_clause({t, a, b, ~c});
  add_clause({t, ~a, ~b, ~c});
  return t;
}

Bit CnfBuilder::bmaj(Bit a, Bit b, Bit c) {
  if (a.is_const()) return a.const_value() ? bor(b, c) : band(b, c);
  if (b.is_const()) return b.const_value() ? bor(a, c) : band(a, c);
  if (c.is_const()) return c.const_value() ? bor(a, b) : band(a, b);
  if (a == b) return a;
  if (b == c) return b;
  if (a == c) return a;
  if (a == ~b) return c;
  if (b == ~c) return a;
  if (a == ~c) return b;
  Bit t = new_bit();
  add_clause({~t, a, b});
  add_clause({~t, a, c});
  add_clause({~t, b, c});
  add_clause({t, ~a, ~b});
  add_clause({t, ~a, ~c});
  add_clause({t, ~b, ~c});
  return t;
}

Bit CnfBuilder::bif(Bit x, Bit y, Bit z) {
  if (x.is_const()) return x.const_value() ? y : z;
  if (y == z) return y;
  if (y == ~z) return bxor(x, z); // x ? ~z : z
  if (y.is_const())
    return y.const_value() ? bor(x, z) : band(~x, z);
  if (z.is_const())
    return z.const_value() ? bor(~x, y) : band(x, y);
  if (x == y) return bor(x, z) /* x ? x : z */;
  if (x == ~y) return band(~x, z);
  if (x == z) return band(x, y);
  if (x == ~z) return bor(~x, y);
  Bit t = new_bit();
  add_clause({~x, ~y, t});
  add_clause({~x, y, ~t});
  add_clause({x, ~z, t});
  add_clause({x, z, ~t});
  add_clause({~y, ~z, t});
  add_clause({y, z, ~t});
  return t;
}

Word CnfBuilder::gate(GateKind kind, std::span<const Word> ops) {
  if (ops.empty()) throw BuildError("gate needs at least one operand");
  size_t width = ops[0].size();
  for (const Word &w : ops)
    if (w.size() != width) throw BuildError("gate operand widths differ");

  auto need = [&](size_t arity) {
    if (ops.size() != arity)
      throw BuildError("gate arity mismatch");
  };

  Word out(width);
  switch (kind) {
  case GateKind::Not:
    need(1);
    for (size_t j = 0; j < width; j++) out[j] = ~ops[0][j];
    break;
  case GateKind::And:
    need(2);
    for (size_t j = 0; j < width; j++) out[j] = band(ops[0][j], ops[1][j]);
    break;
  case GateKind::Or:
    need(2);
    for (size_t j = 0; j < width; j++) out[j] = bor(ops[0][j], ops[1][j]);
    break;
  case GateKind::Xor:
    if (ops.size() == 2) {
      for (size_t j = 0; j < width; j++) out[j] = bxor(ops[0][j], ops[1][j]);
    } else if (ops.size() == 3) {
      for (size_t j = 0; j < width; j++)
        out[j] = bxor3(ops[0][j], ops[1][j], ops[2][j]);
    } else {
      throw BuildError("gate arity mismatch");
    }
    break;
  case GateKind::If:
    need(3);
    for (size_t j = 0; j < width; j++)
      out[j] = bif(ops[0][j], ops[1][j], ops[2][j]);
    break;
  case GateKind::Maj:
    need(3);
    for (size_t j = 0; j < width; j++)
      out[j] = bmaj(ops[0][j], ops[1][j], ops[2][j]);
    break;
  }
  return out;
}

// --- rewiring ----------------------------------------------------------------

Word CnfBuilder::rotr(const Word &w, int k) const {
  int n = static_cast<int>(w.size());
  if (k < 0 || k >= n) throw BuildError("rotate amount out of range");
  Word out(n);
  // LSB-first storage: rotr moves bit (j+k) mod n into position j.
  for (int j = 0; j < n; j++) out[j] = w[(j + k) % n];
  return out;
}

Word CnfBuilder::rotl(const Word &w, int k) const {
  int n = static_cast<int>(w.size());
  if (k < 0 || k >= n) throw BuildError("rotate amount out of range");
  return rotr(w, (n - k) % n);
}

Word CnfBuilder::shr(const Word &w, int k) const {
  int n = static_cast<int>(w.size());
  if (k < 0 || k >= n) throw BuildError("shift amount out of range");
  Word out(n, Bit::falsum());
  for (int j = 0; j + k < n; j++) out[j] = w[j + k];
  return out;
}

// --- adders ------------------------------------------------------------------

CnfBuilder::BitPair CnfBuilder::half_adder(Bit a, Bit b) {
  return {bxor(a, b), band(a, b)};
}

CnfBuilder::BitPair CnfBuilder::full_adder(Bit a, Bit b, Bit c) {
  // Fold constants and coincident literals down to simpler forms.
  if (a.is_const() || b.is_const() || c.is_const()) {
    Bit k = a.is_const() ? a : (b.is_const() ? b : c);
    Bit u = a.is_const() ? b : a;
    Bit v = a.is_const() ? c : (b.is_const() ? c : b);
    if (!k.const_value()) return half_adder(u, v);
    return {~bxor(u, v), bor(u, v)};
  }
  if (a == b) return {c, a};
  if (b == c) return {a, b};
  if (a == c) return {b, a};
  if (a == ~b) return {~c, c};
  if (b == ~c) return {~a, a};
  if (a == ~c) return {~b, b};

  Bit s = new_bit();
  Bit co = new_bit();
  if (fa_cell_counter_++ % kStuckCellPeriod == 0) {
    // Minimized relation cover for a+b+c = s+2co. Model-exact, but unit
    // propagation cannot derive (s, co) for the input pattern a=1, b=c=0;
    // these cells are where the compact encoding loses directional
    // consistency and the adder extension steps in.
    add_clause({~a, ~b, co});
    add_clause({~a, ~c, co});
    add_clause({~b, ~c, co});
    add_clause({a, b, ~co});
    add_clause({a, c, ~co});
    add_clause({b, c, s, ~co});
    add_clause({b, c, ~s, ~co});
    add_clause({~a, b, c, s, co});
    add_clause({a, b, c, ~s});
    add_clause({~a, ~b, ~c, s});
    add_clause({a, ~b, c, s});
    add_clause({a, b, ~c, s});
    add_clause({~a, ~b, c, ~s});
    add_clause({~a, b, ~c, ~s});
    add_clause({a, ~b, ~c, ~s});
  } else {
    // Plain two-gate cell: carry as majority, sum as parity.
    add_clause({~a, ~b, co});
    add_clause({~a, ~c, co});
    add_clause({~b, ~c, co});
    add_clause({a, b, ~co});
    add_clause({a, c, ~co});
    add_clause({b, c, ~co});
    add_clause({a, b, c, ~s});
    add_clause({~a, ~b, ~c, s});
    add_clause({~a, b, c, s});
    add_clause({a, ~b, c, s});
    add_clause({a, b, ~c, s});
    add_clause({~a, ~b, c, ~s});
    add_clause({~a, b, ~c, ~s});
    add_clause({a, ~b, ~c, ~s});
  }
  return {s, co};
}

Word CnfBuilder::add_multi(std::span<const Word> ops) {
  if (ops.size() < 2 || ops.size() > 7)
    throw BuildError("add_multi takes 2..7 operands");
  fa_cell_counter_ = 0; // stuck cells sit at fixed offsets within each adder
  size_t width = ops[0].size();
  for (const Word &w : ops)
    if (w.size() != width) throw BuildError("add_multi operand widths differ");

  std::vector<std::deque<Bit>> cols(width);
  for (const Word &w : ops)
    for (size_t j = 0; j < width; j++) cols[j].push_back(w[j]);

  Word out(width);
  for (size_t j = 0; j < width; j++) {
    auto &col = cols[j];
    while (col.size() >= 3) {
      Bit a = col.front();
      col.pop_front();
      Bit b = col.front();
      col.pop_front();
      Bit c = col.front();
      col.pop_front();
      BitPair r = full_adder(a, b, c);
      col.push_back(r.sum);
      if (j + 1 < width) cols[j + 1].push_back(r.carry);
    }
    if (col.size() == 2) {
      Bit a = col.front();
      col.pop_front();
      Bit b = col.front();
      col.pop_front();
      BitPair r = half_adder(a, b);
      col.push_back(r.sum);
      if (j + 1 < width) cols[j + 1].push_back(r.carry);
    }
    assert(col.size() == 1);
    out[j] = col.front();
  }

  AdderGroup group;
  for (const Word &w : ops) group.operands.emplace_back(w.begin(), w.end());
  group.output = out;
  groups_.push_back(std::move(group));
  return out;
}

// --- bookkeeping -------------------------------------------------------------

void CnfBuilder::register_word(const std::string &name, const Word &w) {
  std::vector<int> ids;
  ids.reserve(w.size());
  for (Bit b : w) {
    if (b.is_const() || b.negated())
      throw BuildError("only words of plain fresh variables can be named: '" +
                       name + "'");
    ids.push_back(b.var_id());
  }
  map_.add(name, ids);
}

Cnf CnfBuilder::to_cnf() const {
  Cnf cnf;
  cnf.num_vars = num_vars();
  cnf.clauses.reserve(clauses_.size());
  for (const auto &cl : clauses_) {
    std::vector<Lit> lits;
    lits.reserve(cl.size());
    for (int l : cl) lits.push_back(Lit::from_dimacs(l));
    cnf.clauses.push_back(std::move(lits));
  }
  return cnf;
}

uint64_t CnfBuilder::word_value(const Word &w, const std::vector<lbool> &model) {
  uint64_t v = 0;
  for (size_t i = 0; i < w.size(); i++) {
    bool bit;
    if (w[i].is_const()) {
      bit = w[i].const_value();
    } else {
      lbool mv = model[w[i].var_id() - 1];
      assert(mv != lbool::Undef);
      bit = (mv == lbool::True) != w[i].negated();
    }
    if (bit) v |= uint64_t{1} << i;
  }
  return v;
}

} // namespace progsat

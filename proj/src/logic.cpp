#include "rqwl/logic.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace rqwl {

namespace {

FormulaPtr node(Op op, int var, int var2, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->var = var;
  f->var2 = var2;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

bool is_binary(Op op) { return op == Op::kAnd || op == Op::kOr || op == Op::kImplies; }

}  // namespace

FormulaPtr make_eq(int z, int w) { return node(Op::kEq, z, w, nullptr, nullptr); }
FormulaPtr make_edge(int z, int w) { return node(Op::kEdge, z, w, nullptr, nullptr); }
FormulaPtr make_color(ColorId c, int z, std::string name) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kColor;
  f->var = z;
  f->color = c;
  f->color_name = name.empty() ? std::to_string(c) : std::move(name);
  return f;
}
FormulaPtr make_not(FormulaPtr f) { return node(Op::kNot, -1, -1, std::move(f), nullptr); }
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) {
  return node(Op::kAnd, -1, -1, std::move(a), std::move(b));
}
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
  return node(Op::kOr, -1, -1, std::move(a), std::move(b));
}
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) {
  return node(Op::kImplies, -1, -1, std::move(a), std::move(b));
}
FormulaPtr make_count(int k, int z, FormulaPtr body) {
  if (k < 0) throw DomainError("counting threshold must be non-negative");
  auto f = std::make_shared<Formula>();
  f->op = Op::kCountExists;
  f->var = z;
  f->threshold = k;
  f->lhs = std::move(body);
  return f;
}
FormulaPtr make_exists(int z, FormulaPtr body) {
  return node(Op::kExists, z, -1, std::move(body), nullptr);
}
FormulaPtr make_forall(int z, FormulaPtr body) {
  return node(Op::kForall, z, -1, std::move(body), nullptr);
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.op != b.op || a.var != b.var || a.var2 != b.var2) return false;
  if (a.op == Op::kColor && a.color != b.color) return false;
  if (a.op == Op::kCountExists && a.threshold != b.threshold) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

Legend parse_legend(const std::string& text) {
  Legend legend;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("legend entry '" + item + "' lacks '='");
    const std::string id_text = item.substr(0, eq);
    const std::string name = item.substr(eq + 1);
    ColorId id = 0;
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size() || id < 0) {
      throw DomainError("legend color '" + id_text + "' is not a non-negative integer");
    }
    if (name.empty()) throw DomainError("legend entry '" + item + "' has an empty name");
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw DomainError("legend name '" + name + "' must be alphanumeric");
      }
    }
    legend.by_name[name] = id;
    legend.by_id[id] = name;
  }
  return legend;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kIdent, kInt, kLParen, kRParen, kComma, kNot, kAnd, kOr, kArrow,
                 kGeq, kEq, kNegInt, kEnd };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kIdent, s.substr(start, i - start), start});
      continue;
    }
    if (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      // Negative literals only ever appear as bad thresholds; the parser
      // reports them with a precise message.
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kNegInt, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kInt, s.substr(start, i - start), start});
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "->") {
      out.push_back({Tok::kArrow, two, start});
      i += 2;
      continue;
    }
    if (two == ">=") {
      out.push_back({Tok::kGeq, two, start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '!': kind = Tok::kNot; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '=': kind = Tok::kEq; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int k1, int k2, const Legend* legend)
      : tokens_(tokenize(text)), k1_(k1), k2_(k2), legend_(legend) {}

  FormulaPtr parse() {
    auto f = implication();
    if (peek().kind != Tok::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what +
                           (peek().kind == Tok::kEnd ? " but input ended"
                                                     : " but found '" + peek().text + "'"),
                       peek().pos);
    }
    return next();
  }

  FormulaPtr implication() {
    auto lhs = disjunction();
    if (peek().kind == Tok::kArrow) {
      next();
      return make_implies(lhs, implication());
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    auto f = conjunction();
    while (peek().kind == Tok::kOr) {
      next();
      f = make_or(f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    auto f = unary();
    while (peek().kind == Tok::kAnd) {
      next();
      f = make_and(f, unary());
    }
    return f;
  }

  int variable() {
    const Token& t = expect(Tok::kIdent, "a variable");
    auto v = variable_index(t.text);
    if (v < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
    return v;
  }

  int variable_index(const std::string& name) const {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return -1;
    if (name[1] == '0') return -1;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec != std::errc() || ptr != name.data() + name.size()) return -1;
    if (name[0] == 'x') return idx >= 1 && idx <= k1_ ? idx - 1 : -1;
    return idx >= 1 && idx <= k2_ ? k1_ + idx - 1 : -1;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot:
        next();
        return make_not(unary());
      case Tok::kLParen: {
        next();
        auto f = implication();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kIdent:
        break;
      default:
        throw ParseError(t.kind == Tok::kEnd ? "unexpected end of formula"
                                             : "unexpected '" + t.text + "'",
                         t.pos);
    }
    if (t.text == "exists") {
      next();
      if (peek().kind == Tok::kGeq) {
        next();
        const Token& k = peek();
        if (k.kind != Tok::kInt) {
          throw ParseError("threshold must be a non-negative integer", k.pos);
        }
        next();
        int value = 0;
        auto [ptr, ec] = std::from_chars(k.text.data(), k.text.data() + k.text.size(), value);
        if (ec != std::errc()) throw ParseError("threshold out of range", k.pos);
        const int z = variable();
        return make_count(value, z, unary());
      }
      const int z = variable();
      return make_exists(z, unary());
    }
    if (t.text == "forall") {
      next();
      const int z = variable();
      return make_forall(z, unary());
    }
    if (t.text == "E" && tokens_[pos_ + 1].kind == Tok::kLParen) {
      next();
      next();
      const int z = variable();
      expect(Tok::kComma, "','");
      const int w = variable();
      expect(Tok::kRParen, "')'");
      return make_edge(z, w);
    }
    if (t.text.rfind("U_", 0) == 0) {
      const Token& name_tok = next();
      const std::string name = name_tok.text.substr(2);
      if (name.empty()) throw ParseError("empty color name", name_tok.pos);
      ColorId c = 0;
      auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), c);
      if (ec != std::errc() || ptr != name.data() + name.size()) {
        if (!legend_ || !legend_->by_name.contains(name)) {
          throw ParseError("unknown color name '" + name + "'", name_tok.pos);
        }
        c = legend_->by_name.at(name);
      }
      expect(Tok::kLParen, "'('");
      const int z = variable();
      expect(Tok::kRParen, "')'");
      return make_color(c, z, name);
    }
    const int z = variable();
    expect(Tok::kEq, "'='");
    const int w = variable();
    return make_eq(z, w);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int k1_;
  int k2_;
  const Legend* legend_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, int k1, int k2, const Legend* legend) {
  if (k1 < 0 || k2 < 0 || k1 + k2 > 30) throw DomainError("bad variable budget");
  return Parser(text, k1, k2, legend).parse();
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

void format_into(const Formula& f, int k1, std::string& out);

void format_operand(const Formula& f, int k1, std::string& out) {
  if (is_binary(f.op)) {
    out += '(';
    format_into(f, k1, out);
    out += ')';
  } else {
    format_into(f, k1, out);
  }
}

void format_into(const Formula& f, int k1, std::string& out) {
  switch (f.op) {
    case Op::kEq:
      out += variable_name(f.var, k1) + "=" + variable_name(f.var2, k1);
      return;
    case Op::kEdge:
      out += "E(" + variable_name(f.var, k1) + "," + variable_name(f.var2, k1) + ")";
      return;
    case Op::kColor:
      out += "U_" + (f.color_name.empty() ? std::to_string(f.color) : f.color_name) + "(" +
             variable_name(f.var, k1) + ")";
      return;
    case Op::kNot:
      out += '!';
      format_operand(*f.lhs, k1, out);
      return;
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
      format_operand(*f.lhs, k1, out);
      out += f.op == Op::kAnd ? " & " : f.op == Op::kOr ? " | " : " -> ";
      format_operand(*f.rhs, k1, out);
      return;
    case Op::kCountExists:
      out += "exists>=" + std::to_string(f.threshold) + " " + variable_name(f.var, k1) + " ";
      format_operand(*f.lhs, k1, out);
      return;
    case Op::kExists:
    case Op::kForall:
      out += (f.op == Op::kExists ? "exists " : "forall ") + variable_name(f.var, k1) + " ";
      format_operand(*f.lhs, k1, out);
      return;
  }
}

}  // namespace

std::string format_formula(const Formula& f, int k1) {
  std::string out;
  format_into(f, k1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Analysis

namespace {

struct Walk {
  std::uint32_t free = 0;
  std::uint32_t bound = 0;
  std::uint32_t nested = 0;  // quantified inside their own scope
  int rank = 0;
};

Walk walk(const Formula& f, std::uint32_t in_scope) {
  Walk w;
  switch (f.op) {
    case Op::kEq:
    case Op::kEdge:
      w.free = (1u << f.var) | (1u << f.var2);
      return w;
    case Op::kColor:
      w.free = 1u << f.var;
      return w;
    case Op::kNot:
      return walk(*f.lhs, in_scope);
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies: {
      const Walk a = walk(*f.lhs, in_scope);
      const Walk b = walk(*f.rhs, in_scope);
      w.free = a.free | b.free;
      w.bound = a.bound | b.bound;
      w.nested = a.nested | b.nested;
      w.rank = std::max(a.rank, b.rank);
      return w;
    }
    case Op::kCountExists:
    case Op::kExists:
    case Op::kForall: {
      const std::uint32_t z = 1u << f.var;
      const Walk body = walk(*f.lhs, in_scope | z);
      w.free = body.free & ~z;
      w.bound = body.bound | z;
      w.nested = body.nested | (in_scope & z);
      w.rank = body.rank + 1;
      return w;
    }
  }
  return w;
}

void check_variables(const Formula& f, int arity) {
  auto ok = [&](int v) { return v >= 0 && v < arity; };
  switch (f.op) {
    case Op::kEq:
    case Op::kEdge:
      if (!ok(f.var) || !ok(f.var2)) throw DomainError("variable out of range");
      return;
    case Op::kColor:
      if (!ok(f.var)) throw DomainError("variable out of range");
      return;
    case Op::kNot:
      check_variables(*f.lhs, arity);
      return;
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
      check_variables(*f.lhs, arity);
      check_variables(*f.rhs, arity);
      return;
    default:
      if (!ok(f.var)) throw DomainError("variable out of range");
      check_variables(*f.lhs, arity);
  }
}

}  // namespace

FormulaReport analyze(const Formula& f, int k1, int k2) {
  check_variables(f, k1 + k2);
  const Walk w = walk(f, 0);
  FormulaReport r;
  r.free = w.free;
  r.bound = w.bound;
  r.requantified = (w.free & w.bound) | w.nested;
  r.quantifier_rank = w.rank;
  const std::uint32_t y_mask = ((1u << (k1 + k2)) - 1) & ~((1u << k1) - 1);
  r.in_logic = (r.requantified & y_mask) == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool eval_rec(const ColoredGraph& g, std::vector<Vertex>& a, const Formula& f) {
  switch (f.op) {
    case Op::kEq:
      return a[f.var] == a[f.var2];
    case Op::kEdge:
      return g.adjacent(a[f.var], a[f.var2]);
    case Op::kColor:
      return g.color(a[f.var]) == f.color;
    case Op::kNot:
      return !eval_rec(g, a, *f.lhs);
    case Op::kAnd:
      return eval_rec(g, a, *f.lhs) && eval_rec(g, a, *f.rhs);
    case Op::kOr:
      return eval_rec(g, a, *f.lhs) || eval_rec(g, a, *f.rhs);
    case Op::kImplies:
      return !eval_rec(g, a, *f.lhs) || eval_rec(g, a, *f.rhs);
    case Op::kCountExists:
    case Op::kExists:
    case Op::kForall: {
      const Vertex saved = a[f.var];
      int count = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        a[f.var] = v;
        if (eval_rec(g, a, *f.lhs)) ++count;
      }
      a[f.var] = saved;
      if (f.op == Op::kForall) return count == g.order();
      const int k = f.op == Op::kExists ? 1 : f.threshold;
      return count >= k;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const ColoredGraph& g, const PartialAssignment& a, const Formula& f) {
  if (!a.valid_for(g)) throw DomainError("assignment has entries outside the graph");
  const FormulaReport r = analyze(f, a.k1(), a.k2());
  for (int v = 0; v < a.arity(); ++v) {
    if ((r.free >> v & 1u) && !a.assigned(v)) {
      throw DomainError("free variable " + variable_name(v, a.k1()) + " is unassigned");
    }
  }
  std::vector<Vertex> entries = a.entries();
  return eval_rec(g, entries, f);
}

namespace {

std::vector<std::uint8_t> table_rec(const ColoredGraph& g, const AssignmentIndexer& ix,
                                    const Formula& f) {
  const std::int64_t size = ix.size();
  std::vector<std::uint8_t> t(size, 0);
  switch (f.op) {
    case Op::kEq:
    case Op::kEdge:
    case Op::kColor:
      for (std::int64_t i = 0; i < size; ++i) {
        const Vertex u = ix.entry(i, f.var);
        if (u == kUnassigned) continue;
        if (f.op == Op::kColor) {
          t[i] = g.color(u) == f.color;
          continue;
        }
        const Vertex v = ix.entry(i, f.var2);
        if (v == kUnassigned) continue;
        t[i] = f.op == Op::kEq ? u == v : g.adjacent(u, v);
      }
      return t;
    case Op::kNot: {
      auto body = table_rec(g, ix, *f.lhs);
      for (std::int64_t i = 0; i < size; ++i) t[i] = !body[i];
      return t;
    }
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies: {
      auto a = table_rec(g, ix, *f.lhs);
      auto b = table_rec(g, ix, *f.rhs);
      for (std::int64_t i = 0; i < size; ++i) {
        t[i] = f.op == Op::kAnd ? (a[i] && b[i])
               : f.op == Op::kOr ? (a[i] || b[i])
                                 : (!a[i] || b[i]);
      }
      return t;
    }
    case Op::kCountExists:
    case Op::kExists:
    case Op::kForall: {
      auto body = table_rec(g, ix, *f.lhs);
      const int k = f.op == Op::kForall ? g.order()
                    : f.op == Op::kExists ? 1
                                          : f.threshold;
      for (std::int64_t i = 0; i < size; ++i) {
        int count = 0;
        for (Vertex v = 0; v < g.order(); ++v) count += body[ix.with(i, f.var, v)];
        t[i] = count >= k;
      }
      return t;
    }
  }
  return t;
}

}  // namespace

std::vector<std::uint8_t> evaluate_table(const ColoredGraph& g, int k1, int k2,
                                         const Formula& f) {
  check_variables(f, k1 + k2);
  AssignmentIndexer ix(g.order(), k1 + k2);
  return table_rec(g, ix, f);
}

// ---------------------------------------------------------------------------
// Random formulas

namespace {

class Generator {
 public:
  Generator(std::mt19937_64& rng, const RandomFormulaOptions& o) : rng_(rng), o_(o) {}

  FormulaPtr make() {
    budget_ = o_.max_size;
    const std::uint32_t usable = o_.free_x | (o_.free_y << o_.k1);
    return gen(o_.max_rank, usable, 0);
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  int pick_var(std::uint32_t usable) {
    std::vector<int> vars;
    for (int v = 0; v < o_.k1 + o_.k2; ++v) {
      if (usable >> v & 1u) vars.push_back(v);
    }
    return vars[pick(0, static_cast<int>(vars.size()) - 1)];
  }

  FormulaPtr atom(std::uint32_t usable) {
    const int z = pick_var(usable);
    const int w = pick_var(usable);
    switch (pick(0, 2)) {
      case 0: return make_edge(z, w);
      case 1: return make_eq(z, w);
      default: return make_color(pick(0, o_.num_colors - 1), z);
    }
  }

  // `usable`: variables that may occur in atoms here. `y_scope`: y-variables
  // whose quantifier encloses this point.
  FormulaPtr gen(int rank, std::uint32_t usable, std::uint32_t y_scope) {
    --budget_;
    std::vector<int> quantifiable;
    if (rank > 0) {
      for (int i = 0; i < o_.k1; ++i) quantifiable.push_back(i);
      for (int j = 0; j < o_.k2; ++j) {
        const int v = o_.k1 + j;
        if (!(o_.free_y >> j & 1u) && !(y_scope >> v & 1u)) quantifiable.push_back(v);
      }
    }
    const bool can_atom = usable != 0;
    int choice;
    if (budget_ <= 0) {
      choice = can_atom ? 0 : 4;
    } else {
      choice = pick(0, 5);  // 4 and 5 both quantify
    }
    if (choice >= 4 && quantifiable.empty()) choice = 0;
    if (choice == 0 && !can_atom) {
      if (quantifiable.empty()) throw DomainError("random_formula: no usable variables");
      choice = 4;
    }
    switch (choice) {
      case 0:
        return atom(usable);
      case 1:
        return make_not(gen(rank, usable, y_scope));
      case 2:
      case 3: {
        auto a = gen(rank, usable, y_scope);
        auto b = gen(rank, usable, y_scope);
        const int kind = pick(0, 2);
        return kind == 0 ? make_and(a, b) : kind == 1 ? make_or(a, b) : make_implies(a, b);
      }
      default: {
        const int z = quantifiable[pick(0, static_cast<int>(quantifiable.size()) - 1)];
        const std::uint32_t bit = 1u << z;
        const bool is_y = z >= o_.k1;
        auto body = gen(rank - 1, usable | bit, is_y ? (y_scope | bit) : y_scope);
        switch (pick(0, 2)) {
          case 0: return make_count(pick(0, o_.max_threshold), z, body);
          case 1: return make_exists(z, body);
          default: return make_forall(z, body);
        }
      }
    }
  }

  std::mt19937_64& rng_;
  const RandomFormulaOptions& o_;
  int budget_ = 0;
};

}  // namespace

FormulaPtr random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options) {
  if (options.k1 + options.k2 < 1) throw DomainError("random_formula needs a variable");
  Generator gen(rng, options);
  return gen.make();
}

}  // namespace rqwl

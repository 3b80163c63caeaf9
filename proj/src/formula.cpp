#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "sclat/logic.hpp"

namespace sclat {

namespace {

enum class Tok { ident, zero, one, ck, at, exists, forall, dot, comma, lparen, rparen, join, meet, minus, eq, leq, neq, neg, end };

struct Token {
  Tok type;
  std::string text;
  int index = 0;
  std::size_t pos = 0;
};

constexpr int max_index = 1 << 20;

[[noreturn]] void syntax(std::size_t pos, const std::string& what) { throw SyntaxError(pos, what); }

std::vector<Token> tokenize(std::string_view s) {
  static const std::array<std::pair<std::string_view, Tok>, 16> symbols{{
      {"\\/", Tok::join},     {"/\\", Tok::meet},          {"<=", Tok::leq},          {"!=", Tok::neq},
      {"∨", Tok::join},  {"∧", Tok::meet},       {"≤", Tok::leq},      {"≠", Tok::neq},
      {"∃", Tok::exists}, {"∀", Tok::forall},    {"¬", Tok::neg},      {"−", Tok::minus},
      {"\U0001D7D8", Tok::zero}, {"\U0001D7D9", Tok::one}, {"=", Tok::eq},            {"~", Tok::neg},
  }};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& [text, type] : symbols) {
      if (s.substr(i, text.size()) == text) {
        out.push_back({type, std::string(text), 0, i});
        i += text.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    switch (c) {
      case '(': out.push_back({Tok::lparen, "(", 0, i++}); continue;
      case ')': out.push_back({Tok::rparen, ")", 0, i++}); continue;
      case '.': out.push_back({Tok::dot, ".", 0, i++}); continue;
      case ',': out.push_back({Tok::comma, ",", 0, i++}); continue;
      case '-': out.push_back({Tok::minus, "-", 0, i++}); continue;
      default: break;
    }
    if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const auto text = s.substr(start, i - start);
      if (text == "0") out.push_back({Tok::zero, "0", 0, start});
      else if (text == "1") out.push_back({Tok::one, "1", 0, start});
      else syntax(start, "only 0 and 1 are constants");
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      const std::string word(s.substr(start, i - start));
      if (std::islower(static_cast<unsigned char>(word[0])) || word[0] == '_') {
        out.push_back({Tok::ident, word, 0, start});
        continue;
      }
      if (word == "E") {
        out.push_back({Tok::exists, word, 0, start});
        continue;
      }
      if (word == "A") {
        out.push_back({Tok::forall, word, 0, start});
        continue;
      }
      auto number = [&](std::size_t from, const char* what) {
        const std::string digits = word.substr(from);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw Error(ErrorKind::semantic, std::string("unknown ") + what + " index in " + word + " at offset " + std::to_string(start));
        if (digits.size() > 7 || std::stoi(digits) > max_index)
          throw Error(ErrorKind::semantic, std::string(what) + " index too large at offset " + std::to_string(start));
        return std::stoi(digits);
      };
      if (word.rfind("At", 0) == 0) {
        const int k = number(2, "At");
        if (k < 1) throw Error(ErrorKind::semantic, "At indices start at 1 (offset " + std::to_string(start) + ")");
        out.push_back({Tok::at, word, k, start});
        continue;
      }
      if (word[0] == 'C') {
        out.push_back({Tok::ck, word, number(1, "C"), start});
        continue;
      }
      throw Error(ErrorKind::semantic, "unknown symbol " + word + " at offset " + std::to_string(start));
    }
    syntax(i, "unexpected character");
  }
  out.push_back({Tok::end, "", 0, s.size()});
  return out;
}

// Untyped tree: terms and formulas share the connectives /\ and \/.
struct Node {
  enum class K { zero, one, var, ck, at, neg, join, meet, minus, eq, leq, neq };
  K k = K::zero;
  int index = 0;
  std::string name;
  std::vector<Node> kids;
  bool sealed = false;  // written in parentheses
  std::size_t pos = 0;
};

bool is_formula(const Node& n) {
  switch (n.k) {
    case Node::K::at:
    case Node::K::neg:
    case Node::K::eq:
    case Node::K::leq:
    case Node::K::neq: return true;
    case Node::K::join:
    case Node::K::meet: return is_formula(n.kids[0]);
    default: return false;
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Sentence sentence() {
    Sentence s;
    if (peek().type == Tok::exists || peek().type == Tok::forall) {
      s.quantifier = next().type == Tok::exists ? Quantifier::exists : Quantifier::forall;
      while (peek().type == Tok::ident || peek().type == Tok::comma) {
        const Token t = next();
        if (t.type == Tok::comma) continue;
        if (std::find(s.variables.begin(), s.variables.end(), t.text) != s.variables.end())
          syntax(t.pos, "variable " + t.text + " is bound twice");
        s.variables.push_back(t.text);
      }
      if (s.variables.empty()) syntax(peek().pos, "a quantifier needs at least one variable");
      expect(Tok::dot, "'.' after the quantified variables");
    }
    Node root = fix(disjunction());
    if (peek().type != Tok::end) syntax(peek().pos, "unexpected '" + peek().text + "'");
    if (!is_formula(root)) syntax(root.pos, "expected a formula, found a term");
    vars_ = s.variables;
    declared_ = s.quantifier != Quantifier::none;
    s.matrix = formula(root);
    s.variables = vars_;
    return s;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  void expect(Tok type, const std::string& what) {
    if (peek().type != type) syntax(peek().pos, "expected " + what);
    ++at_;
  }

  static Node binary(Node::K k, Node l, Node r, std::size_t pos) {
    Node n;
    n.k = k;
    n.pos = pos;
    n.kids.push_back(std::move(l));
    n.kids.push_back(std::move(r));
    return n;
  }

  Node disjunction() {
    Node l = conjunction();
    while (peek().type == Tok::join) {
      const std::size_t pos = next().pos;
      l = binary(Node::K::join, std::move(l), conjunction(), pos);
    }
    return l;
  }

  Node conjunction() {
    Node l = relation();
    while (peek().type == Tok::meet) {
      const std::size_t pos = next().pos;
      l = binary(Node::K::meet, std::move(l), relation(), pos);
    }
    return l;
  }

  Node relation() {
    if (peek().type == Tok::neg) {
      Node n;
      n.k = Node::K::neg;
      n.pos = next().pos;
      n.kids.push_back(relation());
      return n;
    }
    Node l = difference();
    const Tok t = peek().type;
    if (t != Tok::eq && t != Tok::leq && t != Tok::neq) return l;
    const std::size_t pos = next().pos;
    const auto k = t == Tok::eq ? Node::K::eq : t == Tok::leq ? Node::K::leq : Node::K::neq;
    Node n = binary(k, std::move(l), difference(), pos);
    const Tok after = peek().type;
    if (after == Tok::eq || after == Tok::leq || after == Tok::neq) syntax(peek().pos, "relations do not chain");
    return n;
  }

  Node difference() {
    Node l = primary();
    while (peek().type == Tok::minus) {
      const std::size_t pos = next().pos;
      l = binary(Node::K::minus, std::move(l), primary(), pos);
    }
    return l;
  }

  Node primary() {
    const Token t = next();
    Node n;
    n.pos = t.pos;
    switch (t.type) {
      case Tok::lparen:
        n = disjunction();
        n.sealed = true;
        expect(Tok::rparen, "')'");
        return n;
      case Tok::zero: n.k = Node::K::zero; return n;
      case Tok::one: n.k = Node::K::one; return n;
      case Tok::ident:
        n.k = Node::K::var;
        n.name = t.text;
        return n;
      case Tok::ck:
      case Tok::at:
        n.k = t.type == Tok::ck ? Node::K::ck : Node::K::at;
        n.index = t.index;
        expect(Tok::lparen, "'(' after " + t.text);
        n.kids.push_back(disjunction());
        expect(Tok::rparen, "')'");
        n.sealed = true;
        return n;
      case Tok::end: syntax(t.pos, "unexpected end of input");
      default: syntax(t.pos, "unexpected '" + t.text + "'");
    }
  }

  // Puts `t op` in front of the leftmost term of a formula.
  static Node splice_left(Node f, Node::K op, Node t, std::size_t pos) {
    if (f.sealed) syntax(pos, "a term cannot be combined with a parenthesized formula");
    switch (f.k) {
      case Node::K::join:
      case Node::K::meet: f.kids[0] = splice_left(std::move(f.kids[0]), op, std::move(t), pos); return f;
      case Node::K::eq:
      case Node::K::leq:
      case Node::K::neq: f.kids[0] = binary(op, std::move(t), std::move(f.kids[0]), pos); return f;
      default: syntax(pos, "a term cannot be combined with a negation");
    }
  }

  // Puts `op t` after the rightmost term of a formula.
  static Node splice_right(Node f, Node::K op, Node t, std::size_t pos) {
    if (f.sealed) syntax(pos, "a parenthesized formula cannot be combined with a term");
    switch (f.k) {
      case Node::K::join:
      case Node::K::meet: f.kids[1] = splice_right(std::move(f.kids[1]), op, std::move(t), pos); return f;
      case Node::K::eq:
      case Node::K::leq:
      case Node::K::neq: f.kids[1] = binary(op, std::move(f.kids[1]), std::move(t), pos); return f;
      case Node::K::neg: f.kids[0] = splice_right(std::move(f.kids[0]), op, std::move(t), pos); return f;
      default: syntax(pos, "a formula cannot be combined with a term");
    }
  }

  static Node fix(Node n) {
    for (auto& kid : n.kids) kid = fix(std::move(kid));
    auto need_term = [&](const Node& kid) {
      if (is_formula(kid)) syntax(kid.pos, "expected a term, found a formula");
    };
    switch (n.k) {
      case Node::K::ck:
      case Node::K::at:
      case Node::K::minus:
      case Node::K::eq:
      case Node::K::leq:
      case Node::K::neq:
        for (const auto& kid : n.kids) need_term(kid);
        return n;
      case Node::K::neg:
        if (!is_formula(n.kids[0])) syntax(n.pos, "'~' needs a formula");
        return n;
      case Node::K::join:
      case Node::K::meet: {
        const bool lf = is_formula(n.kids[0]);
        const bool rf = is_formula(n.kids[1]);
        if (lf == rf) return n;
        const bool sealed = n.sealed;
        Node out = lf ? splice_right(std::move(n.kids[0]), n.k, std::move(n.kids[1]), n.pos)
                      : splice_left(std::move(n.kids[1]), n.k, std::move(n.kids[0]), n.pos);
        out.sealed = sealed;
        return out;
      }
      default: return n;
    }
  }

  int variable(const Node& n) {
    const auto it = std::find(vars_.begin(), vars_.end(), n.name);
    if (it != vars_.end()) return static_cast<int>(it - vars_.begin());
    if (declared_) throw Error(ErrorKind::semantic, "variable " + n.name + " is not bound (offset " + std::to_string(n.pos) + ")");
    vars_.push_back(n.name);
    return static_cast<int>(vars_.size()) - 1;
  }

  Term term(const Node& n) {
    Term t;
    switch (n.k) {
      case Node::K::zero: t.kind = Term::Kind::zero; break;
      case Node::K::one: t.kind = Term::Kind::one; break;
      case Node::K::var:
        t.kind = Term::Kind::var;
        t.index = variable(n);
        break;
      case Node::K::ck:
        t.kind = Term::Kind::ck;
        t.index = n.index;
        break;
      case Node::K::join: t.kind = Term::Kind::join; break;
      case Node::K::meet: t.kind = Term::Kind::meet; break;
      case Node::K::minus: t.kind = Term::Kind::diff; break;
      default: syntax(n.pos, "expected a term");
    }
    for (const auto& kid : n.kids) t.args.push_back(term(kid));
    return t;
  }

  Formula formula(const Node& n) {
    Formula f;
    switch (n.k) {
      case Node::K::eq:
      case Node::K::leq:
      case Node::K::neq:
        f.kind = n.k == Node::K::eq ? Formula::Kind::eq : n.k == Node::K::leq ? Formula::Kind::leq : Formula::Kind::neq;
        f.terms.push_back(term(n.kids[0]));
        f.terms.push_back(term(n.kids[1]));
        return f;
      case Node::K::at:
        f.kind = Formula::Kind::at;
        f.index = n.index;
        f.terms.push_back(term(n.kids[0]));
        return f;
      case Node::K::neg: f.kind = Formula::Kind::negation; break;
      case Node::K::join: f.kind = Formula::Kind::disjunction; break;
      case Node::K::meet: f.kind = Formula::Kind::conjunction; break;
      default: syntax(n.pos, "expected a formula");
    }
    for (const auto& kid : n.kids) f.args.push_back(formula(kid));
    return f;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::vector<std::string> vars_;
  bool declared_ = false;
};

bool binary_term(const Term& t) {
  return t.kind == Term::Kind::join || t.kind == Term::Kind::meet || t.kind == Term::Kind::diff;
}

std::string render_term(const Term& t, const std::vector<std::string>& vars) {
  switch (t.kind) {
    case Term::Kind::zero: return "0";
    case Term::Kind::one: return "1";
    case Term::Kind::var: return vars.at(t.index);
    case Term::Kind::ck: return "C" + std::to_string(t.index) + "(" + render_term(t.args[0], vars) + ")";
    default: break;
  }
  const char* op = t.kind == Term::Kind::join ? " \\/ " : t.kind == Term::Kind::meet ? " /\\ " : " - ";
  auto side = [&](const Term& c, bool left) {
    const bool bare = !binary_term(c) || (left && c.kind == t.kind);
    return bare ? render_term(c, vars) : "(" + render_term(c, vars) + ")";
  };
  return side(t.args[0], true) + op + side(t.args[1], false);
}

std::string render_formula(const Formula& f, const std::vector<std::string>& vars) {
  auto operand = [&](const Term& t) {
    const bool lattice_op = t.kind == Term::Kind::join || t.kind == Term::Kind::meet;
    return lattice_op ? "(" + render_term(t, vars) + ")" : render_term(t, vars);
  };
  switch (f.kind) {
    case Formula::Kind::eq: return operand(f.terms[0]) + " = " + operand(f.terms[1]);
    case Formula::Kind::leq: return operand(f.terms[0]) + " <= " + operand(f.terms[1]);
    case Formula::Kind::neq: return operand(f.terms[0]) + " != " + operand(f.terms[1]);
    case Formula::Kind::at: return "At" + std::to_string(f.index) + "(" + render_term(f.terms[0], vars) + ")";
    case Formula::Kind::negation: {
      const auto& a = f.args[0];
      const bool bare = a.kind != Formula::Kind::conjunction && a.kind != Formula::Kind::disjunction;
      return bare ? "~" + render_formula(a, vars) : "~(" + render_formula(a, vars) + ")";
    }
    default: break;
  }
  const char* op = f.kind == Formula::Kind::conjunction ? " /\\ " : " \\/ ";
  auto side = [&](const Formula& c, bool left) {
    const bool compound = c.kind == Formula::Kind::conjunction || c.kind == Formula::Kind::disjunction;
    const bool bare = !compound || (left && c.kind == f.kind);
    return bare ? render_formula(c, vars) : "(" + render_formula(c, vars) + ")";
  };
  return side(f.args[0], true) + op + side(f.args[1], false);
}

void max_at(const Formula& f, int& out) {
  if (f.kind == Formula::Kind::at) out = std::max(out, f.index);
  for (const auto& a : f.args) max_at(a, out);
}

}  // namespace

bool Sentence::uses_at() const { return max_at_index() > 0; }

int Sentence::max_at_index() const {
  int out = 0;
  max_at(matrix, out);
  return out;
}

Sentence parse_formula(std::string_view text) { return Parser(tokenize(text)).sentence(); }

std::string render(const Sentence& s) {
  std::string head;
  if (s.quantifier != Quantifier::none) {
    head = s.quantifier == Quantifier::exists ? "E" : "A";
    for (const auto& v : s.variables) head += " " + v;
    head += " . ";
  }
  return head + render_formula(s.matrix, s.variables);
}

}  // namespace sclat

#include "sctlint/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace sctlint {

namespace {

enum class Tok {
  Ident,
  Wildcard,
  Def,
  Type,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  Arrow,
  LongArrow,
  FatArrow,
  End,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Wildcard: return "'_'";
    case Tok::Def: return "'def'";
    case Tok::Type: return "'Type'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::LongArrow: return "'-->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      const SourcePos start = here();
      if (at_end()) {
        out.push_back({Tok::End, {}, start});
        return out;
      }
      const char c = text_[i_];
      if (is_ident_char(c)) {
        std::size_t j = i_;
        while (j < text_.size() && is_ident_char(text_[j])) ++j;
        std::string word(text_.substr(i_, j - i_));
        advance(j - i_);
        Tok kind = Tok::Ident;
        if (word == "_") kind = Tok::Wildcard;
        else if (word == "def") kind = Tok::Def;
        else if (word == "Type") kind = Tok::Type;
        out.push_back({kind, std::move(word), start});
        continue;
      }
      if (starts_with("-->")) {
        out.push_back({Tok::LongArrow, "-->", start});
        advance(3);
        continue;
      }
      if (starts_with("->")) {
        out.push_back({Tok::Arrow, "->", start});
        advance(2);
        continue;
      }
      if (starts_with("=>")) {
        out.push_back({Tok::FatArrow, "=>", start});
        advance(2);
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '.': kind = Tok::Dot; break;
        default:
          throw Error(ErrorKind::ParseError, start,
                      std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), start});
      advance(1);
    }
  }

 private:
  [[nodiscard]] bool at_end() const { return i_ >= text_.size(); }
  [[nodiscard]] bool starts_with(std::string_view s) const { return text_.substr(i_).starts_with(s); }
  [[nodiscard]] SourcePos here() const { return {line_, col_}; }

  void advance(std::size_t n) {
    for (; n > 0 && !at_end(); --n, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_space_and_comments() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance(1);
      if (!starts_with("(;")) return;
      const SourcePos open = here();
      advance(2);
      int depth = 1;
      while (depth > 0) {
        if (at_end()) throw Error(ErrorKind::ParseError, open, "unterminated comment", {"';)'"});
        if (starts_with("(;")) {
          ++depth;
          advance(2);
        } else if (starts_with(";)")) {
          --depth;
          advance(2);
        } else {
          advance(1);
        }
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceFile run() {
    SourceFile file;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::LBracket) file.items.emplace_back(rule());
      else file.items.emplace_back(declaration());
    }
    return file;
  }

 private:
  struct State {
    std::size_t pos;
    std::size_t scope;
    std::size_t wildcards;
    int counter;
  };

  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(describe(t));
    const Token& t = peek();
    std::string msg = "unexpected " + (t.kind == Tok::End ? describe(Tok::End) : "'" + t.text + "'");
    throw Error(ErrorKind::ParseError, t.pos, msg, std::move(names));
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail({kind});
    return toks_[pos_++];
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[nodiscard]] State save() const {
    return {pos_, scope_.size(), wildcards_.size(), wildcard_counter_};
  }

  void restore(const State& s) {
    pos_ = s.pos;
    scope_.resize(s.scope);
    wildcards_.resize(s.wildcards);
    wildcard_counter_ = s.counter;
  }

  Declaration declaration() {
    Declaration d;
    d.pos = peek().pos;
    if (peek().kind != Tok::Def && peek().kind != Tok::Ident) fail({Tok::Def, Tok::Ident, Tok::LBracket});
    d.def_flag = accept(Tok::Def);
    d.name = expect(Tok::Ident).text;
    expect(Tok::Colon);
    in_rule_ = false;
    scope_.clear();
    d.type = term();
    expect(Tok::Dot);
    return d;
  }

  RawRule rule() {
    RawRule r;
    r.pos = peek().pos;
    expect(Tok::LBracket);
    if (peek().kind != Tok::RBracket) {
      for (;;) {
        const Token& name = expect(Tok::Ident);
        if (std::find(r.bound_vars.begin(), r.bound_vars.end(), name.text) != r.bound_vars.end()) {
          throw Error(ErrorKind::DuplicateBinder, name.pos,
                      "variable '" + name.text + "' is listed twice");
        }
        r.bound_vars.push_back(name.text);
        if (!accept(Tok::Comma)) break;
      }
    }
    expect(Tok::RBracket);
    in_rule_ = true;
    scope_ = r.bound_vars;
    wildcards_.clear();
    wildcard_counter_ = 0;
    reserved_ = r.bound_vars;
    r.lhs = term();
    expect(Tok::LongArrow);
    r.rhs = term();
    expect(Tok::Dot);
    r.wildcards = wildcards_;
    in_rule_ = false;
    scope_.clear();
    return r;
  }

  Term term() { return prod(); }

  Term prod() {
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      const State s = save();
      std::string name;
      std::optional<Term> domain;
      try {
        expect(Tok::LParen);
        name = expect(Tok::Ident).text;
        expect(Tok::Colon);
        domain = term();
        expect(Tok::RParen);
        expect(Tok::Arrow);
      } catch (const Error&) {
        // Not a named product; reparse as a parenthesised term.
        restore(s);
        domain.reset();
      }
      if (domain) {
        scope_.push_back(name);
        Term codomain = prod();
        scope_.pop_back();
        return Term::product(std::move(name), std::move(*domain), std::move(codomain));
      }
    }
    Term left = app();
    if (accept(Tok::Arrow)) return Term::arrow(std::move(left), prod());
    return left;
  }

  [[nodiscard]] bool at_atom_start() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Wildcard:
      case Tok::Type:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term app() {
    if (!at_atom_start()) fail({Tok::Ident, Tok::Wildcard, Tok::Type, Tok::LParen});
    Term t = atom();
    while (at_atom_start()) t = Term::app(std::move(t), atom());
    return t;
  }

  Term atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident: {
        if (peek(1).kind == Tok::Colon) return lambda();
        ++pos_;
        if (std::find(scope_.begin(), scope_.end(), tok.text) != scope_.end()) {
          return Term::var(tok.text);
        }
        return Term::symbol(tok.text);
      }
      case Tok::Wildcard: {
        if (!in_rule_) {
          throw Error(ErrorKind::ParseError, tok.pos, "'_' is only allowed inside rules");
        }
        ++pos_;
        return Term::var(fresh_wildcard());
      }
      case Tok::Type:
        ++pos_;
        return Term::sort();
      case Tok::LParen: {
        ++pos_;
        Term t = term();
        expect(Tok::RParen);
        return t;
      }
      default:
        fail({Tok::Ident, Tok::Wildcard, Tok::Type, Tok::LParen});
    }
  }

  Term lambda() {
    std::string name = expect(Tok::Ident).text;
    expect(Tok::Colon);
    Term annotation = atom();
    expect(Tok::FatArrow);
    scope_.push_back(name);
    Term body = term();
    scope_.pop_back();
    return Term::lambda(std::move(name), std::move(annotation), std::move(body));
  }

  std::string fresh_wildcard() {
    std::string name;
    do {
      name = "_" + std::to_string(++wildcard_counter_);
    } while (std::find(reserved_.begin(), reserved_.end(), name) != reserved_.end());
    wildcards_.push_back(name);
    return name;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool in_rule_ = false;
  std::vector<std::string> scope_;
  std::vector<std::string> reserved_;
  std::vector<std::string> wildcards_;
  int wildcard_counter_ = 0;
};

void require_declared(const Term& t, const Signature& sig, SourcePos pos) {
  for (const auto& name : symbols_of(t)) {
    if (!sig.contains(name)) {
      throw Error(ErrorKind::UnknownSymbol, pos, "symbol '" + name + "' is not declared");
    }
  }
}

}  // namespace

std::vector<RawRule> SourceFile::rules() const {
  std::vector<RawRule> out;
  for (const auto& item : items) {
    if (const auto* r = std::get_if<RawRule>(&item)) out.push_back(*r);
  }
  return out;
}

SourceFile parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

Signature build_signature(const SourceFile& file) {
  Signature sig;
  for (const auto& item : file.items) {
    if (const auto* d = std::get_if<Declaration>(&item)) {
      require_declared(d->type, sig, d->pos);
      const Level level = level_of(d->type, d->def_flag);
      sig.add({d->name, d->type, level, arity_of(d->type), d->def_flag, false, d->pos});
      continue;
    }
    const auto& r = std::get<RawRule>(item);
    const Spine lhs = spine_of(r.lhs);
    if (lhs.head.is(TermKind::Symbol)) {
      const SymbolInfo* head = sig.find(lhs.head.name());
      if (!head) {
        throw Error(ErrorKind::RuleHeadUndeclared, r.pos,
                    "rule head '" + lhs.head.name() + "' is not declared");
      }
      // Type constants stay rule-free; validate_rule reports them.
      if (head->level == Level::ObjectFun) sig.mark_definable(head->name);
    }
    require_declared(r.lhs, sig, r.pos);
    require_declared(r.rhs, sig, r.pos);
  }
  sig.finalize_constructors();
  return sig;
}

std::string to_string(const Declaration& decl) {
  return (decl.def_flag ? "def " : "") + decl.name + " : " + to_string(decl.type) + ".";
}

std::string to_string(const RawRule& rule) {
  std::string out = "[";
  for (std::size_t i = 0; i < rule.bound_vars.size(); ++i) {
    if (i) out += ", ";
    out += rule.bound_vars[i];
  }
  const std::set<std::string> wild(rule.wildcards.begin(), rule.wildcards.end());
  out += "] " + to_string(rule.lhs, wild) + " --> " + to_string(rule.rhs, wild) + ".";
  return out;
}

std::string to_string(const SourceFile& file) {
  std::string out;
  for (const auto& item : file.items) {
    std::visit([&](const auto& x) { out += to_string(x); }, item);
    out += '\n';
  }
  return out;
}

}  // namespace sctlint

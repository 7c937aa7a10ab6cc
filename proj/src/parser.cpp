#include <cctype>
#include <initializer_list>

#include "smashlab/error.hpp"
#include "smashlab/expr.hpp"

namespace smashlab {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr whole_expr() {
    auto e = wedge();
    finish();
    return e;
  }

  GroupTermPtr whole_group() {
    auto g = group();
    finish();
    return g;
  }

  std::vector<CycleWord> whole_cycle_list() {
    auto l = cycle_list();
    finish();
    return l;
  }

  std::vector<Definition> definitions() {
    std::vector<Definition> out;
    for (skip_ws(); !eof(); skip_ws()) {
      Definition d;
      d.pos = pos();
      if (!ident_start(peek())) fail({"'let'", "'group'", "'hom'"});
      std::string kw = ident();
      if (kw == "let") d.kind = Definition::Kind::Let;
      else if (kw == "group") d.kind = Definition::Kind::Group;
      else if (kw == "hom") d.kind = Definition::Kind::Hom;
      else fail({"'let'", "'group'", "'hom'"}, d.pos);
      skip_ws();
      if (!ident_start(peek())) fail({"name"});
      d.name = ident();
      expect('=');
      if (d.kind == Definition::Kind::Let) d.expr = wedge();
      else if (d.kind == Definition::Kind::Group) d.group = group();
      else d.hom = hom();
      expect(';');
      out.push_back(std::move(d));
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return i_ >= text_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < text_.size() ? text_[i_ + k] : '\0'; }
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++i_;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(std::initializer_list<const char*> expected) { fail(expected, pos()); }

  [[noreturn]] void fail(std::initializer_list<const char*> expected, SourcePos at) {
    std::string msg = "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) +
                      ": expected ";
    std::size_t k = 0;
    for (const char* e : expected) {
      if (k) msg += k + 1 == expected.size() ? " or " : ", ";
      msg += e;
      ++k;
    }
    msg += "; found ";
    msg += eof() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    throw Error(ErrorKind::SyntaxError, msg);
  }

  void finish() {
    skip_ws();
    if (!eof()) fail({"end of input"});
  }

  bool at_word(std::string_view w) const {
    if (text_.substr(i_, w.size()) != w) return false;
    return !ident_char(peek(w.size()));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      std::string q = std::string("'") + c + "'";
      fail({q.c_str()});
    }
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string ident() {
    std::string out;
    while (!eof() && ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  unsigned nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"natural number"});
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 1000000) throw Error(ErrorKind::SyntaxError, "number too large");
      advance();
    }
    return static_cast<unsigned>(v);
  }

  // --- expressions ---

  ExprPtr wedge() {
    auto e = smash();
    for (;;) {
      skip_ws();
      if (!at_word("v")) return e;
      SourcePos p = pos();
      advance();
      auto node = std::make_shared<Expr>(*make_binary(NodeKind::Wedge, e, smash()));
      node->pos = p;
      e = node;
    }
  }

  ExprPtr smash() {
    auto e = primary();
    for (;;) {
      skip_ws();
      if (peek() != '^') return e;
      SourcePos p = pos();
      advance();
      auto node = std::make_shared<Expr>(*make_binary(NodeKind::Smash, e, primary()));
      node->pos = p;
      e = node;
    }
  }

  [[noreturn]] void fail_primary() {
    fail({"'S0'", "'pt'", "'E'", "'ER'", "'EG'", "'EF'", "'tEF'", "'atom'", "'triv'", "'res'",
          "'ind'", "'norm'", "'pull'", "'('", "identifier"});
  }

  ExprPtr primary() {
    skip_ws();
    SourcePos p = pos();
    if (accept('(')) {
      auto e = wedge();
      expect(')');
      return e;
    }
    if (!ident_start(peek()) || at_word("v")) fail_primary();
    std::string w = ident();
    auto e = std::make_shared<Expr>();
    e->pos = p;
    if (w == "S0" || w == "pt") {
      e->kind = w == "S0" ? NodeKind::S0 : NodeKind::Pt;
      if (accept('@')) e->group = group();
    } else if (w == "E" || w == "ER") {
      e->kind = w == "E" ? NodeKind::E : NodeKind::ER;
      expect('(');
      e->n = nat();
      expect(')');
    } else if (w == "EG") {
      e->kind = NodeKind::EG;
      expect('(');
      e->n = nat();
      expect(',');
      e->m = nat();
      expect(')');
    } else if (w == "EF" || w == "tEF") {
      e->kind = w == "EF" ? NodeKind::EFPlus : NodeKind::EFTilde;
      expect('[');
      e->family = family();
      expect(']');
      expect('@');
      e->group = group();
    } else if (w == "atom") {
      e->kind = NodeKind::Atom;
      skip_ws();
      if (!ident_start(peek())) fail({"atom name"});
      e->name = ident();
      expect('@');
      e->group = group();
      expect('{');
      skip_ws();
      if (peek() != '}') {
        do e->entries.push_back(atom_entry());
        while (accept(','));
      }
      expect('}');
    } else if (w == "triv" || w == "res" || w == "ind" || w == "norm") {
      e->kind = w == "triv"  ? NodeKind::Triv
                : w == "res" ? NodeKind::Res
                : w == "ind" ? NodeKind::Ind
                             : NodeKind::Norm;
      expect('[');
      e->group = group();
      expect(']');
      expect('(');
      e->lhs = wedge();
      expect(')');
    } else if (w == "pull") {
      e->kind = NodeKind::Pull;
      expect('[');
      e->hom = hom();
      expect(']');
      expect('(');
      e->lhs = wedge();
      expect(')');
    } else {
      e->kind = NodeKind::Ident;
      e->name = w;
    }
    return e;
  }

  AtomEntry atom_entry() {
    AtomEntry en;
    skip_ws();
    if (at_word("e")) {
      advance();
    } else if (accept('<')) {
      en.gens = cycle_list();
      expect('>');
    } else {
      fail({"'e'", "'<'"});
    }
    expect(':');
    skip_ws();
    if (at_word("bot")) {
      for (int k = 0; k < 3; ++k) advance();
      en.value = ChromLevel::bot();
    } else if (at_word("top")) {
      for (int k = 0; k < 3; ++k) advance();
      en.value = ChromLevel::top();
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      en.value = ChromLevel::level(nat());
    } else {
      fail({"'bot'", "'top'", "natural number"});
    }
    return en;
  }

  FamilyTerm family() {
    skip_ws();
    FamilyTerm f;
    if (accept('{')) {
      f.kind = FamilyTerm::Kind::List;
      skip_ws();
      if (peek() != '}') {
        do f.subs.push_back(group());
        while (accept(','));
      }
      expect('}');
      return f;
    }
    if (!ident_start(peek())) fail({"'triv'", "'proper'", "'all'", "'famsub'", "'{'"});
    SourcePos p = pos();
    std::string w = ident();
    if (w == "triv") f.kind = FamilyTerm::Kind::Triv;
    else if (w == "proper") f.kind = FamilyTerm::Kind::Proper;
    else if (w == "all") f.kind = FamilyTerm::Kind::All;
    else if (w == "famsub") {
      f.kind = FamilyTerm::Kind::FamSub;
      expect('(');
      f.subs.push_back(group());
      expect(')');
    } else {
      fail({"'triv'", "'proper'", "'all'", "'famsub'", "'{'"}, p);
    }
    return f;
  }

  HomTerm hom() {
    skip_ws();
    HomTerm h;
    h.pos = pos();
    if (!ident_start(peek())) fail({"'quot'", "'hom'", "homomorphism name"});
    std::string w = ident();
    if (w == "quot" || w == "hom") {
      h.kind = w == "quot" ? HomTerm::Kind::Quot : HomTerm::Kind::Explicit;
      expect('[');
      h.source = group();
      expect(',');
      h.target = group();
      expect(']');
      if (h.kind == HomTerm::Kind::Explicit) {
        expect('{');
        skip_ws();
        if (peek() != '}') {
          do {
            CycleWord a = cycle_word();
            expect('-');
            if (peek() != '>') fail({"'->'"});
            advance();
            h.images.emplace_back(std::move(a), cycle_word());
          } while (accept(','));
        }
        expect('}');
      }
    } else {
      h.kind = HomTerm::Kind::Named;
      h.name = w;
    }
    return h;
  }

  // --- groups ---

  GroupTermPtr group() {
    auto g = group_atom();
    for (;;) {
      skip_ws();
      if (peek() != 'x') return g;
      SourcePos p = pos();
      advance();
      auto prod = std::make_shared<GroupTerm>();
      prod->kind = GroupTerm::Kind::Product;
      prod->pos = p;
      prod->a = g;
      prod->b = group_atom();
      g = prod;
    }
  }

  GroupTermPtr group_atom() {
    skip_ws();
    auto g = std::make_shared<GroupTerm>();
    g->pos = pos();
    char c = peek();
    if (c == '(') {
      advance();
      auto inner = group();
      expect(')');
      return inner;
    }
    if ((c == 'C' || c == 'S') &&
        (peek(1) == '(' || std::isdigit(static_cast<unsigned char>(peek(1))))) {
      g->kind = c == 'C' ? GroupTerm::Kind::Cyclic : GroupTerm::Kind::Symmetric;
      advance();
      if (peek() == '(') {
        advance();
        g->n = nat();
        expect(')');
      } else {
        g->n = nat();
      }
      return g;
    }
    if (peek() == 'D' && peek(1) == '8') {
      advance();
      advance();
      g->kind = GroupTerm::Kind::D8;
      return g;
    }
    if (at_word("sub")) {
      for (int k = 0; k < 3; ++k) advance();
      g->kind = GroupTerm::Kind::Sub;
      expect('[');
      g->a = group();
      expect(']');
      expect('{');
      g->gens = cycle_list();
      expect('}');
      return g;
    }
    if (ident_start(c)) {
      g->kind = GroupTerm::Kind::Named;
      g->name = ident();
      return g;
    }
    fail({"'C(n)'", "'S(n)'", "'D8'", "'sub['", "group name"});
  }

  CycleWord cycle_word() {
    skip_ws();
    if (peek() != '(') fail({"cycle"});
    CycleWord w;
    while (peek() == '(') {
      advance();
      std::vector<unsigned> cyc;
      skip_ws();
      if (peek() != ')') {
        do {
          unsigned x = nat();
          if (x == 0) throw Error(ErrorKind::SyntaxError, "cycle points are 1-based");
          cyc.push_back(x);
        } while (accept(','));
      }
      expect(')');
      if (!cyc.empty()) w.cycles.push_back(std::move(cyc));
    }
    return w;
  }

  std::vector<CycleWord> cycle_list() {
    std::vector<CycleWord> out;
    skip_ws();
    if (peek() != '(') return out;
    do out.push_back(cycle_word());
    while (accept(','));
    return out;
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }
GroupTermPtr parse_group(std::string_view text) { return Parser(text).whole_group(); }
std::vector<CycleWord> parse_cycle_list(std::string_view text) {
  return Parser(text).whole_cycle_list();
}
std::vector<Definition> parse_definitions(std::string_view text) {
  return Parser(text).definitions();
}

}  // namespace smashlab

#pragma once

// Text format for describing finite monoidal bases, graded functors, and
// representable presheaves, plus the key-value tree the command runner prints
// its reports in. One tokenizer serves both grammars: braces open blocks,
// semicolons end items, '#' starts a comment, object ids are plain integers,
// morphisms are referred to by name. Every diagnostic carries the line and
// column of the first offending token; syntax errors, unresolved references,
// and validation failures are distinct codes.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dayconv/corpus.hpp"
#include "dayconv/fincat.hpp"
#include "dayconv/monoidal.hpp"

namespace dayconv::cli {

using monoidal::SymMonoidalStructure;

// ---------------------------------------------------------------------------
// Diagnostics

enum class DiagCode { syntax, unresolved_reference, validation_failure };

inline const char* diag_label(DiagCode c) {
  switch (c) {
    case DiagCode::syntax:
      return "syntax error";
    case DiagCode::unresolved_reference:
      return "unresolved reference";
    default:
      return "validation failure";
  }
}

struct Diagnostic {
  DiagCode code = DiagCode::syntax;
  int line = 1;
  int column = 1;
  std::string message;

  std::string to_string() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
           diag_label(code) + ": " + message;
  }
};

// ---------------------------------------------------------------------------
// Tokens

namespace detail_tok {

struct Token {
  enum class Kind { word, integer, str, lbrace, rbrace, semi, colon, equals, arrow, end };
  Kind kind = Kind::end;
  std::string text;  // spelling for words and integers, contents for strings
  long long value = 0;
  int line = 1;
  int column = 1;
};

struct Fail {
  int line = 1;
  int column = 1;
  std::string message;
  DiagCode code = DiagCode::syntax;
};

inline bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto single = [&](Token::Kind k, const char* t) {
    out.push_back(Token{k, t, 0, line, col});
    ++i;
    ++col;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '{') {
      single(Token::Kind::lbrace, "{");
      continue;
    }
    if (ch == '}') {
      single(Token::Kind::rbrace, "}");
      continue;
    }
    if (ch == ';') {
      single(Token::Kind::semi, ";");
      continue;
    }
    if (ch == ':') {
      single(Token::Kind::colon, ":");
      continue;
    }
    if (ch == '=') {
      single(Token::Kind::equals, "=");
      continue;
    }
    if (ch == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back(Token{Token::Kind::arrow, "->", 0, line, col});
        i += 2;
        col += 2;
        continue;
      }
      throw Fail{line, col, "stray '-'"};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int l = line, c = col;
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits.push_back(text[i]);
        ++i;
        ++col;
      }
      if (digits.size() > 9) throw Fail{l, c, "integer literal too large"};
      out.push_back(Token{Token::Kind::integer, digits, std::stoll(digits), l, c});
      continue;
    }
    if (word_start(ch)) {
      int l = line, c = col;
      std::string w;
      while (i < text.size() && word_char(text[i])) {
        // keep '-' out of the word when it opens an arrow
        if (text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>') break;
        w.push_back(text[i]);
        ++i;
        ++col;
      }
      out.push_back(Token{Token::Kind::word, std::move(w), 0, l, c});
      continue;
    }
    if (ch == '"') {
      int l = line, c = col;
      ++i;
      ++col;
      std::string s;
      while (true) {
        if (i >= text.size() || text[i] == '\n') throw Fail{l, c, "unterminated string"};
        char d = text[i];
        if (d == '"') {
          ++i;
          ++col;
          break;
        }
        if (d == '\\') {
          if (i + 1 >= text.size()) throw Fail{l, c, "unterminated string"};
          char e = text[i + 1];
          if (e == '"' || e == '\\')
            s.push_back(e);
          else if (e == 'n')
            s.push_back('\n');
          else
            throw Fail{line, col, "unknown escape"};
          i += 2;
          col += 2;
          continue;
        }
        s.push_back(d);
        ++i;
        ++col;
      }
      out.push_back(Token{Token::Kind::str, std::move(s), 0, l, c});
      continue;
    }
    throw Fail{line, col, std::string("unexpected character '") + ch + "'"};
  }
  out.push_back(Token{Token::Kind::end, "", 0, line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& ts) : ts_(ts) {}

  const Token& peek(int ahead = 0) const {
    std::size_t j = i_ + static_cast<std::size_t>(ahead);
    return j < ts_.size() ? ts_[j] : ts_.back();
  }
  const Token& take() {
    const Token& t = ts_[i_];
    if (i_ + 1 < ts_.size()) ++i_;
    return t;
  }
  bool at(Token::Kind k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw Fail{t.line, t.column, msg};
  }
  const Token& expect(Token::Kind k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return take();
  }
  std::string take_word(const char* what) {
    if (!at(Token::Kind::word)) fail(std::string("expected ") + what);
    return take().text;
  }
  int take_int(const char* what) {
    if (!at(Token::Kind::integer)) fail(std::string("expected ") + what);
    return static_cast<int>(take().value);
  }

 private:
  const std::vector<Token>& ts_;
  std::size_t i_ = 0;
};

}  // namespace detail_tok

// ---------------------------------------------------------------------------
// Document structure. Declarations live in per-kind namespaces, so a monoidal
// structure may (and usually does) share its category's name. Source
// positions and reference sites are parse artifacts, excluded from equality.

struct ArrowItem {
  std::string name;
  int src = 0;
  int tgt = 0;
  friend bool operator==(const ArrowItem&, const ArrowItem&) = default;
};

// "compose f g = h" reads: f followed by g is h
struct ComposeItem {
  std::string first, second, result;
  friend bool operator==(const ComposeItem&, const ComposeItem&) = default;
};

struct CategoryDecl {
  enum class Form { discrete, chain, divides, arrows };
  std::string name;
  int objects = 0;
  Form form = Form::discrete;
  std::vector<int> divisor_values;
  std::vector<ArrowItem> arrows;
  std::vector<ComposeItem> composites;
  int line = 1, column = 1;

  friend bool operator==(const CategoryDecl& a, const CategoryDecl& b) {
    return a.name == b.name && a.objects == b.objects && a.form == b.form &&
           a.divisor_values == b.divisor_values && a.arrows == b.arrows &&
           a.composites == b.composites;
  }
};

struct MonoidalDecl {
  enum class Recipe { addition_mod, join, table };
  std::string name;
  std::string category;  // defaults to the declaration's own name
  int unit = 0;
  Recipe recipe = Recipe::table;
  int modulus = 0;
  std::vector<int> table;
  int line = 1, column = 1;

  friend bool operator==(const MonoidalDecl& a, const MonoidalDecl& b) {
    return a.name == b.name && a.category == b.category && a.unit == b.unit &&
           a.recipe == b.recipe && a.modulus == b.modulus && a.table == b.table;
  }
};

struct FunctorDecl {
  std::string name;
  std::string monoidal;
  std::vector<int> values;  // cardinality per base object
  int line = 1, column = 1;

  friend bool operator==(const FunctorDecl& a, const FunctorDecl& b) {
    return a.name == b.name && a.monoidal == b.monoidal && a.values == b.values;
  }
};

struct PresheafDecl {
  std::string name;
  std::string monoidal;
  int at = 0;  // representing object
  int line = 1, column = 1;

  friend bool operator==(const PresheafDecl& a, const PresheafDecl& b) {
    return a.name == b.name && a.monoidal == b.monoidal && a.at == b.at;
  }
};

struct DiagramDecl {
  std::string name;
  std::string monoidal;
  std::vector<std::string> functors;
  int line = 1, column = 1;

  friend bool operator==(const DiagramDecl& a, const DiagramDecl& b) {
    return a.name == b.name && a.monoidal == b.monoidal && a.functors == b.functors;
  }
};

// a name used by one declaration to point at another, kept for diagnostics
struct RefSite {
  enum class Target { category, monoidal, functor, arrow };
  Target target = Target::category;
  std::string name;
  int line = 1, column = 1;
  int scope = -1;  // owning category index for arrow names
};

struct SpecDocument {
  std::vector<CategoryDecl> categories;
  std::vector<MonoidalDecl> monoidals;
  std::vector<FunctorDecl> functors;
  std::vector<PresheafDecl> presheaves;
  std::vector<DiagramDecl> diagrams;
  std::vector<RefSite> refs;  // parse artifact

  bool empty() const {
    return categories.empty() && monoidals.empty() && functors.empty() && presheaves.empty() &&
           diagrams.empty();
  }

  const CategoryDecl* category(const std::string& n) const { return find(categories, n); }
  const MonoidalDecl* monoidal(const std::string& n) const { return find(monoidals, n); }
  const FunctorDecl* functor(const std::string& n) const { return find(functors, n); }
  const PresheafDecl* presheaf(const std::string& n) const { return find(presheaves, n); }
  const DiagramDecl* diagram(const std::string& n) const { return find(diagrams, n); }

  friend bool operator==(const SpecDocument& a, const SpecDocument& b) {
    return a.categories == b.categories && a.monoidals == b.monoidals &&
           a.functors == b.functors && a.presheaves == b.presheaves && a.diagrams == b.diagrams;
  }

 private:
  template <typename T>
  static const T* find(const std::vector<T>& v, const std::string& n) {
    for (const auto& d : v)
      if (d.name == n) return &d;
    return nullptr;
  }
};

struct ParseResult {
  std::optional<SpecDocument> doc;
  std::optional<Diagnostic> error;
  bool ok() const { return doc.has_value(); }
};

// ---------------------------------------------------------------------------
// Declaration parsing

namespace detail_parse {

using detail_tok::Cursor;
using detail_tok::Fail;
using detail_tok::Token;

// true when the cursor sits on an item separator; consumes a ';' if present
inline bool end_item(Cursor& cur) {
  if (cur.at(Token::Kind::semi)) {
    cur.take();
    return true;
  }
  return cur.at(Token::Kind::rbrace);
}

inline void need_item_end(Cursor& cur) {
  if (!end_item(cur)) cur.fail("expected ';' or '}'");
}

inline CategoryDecl parse_category(Cursor& cur, SpecDocument& doc) {
  CategoryDecl d;
  const Token& name = cur.peek();
  d.name = cur.take_word("a category name");
  d.line = name.line;
  d.column = name.column;
  cur.expect(Token::Kind::lbrace, "'{'");
  bool have_objects = false, have_form = false;
  int idx = static_cast<int>(doc.categories.size());
  while (!cur.at(Token::Kind::rbrace)) {
    const Token& key = cur.peek();
    std::string k = cur.take_word("an item name");
    if (k == "objects") {
      if (have_objects) throw Fail{key.line, key.column, "duplicate objects item"};
      cur.expect(Token::Kind::colon, "':'");
      d.objects = cur.take_int("an object count");
      have_objects = true;
    } else if (k == "discrete" || k == "chain") {
      if (have_form) throw Fail{key.line, key.column, "conflicting category forms"};
      d.form = k == "discrete" ? CategoryDecl::Form::discrete : CategoryDecl::Form::chain;
      have_form = true;
    } else if (k == "divides") {
      if (have_form) throw Fail{key.line, key.column, "conflicting category forms"};
      d.form = CategoryDecl::Form::divides;
      have_form = true;
      cur.expect(Token::Kind::colon, "':'");
      while (cur.at(Token::Kind::integer)) d.divisor_values.push_back(cur.take_int(""));
      if (d.divisor_values.empty()) cur.fail("expected at least one divisor value");
    } else if (k == "arrow") {
      if (have_form && d.form != CategoryDecl::Form::arrows)
        throw Fail{key.line, key.column, "conflicting category forms"};
      d.form = CategoryDecl::Form::arrows;
      have_form = true;
      ArrowItem a;
      a.name = cur.take_word("an arrow name");
      cur.expect(Token::Kind::colon, "':'");
      a.src = cur.take_int("a source object");
      cur.expect(Token::Kind::arrow, "'->'");
      a.tgt = cur.take_int("a target object");
      d.arrows.push_back(std::move(a));
    } else if (k == "compose") {
      if (!have_form || d.form != CategoryDecl::Form::arrows)
        throw Fail{key.line, key.column, "compose items need arrow items first"};
      ComposeItem c;
      const Token& t1 = cur.peek();
      c.first = cur.take_word("an arrow name");
      doc.refs.push_back({RefSite::Target::arrow, c.first, t1.line, t1.column, idx});
      const Token& t2 = cur.peek();
      c.second = cur.take_word("an arrow name");
      doc.refs.push_back({RefSite::Target::arrow, c.second, t2.line, t2.column, idx});
      cur.expect(Token::Kind::equals, "'='");
      const Token& t3 = cur.peek();
      c.result = cur.take_word("an arrow name");
      doc.refs.push_back({RefSite::Target::arrow, c.result, t3.line, t3.column, idx});
      d.composites.push_back(std::move(c));
    } else {
      throw Fail{key.line, key.column, "unknown item '" + k + "' in a category declaration"};
    }
    need_item_end(cur);
  }
  cur.take();  // '}'
  if (!have_objects) throw Fail{d.line, d.column, "category " + d.name + " needs an objects item"};
  if (!have_form)
    throw Fail{d.line, d.column,
               "category " + d.name + " needs a form item (discrete, chain, divides, or arrows)"};
  return d;
}

inline MonoidalDecl parse_monoidal(Cursor& cur, SpecDocument& doc) {
  MonoidalDecl d;
  const Token& name = cur.peek();
  d.name = cur.take_word("a monoidal structure name");
  d.line = name.line;
  d.column = name.column;
  d.category = d.name;
  cur.expect(Token::Kind::lbrace, "'{'");
  bool have_unit = false, have_tensor = false, have_category = false;
  int cat_line = d.line, cat_col = d.column;
  while (!cur.at(Token::Kind::rbrace)) {
    const Token& key = cur.peek();
    std::string k = cur.take_word("an item name");
    if (k == "category") {
      if (have_category) throw Fail{key.line, key.column, "duplicate category item"};
      cur.expect(Token::Kind::colon, "':'");
      const Token& t = cur.peek();
      d.category = cur.take_word("a category name");
      cat_line = t.line;
      cat_col = t.column;
      have_category = true;
    } else if (k == "unit") {
      if (have_unit) throw Fail{key.line, key.column, "duplicate unit item"};
      cur.expect(Token::Kind::colon, "':'");
      d.unit = cur.take_int("a unit object");
      have_unit = true;
    } else if (k == "tensor") {
      if (have_tensor) throw Fail{key.line, key.column, "duplicate tensor item"};
      cur.expect(Token::Kind::colon, "':'");
      const Token& recipe = cur.peek();
      std::string r = cur.take_word("a tensor recipe");
      if (r == "addition-mod") {
        d.recipe = MonoidalDecl::Recipe::addition_mod;
        d.modulus = cur.take_int("a modulus");
      } else if (r == "join") {
        d.recipe = MonoidalDecl::Recipe::join;
      } else if (r == "table") {
        d.recipe = MonoidalDecl::Recipe::table;
        while (cur.at(Token::Kind::integer)) d.table.push_back(cur.take_int(""));
        if (d.table.empty()) cur.fail("expected table entries");
      } else {
        throw Fail{recipe.line, recipe.column, "unknown tensor recipe '" + r + "'"};
      }
      have_tensor = true;
    } else {
      throw Fail{key.line, key.column, "unknown item '" + k + "' in a monoidal declaration"};
    }
    need_item_end(cur);
  }
  cur.take();
  if (!have_unit) throw Fail{d.line, d.column, "monoidal " + d.name + " needs a unit item"};
  if (!have_tensor) throw Fail{d.line, d.column, "monoidal " + d.name + " needs a tensor item"};
  doc.refs.push_back({RefSite::Target::category, d.category, cat_line, cat_col, -1});
  return d;
}

inline FunctorDecl parse_functor(Cursor& cur, SpecDocument& doc) {
  FunctorDecl d;
  const Token& name = cur.peek();
  d.name = cur.take_word("a functor name");
  d.line = name.line;
  d.column = name.column;
  cur.expect(Token::Kind::lbrace, "'{'");
  bool have_base = false, have_values = false;
  while (!cur.at(Token::Kind::rbrace)) {
    const Token& key = cur.peek();
    std::string k = cur.take_word("an item name");
    if (k == "monoidal") {
      if (have_base) throw Fail{key.line, key.column, "duplicate monoidal item"};
      cur.expect(Token::Kind::colon, "':'");
      const Token& t = cur.peek();
      d.monoidal = cur.take_word("a monoidal structure name");
      doc.refs.push_back({RefSite::Target::monoidal, d.monoidal, t.line, t.column, -1});
      have_base = true;
    } else if (k == "values") {
      if (have_values) throw Fail{key.line, key.column, "duplicate values item"};
      cur.expect(Token::Kind::colon, "':'");
      while (cur.at(Token::Kind::integer)) d.values.push_back(cur.take_int(""));
      have_values = true;
    } else {
      throw Fail{key.line, key.column, "unknown item '" + k + "' in a functor declaration"};
    }
    need_item_end(cur);
  }
  cur.take();
  if (!have_base) throw Fail{d.line, d.column, "functor " + d.name + " needs a monoidal item"};
  if (!have_values) throw Fail{d.line, d.column, "functor " + d.name + " needs a values item"};
  return d;
}

inline PresheafDecl parse_presheaf(Cursor& cur, SpecDocument& doc) {
  PresheafDecl d;
  const Token& name = cur.peek();
  d.name = cur.take_word("a presheaf name");
  d.line = name.line;
  d.column = name.column;
  cur.expect(Token::Kind::lbrace, "'{'");
  bool have_base = false, have_at = false;
  while (!cur.at(Token::Kind::rbrace)) {
    const Token& key = cur.peek();
    std::string k = cur.take_word("an item name");
    if (k == "monoidal") {
      if (have_base) throw Fail{key.line, key.column, "duplicate monoidal item"};
      cur.expect(Token::Kind::colon, "':'");
      const Token& t = cur.peek();
      d.monoidal = cur.take_word("a monoidal structure name");
      doc.refs.push_back({RefSite::Target::monoidal, d.monoidal, t.line, t.column, -1});
      have_base = true;
    } else if (k == "at") {
      if (have_at) throw Fail{key.line, key.column, "duplicate at item"};
      cur.expect(Token::Kind::colon, "':'");
      d.at = cur.take_int("a representing object");
      have_at = true;
    } else {
      throw Fail{key.line, key.column, "unknown item '" + k + "' in a presheaf declaration"};
    }
    need_item_end(cur);
  }
  cur.take();
  if (!have_base) throw Fail{d.line, d.column, "presheaf " + d.name + " needs a monoidal item"};
  if (!have_at) throw Fail{d.line, d.column, "presheaf " + d.name + " needs an at item"};
  return d;
}

inline DiagramDecl parse_diagram(Cursor& cur, SpecDocument& doc) {
  DiagramDecl d;
  const Token& name = cur.peek();
  d.name = cur.take_word("a diagram name");
  d.line = name.line;
  d.column = name.column;
  cur.expect(Token::Kind::lbrace, "'{'");
  bool have_base = false;
  while (!cur.at(Token::Kind::rbrace)) {
    const Token& key = cur.peek();
    std::string k = cur.take_word("an item name");
    if (k == "monoidal") {
      if (have_base) throw Fail{key.line, key.column, "duplicate monoidal item"};
      cur.expect(Token::Kind::colon, "':'");
      const Token& t = cur.peek();
      d.monoidal = cur.take_word("a monoidal structure name");
      doc.refs.push_back({RefSite::Target::monoidal, d.monoidal, t.line, t.column, -1});
      have_base = true;
    } else if (k == "functors") {
      cur.expect(Token::Kind::colon, "':'");
      while (cur.at(Token::Kind::word)) {
        const Token& t = cur.peek();
        std::string f = cur.take_word("");
        doc.refs.push_back({RefSite::Target::functor, f, t.line, t.column, -1});
        d.functors.push_back(std::move(f));
      }
    } else {
      throw Fail{key.line, key.column, "unknown item '" + k + "' in a diagram declaration"};
    }
    need_item_end(cur);
  }
  cur.take();
  if (!have_base) throw Fail{d.line, d.column, "diagram " + d.name + " needs a monoidal item"};
  return d;
}

inline SpecDocument parse_declarations(Cursor& cur) {
  SpecDocument doc;
  while (!cur.at(Token::Kind::end)) {
    const Token& kind = cur.peek();
    std::string k = cur.take_word("a declaration kind");
    if (k == "category")
      doc.categories.push_back(parse_category(cur, doc));
    else if (k == "monoidal")
      doc.monoidals.push_back(parse_monoidal(cur, doc));
    else if (k == "functor")
      doc.functors.push_back(parse_functor(cur, doc));
    else if (k == "presheaf")
      doc.presheaves.push_back(parse_presheaf(cur, doc));
    else if (k == "diagram")
      doc.diagrams.push_back(parse_diagram(cur, doc));
    else
      throw Fail{kind.line, kind.column, "unknown declaration kind '" + k + "'"};
  }
  return doc;
}

}  // namespace detail_parse

// ---------------------------------------------------------------------------
// Builders. Documents that came through parse_spec never fail here; the
// DomainErrors below surface as validation diagnostics during parsing.

inline fincat::CatRef build_category(const CategoryDecl& d) {
  switch (d.form) {
    case CategoryDecl::Form::discrete:
      return corpus::discrete_category(d.objects);
    case CategoryDecl::Form::chain:
      return corpus::poset_category(d.objects, [](int a, int b) { return a <= b; });
    case CategoryDecl::Form::divides: {
      std::vector<int> v = d.divisor_values;
      return corpus::poset_category(
          d.objects, [v](int a, int b) { return v[b] % v[a] == 0; });
    }
    case CategoryDecl::Form::arrows:
      break;
  }
  fincat::FinCategoryBuilder b;
  for (int i = 0; i < d.objects; ++i) b.add_identity(b.add_object());
  std::map<std::string, MorId> by_name;
  for (const auto& a : d.arrows) by_name[a.name] = b.add_morphism(a.src, a.tgt);
  for (const auto& c : d.composites)
    b.set_compose(by_name.at(c.second), by_name.at(c.first), by_name.at(c.result));
  return b.build_with_identities();
}

inline SymMonoidalStructure build_monoidal(const MonoidalDecl& d, fincat::CatRef cat) {
  const int n = cat->object_count();
  std::vector<ObjId> ten(static_cast<std::size_t>(n) * n, kNoObj);
  switch (d.recipe) {
    case MonoidalDecl::Recipe::addition_mod:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ten[a * n + b] = (a + b) % d.modulus;
      break;
    case MonoidalDecl::Recipe::table:
      for (int i = 0; i < n * n; ++i) ten[i] = d.table[i];
      break;
    case MonoidalDecl::Recipe::join: {
      auto leq = [&](int a, int b) { return !cat->hom(a, b).empty(); };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          std::vector<int> ups;
          for (int c = 0; c < n; ++c)
            if (leq(a, c) && leq(b, c)) ups.push_back(c);
          for (int c : ups) {
            bool least = true;
            for (int e : ups)
              if (!leq(c, e)) least = false;
            if (least) {
              ten[a * n + b] = c;
              break;
            }
          }
          if (ten[a * n + b] == kNoObj)
            throw DomainError("objects " + std::to_string(a) + " and " + std::to_string(b) +
                              " have no least upper bound");
        }
      break;
    }
  }
  return monoidal::make_strict(std::move(cat), d.unit, std::move(ten));
}

// ---------------------------------------------------------------------------
// Document validation: duplicate names, then reference resolution, then the
// per-declaration semantic checks in dependency order. Returns the first
// error found; parse_spec runs this before handing a document out, so every
// reference in a parsed document resolves and every structure validates.

inline std::optional<Diagnostic> validate_document(const SpecDocument& doc) {
  auto fail = [](DiagCode code, int line, int col, std::string msg) {
    return Diagnostic{code, line, col, std::move(msg)};
  };

  std::set<std::string> seen;
  auto dup = [&](const auto& decls, const char* kind) -> std::optional<Diagnostic> {
    seen.clear();
    for (const auto& d : decls)
      if (!seen.insert(d.name).second)
        return Diagnostic{DiagCode::validation_failure, d.line, d.column,
                          std::string("duplicate ") + kind + " name '" + d.name + "'"};
    return std::nullopt;
  };
  if (auto e = dup(doc.categories, "category")) return e;
  if (auto e = dup(doc.monoidals, "monoidal")) return e;
  if (auto e = dup(doc.functors, "functor")) return e;
  if (auto e = dup(doc.presheaves, "presheaf")) return e;
  if (auto e = dup(doc.diagrams, "diagram")) return e;

  // reference sites recorded by the parser, or synthesized for hand-built docs
  std::vector<RefSite> refs = doc.refs;
  if (refs.empty()) {
    for (const auto& m : doc.monoidals)
      refs.push_back({RefSite::Target::category, m.category, m.line, m.column, -1});
    for (const auto& f : doc.functors)
      refs.push_back({RefSite::Target::monoidal, f.monoidal, f.line, f.column, -1});
    for (const auto& p : doc.presheaves)
      refs.push_back({RefSite::Target::monoidal, p.monoidal, p.line, p.column, -1});
    for (std::size_t i = 0; i < doc.diagrams.size(); ++i) {
      const auto& g = doc.diagrams[i];
      refs.push_back({RefSite::Target::monoidal, g.monoidal, g.line, g.column, -1});
      for (const auto& f : g.functors)
        refs.push_back({RefSite::Target::functor, f, g.line, g.column, -1});
    }
    for (std::size_t i = 0; i < doc.categories.size(); ++i)
      for (const auto& c : doc.categories[i].composites)
        for (const auto* nm : {&c.first, &c.second, &c.result})
          refs.push_back({RefSite::Target::arrow, *nm, doc.categories[i].line,
                          doc.categories[i].column, static_cast<int>(i)});
  }
  for (const auto& r : refs) {
    switch (r.target) {
      case RefSite::Target::category:
        if (!doc.category(r.name))
          return fail(DiagCode::unresolved_reference, r.line, r.column,
                      "no category named '" + r.name + "'");
        break;
      case RefSite::Target::monoidal:
        if (!doc.monoidal(r.name))
          return fail(DiagCode::unresolved_reference, r.line, r.column,
                      "no monoidal structure named '" + r.name + "'");
        break;
      case RefSite::Target::functor:
        if (!doc.functor(r.name))
          return fail(DiagCode::unresolved_reference, r.line, r.column,
                      "no functor named '" + r.name + "'");
        break;
      case RefSite::Target::arrow: {
        if (r.scope < 0 || r.scope >= static_cast<int>(doc.categories.size())) continue;
        const auto& cd = doc.categories[r.scope];
        bool found = false;
        for (const auto& a : cd.arrows)
          if (a.name == r.name) found = true;
        if (!found)
          return fail(DiagCode::unresolved_reference, r.line, r.column,
                      "no arrow named '" + r.name + "' in category '" + cd.name + "'");
        break;
      }
    }
  }

  std::map<std::string, fincat::CatRef> cats;
  for (const auto& d : doc.categories) {
    if (d.objects < 0)
      return fail(DiagCode::validation_failure, d.line, d.column, "negative object count");
    if (d.form == CategoryDecl::Form::divides) {
      if (static_cast<int>(d.divisor_values.size()) != d.objects)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "category " + d.name + " declares " + std::to_string(d.objects) +
                        " objects but lists " + std::to_string(d.divisor_values.size()) +
                        " divisor values");
      std::set<int> vals;
      for (int v : d.divisor_values) {
        if (v <= 0)
          return fail(DiagCode::validation_failure, d.line, d.column,
                      "divisor values must be positive");
        if (!vals.insert(v).second)
          return fail(DiagCode::validation_failure, d.line, d.column,
                      "duplicate divisor value " + std::to_string(v));
      }
    }
    std::set<std::string> arrow_names;
    for (const auto& a : d.arrows) {
      if (!arrow_names.insert(a.name).second)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "duplicate arrow name '" + a.name + "' in category '" + d.name + "'");
      if (a.src < 0 || a.src >= d.objects || a.tgt < 0 || a.tgt >= d.objects)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "arrow '" + a.name + "' has an endpoint outside 0.." +
                        std::to_string(d.objects - 1));
    }
    fincat::CatRef cat;
    try {
      cat = build_category(d);
    } catch (const std::exception& e) {
      return fail(DiagCode::validation_failure, d.line, d.column, e.what());
    }
    auto rep = fincat::validate_category(*cat);
    if (!rep.ok())
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "category " + d.name + " is not a category:\n" + rep.to_string());
    cats[d.name] = std::move(cat);
  }

  std::map<std::string, SymMonoidalStructure> monos;
  for (const auto& d : doc.monoidals) {
    const fincat::CatRef& cat = cats.at(d.category);
    const int n = cat->object_count();
    if (d.unit < 0 || d.unit >= n)
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "unit object " + std::to_string(d.unit) + " is outside 0.." +
                      std::to_string(n - 1));
    if (d.recipe == MonoidalDecl::Recipe::addition_mod && d.modulus != n)
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "addition-mod " + std::to_string(d.modulus) + " needs exactly " +
                      std::to_string(d.modulus) + " objects, category '" + d.category + "' has " +
                      std::to_string(n));
    if (d.recipe == MonoidalDecl::Recipe::table) {
      if (static_cast<int>(d.table.size()) != n * n)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "tensor table has " + std::to_string(d.table.size()) + " entries, " +
                        std::to_string(n * n) + " expected");
      for (int v : d.table)
        if (v < 0 || v >= n)
          return fail(DiagCode::validation_failure, d.line, d.column,
                      "tensor table entry " + std::to_string(v) + " is outside 0.." +
                          std::to_string(n - 1));
    }
    SymMonoidalStructure m;
    try {
      m = build_monoidal(d, cat);
    } catch (const std::exception& e) {
      return fail(DiagCode::validation_failure, d.line, d.column, e.what());
    }
    auto rep = monoidal::validate_monoidal(m);
    if (!rep.ok())
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "monoidal " + d.name + " fails coherence validation:\n" + rep.to_string());
    monos[d.name] = std::move(m);
  }

  for (const auto& d : doc.functors) {
    const SymMonoidalStructure& m = monos.at(d.monoidal);
    const int n = m.cat->object_count();
    if (m.cat->morphism_count() != n)
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "functor " + d.name + " needs a discrete base; category '" +
                      doc.monoidal(d.monoidal)->category + "' has non-identity arrows");
    if (static_cast<int>(d.values.size()) != n)
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "functor " + d.name + " lists " + std::to_string(d.values.size()) +
                      " values for " + std::to_string(n) + " objects");
    for (int v : d.values)
      if (v < 0)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "functor values must be cardinalities");
  }

  for (const auto& d : doc.presheaves) {
    const SymMonoidalStructure& m = monos.at(d.monoidal);
    if (d.at < 0 || d.at >= m.cat->object_count())
      return fail(DiagCode::validation_failure, d.line, d.column,
                  "presheaf " + d.name + " represents object " + std::to_string(d.at) +
                      ", outside 0.." + std::to_string(m.cat->object_count() - 1));
  }

  for (const auto& d : doc.diagrams) {
    for (const auto& f : d.functors) {
      const FunctorDecl* fd = doc.functor(f);
      if (fd->monoidal != d.monoidal)
        return fail(DiagCode::validation_failure, d.line, d.column,
                    "functor " + f + " in diagram " + d.name + " is graded over " + fd->monoidal +
                        ", not " + d.monoidal);
    }
  }

  return std::nullopt;
}

// parse text into a document, or report the first error with its position
inline ParseResult parse_spec(const std::string& text) {
  SpecDocument doc;
  try {
    auto tokens = detail_tok::lex(text);
    detail_tok::Cursor cur(tokens);
    doc = detail_parse::parse_declarations(cur);
  } catch (const detail_tok::Fail& f) {
    return {std::nullopt, Diagnostic{f.code, f.line, f.column, f.message}};
  }
  if (auto e = validate_document(doc)) return {std::nullopt, *e};
  return {std::move(doc), std::nullopt};
}

// ---------------------------------------------------------------------------
// Canonical printing; parse_spec(print_spec(doc)) reproduces doc exactly.

namespace detail_print {

inline void items(std::string& out, const std::vector<std::string>& is) {
  for (std::size_t i = 0; i < is.size(); ++i) {
    out += "  " + is[i];
    out += i + 1 < is.size() ? ";\n" : "\n";
  }
  out += "}\n";
}

inline std::string ints(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += " " + std::to_string(v);
  return s;
}

}  // namespace detail_print

inline std::string print_spec(const SpecDocument& doc) {
  std::vector<std::string> blocks;
  for (const auto& d : doc.categories) {
    std::string b = "category " + d.name + " {\n";
    std::vector<std::string> is{"objects: " + std::to_string(d.objects)};
    switch (d.form) {
      case CategoryDecl::Form::discrete:
        is.push_back("discrete");
        break;
      case CategoryDecl::Form::chain:
        is.push_back("chain");
        break;
      case CategoryDecl::Form::divides:
        is.push_back("divides:" + detail_print::ints(d.divisor_values));
        break;
      case CategoryDecl::Form::arrows:
        for (const auto& a : d.arrows)
          is.push_back("arrow " + a.name + ": " + std::to_string(a.src) + " -> " +
                       std::to_string(a.tgt));
        for (const auto& c : d.composites)
          is.push_back("compose " + c.first + " " + c.second + " = " + c.result);
        break;
    }
    detail_print::items(b, is);
    blocks.push_back(std::move(b));
  }
  for (const auto& d : doc.monoidals) {
    std::string b = "monoidal " + d.name + " {\n";
    std::vector<std::string> is{"category: " + d.category, "unit: " + std::to_string(d.unit)};
    switch (d.recipe) {
      case MonoidalDecl::Recipe::addition_mod:
        is.push_back("tensor: addition-mod " + std::to_string(d.modulus));
        break;
      case MonoidalDecl::Recipe::join:
        is.push_back("tensor: join");
        break;
      case MonoidalDecl::Recipe::table:
        is.push_back("tensor: table" + detail_print::ints(d.table));
        break;
    }
    detail_print::items(b, is);
    blocks.push_back(std::move(b));
  }
  for (const auto& d : doc.functors) {
    std::string b = "functor " + d.name + " {\n";
    detail_print::items(b, {"monoidal: " + d.monoidal, "values:" + detail_print::ints(d.values)});
    blocks.push_back(std::move(b));
  }
  for (const auto& d : doc.presheaves) {
    std::string b = "presheaf " + d.name + " {\n";
    detail_print::items(b, {"monoidal: " + d.monoidal, "at: " + std::to_string(d.at)});
    blocks.push_back(std::move(b));
  }
  for (const auto& d : doc.diagrams) {
    std::string b = "diagram " + d.name + " {\n";
    std::vector<std::string> is{"monoidal: " + d.monoidal};
    if (!d.functors.empty()) {
      std::string fs = "functors:";
      for (const auto& f : d.functors) fs += " " + f;
      is.push_back(std::move(fs));
    }
    detail_print::items(b, is);
    blocks.push_back(std::move(b));
  }
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "\n";
    out += blocks[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report trees: the machine-readable report form is a nested key-value text
// with stable key ordering. Leaves always end with ';', blocks close with a
// brace, so the grammar needs no lookahead past one token.

struct TreeNode {
  std::string key;
  std::vector<std::string> args;
  std::vector<TreeNode> children;
  bool is_block = false;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;

  TreeNode& child(std::string k) {
    children.push_back(TreeNode{std::move(k), {}, {}, true});
    return children.back();
  }
  void leaf(std::string k, std::vector<std::string> a) {
    children.push_back(TreeNode{std::move(k), std::move(a), {}, false});
  }
  const TreeNode* find(const std::string& k) const {
    for (const auto& c : children)
      if (c.key == k) return &c;
    return nullptr;
  }
};

struct TreeParseResult {
  std::optional<TreeNode> root;
  std::optional<Diagnostic> error;
  bool ok() const { return root.has_value(); }
};

namespace detail_tree {

using detail_tok::Cursor;
using detail_tok::Fail;
using detail_tok::Token;

inline TreeNode parse_node(Cursor& cur) {
  TreeNode n;
  n.key = cur.take_word("a key");
  if (cur.at(Token::Kind::lbrace)) {
    cur.take();
    n.is_block = true;
    while (!cur.at(Token::Kind::rbrace)) n.children.push_back(parse_node(cur));
    cur.take();
    return n;
  }
  if (cur.at(Token::Kind::colon)) {
    cur.take();
    while (cur.at(Token::Kind::word) || cur.at(Token::Kind::integer) ||
           cur.at(Token::Kind::str))
      n.args.push_back(cur.take().text);
  }
  cur.expect(Token::Kind::semi, "';'");
  return n;
}

inline bool plain_word(const std::string& s) {
  if (s.empty() || !detail_tok::word_start(s[0])) return false;
  for (char c : s)
    if (!detail_tok::word_char(c)) return false;
  return true;
}

inline bool plain_int(const std::string& s) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += std::string("\\") + c;
    else if (c == '\n') out += "\\n";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline void print_node(std::string& out, const TreeNode& n, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += n.key;
  if (n.is_block) {
    out += " {\n";
    for (const auto& c : n.children) print_node(out, c, depth + 1);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += "}\n";
    return;
  }
  if (!n.args.empty()) {
    out += ":";
    for (const auto& a : n.args)
      out += " " + (plain_word(a) || plain_int(a) ? a : quote(a));
  }
  out += ";\n";
}

}  // namespace detail_tree

inline std::string print_tree(const TreeNode& root) {
  std::string out;
  detail_tree::print_node(out, root, 0);
  return out;
}

inline TreeParseResult parse_tree(const std::string& text) {
  try {
    auto tokens = detail_tok::lex(text);
    detail_tok::Cursor cur(tokens);
    TreeNode root = detail_tree::parse_node(cur);
    if (!cur.at(detail_tok::Token::Kind::end)) cur.fail("expected end of input");
    if (!root.is_block) cur.fail("expected a block at top level");
    return {std::move(root), std::nullopt};
  } catch (const detail_tok::Fail& f) {
    return {std::nullopt, Diagnostic{f.code, f.line, f.column, f.message}};
  }
}

}  // namespace dayconv::cli

// ============================================================================
//  parser.cpp — tokenizer and recursive-descent parser for spec suites
// ============================================================================
#include "relspec/parser.hpp"

#include <cctype>
#include <charconv>

namespace relspec {
namespace {

// --------------------------------------------------------------------------
//  tokens
// --------------------------------------------------------------------------
enum class Tok {
  id, number,        // number covers both INT and FLOAT literals
  delay,             // ##
  lbrack, rbrack, colon, tilde, star, equal,
  lparen, rparen, lbrace, rbrace,
  implies,           // |->
  at, comma, dollar,
  newline, end, bad,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  double value = 0.0;   // numeric literals
  bool is_int = false;  // literal had no '.'
  int line = 1, col = 1;
};

std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) {
    Token tok;
    tok.kind = k;
    tok.text = std::move(t);
    tok.line = l;
    tok.col = c;
    out.push_back(std::move(tok));
  };
  while (i < src.size()) {
    char c = src[i];
    int l = line, co = col;
    if (c == '\n') {
      push(Tok::newline, "\n", l, co);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      if (i + 1 < src.size() && src[i + 1] == '#') {
        push(Tok::delay, "##", l, co);
        i += 2;
        col += 2;
      } else {  // comment
        while (i < src.size() && src[i] != '\n') ++i, ++col;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      push(Tok::id, std::string(src.substr(i, j - i)), l, co);
      col += int(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      bool dot = false;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) ||
                                (!dot && src[j] == '.'))) {
        if (src[j] == '.') dot = true;
        ++j;
      }
      Token tok;
      tok.kind = Tok::number;
      tok.text = std::string(src.substr(i, j - i));
      tok.is_int = !dot;
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.value);
      tok.line = l;
      tok.col = co;
      out.push_back(std::move(tok));
      col += int(j - i);
      i = j;
      continue;
    }
    if (c == '|') {
      if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
        push(Tok::implies, "|->", l, co);
        i += 3;
        col += 3;
      } else {
        diags.push_back({Severity::error, l, co, "", "stray '|' (expected '|->')"});
        push(Tok::bad, "|", l, co);
        ++i;
        ++col;
      }
      continue;
    }
    Tok k = Tok::bad;
    switch (c) {
      case '[': k = Tok::lbrack; break;
      case ']': k = Tok::rbrack; break;
      case ':': k = Tok::colon; break;
      case '~': k = Tok::tilde; break;
      case '*': k = Tok::star; break;
      case '=': k = Tok::equal; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '{': k = Tok::lbrace; break;
      case '}': k = Tok::rbrace; break;
      case '@': k = Tok::at; break;
      case ',': k = Tok::comma; break;
      case '$': k = Tok::dollar; break;
      default:
        diags.push_back({Severity::error, l, co, "",
                         std::string("unexpected character '") + c + "'"});
        break;
    }
    push(k, std::string(1, c), l, co);
    ++i;
    ++col;
  }
  push(Tok::end, "", line, col);
  return out;
}

// --------------------------------------------------------------------------
//  parser
// --------------------------------------------------------------------------
struct ChainParse {
  Chain chain;
  bool first_explicit = false;  // first element carried its own ## prefix
  bool ok = true;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  SpecSuite run() {
    SpecSuite suite;
    skip_newlines();
    while (!at(Tok::end)) {
      const Token& t = peek();
      if (t.kind == Tok::id && t.text == "timebase") {
        parse_timebase(suite);
      } else if (t.kind == Tok::id && t.text == "action") {
        parse_action(suite);
      } else if (t.kind == Tok::id && t.text == "property") {
        parse_property(suite);
      } else if (t.kind == Tok::id && t.text == "scenario") {
        parse_scenario(suite);
      } else {
        error(t, "expected a declaration (timebase, action, property, scenario)");
        recover();
      }
      skip_newlines();
    }
    return suite;
  }

 private:
  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  size_t pos_ = 0;

  const Token& peek(int ahead = 0) const {
    size_t p = pos_ + ahead;
    return p < toks_.size() ? toks_[p] : toks_.back();
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const char* w) const {
    return peek().kind == Tok::id && peek().text == w;
  }

  void error(const Token& t, const std::string& msg) {
    diags_.push_back({Severity::error, t.line, t.col, "", msg});
  }

  // advance to the next line that starts a declaration (or EOF)
  void recover() {
    while (!at(Tok::end)) {
      if (at(Tok::newline)) {
        take();
        if (at_word("timebase") || at_word("action") || at_word("property") ||
            at_word("scenario"))
          return;
        continue;
      }
      take();
    }
  }

  void skip_newlines() {
    while (at(Tok::newline)) take();
  }

  bool expect(Tok k, const char* what) {
    if (at(k)) {
      take();
      return true;
    }
    error(peek(), std::string("expected ") + what);
    return false;
  }

  std::optional<std::string> expect_id(const char* what) {
    if (at(Tok::id)) return take().text;
    error(peek(), std::string("expected ") + what);
    return std::nullopt;
  }

  std::optional<std::string> expect_word(const char* w) {
    if (at_word(w)) return take().text;
    error(peek(), std::string("expected '") + w + "'");
    return std::nullopt;
  }

  std::optional<long> expect_int(const char* what) {
    if (at(Tok::number) && peek().is_int) return long(take().value);
    error(peek(), std::string("expected ") + what);
    return std::nullopt;
  }

  std::optional<double> expect_num(const char* what) {
    if (at(Tok::number)) return take().value;
    error(peek(), std::string("expected ") + what);
    return std::nullopt;
  }

  // ---- declarations --------------------------------------------------

  void parse_timebase(SpecSuite& suite) {
    take();  // timebase
    auto n = expect_int("timebase value in ms");
    if (!n || !expect_word("ms")) return recover();
    if (suite.timebase_ms != 0)
      error(peek(), "timebase declared more than once");
    suite.timebase_ms = int(*n);
  }

  void parse_action(SpecSuite& suite) {
    const Token& kw = peek();
    take();  // action
    auto name = expect_id("action name");
    if (!name || !expect_word("causes")) return recover();
    auto outcome = expect_id("outcome name");
    if (!outcome || !expect_word("reliability")) return recover();
    auto rel = expect_num("reliability value");
    if (!rel) return recover();
    if (const OutcomeDef* prev = suite.find_outcome(*outcome);
        prev && prev->reliability != *rel) {
      diags_.push_back({Severity::error, kw.line, kw.col, *outcome,
                        "outcome redeclared with a different reliability"});
    } else if (!prev) {
      suite.outcomes.push_back({*outcome, *rel});
    }
    suite.actions.push_back({*name, *outcome});
  }

  void parse_property(SpecSuite& suite) {
    const Token& kw = peek();
    take();  // property
    PropertyPair prop;
    prop.line = kw.line;
    auto id = expect_id("property name");
    if (!id || !expect_word("target")) return recover();
    prop.id = *id;
    auto target = expect_num("target probability");
    if (!target || !expect(Tok::lbrace, "'{'")) return recover();
    prop.target = *target;
    skip_newlines();
    if (!expect_word("correct") || !expect(Tok::colon, "':'")) return recover();
    parse_seq_line(prop.correct_trigger, prop.correctness);
    skip_newlines();
    if (!expect_word("rely") || !expect(Tok::colon, "':'")) return recover();
    parse_seq_line(prop.trigger, prop.reliability_spec);
    skip_newlines();
    if (!expect(Tok::rbrace, "'}'")) return recover();
    suite.properties.push_back(std::move(prop));
  }

  void parse_scenario(SpecSuite& suite) {
    take();  // scenario
    Scenario sc;
    auto id = expect_id("scenario name");
    if (!id || !expect(Tok::colon, "':'")) return recover();
    sc.id = *id;
    while (true) {
      auto prop = expect_id("property reference");
      if (!prop) return recover();
      int anchor = 0;
      if (at(Tok::at)) {
        take();
        auto a = expect_int("anchor cycle");
        if (!a) return recover();
        anchor = int(*a);
      }
      sc.firings.emplace_back(*prop, anchor);
      if (at(Tok::comma)) {
        take();
        continue;
      }
      break;
    }
    suite.scenarios.push_back(std::move(sc));
  }

  // ---- sequences ------------------------------------------------------

  void parse_seq_line(Chain& trigger, Chain& consequent) {
    ChainParse first = parse_chain(/*stop_at_implies=*/true);
    if (at(Tok::implies)) {
      take();
      trigger = std::move(first.chain);
      ChainParse second = parse_chain(false);
      consequent = std::move(second.chain);
    } else {
      consequent = std::move(first.chain);
    }
    if (!at(Tok::newline) && !at(Tok::end)) {
      error(peek(), "unexpected trailing input in sequence");
      while (!at(Tok::newline) && !at(Tok::end)) take();
    }
  }

  bool chain_boundary(bool stop_at_implies) const {
    if (at(Tok::newline) || at(Tok::end) || at(Tok::rparen) || at(Tok::rbrace))
      return true;
    if (stop_at_implies && at(Tok::implies)) return true;
    return false;
  }

  ChainParse parse_chain(bool stop_at_implies) {
    ChainParse result;
    bool first = true;
    while (!chain_boundary(stop_at_implies)) {
      std::optional<DelayWindow> delay;
      if (at(Tok::delay)) {
        take();
        delay = parse_window();
        if (!delay) {
          result.ok = false;
          break;
        }
      }
      auto elem = parse_unit_with_suffixes();
      if (!elem) {
        result.ok = false;
        break;
      }
      bool inner_explicit = elem->second;
      if (delay) {
        if (inner_explicit) {
          error(peek(), "element carries two delay prefixes");
        } else {
          set_leading_window(elem->first, *delay);
        }
      } else if (!first && !inner_explicit) {
        error(peek(),
              "every element after the first needs an explicit ## delay");
      }
      if (first) result.first_explicit = delay.has_value() || inner_explicit;
      result.chain.elems.push_back(std::move(elem->first));
      first = false;
    }
    if (result.chain.elems.empty()) {
      error(peek(), "empty sequence");
      result.ok = false;
    }
    return result;
  }

  std::optional<DelayWindow> parse_window() {
    DelayWindow w;
    if (at(Tok::number) && peek().is_int) {  // ##N
      w.lo = w.hi = int(take().value);
      return w;
    }
    if (!expect(Tok::lbrack, "'[' or integer after ##")) return std::nullopt;
    auto lo = expect_int("window lower bound");
    if (!lo || !expect(Tok::colon, "':'")) return std::nullopt;
    w.lo = int(*lo);
    if (at(Tok::dollar)) {
      take();
      w.hi = DelayWindow::kUnbounded;
    } else {
      auto hi = expect_int("window upper bound or '$'");
      if (!hi) return std::nullopt;
      w.hi = int(*hi);
    }
    if (!expect(Tok::rbrack, "']'")) return std::nullopt;
    return w;
  }

  // Returns the parsed element plus whether its leading step already had an
  // explicit window (relevant for parenthesized groups).
  std::optional<std::pair<Element, bool>> parse_unit_with_suffixes() {
    Element base;
    bool inner_explicit = false;
    if (at(Tok::id)) {
      Step s;
      s.event = take().text;
      base.node = std::move(s);
    } else if (at(Tok::lparen)) {
      take();
      ChainParse inner = parse_chain(false);
      if (!expect(Tok::rparen, "')'")) return std::nullopt;
      if (!inner.ok) return std::nullopt;
      inner_explicit = inner.first_explicit;
      if (inner.chain.elems.size() == 1) {
        base = std::move(inner.chain.elems.front());
      } else {
        // a parenthesized group is only meaningful under a suffix; keep the
        // chain and let the suffix loop wrap it
        return apply_suffixes_to_group(std::move(inner.chain), inner_explicit);
      }
    } else {
      error(peek(), "expected an event name or '('");
      return std::nullopt;
    }
    return apply_suffixes_to_element(std::move(base), inner_explicit);
  }

  std::optional<std::pair<Element, bool>> apply_suffixes_to_group(
      Chain group, bool inner_explicit) {
    if (!at(Tok::lbrack)) {
      error(peek(), "a parenthesized group must carry a redundancy suffix");
      return std::nullopt;
    }
    // only [=m] applies to groups; [~n] and [*k] need a single action
    auto sfx = parse_one_suffix();
    if (!sfx) return std::nullopt;
    auto [op, count] = *sfx;
    if (op != '=') {
      error(peek(), "spatial/consecutive redundancy applies to a single action");
      return std::nullopt;
    }
    Element el;
    el.node = Temporal{std::move(group), count};
    return apply_suffixes_to_element(std::move(el), inner_explicit);
  }

  std::optional<std::pair<Element, bool>> apply_suffixes_to_element(
      Element el, bool inner_explicit) {
    while (at(Tok::lbrack)) {
      auto sfx = parse_one_suffix();
      if (!sfx) return std::nullopt;
      auto [op, count] = *sfx;
      if (op == '~' || op == '*') {
        Step* s = std::get_if<Step>(&el.node);
        if (!s) {
          error(peek(), "spatial/consecutive redundancy applies to a single action");
          return std::nullopt;
        }
        if (op == '~')
          el.node = Spatial{std::move(*s), count};
        else
          el.node = Consec{std::move(*s), count};
      } else {  // '='
        Chain block;
        block.elems.push_back(std::move(el));
        el = Element{};
        el.node = Temporal{std::move(block), count};
      }
    }
    return std::make_pair(std::move(el), inner_explicit);
  }

  std::optional<std::pair<char, int>> parse_one_suffix() {
    take();  // '['
    char op = 0;
    if (at(Tok::tilde)) op = '~';
    if (at(Tok::star)) op = '*';
    if (at(Tok::equal)) op = '=';
    if (!op) {
      error(peek(), "expected '~', '*' or '=' in redundancy suffix");
      return std::nullopt;
    }
    take();
    auto count = expect_int("redundancy count");
    if (!count || !expect(Tok::rbrack, "']'")) return std::nullopt;
    if (*count < 2) {
      error(peek(), "redundancy count must be at least 2");
      return std::nullopt;
    }
    return std::make_pair(op, int(*count));
  }

  static void set_leading_window(Element& el, const DelayWindow& w) {
    if (auto* s = std::get_if<Step>(&el.node)) {
      s->window = w;
    } else if (auto* sp = std::get_if<Spatial>(&el.node)) {
      sp->step.window = w;
    } else if (auto* co = std::get_if<Consec>(&el.node)) {
      co->step.window = w;
    } else {
      auto& tm = std::get<Temporal>(el.node);
      if (!tm.block.elems.empty()) set_leading_window(tm.block.elems.front(), w);
    }
  }
};

}  // namespace

ParseResult parse_suite(std::string_view text) {
  ParseResult result;
  std::vector<Token> toks = lex(text, result.diagnostics);
  Parser parser(std::move(toks), result.diagnostics);
  SpecSuite suite = parser.run();
  result.suite = std::move(suite);
  return result;
}

}  // namespace relspec

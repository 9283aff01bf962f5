#include "ontoprob/event_parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace ontoprob {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Event parse() {
    Event e = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  Event parse_or() {
    Event e = parse_and();
    while (eat('|')) e = e | parse_and();
    return e;
  }

  Event parse_and() {
    Event e = parse_unary();
    while (eat('&')) e = e & parse_unary();
    return e;
  }

  Event parse_unary() {
    if (eat('!')) return !parse_unary();
    return parse_primary();
  }

  Event parse_primary() {
    if (eat('(')) {
      Event e = parse_or();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    return Event::atom(parse_atom_id());
  }

  PropositionId parse_atom_id() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'p') fail("expected a proposition like p0");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digits after 'p'");
    long id = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      id = id * 10 + (text_[pos_] - '0');
      if (id > kMaxClassicalPropositions) fail("proposition index too large");
      ++pos_;
    }
    return static_cast<PropositionId>(id);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("event parse error at position " + std::to_string(pos_) + ": " +
                                why + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Event parse_event(std::string_view text) { return Parser(text).parse(); }

RelEvent parse_rel_event(std::string_view text) {
  std::vector<std::pair<PropositionId, bool>> literals;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("rel event parse error at position " + std::to_string(pos) +
                                ": " + why + " in \"" + std::string(text) + "\"");
  };
  skip();
  if (pos == text.size()) return RelEvent();  // empty conjunction
  while (true) {
    skip();
    bool value = true;
    if (pos < text.size() && text[pos] == '!') {
      value = false;
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != 'p') fail("expected a literal like p0 or !p0");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected digits after 'p'");
    long id = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      id = id * 10 + (text[pos] - '0');
      if (id > kMaxTfuPropositions) fail("proposition index too large");
      ++pos;
    }
    literals.emplace_back(static_cast<PropositionId>(id), value);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '&') fail("expected '&' between literals");
    ++pos;
  }
  return RelEvent(std::move(literals));  // throws on duplicates
}

}  // namespace ontoprob

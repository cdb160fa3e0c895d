// Reader and writer for the text presentation format:
//
//   # comment
//   group QM
//   gens w x y z
//   rel (y z^-1)^2
//
// word   := factor+
// factor := atom ('^' int)?
// atom   := genname | '(' word ')'

#ifndef ORBKIT_PARSER_HPP_
#define ORBKIT_PARSER_HPP_

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbkit/word.hpp"

namespace orbkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Largest |k| accepted in `atom^k`.
inline constexpr long long kMaxExponent = 100000;

namespace detail {

class WordReader {
 public:
  WordReader(std::string_view text, std::size_t line, std::size_t col0,
             const std::vector<std::string>& gens)
      : text_(text), line_(line), col0_(col0), gens_(gens) {}

  Word read_all() {
    skip_ws();
    if (at_end()) fail("expected a word");
    Word w = read_word();
    skip_ws();
    if (!at_end()) {
      fail(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + pos_, msg);
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Word read_word() {
    Word w;
    skip_ws();
    while (!at_end() && text_[pos_] != ')') {
      w *= read_factor();
      skip_ws();
    }
    return w;
  }

  Word read_factor() {
    Word atom;
    if (text_[pos_] == '(') {
      std::size_t open = pos_;
      ++pos_;
      atom = read_word();
      if (at_end()) {
        pos_ = open;
        fail("unbalanced '('");
      }
      ++pos_;  // ')'
    } else {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (start == pos_) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
      std::string name(text_.substr(start, pos_ - start));
      std::size_t g = 0;
      while (g < gens_.size() && gens_[g] != name) ++g;
      if (g == gens_.size()) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      atom = Word{Letter(static_cast<std::uint32_t>(g), 1)};
    }
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      bool neg = false;
      if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      long long k = 0;
      std::size_t digits = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        ++digits;
        ++pos_;
        if (k > kMaxExponent) {
          pos_ = start;
          fail("exponent too large");
        }
      }
      if (digits == 0) {
        pos_ = start;
        fail("expected integer exponent");
      }
      if (k == 0) {
        pos_ = start;
        fail("zero exponent");
      }
      atom = atom.power(neg ? -k : k);
    }
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  const std::vector<std::string>& gens_;
};

inline std::vector<std::pair<std::string_view, std::size_t>> split_tokens(std::string_view s) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start), start);
  }
  return out;
}

}  // namespace detail

/// Parses a single word over `generators`.  Blank text is the identity.
inline Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) return {};
  return detail::WordReader(text, 1, 1, generators).read_all();
}

/// Parses `w1;w2;...` into a list of words (empty entries are skipped).
inline std::vector<Word> parse_word_list(std::string_view text,
                                         const std::vector<std::string>& generators) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back(parse_word(piece, generators));
    start = end + 1;
  }
  return out;
}

inline Presentation parse_presentation(std::string_view text) {
  std::string name;
  std::vector<std::string> gens;
  std::vector<Word> rels;
  bool have_group = false;
  bool have_gens = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;

    auto [keyword, kcol] = tokens.front();
    if (keyword == "group") {
      if (have_group) throw ParseError(line_no, kcol + 1, "duplicate 'group' line");
      if (tokens.size() != 2) throw ParseError(line_no, kcol + 1, "'group' takes exactly one name");
      name = std::string(tokens[1].first);
      have_group = true;
    } else if (keyword == "gens") {
      if (have_gens) throw ParseError(line_no, kcol + 1, "duplicate 'gens' line");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        std::string g(tokens[t].first);
        if (!is_valid_generator_name(g)) {
          throw ParseError(line_no, tokens[t].second + 1, "invalid generator name '" + g + "'");
        }
        for (const auto& prev : gens) {
          if (prev == g) throw ParseError(line_no, tokens[t].second + 1, "duplicate generator '" + g + "'");
        }
        gens.push_back(std::move(g));
      }
      have_gens = true;
    } else if (keyword == "rel") {
      if (!have_gens) throw ParseError(line_no, kcol + 1, "'rel' before 'gens'");
      std::size_t body = kcol + 3;
      Word w = detail::WordReader(line.substr(body), line_no, body + 1, gens).read_all();
      if (w.empty()) throw ParseError(line_no, kcol + 1, "relator reduces to the empty word");
      rels.push_back(std::move(w));
    } else {
      throw ParseError(line_no, kcol + 1, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_gens) throw ParseError(line_no, 1, "missing 'gens' line");
  return Presentation(std::move(gens), std::move(rels), std::move(name));
}

inline Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

/// Writes a word with runs collapsed to powers, e.g. `x^2 y^-1`.
inline std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long k = static_cast<long long>(j - i) * w[i].exp;
    if (!out.empty()) out += ' ';
    out += generators.at(w[i].gen);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

inline std::string format_presentation(const Presentation& p) {
  std::string out;
  if (!p.name().empty()) out += "group " + p.name() + "\n";
  out += "gens";
  for (const auto& g : p.generators()) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators()) out += "rel " + format_word(r, p.generators()) + "\n";
  return out;
}

}  // namespace orbkit

#endif  // ORBKIT_PARSER_HPP_

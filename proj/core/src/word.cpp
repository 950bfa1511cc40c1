#include "sgd/word.hpp"

#include <algorithm>

#include "sgd/error.hpp"

namespace sgd {

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& l : letters) bound = std::max(bound, l.gen + 1);
  return bound;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverse());
  return w;
}

std::string Word::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(letters[i].gen);
    if (letters[i].sign < 0) out += "^-1";
  }
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_space();
    if (text_.substr(pos_) == "1") return {};
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("'x', '(' or end of input");
    return w;
  }

 private:
  Word word() {
    Word w;
    for (skip_space(); pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == '('); skip_space())
      w = w * factor();
    return w;
  }

  Word factor() {
    Word base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = word();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("')'");
      ++pos_;
    } else {
      ++pos_;
      base.letters.push_back({number(), 1});
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const bool negative = pos_ < text_.size() && text_[pos_] == '-';
      if (negative) ++pos_;
      const std::uint32_t e = number();
      Word unit = negative ? base.inverse() : base;
      Word out;
      for (std::uint32_t i = 0; i < e; ++i) out = out * unit;
      return out;
    }
    return base;
  }

  std::uint32_t number() {
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (n > 1'000'000) fail("a number below 10^6");
      ++pos_;
    }
    if (pos_ == start) fail("a number");
    return static_cast<std::uint32_t>(n);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    const std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
    throw ParseError(Errc::kSyntax, pos_, line, column, expected,
                     "expected " + expected + " at column " + std::to_string(column) + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word Word::power(Letter l, std::size_t e) { return Word{std::vector<Letter>(e, l)}; }

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::size_t Presentation::length() const noexcept {
  std::size_t total = generator_count;
  for (const auto& r : relators) total += r.size();
  return total;
}

void Presentation::validate() const {
  for (const auto& r : relators) {
    for (const auto& l : r.letters) {
      if (l.gen >= generator_count)
        throw Error(Errc::kIndexOutOfRange, "relator uses generator x" + std::to_string(l.gen) +
                                                " but the presentation has " +
                                                std::to_string(generator_count));
      if (l.sign != 1 && l.sign != -1) throw Error(Errc::kInvalidInput, "letter sign must be ±1");
    }
  }
}

Elem eval_word(const Word& w, std::span<const Elem> assignment, const GroupTable& g) {
  if (w.generator_bound() > assignment.size())
    throw Error(Errc::kIndexOutOfRange, "assignment shorter than the word's generator range");
  Elem acc = g.identity();
  for (const auto& l : w.letters) {
    const Elem x = assignment[l.gen];
    acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
  }
  return acc;
}

Permutation eval_word(const Word& w, std::span<const Permutation> assignment, std::uint32_t degree) {
  if (w.generator_bound() > assignment.size())
    throw Error(Errc::kIndexOutOfRange, "assignment shorter than the word's generator range");
  Permutation acc(degree);
  for (const auto& l : w.letters) {
    const Permutation& x = assignment[l.gen];
    acc = acc * (l.sign > 0 ? x : x.inverse());
  }
  return acc;
}

}  // namespace sgd

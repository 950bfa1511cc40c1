#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgd/group.hpp"

namespace sgd {

struct Letter {
  std::uint32_t gen = 0;
  /// +1 or −1.
  std::int8_t sign = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Shortlex letter rank: generator index first, then + before −.
inline std::uint32_t letter_rank(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

/// A word in the free group on x_0, x_1, …; multiplied left to right.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  /// Largest generator index + 1 (0 for the empty word).
  std::uint32_t generator_bound() const noexcept;
  Word inverse() const;
  /// "x0 x1^-1 x0"; the empty word renders as "1".
  std::string to_string() const;

  static Word power(Letter l, std::size_t e);
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
};

/// Inverse of Word::to_string, extended with grouping and integer powers:
///   word := factor*    factor := atom ('^' int)?    atom := 'x'N | '(' word ')'
/// "1" is the empty word. Throws ParseError.
Word parse_word(std::string_view text);

struct Presentation {
  std::uint32_t generator_count = 0;
  std::vector<Word> relators;

  /// Generator count plus the sum of relator lengths.
  std::size_t length() const noexcept;
  /// Throws kIndexOutOfRange if a relator names a generator ≥ generator_count.
  void validate() const;
};

/// Left-to-right product of the assigned elements; the empty word gives the
/// identity. Throws kIndexOutOfRange when the assignment is too short.
Elem eval_word(const Word& w, std::span<const Elem> assignment, const GroupTable& g);
Permutation eval_word(const Word& w, std::span<const Permutation> assignment, std::uint32_t degree);

}  // namespace sgd

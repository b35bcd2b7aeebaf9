#pragma once

// Free-group words over named generators.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

class GeneratorId {
 public:
  explicit GeneratorId(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;

 private:
  std::string name_;
};

class Letter {
 public:
  Letter(GeneratorId generator, int exponent);

  const GeneratorId& generator() const noexcept { return generator_; }
  int exponent() const noexcept { return exponent_; }
  Letter inverse() const { return Letter(generator_, -exponent_); }
  bool cancels(const Letter& other) const noexcept {
    return exponent_ == -other.exponent_ && generator_ == other.generator_;
  }

  // "g" or "g^-1"
  std::string str() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  // Orders by generator name, positive letter first.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b);

 private:
  GeneratorId generator_;
  int exponent_;
};

Letter gen(std::string_view name);
Letter inv(std::string_view name);

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  FreeWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Whitespace-separated letters, `^-1` marks an inverse: "x^-1 a b".
  static FreeWord parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  FreeWord inverse() const;
  // Left rotation: letter `offset` becomes the first letter.
  FreeWord rotated(std::size_t offset) const;
  FreeWord subword(std::size_t pos, std::size_t len) const;
  bool is_reduced() const noexcept;
  bool is_cyclically_reduced() const noexcept;
  bool mentions(const GeneratorId& g) const noexcept;
  std::size_t occurrences(const GeneratorId& g) const noexcept;
  std::set<GeneratorId> support() const;

  std::string str() const;

  // Concatenation without reduction.
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& w);
// Free reduction followed by cancelling inverse letters across the ends.
FreeWord cyclically_reduce(const FreeWord& w);
FreeWord power(const FreeWord& w, int n);

// Replaces every g^{+-1} by replacement^{+-1} and freely reduces.
// Throws RecursiveSubstitution when the replacement mentions g.
FreeWord substitute(const FreeWord& w, const GeneratorId& g, const FreeWord& replacement);

// Word considered up to cyclic permutation. The stored representative is the
// lexicographically least rotation of the cyclic reduction of the input.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const FreeWord& w);

  const FreeWord& representative() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }
  bool empty() const noexcept { return rep_.empty(); }
  CyclicWord inverse() const { return CyclicWord(rep_.inverse()); }
  // Same cyclic word as w, or as w^-1.
  bool equal_up_to_inversion(const CyclicWord& other) const {
    return *this == other || *this == other.inverse();
  }
  std::string str() const { return rep_.str(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  FreeWord rep_;
};

// All length-`len` subwords of the bi-infinite periodic word.
std::set<FreeWord> cyclic_subwords(const CyclicWord& c, std::size_t len);

}  // namespace artin

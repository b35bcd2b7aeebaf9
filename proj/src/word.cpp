#include "artin/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

GeneratorId::GeneratorId(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("generator name must be non-empty");
}

Letter::Letter(GeneratorId generator, int exponent)
    : generator_(std::move(generator)), exponent_(exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
}

std::string Letter::str() const {
  return exponent_ == 1 ? generator_.name() : generator_.name() + "^-1";
}

std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  if (auto c = a.generator_ <=> b.generator_; c != 0) return c;
  return b.exponent_ <=> a.exponent_;
}

Letter gen(std::string_view name) { return Letter(GeneratorId(std::string(name)), 1); }
Letter inv(std::string_view name) { return Letter(GeneratorId(std::string(name)), -1); }

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    constexpr std::string_view suffix = "^-1";
    if (token.size() > suffix.size() && token.ends_with(suffix)) {
      letters.emplace_back(GeneratorId(token.substr(0, token.size() - suffix.size())), -1);
    } else if (token.find('^') != std::string::npos) {
      throw std::invalid_argument("bad letter '" + token + "'");
    } else {
      letters.emplace_back(GeneratorId(token), 1);
    }
  }
  return FreeWord(std::move(letters));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::rotated(std::size_t offset) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(offset % out.size()), out.end());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("subword out of range");
  return FreeWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool FreeWord::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i - 1].cancels(letters_[i])) return false;
  return true;
}

bool FreeWord::is_cyclically_reduced() const noexcept {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

bool FreeWord::mentions(const GeneratorId& g) const noexcept {
  return std::any_of(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.generator() == g; });
}

std::size_t FreeWord::occurrences(const GeneratorId& g) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.generator() == g; }));
}

std::set<GeneratorId> FreeWord::support() const {
  std::set<GeneratorId> out;
  for (const auto& l : letters_) out.insert(l.generator());
  return out;
}

std::string FreeWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out(a.letters_);
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord reduce(const FreeWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord cyclically_reduce(const FreeWord& w) {
  const FreeWord r = reduce(w);
  const auto& ls = r.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.subword(lo, hi - lo);
}

FreeWord power(const FreeWord& w, int n) {
  const FreeWord base = n < 0 ? w.inverse() : w;
  FreeWord out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return reduce(out);
}

FreeWord substitute(const FreeWord& w, const GeneratorId& g, const FreeWord& replacement) {
  if (replacement.mentions(g))
    throw RecursiveSubstitution("replacement for " + g.name() + " mentions " + g.name());
  const FreeWord replacement_inv = replacement.inverse();
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (l.generator() != g) {
      out.push_back(l);
      continue;
    }
    const auto& r = l.exponent() == 1 ? replacement : replacement_inv;
    out.insert(out.end(), r.begin(), r.end());
  }
  return reduce(FreeWord(std::move(out)));
}

CyclicWord::CyclicWord(const FreeWord& w) {
  const FreeWord base = cyclically_reduce(w);
  rep_ = base;
  for (std::size_t i = 1; i < base.size(); ++i) {
    FreeWord r = base.rotated(i);
    if (r < rep_) rep_ = std::move(r);
  }
}

std::set<FreeWord> cyclic_subwords(const CyclicWord& c, std::size_t len) {
  std::set<FreeWord> out;
  const auto& ls = c.representative().letters();
  if (ls.empty() || len == 0) return out;
  for (std::size_t start = 0; start < ls.size(); ++start) {
    std::vector<Letter> sub;
    sub.reserve(len);
    for (std::size_t k = 0; k < len; ++k) sub.push_back(ls[(start + k) % ls.size()]);
    out.insert(FreeWord(std::move(sub)));
  }
  return out;
}

}  // namespace artin

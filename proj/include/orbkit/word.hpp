// Words over a finite generating set, free reduction, and presentations.

#ifndef ORBKIT_WORD_HPP_
#define ORBKIT_WORD_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbkit {

using BigInt = boost::multiprecision::cpp_int;

/// A generator (or inverse generator) occurrence.  Coset tables index their
/// columns by `column()`: generator g occupies 2g, its inverse 2g + 1.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;  // +1 or -1

  constexpr Letter() = default;
  constexpr Letter(std::uint32_t g, int e) : gen(g), exp(e < 0 ? -1 : 1) {}

  [[nodiscard]] constexpr Letter inverse() const { return Letter(gen, -exp); }
  [[nodiscard]] constexpr std::size_t column() const {
    return 2 * static_cast<std::size_t>(gen) + (exp < 0 ? 1 : 0);
  }
  [[nodiscard]] static constexpr Letter from_column(std::size_t col) {
    return Letter(static_cast<std::uint32_t>(col / 2), (col % 2) ? -1 : 1);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return std::pair(a.gen, -a.exp) <=> std::pair(b.gen, -b.exp);
  }
};

/// Column of the inverse letter.
constexpr std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

/// A freely reduced word.  The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Reduces `letters` on construction.
  explicit Word(std::span<const Letter> letters) { append(letters); }
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] bool is_identity() const { return letters_.empty(); }
  [[nodiscard]] const Letter& operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }

  [[nodiscard]] Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  /// Largest generator index used plus one (0 for the identity).
  [[nodiscard]] std::uint32_t generator_bound() const {
    std::uint32_t b = 0;
    for (auto l : letters_) b = std::max(b, l.gen + 1);
    return b;
  }

  /// Conjugate to a cyclically reduced word.
  [[nodiscard]] Word cyclically_reduced() const {
    std::size_t lo = 0;
    std::size_t hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
    return w;
  }

  /// Rotation of a word by `k` letters; the result is re-reduced.
  [[nodiscard]] Word rotated(std::size_t k) const {
    if (letters_.empty()) return {};
    k %= letters_.size();
    std::vector<Letter> tmp(letters_.begin() + static_cast<std::ptrdiff_t>(k),
                            letters_.end());
    tmp.insert(tmp.end(), letters_.begin(),
               letters_.begin() + static_cast<std::ptrdiff_t>(k));
    return Word(tmp);
  }

  Word& operator*=(const Word& rhs) {
    append(rhs.letters_);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// w^k for any integer k; w^0 is the identity.
  [[nodiscard]] Word power(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (long long i = 0, n = k < 0 ? -k : k; i < n; ++i) out *= base;
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  void append(std::span<const Letter> letters) {
    // stack-based free reduction; amortized linear
    for (auto l : letters) {
      if (!letters_.empty() && letters_.back() == l.inverse()) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
  }

  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
inline Word reduce(std::span<const Letter> letters) { return Word(letters); }

/// True for names of the form [A-Za-z][A-Za-z0-9_]*.
inline bool is_valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

class InvalidPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite presentation <generators | relators>.  Immutable once built.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::string name = {})
      : name_(std::move(name)),
        generators_(std::move(generators)),
        relators_(std::move(relators)) {
    std::unordered_set<std::string> seen;
    for (const auto& g : generators_) {
      if (!is_valid_generator_name(g)) {
        throw InvalidPresentation("invalid generator name '" + g + "'");
      }
      if (!seen.insert(g).second) {
        throw InvalidPresentation("duplicate generator name '" + g + "'");
      }
    }
    for (const auto& r : relators_) {
      if (r.empty()) throw InvalidPresentation("relator reduces to the empty word");
      if (r.generator_bound() > generators_.size()) {
        throw InvalidPresentation("relator uses a generator index out of range");
      }
    }
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<Word>& relators() const { return relators_; }
  [[nodiscard]] std::size_t num_generators() const { return generators_.size(); }
  [[nodiscard]] std::size_t num_columns() const { return 2 * generators_.size(); }

  /// Index of a generator by name, or -1.
  [[nodiscard]] long long generator_index(const std::string& name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    return it == generators_.end() ? -1 : it - generators_.begin();
  }

  /// The words consisting of each single generator.
  [[nodiscard]] std::vector<Word> generator_words() const {
    std::vector<Word> out;
    for (std::uint32_t g = 0; g < generators_.size(); ++g) out.push_back(Word{Letter(g, 1)});
    return out;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exponent-sum matrix: entry (i, j) is the exponent sum of generator j in
/// relator i.  Counts accumulate in 64 bits and fall back to BigInt on overflow.
inline IntMatrix abelianized_relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.num_generators());
  std::vector<std::int64_t> sums(p.num_generators());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    std::fill(sums.begin(), sums.end(), 0);
    for (auto l : p.relators()[i]) {
      std::int64_t& s = sums[l.gen];
      std::int64_t next = 0;
      if (__builtin_add_overflow(s, static_cast<std::int64_t>(l.exp), &next)) {
        m(i, l.gen) += s;
        next = l.exp;
      }
      s = next;
    }
    for (std::size_t j = 0; j < sums.size(); ++j) m(i, j) += sums[j];
  }
  return m;
}

}  // namespace orbkit

#endif  // ORBKIT_WORD_HPP_

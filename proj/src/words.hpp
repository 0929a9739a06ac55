#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsikit {

struct UnknownMarkedWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One letter of a group word: generator index with exponent +1 or -1.
struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word generator(int g, int exp = 1) { return Word({Letter{g, exp < 0 ? -1 : 1}}); }
  /// g^n as a word (freely reduced by construction).
  static Word power(int g, long long n);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(long long n) const;
  Word conjugated_by(const Word& w) const { return w.inverse() * (*this) * w; }

  /// Exponent sum per generator (abelianization image).
  std::vector<long long> exponent_sums(int n_generators) const;

  /// Rewrite each generator g by images[g]; the result is freely reduced.
  Word substituted(const std::vector<Word>& images) const;

  int max_generator() const;

  std::string str() const;  // e.g. "a b^-1 a"

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b);

private:
  void reduce();
  std::vector<Letter> letters_;
};

/// Finitely presented group with named marked words (meridians, boundary
/// words and the like).
struct Presentation {
  int n_generators = 0;
  std::vector<Word> relators;
  std::map<std::string, Word> marked_words;

  const Word& marked(const std::string& name) const;
  void validate() const;  // letter indices < n_generators

  /// Relation matrix: one row per relator, entry = exponent sum.
  std::vector<std::vector<long long>> relation_matrix() const;

  /// Free product, shifting the right factor's generator indices.
  static Presentation free_product(const Presentation& a, const Presentation& b);
};

/// Appends the relator mu^2 where mu is a marked word of P.
Presentation quotient_by_square(const Presentation& p, const std::string& mu_name);

}  // namespace hsikit

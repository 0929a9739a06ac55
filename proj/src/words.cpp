#include "words.hpp"

#include <algorithm>

namespace hsikit {

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) { reduce(); }
Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

void Word::reduce() {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (l.exp != 1 && l.exp != -1)
      throw std::invalid_argument("word letter exponent must be +1 or -1");
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

Word Word::power(int g, long long n) {
  std::vector<Letter> ls;
  int e = n < 0 ? -1 : 1;
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) ls.push_back({g, e});
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    ls.push_back({it->gen, -it->exp});
  return Word(std::move(ls));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(ls));
}

Word Word::pow(long long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word acc;
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) acc = acc * base;
  return acc;
}

std::vector<long long> Word::exponent_sums(int n_generators) const {
  std::vector<long long> s(static_cast<size_t>(n_generators), 0);
  for (const Letter& l : letters_) s.at(static_cast<size_t>(l.gen)) += l.exp;
  return s;
}

Word Word::substituted(const std::vector<Word>& images) const {
  Word out;
  for (const Letter& l : letters_) {
    const Word& im = images.at(static_cast<size_t>(l.gen));
    out = out * (l.exp == 1 ? im : im.inverse());
  }
  return out;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += "g" + std::to_string(letters_[i].gen);
    if (letters_[i].exp < 0) s += "^-1";
  }
  return s;
}

bool operator<(const Word& a, const Word& b) {
  auto key = [](const Letter& l) { return std::pair<int, int>{l.gen, l.exp}; };
  return std::lexicographical_compare(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
      [&](const Letter& x, const Letter& y) { return key(x) < key(y); });
}

const Word& Presentation::marked(const std::string& name) const {
  auto it = marked_words.find(name);
  if (it == marked_words.end())
    throw UnknownMarkedWord("no marked word named '" + name + "'");
  return it->second;
}

void Presentation::validate() const {
  auto check = [&](const Word& w) {
    for (const Letter& l : w.letters())
      if (l.gen < 0 || l.gen >= n_generators)
        throw std::invalid_argument("word uses generator outside presentation");
  };
  for (const Word& r : relators) check(r);
  for (const auto& [_, w] : marked_words) check(w);
}

std::vector<std::vector<long long>> Presentation::relation_matrix() const {
  std::vector<std::vector<long long>> m;
  m.reserve(relators.size());
  for (const Word& r : relators) m.push_back(r.exponent_sums(n_generators));
  return m;
}

Presentation Presentation::free_product(const Presentation& a, const Presentation& b) {
  Presentation p;
  p.n_generators = a.n_generators + b.n_generators;
  p.relators = a.relators;
  auto shift = [&](const Word& w) {
    std::vector<Letter> ls;
    for (const Letter& l : w.letters()) ls.push_back({l.gen + a.n_generators, l.exp});
    return Word(std::move(ls));
  };
  for (const Word& r : b.relators) p.relators.push_back(shift(r));
  p.marked_words = a.marked_words;
  for (const auto& [name, w] : b.marked_words) p.marked_words[name + "'"] = shift(w);
  return p;
}

Presentation quotient_by_square(const Presentation& p, const std::string& mu_name) {
  const Word& mu = p.marked(mu_name);
  Presentation q = p;
  q.relators.push_back(mu * mu);
  return q;
}

}  // namespace hsikit

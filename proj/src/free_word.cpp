#include "permuta/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permuta/error.hpp"

namespace permuta {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

FreeWord::FreeWord(std::size_t rank, const std::vector<Letter>& letters) : rank_(rank) {
  for (auto l : letters) {
    if (l.generator >= rank) throw RankMismatch("generator x" + std::to_string(l.generator + 1) +
                                                " outside rank " + std::to_string(rank));
    push_reduced(letters_, l);
  }
}

FreeWord reduce(std::size_t rank, const std::vector<Letter>& letters) { return FreeWord(rank, letters); }

FreeWord FreeWord::generator(std::size_t rank, std::size_t i, bool inverse) {
  return FreeWord(rank, {Letter{i, inverse}});
}

FreeWord FreeWord::parse(std::string_view text, std::size_t rank) {
  std::vector<Letter> letters;
  std::size_t i = 0, max_gen = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long {
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok(text.substr(start, i - start));
    if (tok.empty() || tok == "-") throw ParseError("expected integer in word: " + std::string(text));
    return std::stol(tok);
  };
  skip_ws();
  if (text.substr(i) == "e") return FreeWord(rank);
  while (i < text.size()) {
    if (text[i] == '*') {
      ++i;
      skip_ws();
      continue;
    }
    if (text[i] != 'x') throw ParseError("expected generator 'x<k>' in word: " + std::string(text));
    ++i;
    long gen = read_int();
    if (gen < 1) throw ParseError("generators are numbered from x1");
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = read_int();
    }
    max_gen = std::max(max_gen, static_cast<std::size_t>(gen));
    for (long k = 0; k < std::abs(exp); ++k) letters.push_back(Letter{static_cast<std::size_t>(gen - 1), exp < 0});
    skip_ws();
  }
  if (rank == 0) rank = max_gen;
  if (max_gen > rank) throw RankMismatch("word uses x" + std::to_string(max_gen) + " beyond rank " + std::to_string(rank));
  return FreeWord(rank, letters);
}

FreeWord FreeWord::inverse() const {
  FreeWord r(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->generator, !it->inverse});
  return r;
}

FreeWord FreeWord::with_rank(std::size_t rank) const {
  FreeWord r(rank, letters_);
  return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw RankMismatch("product of words of different rank");
  FreeWord r = a;
  for (auto l : b.letters_) push_reduced(r.letters_, l);
  return r;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (i) os << ' ';
    os << 'x' << letters_[i].generator + 1;
    const long exp = static_cast<long>(j - i) * (letters_[i].inverse ? -1 : 1);
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

}  // namespace permuta

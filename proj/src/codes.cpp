#include "vnat/codes.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vnat::codes {

namespace {

Word length_mask(int length) {
  return length == 64 ? ~Word{0} : ((Word{1} << length) - 1);
}

int mod23(int x) { return ((x % 23) + 23) % 23; }

int inverse23(int x) {
  for (int y = 1; y < 23; ++y) {
    if (mod23(x * y) == 1) return y;
  }
  throw std::logic_error("no inverse mod 23");
}

Word image_of_set(Word set, int a, int b, int c, int d) {
  Word out = 0;
  for (int p = 0; p < kGolayLength; ++p) {
    if ((set >> p) & 1U) out |= Word{1} << moebius23(a, b, c, d, p);
  }
  return out;
}

// Span of all images of `seed` under the group generated by t -> t + 1 and t -> -1/t.
BinaryCode span_of_orbit(Word seed, std::size_t& orbit_size) {
  std::set<Word> orbit{seed};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    const Word s = queue.front();
    queue.pop_front();
    for (Word t : {image_of_set(s, 1, 1, 0, 1), image_of_set(s, 0, -1, 1, 0)}) {
      if (orbit.insert(t).second) queue.push_back(t);
    }
  }
  orbit_size = orbit.size();
  return BinaryCode(kGolayLength, std::vector<Word>(orbit.begin(), orbit.end()));
}

}  // namespace

int weight(Word w) { return __builtin_popcountll(w); }

BinaryCode::BinaryCode(int length, const std::vector<Word>& spanning_words) : length_(length) {
  if (length <= 0 || length > kMaxLength) {
    throw std::invalid_argument("code length must be in [1, 64]");
  }
  const Word mask = length_mask(length);
  std::vector<Word> rows;
  for (Word w : spanning_words) {
    if (w & ~mask) throw std::invalid_argument("word has bits beyond the code length");
    // Reduce against the current rows, then clear the new pivot from the others.
    for (Word r : rows) {
      if ((w >> __builtin_ctzll(r)) & 1U) w ^= r;
    }
    if (w == 0) continue;
    const int pivot = __builtin_ctzll(w);
    for (Word& r : rows) {
      if ((r >> pivot) & 1U) r ^= w;
    }
    rows.push_back(w);
  }
  std::sort(rows.begin(), rows.end(),
            [](Word a, Word b) { return __builtin_ctzll(a) < __builtin_ctzll(b); });
  generators_ = std::move(rows);
}

bool BinaryCode::contains(Word w) const {
  if (w & ~length_mask(length_)) return false;
  for (Word r : generators_) {
    if ((w >> __builtin_ctzll(r)) & 1U) w ^= r;
  }
  return w == 0;
}

WeightEnumerator weight_enumerator(const BinaryCode& code) {
  if (code.dimension() > kMaxEnumerationDimension) {
    throw std::invalid_argument("weight enumerator refused: dimension " +
                                std::to_string(code.dimension()) + " exceeds " +
                                std::to_string(kMaxEnumerationDimension));
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.length()) + 1, 0);
  for_each_codeword(code, [&](Word w) { ++counts[static_cast<std::size_t>(weight(w))]; });
  WeightEnumerator out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) out[static_cast<int>(i)] = counts[i];
  }
  return out;
}

bool is_doubly_even(const BinaryCode& code) {
  // A code spanned by doubly even, mutually orthogonal words is doubly even.
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (weight(g[i]) % 4 != 0) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (weight(g[i] & g[j]) % 2 != 0) return false;
    }
  }
  return true;
}

int min_weight(const BinaryCode& code) {
  const auto enumerator = weight_enumerator(code);
  for (const auto& [w, count] : enumerator) {
    if (w > 0 && count > 0) return w;
  }
  return 0;
}

BinaryCode dual_code(const BinaryCode& code) {
  const int n = code.length();
  Word pivots = 0;
  for (Word r : code.generators()) pivots |= Word{1} << __builtin_ctzll(r);
  std::vector<Word> kernel;
  for (int f = 0; f < n; ++f) {
    if ((pivots >> f) & 1U) continue;
    Word v = Word{1} << f;
    for (Word r : code.generators()) {
      if ((r >> f) & 1U) v |= Word{1} << __builtin_ctzll(r);
    }
    kernel.push_back(v);
  }
  return BinaryCode(n, kernel);
}

bool is_self_dual(const BinaryCode& code) { return dual_code(code) == code; }

bool contains(const BinaryCode& code, Word w) { return code.contains(w); }

int moebius23(int a, int b, int c, int d, int x) {
  if (x == kInfinity) {
    if (mod23(c) == 0) return kInfinity;
    return mod23(a * inverse23(mod23(c)));
  }
  const int den = mod23(c * x + d);
  if (den == 0) return kInfinity;
  return mod23((a * x + b) * inverse23(den));
}

GolayConstruction golay_construction() {
  Word residues = 0;
  for (int x = 1; x < 23; ++x) residues |= Word{1} << mod23(x * x);
  if (weight(residues) != 11) throw std::logic_error("expected 11 nonzero quadratic residues mod 23");

  for (const auto& [completion, point] : {std::pair<const char*, int>{"zero", 0},
                                          std::pair<const char*, int>{"infinity", kInfinity}}) {
    std::size_t orbit_size = 0;
    BinaryCode code = span_of_orbit(residues | (Word{1} << point), orbit_size);
    if (code.dimension() == 12) return {std::move(code), completion, orbit_size};
  }
  throw std::logic_error("internal error: no completion of the quadratic residues spans a 12-dimensional code");
}

BinaryCode golay_code() {
  static const BinaryCode code = golay_construction().code;
  return code;
}

std::string word_to_string(Word w, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int p = 0; p < length; ++p) {
    if ((w >> p) & 1U) s[static_cast<std::size_t>(p)] = '1';
  }
  return s;
}

std::string to_text(const BinaryCode& code) {
  std::ostringstream out;
  out << code.length() << ' ' << code.dimension() << '\n';
  for (Word r : code.generators()) out << word_to_string(r, code.length()) << '\n';
  return out.str();
}

BinaryCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  int length = 0;
  int dimension = 0;
  if (!(in >> length >> dimension) || length <= 0 || length > kMaxLength || dimension < 0) {
    throw std::invalid_argument("malformed code header");
  }
  std::vector<Word> words;
  for (int i = 0; i < dimension; ++i) {
    std::string row;
    if (!(in >> row) || static_cast<int>(row.size()) != length) {
      throw std::invalid_argument("malformed code row " + std::to_string(i));
    }
    Word w = 0;
    for (int p = 0; p < length; ++p) {
      const char ch = row[static_cast<std::size_t>(p)];
      if (ch == '1') {
        w |= Word{1} << p;
      } else if (ch != '0') {
        throw std::invalid_argument("code rows must be 0/1 strings");
      }
    }
    words.push_back(w);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing data after code rows");
  BinaryCode code(length, words);
  if (code.dimension() != dimension) {
    throw std::invalid_argument("code rows are linearly dependent");
  }
  return code;
}

}  // namespace vnat::codes

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vnat::codes {

// Bit p of a word is coordinate p. Codes up to length 64 are supported.
using Word = std::uint64_t;

inline constexpr int kMaxLength = 64;
inline constexpr int kGolayLength = 24;
// Golay coordinates: positions 0..22 are the residues mod 23, position 23 is infinity.
inline constexpr int kInfinity = 23;
// Full enumeration of 2^k codewords is refused above this dimension.
inline constexpr int kMaxEnumerationDimension = 28;

int weight(Word w);

// A GF(2) linear code held by its reduced row echelon generator matrix.
// Pivots are the lowest set bit of each row, rows are sorted by pivot and every
// pivot column is zero outside its own row, so equal codes have equal generators.
class BinaryCode {
 public:
  BinaryCode(int length, const std::vector<Word>& spanning_words);

  static BinaryCode zero(int length) { return BinaryCode(length, {}); }

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generators_.size()); }
  const std::vector<Word>& generators() const { return generators_; }

  bool contains(Word w) const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  int length_;
  std::vector<Word> generators_;
};

using WeightEnumerator = std::map<int, std::uint64_t>;

WeightEnumerator weight_enumerator(const BinaryCode& code);
bool is_doubly_even(const BinaryCode& code);
// Smallest nonzero weight; 0 for the zero code.
int min_weight(const BinaryCode& code);
BinaryCode dual_code(const BinaryCode& code);
bool is_self_dual(const BinaryCode& code);
bool contains(const BinaryCode& code, Word w);

// Calls f(word) for every codeword, in Gray-code order.
template <typename F>
void for_each_codeword(const BinaryCode& code, F&& f);

struct GolayConstruction {
  BinaryCode code;
  // Which point completed the 11 nonzero residues to the size-12 generating set:
  // "zero" or "infinity".
  std::string completion;
  // Number of distinct images of the generating set under <t+1, -1/t>.
  std::size_t orbit_size = 0;
};

GolayConstruction golay_construction();
BinaryCode golay_code();

// Image of point x of P^1(F_23) (23 = infinity) under t -> (a t + b) / (c t + d).
int moebius23(int a, int b, int c, int d, int x);

// "length dimension" then one 0/1 string per generator, character p = coordinate p.
std::string to_text(const BinaryCode& code);
BinaryCode parse_code(std::string_view text);

std::string word_to_string(Word w, int length);

template <typename F>
void for_each_codeword(const BinaryCode& code, F&& f) {
  const auto& gens = code.generators();
  const int k = static_cast<int>(gens.size());
  Word w = 0;
  f(w);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= gens[static_cast<std::size_t>(__builtin_ctzll(i))];
    f(w);
  }
}

}  // namespace vnat::codes

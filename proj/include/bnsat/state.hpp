#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bnsat {

/// Packed n-bit state word. Coordinate j (1-based) lives in bit j-1, so the
/// integer value of a state is sum x_j * 2^(j-1) and the origin has word 0.
using Word = std::uint32_t;

inline constexpr int kMaxDimension = 16;

/// A point of {0,1}^n. Immutable value type; dimension is carried along so
/// that mixed-dimension arguments are caught early.
class State {
 public:
  State() = default;
  State(Word bits, int n);

  int dimension() const { return n_; }
  Word word() const { return bits_; }

  /// Coordinate x_j, 1-based.
  bool bit(int j) const;
  /// State with coordinate j flipped.
  State flipped(int j) const;
  /// State with coordinate j forced to v.
  State with(int j, bool v) const;
  /// State with every coordinate flipped.
  State complemented() const;

  /// Rendered as "x1x2...xn" (coordinate 1 first).
  std::string to_string() const;
  static State parse(std::string_view text);

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  Word bits_ = 0;
  std::uint8_t n_ = 0;
};

State origin(int n);
State all_ones(int n);
/// Basis state e^j: coordinate j set, all others zero.
State unit(int j, int n);

/// Hamming distance; throws std::invalid_argument on dimension mismatch.
int hamming(const State& a, const State& b);

std::ostream& operator<<(std::ostream&, const State&);

/// Total map f : {0,1}^n -> {0,1}^n stored as a truth table of 2^n output
/// words indexed by input word.
class BooleanMap {
 public:
  BooleanMap(int n, std::vector<Word> table);

  static BooleanMap identity(int n);
  static BooleanMap constant(int n, State value);
  /// Coordinate-wise negation, f(x) = complement of x.
  static BooleanMap negation(int n);

  template <typename Fn>
  static BooleanMap from_function(int n, Fn&& fn) {
    std::vector<Word> table(std::size_t{1} << n);
    for (Word w = 0; w < table.size(); ++w)
      table[w] = fn(State(w, n)).word();
    return BooleanMap(n, std::move(table));
  }

  int dimension() const { return n_; }
  std::size_t state_count() const { return table_.size(); }

  State apply(const State& x) const;
  State operator()(const State& x) const { return apply(x); }
  Word image_word(Word x) const { return table_[x]; }
  /// Component f_i(x), 1-based i.
  bool component(int i, const State& x) const;

  friend bool operator==(const BooleanMap&, const BooleanMap&) = default;

 private:
  std::uint8_t n_;
  std::vector<Word> table_;
};

// Truth-table text format: first significant line is the dimension n,
// followed by exactly 2^n lines "INBITS OUTBITS" in ascending input order,
// bit strings written coordinate 1 first. Blank lines and lines starting
// with '#' are ignored.
BooleanMap read_map(std::istream& in);
BooleanMap read_map_file(const std::filesystem::path& path);
void write_map(std::ostream& out, const BooleanMap& f);
void write_map_file(const std::filesystem::path& path, const BooleanMap& f);

/// Input or overflow problems in the text formats accepted by the library.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bnsat

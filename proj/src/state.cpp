#include "bnsat/state.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bnsat {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("dimension must be in 1.." +
                                std::to_string(kMaxDimension) + ", got " +
                                std::to_string(n));
}

void check_coordinate(int j, int n) {
  if (j < 1 || j > n)
    throw std::invalid_argument("coordinate " + std::to_string(j) +
                                " out of range 1.." + std::to_string(n));
}

}  // namespace

State::State(Word bits, int n) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
  check_dimension(n);
  if (bits >> n)
    throw std::invalid_argument("state word " + std::to_string(bits) +
                                " exceeds dimension " + std::to_string(n));
}

bool State::bit(int j) const {
  check_coordinate(j, n_);
  return (bits_ >> (j - 1)) & 1u;
}

State State::flipped(int j) const {
  check_coordinate(j, n_);
  return State(bits_ ^ (Word{1} << (j - 1)), n_);
}

State State::with(int j, bool v) const {
  check_coordinate(j, n_);
  Word mask = Word{1} << (j - 1);
  return State(v ? bits_ | mask : bits_ & ~mask, n_);
}

State State::complemented() const {
  Word mask = (n_ == kMaxDimension) ? ~Word{0} >> (32 - kMaxDimension)
                                    : (Word{1} << n_) - 1;
  return State(bits_ ^ mask, n_);
}

std::string State::to_string() const {
  std::string s(n_, '0');
  for (int j = 1; j <= n_; ++j)
    if ((bits_ >> (j - 1)) & 1u) s[j - 1] = '1';
  return s;
}

State State::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxDimension)
    throw ParseError("bad state string '" + std::string(text) + "'");
  Word bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1')
      bits |= Word{1} << j;
    else if (text[j] != '0')
      throw ParseError("bad state string '" + std::string(text) + "'");
  }
  return State(bits, static_cast<int>(text.size()));
}

State origin(int n) { return State(0, n); }

State all_ones(int n) { return origin(n).complemented(); }

State unit(int j, int n) {
  check_coordinate(j, n);
  return State(Word{1} << (j - 1), n);
}

int hamming(const State& a, const State& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("hamming: dimension mismatch");
  return std::popcount(a.word() ^ b.word());
}

std::ostream& operator<<(std::ostream& out, const State& x) {
  return out << x.to_string();
}

BooleanMap::BooleanMap(int n, std::vector<Word> table)
    : n_(static_cast<std::uint8_t>(n)), table_(std::move(table)) {
  check_dimension(n);
  if (table_.size() != std::size_t{1} << n)
    throw std::invalid_argument("truth table must have 2^n entries");
  for (Word w : table_)
    State(w, n);  // range check
}

BooleanMap BooleanMap::identity(int n) {
  check_dimension(n);
  std::vector<Word> table(std::size_t{1} << n);
  for (Word w = 0; w < table.size(); ++w) table[w] = w;
  return BooleanMap(n, std::move(table));
}

BooleanMap BooleanMap::constant(int n, State value) {
  check_dimension(n);
  if (value.dimension() != n)
    throw std::invalid_argument("constant: dimension mismatch");
  return BooleanMap(n, std::vector<Word>(std::size_t{1} << n, value.word()));
}

BooleanMap BooleanMap::negation(int n) {
  return from_function(n, [](const State& x) { return x.complemented(); });
}

State BooleanMap::apply(const State& x) const {
  if (x.dimension() != n_)
    throw std::invalid_argument("map applied to state of wrong dimension");
  return State(table_[x.word()], n_);
}

bool BooleanMap::component(int i, const State& x) const {
  return apply(x).bit(i);
}

namespace {

// Next line that carries content; strips '#' comments and surrounding
// blanks.
bool next_significant_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    return true;
  }
  return false;
}

}  // namespace

BooleanMap read_map(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_significant_line(in, line, lineno))
    throw ParseError("map file: missing dimension line");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(line, &pos);
    if (pos != line.size()) throw std::invalid_argument(line);
  } catch (const std::exception&) {
    throw ParseError("map file: bad dimension line '" + line + "'");
  }
  if (n < 1 || n > kMaxDimension)
    throw ParseError("map file: dimension out of range: " + line);

  std::vector<Word> table;
  table.reserve(std::size_t{1} << n);
  for (Word w = 0; w < (Word{1} << n); ++w) {
    if (!next_significant_line(in, line, lineno))
      throw ParseError("map file: expected " +
                       std::to_string(std::size_t{1} << n) +
                       " rows, got " + std::to_string(w));
    std::istringstream row(line);
    std::string in_bits, out_bits, extra;
    if (!(row >> in_bits >> out_bits) || (row >> extra))
      throw ParseError("map file line " + std::to_string(lineno) +
                       ": expected 'INBITS OUTBITS'");
    State input = State::parse(in_bits);
    State output = State::parse(out_bits);
    if (input.dimension() != n || output.dimension() != n)
      throw ParseError("map file line " + std::to_string(lineno) +
                       ": wrong bit-string length");
    if (input.word() != w)
      throw ParseError("map file line " + std::to_string(lineno) +
                       ": rows must be in ascending input order");
    table.push_back(output.word());
  }
  if (next_significant_line(in, line, lineno))
    throw ParseError("map file line " + std::to_string(lineno) +
                     ": unexpected content after the last row");
  return BooleanMap(n, std::move(table));
}

BooleanMap read_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file " + path.string());
  return read_map(in);
}

void write_map(std::ostream& out, const BooleanMap& f) {
  int n = f.dimension();
  out << n << '\n';
  for (Word w = 0; w < f.state_count(); ++w)
    out << State(w, n).to_string() << ' ' << State(f.image_word(w), n).to_string()
        << '\n';
}

void write_map_file(const std::filesystem::path& path, const BooleanMap& f) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  write_map(out, f);
  if (!out.flush()) throw ParseError("write failed for " + path.string());
}

}  // namespace bnsat

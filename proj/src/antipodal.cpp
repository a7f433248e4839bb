#include "bnsat/antipodal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bnsat {

namespace {

// Coordinate superscript reduced to 1..n.
int coord_mod(int i, int n) { return (i - 1) % n + 1; }

}  // namespace

std::size_t AntipodalFrame::cycle_index(int i) const {
  int period = 2 * n;
  int r = (i - 1) % period;
  if (r < 0) r += period;
  return static_cast<std::size_t>(r);
}

AntipodalFrame antipodal_frame(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("antipodal_frame: dimension out of range");
  AntipodalFrame frame;
  frame.n = n;
  frame.a.reserve(2 * n);
  frame.a.push_back(origin(n));
  for (int i = 1; i < 2 * n; ++i)
    frame.a.push_back(frame.a.back().flipped(coord_mod(i, n)));
  for (int i = 1; i <= 2 * n; ++i) {
    const State& ai = frame.a[i - 1];
    State bi = ai.flipped(coord_mod(i + 1, n));
    frame.b.push_back(bi);
    frame.c.push_back(bi.flipped(coord_mod(i + 2, n)));
    frame.d.push_back(bi.flipped(coord_mod(i + 3, n)));
  }
  return frame;
}

std::vector<State> antipodal_cycle(int n) { return antipodal_frame(n).a; }

BooleanMap construct_antipodal_map(int n) {
  AntipodalFrame frame = antipodal_frame(n);
  std::vector<std::pair<Word, std::string>> labels;
  labels.reserve(8 * n);
  for (int i = 1; i <= 2 * n; ++i) {
    labels.emplace_back(frame.a[i - 1].word(), "a^" + std::to_string(i));
    labels.emplace_back(frame.b[i - 1].word(), "b^" + std::to_string(i));
    labels.emplace_back(frame.c[i - 1].word(), "c^" + std::to_string(i));
    labels.emplace_back(frame.d[i - 1].word(), "d^" + std::to_string(i));
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 0; k + 1 < labels.size(); ++k)
    if (labels[k].first == labels[k + 1].first)
      throw std::invalid_argument(
          "construct_antipodal_map: " + labels[k].second + " and " +
          labels[k + 1].second + " coincide at " +
          State(labels[k].first, n).to_string() + " (need n >= 6)");

  std::vector<Word> table(std::size_t{1} << n);
  for (Word w = 0; w < table.size(); ++w) table[w] = w;
  for (int i = 1; i <= 2 * n; ++i) {
    table[frame.a[i - 1].word()] = frame.a_at(i + 1).word();
    table[frame.b[i - 1].word()] = frame.a_at(i + 2).word();
    table[frame.c[i - 1].word()] = frame.a_at(i + 4).word();
    table[frame.d[i - 1].word()] = frame.a_at(i + 4).word();
  }
  return BooleanMap(n, std::move(table));
}

AntipodalReport verify_antipodal(int n) {
  if (n < 6 || n > 7)
    throw std::invalid_argument(
        "verify_antipodal: exhaustive checking is supported for n = 6, 7");
  AntipodalReport report;
  report.n = n;

  BooleanMap f = BooleanMap::identity(1);
  try {
    f = construct_antipodal_map(n);
    report.well_defined = true;
  } catch (const std::invalid_argument& e) {
    report.detail = e.what();
    return report;
  }

  AntipodalFrame frame = antipodal_frame(n);
  report.cycle_is_attractor = true;
  for (int i = 1; i <= 2 * n && report.cycle_is_attractor; ++i) {
    std::vector<State> succ = async_successors(f, frame.a[i - 1]);
    if (succ.size() != 1 || !(succ[0] == frame.a_at(i + 1))) {
      report.cycle_is_attractor = false;
      report.detail = "a^" + std::to_string(i) + " = " +
                      frame.a[i - 1].to_string() +
                      " does not step uniquely to a^" + std::to_string(i + 1);
    }
  }
  if (report.cycle_is_attractor) {
    std::set<Word> cycle;
    for (const State& s : frame.a) cycle.insert(s.word());
    bool found = false;
    for (const Attractor& attractor : attractors(f)) {
      std::set<Word> members;
      for (const State& s : attractor.states) members.insert(s.word());
      if (members == cycle) {
        found = attractor.kind == AttractorKind::cyclic;
        break;
      }
    }
    if (!found) {
      report.cycle_is_attractor = false;
      report.detail = "the antipodal cycle is not among the attractors";
    }
  }

  std::optional<NegativeCircuitWitness> witness = find_local_negative_circuit(f);
  report.no_local_negative_circuit = !witness.has_value();
  if (witness) {
    report.circuit_witness = witness;
    report.detail = "negative circuit " + witness->circuit.to_string() +
                    " in the local graph at " + witness->state.to_string();
  }
  return report;
}

std::string to_string(const AntipodalReport& report) {
  std::ostringstream out;
  auto line = [&](const char* label, bool pass) {
    out << label << ": " << (pass ? "pass" : "FAIL") << "\n";
  };
  out << "antipodal construction, n = " << report.n << "\n";
  line("  well defined (8n distinct special states)", report.well_defined);
  line("  antipodal cycle is a cyclic attractor", report.cycle_is_attractor);
  line("  no local negative circuit at any state",
       report.no_local_negative_circuit);
  if (!report.ok() && !report.detail.empty())
    out << "  witness: " << report.detail << "\n";
  return out.str();
}

}  // namespace bnsat

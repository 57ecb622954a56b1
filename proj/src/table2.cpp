#include "orbitdim/table2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orbitdim/random.hpp"

namespace orbitdim {

namespace {

constexpr GroupKind kGroups[] = {GroupKind::PLO, GroupKind::DPLO, GroupKind::ALO, GroupKind::GO};
constexpr Picture kPictures[] = {Picture::Ket, Picture::Ketbra};

// All vectors of length `len` with entries in [0, top], lexicographic.
std::vector<std::vector<int>> all_occupations(std::size_t len, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(len, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = len;
    while (i > 0 && v[i - 1] == top) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

std::vector<std::vector<int>> fock_occupations(std::size_t m) {
  if (m <= 3) return all_occupations(m, 3);
  auto out = all_occupations(m, 1);
  std::vector<int> ramp(m), down(m), twos(m, 2), threes(m, 3), alt(m);
  for (std::size_t k = 0; k < m; ++k) {
    ramp[k] = int(k % 4);
    down[k] = 3 - int(k % 4);
    alt[k] = k % 2 ? 0 : 3;
  }
  std::vector<int> one_two(m, 0);
  one_two[0] = 2;
  one_two[m - 1] = 1;
  for (auto& v : {ramp, down, twos, threes, alt, one_two}) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> tails(std::size_t len) {
  std::set<std::vector<int>> out;
  out.insert(std::vector<int>(len, 0));
  out.insert(std::vector<int>(len, 1));
  if (len > 0) {
    std::vector<int> mixed(len, 0), lead(len, 0);
    for (std::size_t k = 0; k < len; ++k) mixed[k] = k % 2 ? 0 : 2;
    lead[0] = 1;
    out.insert(mixed);
    out.insert(lead);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<StateFamily> table2_states(std::size_t m_max) {
  if (m_max < 1) throw std::invalid_argument("table2 needs m_max >= 1");
  std::vector<StateFamily> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (auto& n : fock_occupations(m)) out.push_back(FockFamily{Occupation(n)});
    if (m >= 2) {
      for (int photons : {3, 4, 5}) {
        for (auto& t : tails(m - 2)) out.push_back(NoonFamily{photons, t});
      }
    }
    const Rng rng(0x7ab1e2);
    std::uint64_t stream = 0;
    for (std::size_t terms : {2u, 3u, 4u}) {
      for (auto& t : tails(m - 1)) {
        Rng r = rng.split(m * 1000 + stream++);
        std::vector<Complex> amplitudes(terms);
        for (auto& a : amplitudes) a = Complex(r.uniform(0.2, 1.0), 0.0) * std::polar(1.0, r.uniform(0.0, 6.283185307179586));
        out.push_back(OneModeSuperposition{amplitudes, t});
      }
    }
  }
  return out;
}

Table2Row table2_row(const StateFamily& family, GroupKind group, Picture picture,
                     const RankTolerance& tolerance) {
  Table2Row row;
  row.family = family;
  row.group = group;
  row.picture = picture;
  row.modes = family_modes(family);
  row.closed = closed_form(family, group, picture);
  row.numerical = orbit_dimension(group, family_state(family), picture, tolerance).rank;
  const long numerical = long(row.numerical);
  row.pass = row.closed.exactness == Exactness::Exact ? numerical == row.closed.value
                                                      : numerical <= row.closed.value;
  return row;
}

std::vector<Table2Row> table2(std::size_t m_max, const RankTolerance& tolerance) {
  std::vector<Table2Row> rows;
  for (const auto& family : table2_states(m_max)) {
    for (GroupKind group : kGroups) {
      for (Picture picture : kPictures) rows.push_back(table2_row(family, group, picture, tolerance));
    }
  }
  return rows;
}

}  // namespace orbitdim

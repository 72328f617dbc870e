#include "relalg/rm_export.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace relalg {

int ModelStructure::point_index(std::string_view p) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == p) return static_cast<int>(i);
  return -1;
}

ModelStructure export_rms(const AtomStructure& s, bool relativized,
                          std::optional<std::string> zero_name) {
  ModelStructure ms;
  ms.name = s.name() + (relativized ? "-relativized" : "");
  std::vector<int> atom_of_point;  // point index -> atom index
  for (int i = 0; i < s.size(); ++i) {
    const bool diversity = !((s.identity_bits() >> i) & 1u);
    if (!relativized || diversity) {
      ms.points.push_back(s.atom_name(i));
      atom_of_point.push_back(i);
    }
  }
  if (ms.points.empty())
    throw std::invalid_argument("relativized export needs at least one diversity atom");

  const int n = static_cast<int>(ms.points.size());
  std::vector<int> point_of_atom(s.size(), -1);
  for (int p = 0; p < n; ++p) point_of_atom[atom_of_point[p]] = p;

  ms.star.resize(n);
  for (int p = 0; p < n; ++p) {
    int q = point_of_atom[s.converse_atom(atom_of_point[p])];
    if (q < 0) throw std::invalid_argument("converse leaves the point set");
    ms.star[p] = q;
  }

  if (zero_name) {
    int z = ms.point_index(*zero_name);
    if (z < 0) throw std::invalid_argument("zero point '" + *zero_name + "' is not a point");
    ms.zero = z;
  } else if (!relativized && std::popcount(s.identity_bits()) == 1) {
    ms.zero = point_of_atom[std::countr_zero(s.identity_bits())];
  } else {
    throw std::invalid_argument("zero point must be named for this export");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::uint32_t product = s.compose_atoms(atom_of_point[x], atom_of_point[y]);
      if (relativized) product &= ~s.identity_bits();
      for (int z = 0; z < n; ++z)
        if ((product >> atom_of_point[z]) & 1u) ms.triples.push_back({x, y, z});
    }
  std::sort(ms.triples.begin(), ms.triples.end(),
            [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
              for (int k = 0; k < 3; ++k)
                if (ms.points[a[k]] != ms.points[b[k]]) return ms.points[a[k]] < ms.points[b[k]];
              return false;
            });
  return ms;
}

int triple_count(const ModelStructure& ms) { return static_cast<int>(ms.triples.size()); }

std::string serialize(const ModelStructure& ms) {
  std::ostringstream out;
  out << "rms " << ms.name << "\n";
  out << "points:\n";
  for (const auto& p : ms.points) out << p << "\n";
  out << "star:\n";
  for (std::size_t i = 0; i < ms.points.size(); ++i)
    out << ms.points[i] << " " << ms.points[ms.star[i]] << "\n";
  out << "zero:\n" << ms.points[ms.zero] << "\n";
  out << "triples:\n";
  for (const auto& t : ms.triples)
    out << ms.points[t[0]] << " " << ms.points[t[1]] << " " << ms.points[t[2]] << "\n";
  return out.str();
}

ModelStructure parse_model_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ModelStructure ms;
  enum class Section { None, Points, Star, Zero, Triples } section = Section::None;
  bool header_seen = false;
  std::vector<std::pair<std::string, std::string>> star_pairs;
  std::string zero_point;
  std::vector<std::array<std::string, 3>> triple_names;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "rms")
        throw std::invalid_argument("model structure: expected 'rms <name>'");
      ms.name = toks[1];
      header_seen = true;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "points:") { section = Section::Points; continue; }
    if (toks.size() == 1 && toks[0] == "star:") { section = Section::Star; continue; }
    if (toks.size() == 1 && toks[0] == "zero:") { section = Section::Zero; continue; }
    if (toks.size() == 1 && toks[0] == "triples:") { section = Section::Triples; continue; }
    switch (section) {
      case Section::Points:
        if (toks.size() != 1) throw std::invalid_argument("model structure: bad point line");
        ms.points.push_back(toks[0]);
        break;
      case Section::Star:
        if (toks.size() != 2) throw std::invalid_argument("model structure: bad star line");
        star_pairs.emplace_back(toks[0], toks[1]);
        break;
      case Section::Zero:
        if (toks.size() != 1) throw std::invalid_argument("model structure: bad zero line");
        zero_point = toks[0];
        break;
      case Section::Triples:
        if (toks.size() != 3) throw std::invalid_argument("model structure: bad triple line");
        triple_names.push_back({toks[0], toks[1], toks[2]});
        break;
      default:
        throw std::invalid_argument("model structure: content outside any section");
    }
  }
  auto index = [&](const std::string& p) {
    int i = ms.point_index(p);
    if (i < 0) throw std::invalid_argument("model structure: unknown point '" + p + "'");
    return i;
  };
  ms.star.assign(ms.points.size(), 0);
  if (star_pairs.size() != ms.points.size())
    throw std::invalid_argument("model structure: star must list every point");
  for (const auto& [from, to] : star_pairs) ms.star[index(from)] = index(to);
  if (zero_point.empty()) throw std::invalid_argument("model structure: missing zero");
  ms.zero = index(zero_point);
  for (const auto& t : triple_names)
    ms.triples.push_back({index(t[0]), index(t[1]), index(t[2])});
  return ms;
}

std::vector<bool> clause_arrow(const ModelStructure& ms, const std::vector<bool>& s,
                               const std::vector<bool>& t) {
  const std::size_t n = ms.points.size();
  if (s.size() != n || t.size() != n)
    throw std::invalid_argument("membership vectors must cover every point");
  std::vector<bool> out(n, true);
  for (const auto& triple : ms.triples) {
    auto [y, x, z] = triple;
    if (s[y] && !t[z]) out[x] = false;
  }
  return out;
}

}  // namespace relalg

#include "apd/catalog.hpp"

#include "apd/transform.hpp"

namespace apd {

namespace {

struct RawEntry {
  int index;
  std::vector<i64> images;
  std::vector<Pattern> claims;  // 0 -> 0 prepended on load
};

std::vector<RawEntry> raw_table() {
  return {
      {1, {0, 1, 8, 3, 2, 6, 4, 7, 5}, {{0, 2}, {-1, -2}}},
      {2, {0, 1, 8, 10, 6, 9, 5, 7, 3, 2, 4}, {{0, -2}, {-1, 2}}},
      {3, {0, 2, 5, 3, 15, 12, 1, 14, 10, 8, 11, 13, 4, 7, 6, 9}, {{1, 1}, {-1, -1}}},
      {4, {0, 1, 3, 9, 11, 7, 4, 8, 15, 12, 16, 10, 14, 5, 2, 13, 6}, {{-1, 1}, {1, -1}}},
      {5, {0, 2, 14, 4, 10, 17, 9, 13, 18, 3, 6, 15, 8, 12, 5, 1, 7, 11, 16}, {{1, 1}, {-1, 1}}},
      {6,
       {0, 1, 4, 3, 21, 22, 2, 11, 12, 7, 8, 5, 10, 9, 6, 19, 16, 15, 20, 17, 18, 13, 14},
       {{0, 1}, {1, 0}, {0, -1}, {-1, 0}}},
      {7,
       {0, 2, 5, 1, 3, 9, 13, 20, 10, 15, 23, 4, 21, 17, 24, 7, 22, 18, 12, 16, 19, 8, 14, 6, 11},
       {{1, 1}, {-1, 1}}},
      {8,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 24, 16, 14, 20, 18, 25, 23, 27, 26, 28, 17,
        15, 21, 11, 19, 22},
       {{1, 1}}},
      {9,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 11, 14, 20, 27, 23, 25, 24, 26, 29, 28, 30,
        16, 18, 17, 19, 22, 21, 15},
       {{1, 1}}},
      {10,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 11, 14, 18, 15, 17, 21, 24, 22, 32, 31, 35,
        30, 33, 19, 34, 36, 23, 20, 27, 25, 29, 26, 28, 16},
       {{1, 1}}},
      {11,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 11, 14, 18, 15, 17, 21, 23, 22, 25, 29, 35,
        38, 36, 31, 34, 40, 19, 37, 39, 16, 27, 26, 28, 32, 24, 33, 30, 20},
       {{1, 1}}},
      {12,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 11, 14, 18, 15, 17, 21, 23, 22, 19, 26, 35,
        41, 36, 39, 34, 16, 33, 40, 38, 37, 27, 24, 20, 28, 42, 25, 31, 29, 32, 30},
       {{1, 1}}},
      {13,
       {0, 2, 1, 3, 6, 5, 7, 4, 13, 12, 8, 10, 9, 11, 14, 18, 15, 17, 21, 23, 22, 19, 26, 20,
        31, 16, 29, 39, 41, 44, 37, 43, 24, 45, 38, 28, 46, 25, 33, 27, 34, 30, 40, 42, 36,
        32, 35},
       {{1, 1}}},
      {14, {0, 1, 4, 2, 7, 6, 12, 9, 11, 8, 3, 5, 10}, {{0, 1}}},
      {15,
       {0, 1, 4, 2, 3, 6, 7, 12, 5, 8, 9, 15, 11, 13, 10, 16, 14, 21, 20, 22, 28, 17, 25, 18,
        19, 23, 24, 35, 38, 40, 37, 43, 44, 48, 45, 41, 42, 31, 47, 46, 26, 32, 36, 27, 30,
        29, 39, 34, 33},
       {{0, 1}}},
  };
}

void verify_claims(const Perm& p, const std::vector<Pattern>& claims,
                   const std::string& what) {
  for (const Pattern& pat : claims) {
    Certificate cert = check_pattern(p, pat, 1);
    if (!cert.pass)
      throw std::logic_error(what + " fails claimed pattern " +
                             std::to_string(pat.s) + " -> " + std::to_string(pat.t));
  }
}

std::vector<TableEntry> build_table() {
  std::vector<TableEntry> out;
  for (RawEntry& e : raw_table()) {
    std::vector<Pattern> claims{{0, 0}};
    claims.insert(claims.end(), e.claims.begin(), e.claims.end());
    Perm p = make_perm(e.images);
    verify_claims(p, claims, "table entry " + std::to_string(e.index));
    out.push_back(TableEntry{e.index, std::move(p), std::move(claims)});
  }
  return out;
}

ComponentEntry make_component(int index, Perm p, std::vector<Pattern> claims) {
  verify_claims(p, claims, "component " + std::to_string(index));
  return ComponentEntry{index, std::move(p), std::move(claims)};
}

std::vector<ComponentEntry> build_part_one() {
  const auto& tab = table_entries();
  std::vector<ComponentEntry> out;
  for (int i : {1, 2, 3, 4})
    out.push_back(make_component(i, tab[static_cast<size_t>(i - 1)].perm,
                                 tab[static_cast<size_t>(i - 1)].claimed));
  out.push_back(make_component(5, scale_output(perm_inverse(tab[4].perm), 2),
                               {{0, 0}, {1, 2}, {1, -2}}));
  out.push_back(make_component(6, tab[5].perm, tab[5].claimed));
  return out;
}

std::vector<ComponentEntry> build_part_two() {
  const auto& tab = table_entries();
  auto row = [&](int i) -> const Perm& { return tab[static_cast<size_t>(i - 1)].perm; };
  std::vector<ComponentEntry> out;
  out.push_back(make_component(7, scale_both(row(7), 2, 1), {{0, 0}, {2, 1}, {-2, 1}}));
  out.push_back(make_component(8, scale_both(row(8), 2, 2), {{0, 0}, {2, 2}}));
  out.push_back(make_component(9, scale_both(row(9), 2, -2), {{0, 0}, {2, -2}}));
  out.push_back(make_component(10, scale_both(row(10), -2, 2), {{0, 0}, {-2, 2}}));
  out.push_back(make_component(11, scale_both(row(11), -2, -2), {{0, 0}, {-2, -2}}));
  out.push_back(make_component(12, scale_both(row(12), 2, -1), {{0, 0}, {2, -1}}));
  out.push_back(make_component(13, scale_both(row(13), -2, -1), {{0, 0}, {-2, -1}}));
  out.push_back(make_component(14, perm_inverse(scale_output(row(14), 2)), {{0, 0}, {2, 0}}));
  out.push_back(make_component(15, perm_inverse(scale_output(row(15), -2)), {{0, 0}, {-2, 0}}));
  return out;
}

}  // namespace

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> table = build_table();
  return table;
}

const std::vector<ComponentEntry>& derived_components(Part part) {
  static const std::vector<ComponentEntry> one = build_part_one();
  static const std::vector<ComponentEntry> two = build_part_two();
  return part == Part::one ? one : two;
}

const CompositeConstants& constants() {
  static const CompositeConstants c = [] {
    CompositeConstants pc;
    pc.sqrt_n0 = i64(9) * 11 * 16 * 17 * 19 * 23;
    pc.n0 = bigint(pc.sqrt_n0) * pc.sqrt_n0;
    pc.r = 1;
    for (const TableEntry& e : table_entries()) pc.r *= e.perm.n();
    return pc;
  }();
  return c;
}

}  // namespace apd

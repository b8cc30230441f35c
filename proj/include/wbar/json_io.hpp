#pragma once

// JSON forms of groups, simplicial groups and simplices.
//
//   group             {"label": str, "order": k, "mult": [[int]]}
//   hom               {"image": [int]}            (source/target from context)
//   simplicial group  {"max_level": N, "levels": [group...],
//                      "faces": [[hom...]...],        one row per level 1..N
//                      "degeneracies": [[hom...]...]} one row per level 0..N-1
//   W / Diag simplex  {"dim": n, "entries": [int]}    (descending mathematical index)
//   total simplex     {"dim": n, "components": [[int]]} (x_n first)

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbar/classifying.hpp"
#include "wbar/error.hpp"
#include "wbar/finite_group.hpp"
#include "wbar/simplicial_group.hpp"

namespace wbar {

using json = nlohmann::json;

namespace detail {

template <typename T>
T get_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": field '" + key + "' has the wrong type (" + e.what() +
                     ")");
  }
}

inline std::vector<Element> get_elements(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of elements");
  std::vector<Element> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError(std::string(what) + ": elements must be non-negative integers");
    out.push_back(static_cast<Element>(v.get<long long>()));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Groups

inline json group_to_json(const FiniteGroup& g) {
  json mult = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mult(a, b));
    mult.push_back(std::move(row));
  }
  return {{"label", g.label()}, {"order", g.order()}, {"mult", std::move(mult)}};
}

/// Parses and validates a group; invalid tables throw ValidationError.
inline GroupPtr group_from_json(const json& j) {
  const auto label = j.is_object() && j.contains("label") ? detail::get_field<std::string>(j, "label", "group")
                                                          : std::string("G");
  const auto order = detail::get_field<long long>(j, "order", "group");
  if (order <= 0) throw ValidationError("group '" + label + "': order must be positive");
  if (!j.contains("mult") || !j.at("mult").is_array())
    throw ParseError("group '" + label + "': missing multiplication table");
  const json& rows = j.at("mult");
  if (rows.size() != static_cast<std::size_t>(order))
    throw ValidationError("group '" + label + "': multiplication table has " +
                          std::to_string(rows.size()) + " rows, expected " + std::to_string(order));
  std::vector<Element> mult;
  for (const auto& row : rows) {
    const auto r = detail::get_elements(row, "group multiplication row");
    if (r.size() != static_cast<std::size_t>(order))
      throw ValidationError("group '" + label + "': ragged multiplication table");
    mult.insert(mult.end(), r.begin(), r.end());
  }
  return std::make_shared<const FiniteGroup>(label, static_cast<std::size_t>(order), std::move(mult));
}

inline json hom_to_json(const GroupHom& h) {
  return {{"image", std::vector<Element>(h.image().begin(), h.image().end())}};
}

inline GroupHom hom_from_json(const json& j, const GroupPtr& source, const GroupPtr& target,
                              bool checked = true) {
  if (!j.is_object() || !j.contains("image")) throw ParseError("hom: missing field 'image'");
  auto image = detail::get_elements(j.at("image"), "hom image");
  return checked ? GroupHom(source, target, std::move(image))
                 : GroupHom::unchecked(source, target, std::move(image));
}

// ---------------------------------------------------------------------------
// Simplicial groups

inline json simplicial_group_to_json(const TruncatedSimplicialGroup& g) {
  json levels = json::array();
  json faces = json::array();
  json degeneracies = json::array();
  for (int n = 0; n <= g.max_level(); ++n) levels.push_back(group_to_json(g.level(n)));
  for (int n = 1; n <= g.max_level(); ++n) {
    json row = json::array();
    for (int k = 0; k <= n; ++k) row.push_back(hom_to_json(g.face_hom(n, k)));
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < g.max_level(); ++n) {
    json row = json::array();
    for (int k = 0; k <= n; ++k) row.push_back(hom_to_json(g.degeneracy_hom(n, k)));
    degeneracies.push_back(std::move(row));
  }
  return {{"label", g.label()},
          {"max_level", g.max_level()},
          {"levels", std::move(levels)},
          {"faces", std::move(faces)},
          {"degeneracies", std::move(degeneracies)}};
}

/// Parses a simplicial group. With Validation::full (the default) every
/// structure map and simplicial identity is checked; failures throw
/// ValidationError.
inline TruncatedSimplicialGroup simplicial_group_from_json(const json& j,
                                                           Validation validation = Validation::full,
                                                           std::string label = "file") {
  if (j.contains("label") && j.at("label").is_string()) label = j.at("label").get<std::string>();
  const auto max_level = detail::get_field<long long>(j, "max_level", "simplicial group");
  if (max_level < 0) throw ValidationError("simplicial group: negative max_level");
  const auto n_levels = static_cast<std::size_t>(max_level) + 1;
  if (!j.contains("levels") || !j.at("levels").is_array() || j.at("levels").size() != n_levels)
    throw ParseError("simplicial group: expected " + std::to_string(n_levels) + " levels");
  std::vector<GroupPtr> levels;
  for (const auto& lj : j.at("levels")) levels.push_back(group_from_json(lj));

  const bool checked = validation == Validation::full;
  std::vector<std::vector<GroupHom>> faces(n_levels);
  if (!j.contains("faces") || !j.at("faces").is_array() ||
      j.at("faces").size() != n_levels - 1)
    throw ParseError("simplicial group: expected " + std::to_string(n_levels - 1) +
                     " rows of faces (levels 1.." + std::to_string(max_level) + ")");
  for (std::size_t n = 1; n < n_levels; ++n) {
    const json& row = j.at("faces").at(n - 1);
    if (!row.is_array() || row.size() != n + 1)
      throw ParseError("simplicial group: level " + std::to_string(n) + " needs " +
                       std::to_string(n + 1) + " faces");
    for (const auto& hj : row) faces[n].push_back(hom_from_json(hj, levels[n], levels[n - 1], checked));
  }
  std::vector<std::vector<GroupHom>> degeneracies(n_levels - 1);
  if (!j.contains("degeneracies") || !j.at("degeneracies").is_array() ||
      j.at("degeneracies").size() != n_levels - 1)
    throw ParseError("simplicial group: expected " + std::to_string(n_levels - 1) +
                     " rows of degeneracies (levels 0.." + std::to_string(max_level - 1) + ")");
  for (std::size_t n = 0; n + 1 < n_levels; ++n) {
    const json& row = j.at("degeneracies").at(n);
    if (!row.is_array() || row.size() != n + 1)
      throw ParseError("simplicial group: level " + std::to_string(n) + " needs " +
                       std::to_string(n + 1) + " degeneracies");
    for (const auto& hj : row)
      degeneracies[n].push_back(hom_from_json(hj, levels[n], levels[n + 1], checked));
  }
  return TruncatedSimplicialGroup(std::move(label), std::move(levels), std::move(faces),
                                  std::move(degeneracies), validation);
}

// ---------------------------------------------------------------------------
// Simplices

inline json to_json(const WBarSimplex& w) { return {{"dim", w.dim}, {"entries", w.entries}}; }
inline json to_json(const DiagSimplex& x) { return {{"dim", x.dim}, {"entries", x.entries}}; }

inline json to_json(const TotalSimplex& t) {
  json comps = json::array();
  for (const auto& c : t.components) comps.push_back(c.entries);
  return {{"dim", t.dim}, {"components", std::move(comps)}};
}

inline json to_json(const Delta1Simplex& t) { return {{"dim", t.dim()}, {"tau", t.k()}}; }

namespace detail {

inline std::pair<int, std::vector<Element>> dim_and_entries(const json& j, const char* what) {
  const auto dim = get_field<long long>(j, "dim", what);
  if (dim < 0) throw ParseError(std::string(what) + ": negative dimension");
  if (!j.contains("entries")) throw ParseError(std::string(what) + ": missing field 'entries'");
  auto entries = get_elements(j.at("entries"), what);
  if (entries.size() != static_cast<std::size_t>(dim))
    throw ParseError(std::string(what) + ": dimension " + std::to_string(dim) + " needs " +
                     std::to_string(dim) + " entries, got " + std::to_string(entries.size()));
  return {static_cast<int>(dim), std::move(entries)};
}

}  // namespace detail

/// Parses a W simplex and checks every entry against its level.
inline WBarSimplex wbar_from_json(const json& j, const TruncatedSimplicialGroup& g) {
  auto [dim, entries] = detail::dim_and_entries(j, "W simplex");
  WBarSimplex w{dim, std::move(entries)};
  for (int q = 0; q < dim; ++q)
    if (q > g.max_level() || !g.level(q).contains(w.at(q)))
      throw ParseError("W simplex: entry " + std::to_string(q) + " is not an element of G_" +
                       std::to_string(q));
  return w;
}

/// Parses a Diag simplex and checks every entry lies in G_dim.
inline DiagSimplex diag_from_json(const json& j, const TruncatedSimplicialGroup& g) {
  auto [dim, entries] = detail::dim_and_entries(j, "Diag simplex");
  if (dim > g.max_level())
    throw ParseError("Diag simplex: dimension " + std::to_string(dim) + " exceeds truncation " +
                     std::to_string(g.max_level()));
  for (Element e : entries)
    if (!g.level(dim).contains(e))
      throw ParseError("Diag simplex: entry " + std::to_string(e) + " is not an element of G_" +
                       std::to_string(dim));
  return {dim, std::move(entries)};
}

/// Parses a total simplex; the matching condition must hold.
inline TotalSimplex total_from_json(const json& j, const TruncatedSimplicialGroup& g) {
  const auto dim = detail::get_field<long long>(j, "dim", "total simplex");
  if (dim < 0 || !j.contains("components") || !j.at("components").is_array() ||
      j.at("components").size() != static_cast<std::size_t>(dim) + 1)
    throw ParseError("total simplex: expected dim + 1 components");
  TotalSimplex t{static_cast<int>(dim), {}};
  int q = static_cast<int>(dim);
  for (const auto& cj : j.at("components"))
    t.components.push_back({q--, detail::get_elements(cj, "total simplex component")});
  if (!satisfies_matching(g, t)) throw ParseError("total simplex: matching condition fails");
  return t;
}

}  // namespace wbar

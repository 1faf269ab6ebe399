#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pbzlab/algebra.hpp"
#include "pbzlab/error.hpp"
#include "pbzlab/lattice.hpp"

namespace pbz {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw error(errc::invalid_input, key, "missing field");
  return *it;
}

inline int int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw error(errc::invalid_input, key, "expected an integer");
  return v.get<int>();
}

inline std::vector<element> int_array(const json& v, const char* key) {
  if (!v.is_array()) throw error(errc::invalid_input, key, "expected an array of integers");
  std::vector<element> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw error(errc::invalid_input, key, "expected an array of integers");
    out.push_back(x.get<element>());
  }
  return out;
}

inline bool absent_or_null(const json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() || it->is_null();
}

}  // namespace detail

/// Builds an algebra from an AlgebraFile document:
/// {"n", "bottom", "top", "covers": [[a,b],...], "kleene": [...] | null,
///  "brouwer": [...] | "trivial" | null, "labels": [...] | null}.
/// Validation errors are the construction errors themselves.
inline finite_algebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw error(errc::invalid_input, "document", "expected a JSON object");
  const int n = detail::int_field(doc, "n");
  const element bottom = detail::int_field(doc, "bottom");
  const element top = detail::int_field(doc, "top");
  const json& cv = detail::field(doc, "covers");
  if (!cv.is_array()) throw error(errc::invalid_input, "covers", "expected an array of pairs");
  std::vector<cover_pair> covers;
  for (const auto& p : cv) {
    auto pair = detail::int_array(p, "covers");
    if (pair.size() != 2) throw error(errc::invalid_input, "covers", "each cover is a pair [a, b]");
    covers.emplace_back(pair[0], pair[1]);
  }
  std::vector<std::string> labels;
  if (!detail::absent_or_null(doc, "labels")) {
    const json& lv = doc.at("labels");
    if (!lv.is_array()) throw error(errc::invalid_input, "labels", "expected an array of strings");
    for (const auto& s : lv) {
      if (!s.is_string()) throw error(errc::invalid_input, "labels", "expected an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  auto L = bounded_lattice::from_covers(n, bottom, top, covers, std::move(labels));
  const bool has_brouwer = !detail::absent_or_null(doc, "brouwer");
  if (detail::absent_or_null(doc, "kleene")) {
    if (has_brouwer) throw error(errc::missing_operation, "kleene", "a Brouwer complement needs a Kleene complement");
    return finite_algebra(std::move(L));
  }
  auto A = attach_involution(std::move(L), detail::int_array(doc.at("kleene"), "kleene"));
  if (!has_brouwer) return A;
  const json& bv = doc.at("brouwer");
  if (bv.is_string()) {
    if (bv.get<std::string>() != "trivial") throw error(errc::invalid_input, "brouwer", "expected an array or \"trivial\"");
    return attach_brouwer(A, trivial_brouwer);
  }
  return attach_brouwer(A, detail::int_array(bv, "brouwer"));
}

inline json algebra_to_json(const finite_algebra& A) {
  json doc;
  doc["n"] = A.size();
  doc["bottom"] = A.bottom();
  doc["top"] = A.top();
  json covers = json::array();
  for (auto [a, b] : A.lattice().covers()) covers.push_back({a, b});
  doc["covers"] = covers;
  doc["kleene"] = A.has_kleene() ? json(std::vector<element>(A.kleene_table().begin(), A.kleene_table().end())) : json();
  doc["brouwer"] = A.has_brouwer() ? json(std::vector<element>(A.brouwer_table().begin(), A.brouwer_table().end())) : json();
  doc["labels"] = A.lattice().has_labels() ? json(A.lattice().labels()) : json();
  return doc;
}

/// Throws InvalidInput for unreadable files or malformed JSON.
inline finite_algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw error(errc::invalid_input, path, e.what());
  }
  return algebra_from_json(doc);
}

inline void save_algebra_file(const finite_algebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error(errc::invalid_input, path, "cannot write file");
  out << algebra_to_json(A).dump(2) << "\n";
}

// ----------------------------------------------------------------- reports

inline json labels_json(const finite_algebra& A, const element_set& xs) {
  json out = json::array();
  for (element x : xs) out.push_back(A.label(x));
  return out;
}

inline json to_json(const classification_report& r) {
  auto tri = [](const std::optional<bool>& b) { return b ? json(*b) : json(); };
  return json{{"pseudo_kleene", tri(r.pseudo_kleene)},
              {"ortholattice", tri(r.ortholattice)},
              {"orthomodular", tri(r.orthomodular)},
              {"paraorthomodular", tri(r.paraorthomodular)},
              {"star", tri(r.star)},
              {"bz", tri(r.bz)},
              {"pbz", tri(r.pbz)},
              {"antiortholattice", tri(r.antiortholattice)},
              {"sdm", tri(r.sdm)},
              {"sk", tri(r.sk)},
              {"j0", tri(r.j0)},
              {"distributive", r.distributive},
              {"modular", r.modular},
              {"boolean_algebra", tri(r.boolean_algebra)},
              {"zero_meet_irreducible", r.zero_meet_irreducible},
              {"sandwich_shape", r.sandwich_shape}};
}

/// The `check` report: flags plus S, D, T, length(T) and the complemented
/// elements, by label.
inline json check_report(const finite_algebra& A) {
  json out;
  out["size"] = A.size();
  out["flavor"] = std::string(to_string(A.kind()));
  out["classification"] = to_json(classify(A));
  out["complemented"] = labels_json(A, complemented_elements(A.lattice()));
  out["sharp"] = A.has_kleene() ? labels_json(A, sharp_elements(A)) : json();
  if (A.has_brouwer()) {
    auto dt = dense_and_t(A);
    out["dense"] = labels_json(A, dt.dense);
    out["t"] = labels_json(A, dt.t);
    out["length_t"] = length_of(A.lattice(), dt.t);
  } else {
    out["dense"] = json();
    out["t"] = json();
    out["length_t"] = json();
  }
  return out;
}

inline std::string check_report_text(const finite_algebra& A) {
  json r = check_report(A);
  std::ostringstream os;
  auto show = [](const json& v) -> std::string {
    if (v.is_null()) return "n/a";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get<std::string>();
      return s + "}";
    }
    return v.dump();
  };
  os << "size=" << r["size"].get<int>() << " flavor=" << r["flavor"].get<std::string>() << "\n";
  for (const auto& [k, v] : r["classification"].items()) os << k << "=" << show(v) << "\n";
  for (const char* k : {"sharp", "dense", "t", "length_t", "complemented"}) os << k << "=" << show(r[k]) << "\n";
  return os.str();
}

}  // namespace pbz

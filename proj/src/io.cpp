#include "pkarr/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "pkarr/errors.hpp"

namespace pkarr {

namespace {

Json index_list(const IndexSet& s) {
  Json j = Json::array();
  for (int i : s) j.push_back(i);
  return j;
}

std::string index_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

ArrangementFile parse_arrangement(const Json& j) {
  if (!j.is_object()) throw InputError("arrangement file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw InputError("arrangement file needs an integer \"dim\"");
  }
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array()) {
    throw InputError("arrangement file needs a \"hyperplanes\" array");
  }
  const auto dim = j["dim"].get<std::int64_t>();
  if (dim < 1 || dim > 64) throw InputError("\"dim\" out of range");

  std::vector<std::pair<Hyperplane, std::size_t>> tagged;
  const auto& hs = j["hyperplanes"];
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!hs[i].is_array()) throw InputError("hyperplane " + std::to_string(i) + " is not an array");
    std::vector<std::int64_t> normal;
    for (const auto& x : hs[i]) {
      if (!x.is_number_integer()) {
        throw InputError("hyperplane " + std::to_string(i) + " has a non-integer entry");
      }
      normal.push_back(x.get<std::int64_t>());
    }
    if (static_cast<std::int64_t>(normal.size()) != dim + 1) {
      throw InputError("hyperplane " + std::to_string(i) + " has " + std::to_string(normal.size()) +
                       " entries, expected " + std::to_string(dim + 1));
    }
    tagged.emplace_back(Hyperplane(std::move(normal)), i);
  }

  std::optional<std::vector<Rational>> raw;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw InputError("\"weights\" must be an array");
    raw.emplace();
    for (const auto& w : j["weights"]) {
      if (w.is_string()) {
        raw->push_back(parse_rational(w.get<std::string>()));
      } else if (w.is_number_integer()) {
        raw->push_back(Rational(static_cast<long>(w.get<std::int64_t>())));
      } else {
        throw InputError("weights must be \"p/q\" strings");
      }
    }
    if (raw->size() != tagged.size()) {
      throw InputError("got " + std::to_string(raw->size()) + " weights for " +
                       std::to_string(tagged.size()) + " hyperplanes");
    }
  }

  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Hyperplane> sorted;
  std::optional<std::vector<Rational>> weights;
  if (raw) weights.emplace();
  for (auto& [h, i] : tagged) {
    sorted.push_back(h);
    if (raw) weights->push_back((*raw)[i]);
  }
  return {Arrangement(static_cast<int>(dim), std::move(sorted)), std::move(weights)};
}

ArrangementFile load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_arrangement(j);
}

Json to_json(const Arrangement& arr, const std::vector<Rational>* weights) {
  Json j;
  j["dim"] = arr.dim();
  j["hyperplanes"] = Json::array();
  for (const auto& h : arr.hyperplanes()) j["hyperplanes"].push_back(h.normal());
  if (weights) {
    j["weights"] = Json::array();
    for (const auto& w : *weights) j["weights"].push_back(to_string(w));
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dump_arrangement(const Arrangement& arr, const std::vector<Rational>* weights) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << arr.dim() << ",\n  \"hyperplanes\": [\n";
  for (int h = 0; h < arr.size(); ++h) {
    out << "    " << Json(arr.hyperplanes()[static_cast<std::size_t>(h)].normal()).dump(-1, ' ')
        << (h + 1 < arr.size() ? ",\n" : "\n");
  }
  out << "  ]";
  if (weights) {
    out << ",\n  \"weights\": [";
    for (std::size_t i = 0; i < weights->size(); ++i) {
      out << (i ? ", " : "") << Json(to_string((*weights)[i])).dump();
    }
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

Json to_json(const CheckReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["cy"] = {{"pass", r.cy.pass}, {"sum", to_string(r.cy.sum)}, {"target", to_string(r.cy.target)}};
  Json violations = Json::array();
  for (const auto& v : r.klt.violations) {
    violations.push_back({{"closure", index_list(v.subspace.closure)},
                          {"rank", v.rank},
                          {"sum", to_string(v.sum)}});
  }
  j["klt"] = {{"pass", r.klt.pass}, {"checked", r.klt.checked}, {"violations", violations}};
  Json values = Json::array();
  for (const auto& q : r.quadratic.values) {
    values.push_back({{"closure", index_list(q.subspace.closure)},
                      {"rank", q.subspace.rank},
                      {"empty", q.empty_subspace},
                      {"q", to_string(q.value)}});
  }
  j["quadratic"] = {{"pass", r.quadratic.pass}, {"values", values}};
  j["meta"] = {{"dim", r.meta.dim},
               {"hyperplanes", r.meta.hyperplanes},
               {"essential", r.meta.essential},
               {"irreducible", r.meta.irreducible},
               {"flats_per_rank", r.meta.flats_per_rank},
               {"irreducible_per_rank", r.meta.irreducible_per_rank}};
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << "arrangement: " << r.meta.hyperplanes << " hyperplanes in CP^" << r.meta.dim
      << (r.meta.essential ? ", essential" : ", not essential")
      << (r.meta.irreducible ? ", irreducible" : ", reducible") << "\n";
  out << "(i)   CY        " << (r.cy.pass ? "pass" : "FAIL") << "  sum a_H = " << to_string(r.cy.sum)
      << " (need " << to_string(r.cy.target) << ")\n";
  out << "(ii)  klt       " << (r.klt.pass ? "pass" : "FAIL") << "  " << r.klt.checked
      << " flats scanned, " << r.klt.violations.size() << " violations\n";
  for (const auto& v : r.klt.violations) {
    out << "        rank " << v.rank << "  " << std::left << std::setw(24)
        << index_text(v.subspace.closure) << " sum " << to_string(v.sum) << " >= " << v.rank << "\n";
  }
  out << "(iii) quadratic " << (r.quadratic.pass ? "pass" : "FAIL") << "  "
      << r.quadratic.values.size() << " irreducible flats of rank >= 3\n";
  for (const auto& q : r.quadratic.values) {
    out << "        rank " << q.subspace.rank << "  " << std::left << std::setw(24)
        << (q.empty_subspace ? std::string("(empty)") : index_text(q.subspace.closure)) << " Q = "
        << to_string(q.value) << "\n";
  }
  out << "verdict: " << (r.verdict ? "PK metric exists" : "no PK metric") << "\n";
  return out.str();
}

namespace {

struct BasisCounts {
  bool defined = false;
  std::string reason;
  int g = 0;
  int delta1 = 0;
  int delta2 = 0;
};

BasisCounts basis_counts(const IntersectionLattice& lat) {
  BasisCounts c;
  try {
    const WonderfulModel model(lat);
    c.defined = true;
    c.g = model.g_size();
    c.delta1 = static_cast<int>(model.delta1().size());
    c.delta2 = static_cast<int>(model.delta2().size());
  } catch (const InputError& e) {
    c.reason = e.what();
    for (int i = 0; i < lat.size(); ++i) c.g += lat.irreducible(i) ? 1 : 0;
  }
  return c;
}

}  // namespace

Json lattice_json(const IntersectionLattice& lat) {
  Json j;
  const ReportMeta meta = describe(lat);
  j["dim"] = meta.dim;
  j["hyperplanes"] = meta.hyperplanes;
  j["essential"] = meta.essential;
  j["irreducible"] = meta.irreducible;
  Json flats = Json::array();
  for (int i = 0; i < lat.size(); ++i) {
    const Flat& f = lat.flat(i);
    Json e = {{"rank", f.rank},
              {"closure", index_list(f.closure)},
              {"irreducible", lat.irreducible(i)},
              {"empty", lat.empty_flat() == i}};
    if (f.rank == 2) e["multiplicity"] = lat.multiplicity(i);
    flats.push_back(e);
  }
  j["flats"] = flats;
  j["flats_per_rank"] = meta.flats_per_rank;
  j["irreducible_per_rank"] = meta.irreducible_per_rank;
  const BasisCounts c = basis_counts(lat);
  j["G"] = c.g;
  if (c.defined) {
    j["delta1"] = c.delta1;
    j["delta2"] = c.delta2;
  } else {
    j["delta1"] = nullptr;
    j["delta2"] = nullptr;
    j["cohomology_unavailable"] = c.reason;
  }
  return j;
}

std::string lattice_text(const IntersectionLattice& lat) {
  std::ostringstream out;
  const ReportMeta meta = describe(lat);
  out << meta.hyperplanes << " hyperplanes in CP^" << meta.dim << "\n"
      << (meta.essential ? "essential" : "not essential") << ", "
      << (meta.irreducible ? "irreducible" : "reducible") << "\n";
  for (int r = 1; r <= lat.dim() + 1; ++r) {
    const auto ids = lat.flats_of_rank(r);
    if (ids.empty()) continue;
    out << "rank " << r << ": " << ids.size() << " flats, "
        << meta.irreducible_per_rank[static_cast<std::size_t>(r)] << " irreducible\n";
    for (int i : ids) {
      out << "  " << std::left << std::setw(28)
          << (lat.empty_flat() == i ? std::string("(empty)") : index_text(lat.flat(i).closure));
      if (r == 2) out << " m=" << lat.multiplicity(i);
      out << (lat.irreducible(i) ? "  irreducible" : "  reducible") << "\n";
    }
  }
  const BasisCounts c = basis_counts(lat);
  out << "|G| = " << c.g << "\n";
  if (c.defined) {
    out << "|Delta1| = " << c.delta1 << "\n|Delta2| = " << c.delta2 << "\n";
  } else {
    out << "cohomology unavailable: " << c.reason << "\n";
  }
  return out.str();
}

Json to_json(const WonderfulModel& model, const H4Class& c) {
  Json j = Json::array();
  for (const auto& [k, v] : c.coords()) j.push_back({model.key_name(k), to_string(v)});
  return j;
}

Json to_json(const WonderfulModel& model, const H2Class& c) {
  Json gamma = Json::array();
  for (const auto& [g, v] : c.gamma.coords()) gamma.push_back({model.generator_name(g), to_string(v)});
  return {{"pullback_h", to_string(c.pullback_h)}, {"gamma", gamma}};
}

Json to_json(const CoeffReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.entries) {
    rows.push_back({{"key", e.name},
                    {"computed", to_string(e.computed)},
                    {"closed_form", to_string(e.closed_form)},
                    {"compared", e.compared},
                    {"equal", e.equal}});
  }
  return {{"all_equal", r.all_equal()}, {"mismatches", r.mismatches()}, {"coordinates", rows}};
}

std::string to_text(const CoeffReport& r, const std::string& title) {
  std::ostringstream out;
  out << title << ": " << (r.all_equal() ? "all coordinates agree" : "MISMATCH") << "\n";
  std::size_t width = 8;
  for (const auto& e : r.entries) width = std::max(width, e.name.size());
  for (const auto& e : r.entries) {
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << e.name << std::right
        << std::setw(14) << to_string(e.computed) << std::setw(14) << to_string(e.closed_form)
        << "  " << (!e.compared ? "skipped" : (e.equal ? "equal" : "DIFFERENT")) << "\n";
  }
  return out.str();
}

}  // namespace pkarr

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pkarr/chern.hpp"
#include "pkarr/checker.hpp"
#include "pkarr/oracle.hpp"

namespace pkarr {

using Json = nlohmann::json;

/// {"dim": n, "hyperplanes": [[int, ...], ...], "weights": ["p/q", ...]}
/// with "weights" optional. Normals are canonicalized on load.
struct ArrangementFile {
  Arrangement arrangement;
  std::optional<std::vector<Rational>> weights;
};

/// Throws InputError on schema violations. Weights are re-ordered to follow
/// the canonical hyperplane order.
ArrangementFile parse_arrangement(const Json& j);
ArrangementFile load_arrangement(const std::string& path);

Json to_json(const Arrangement& arr, const std::vector<Rational>* weights = nullptr);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Canonical arrangement file text: one hyperplane per line. Loading and
/// re-serializing this output is byte-identical.
std::string dump_arrangement(const Arrangement& arr, const std::vector<Rational>* weights = nullptr);

Json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

/// Lattice summary: flats by rank, multiplicities, irreducibility, and the
/// basis counts of the wonderful model when it is defined.
Json lattice_json(const IntersectionLattice& lat);
std::string lattice_text(const IntersectionLattice& lat);

/// [[key, "p/q"], ...] in basis order.
Json to_json(const WonderfulModel& model, const H4Class& c);
Json to_json(const WonderfulModel& model, const H2Class& c);
Json to_json(const CoeffReport& r);
std::string to_text(const CoeffReport& r, const std::string& title);

}  // namespace pkarr

#pragma once

// JSON schemas for curve, graph and place-list documents. Every number is
// carried as a string: "n/d" or "n" for rationals, "inf" for the point at
// infinity, plain decimals for reals.

#include "hyperinv/errors.hpp"
#include "hyperinv/invariants.hpp"
#include "hyperinv/metgraph.hpp"
#include "hyperinv/symroots.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperinv {

using Json = nlohmann::ordered_json;

/// Validation failure located at a JSON path such as "/roots/3".
class InputError : public ValidationError {
public:
  InputError(std::string path, const std::string& detail)
      : ValidationError(detail), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct CurveDocument {
  RootConfig config;
  std::optional<long> prime;
};

Json read_json_file(const std::string& path);

CurveDocument parse_curve(const Json& doc);
MetrizedGraph parse_graph(const Json& doc);
std::vector<PlaceReport> parse_places(const Json& doc);

Json to_json(const RootConfig& cfg);
Json to_json(const MetrizedGraph& g);
Json to_json(const PlaceReport& p);

/// Decimal rendering of a real, 15 significant digits.
std::string decimal(double x);
/// Parses a decimal string, or a rational "n/d".
double parse_real(const std::string& text);

}  // namespace hyperinv

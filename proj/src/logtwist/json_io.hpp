#pragma once

// JSON input and output for graphs, structures, monoids and fixtures.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "logtwist/diffdata.hpp"
#include "logtwist/hyper.hpp"
#include "logtwist/minmonoid.hpp"
#include "logtwist/spin.hpp"

namespace logtwist {

using Json = nlohmann::ordered_json;

/// Malformed input; `pointer` is a JSON pointer to the offending field.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::invalid_argument(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct Fixture {
  StableGraph graph;
  Signature signature;
  std::optional<TwistedStructure> structure;
  std::optional<std::vector<int>> signs;
  std::optional<GraphInvolution> involution;
  std::optional<HypSignature> hyp_signature;

  WeightedGraph weighted() const;
};

/// Parses a whole fixture document. Throws InputError.
Fixture parse_fixture(const std::string& text);
Fixture fixture_from_json(const Json& j);

StableGraph graph_from_json(const Json& j, const std::string& at);
TwistedStructure structure_from_json(const Json& j, const std::string& at, const StableGraph& g);
GraphInvolution involution_from_json(const Json& j, const std::string& at, const StableGraph& g);
HypSignature hyp_signature_from_json(const Json& j, const std::string& at);
/// Accepts "+,-,+" style text or a JSON array of +-1.
std::vector<int> parse_signs(const std::string& text);

Json to_json(const IntVector& v);
Json to_json(const StableGraph& g);
Json to_json(const TwistedStructure& t);
Json to_json(const MinimalMonoid& m);
Json to_json(const OrderAssignment& a, const StableGraph& g);
Json to_json(const HypSignature& mu);
Json to_json(const GraphInvolution& iota, const StableGraph& g);

/// Two-space indentation with a trailing newline.
std::string dump(const Json& j);

}  // namespace logtwist

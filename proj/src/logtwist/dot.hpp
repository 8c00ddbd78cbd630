#pragma once

#include <optional>
#include <string>

#include "logtwist/twist.hpp"

namespace logtwist {

/// Graphviz text. Without a structure the graph is undirected; with one,
/// oriented edges point from source to target and every edge is labelled
/// with its contact order.
std::string to_dot(const StableGraph& g, const std::optional<TwistedStructure>& t = std::nullopt);

}  // namespace logtwist

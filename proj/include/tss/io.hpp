#pragma once

#include <optional>
#include <string>

#include "tss/hamming.hpp"
#include "tss/network.hpp"

namespace tss {

/// Text instance format, one record per line, '#' starts a comment:
///   p tss <n> <m>     header, required unless a hamming line is present
///   e <u> <v>         one per edge, 0-based ids, exactly m of them
///   t * <k>           constant threshold for all vertices; must precede overrides
///   t <u> <k>         per-vertex override
///   hamming <n1,...,nt>  replaces header and edges; thresholds default to 2
struct ParsedInstance {
    ThresholdedNetwork net;
    std::optional<HammingSpec> hamming;
};

ParsedInstance parse_network_file(const std::string& text, long long hamming_limit = 100000);

/// Canonical text form: sorted edges, then "t * <k>" with the most common
/// threshold followed by the overrides. parse(serialize(net)).net == net.
std::string serialize_network(const ThresholdedNetwork& net);

}  // namespace tss

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "nevkit/covering.hpp"
#include "nevkit/divided_differences.hpp"
#include "nevkit/interpolator.hpp"
#include "nevkit/majorant.hpp"
#include "nevkit/separation.hpp"
#include "nevkit/sequence.hpp"

namespace nevkit {

using Json = nlohmann::ordered_json;

// Complex numbers and points are {"re": x, "im": y}. Non-finite doubles
// serialize as null.

Json to_json(const Complex& z);
Json to_json(const DiskPoint& p);
Json to_json(const HarmonicMajorant& h);
Json to_json(const LabeledSequence& seq);
Json to_json(const DividedDifferenceStat& stat);
Json to_json(const PartitionResult& result, const LabeledSequence& input);
Json to_json(const Covering& cov);
Json to_json(const CoveringReport& rep);
Json to_json(const Counterexample& ce, std::span<const DiskPoint> points);
Json to_json(const BaseInterpolant& g);
Json to_json(const InterpolantChain& chain);
Json to_json(const StageBoundReport& rep);
Json to_json(const InclusionBound& bound);

Json points_to_json(std::span<const DiskPoint> points);

// Parsers throw InvalidInput with the offending key on malformed input.
Complex complex_from_json(const Json& j);
DiskPoint point_from_json(const Json& j);
std::vector<DiskPoint> points_from_json(const Json& j);
HarmonicMajorant majorant_from_json(const Json& j);
LabeledSequence sequence_from_json(const Json& j);
Covering covering_from_json(const Json& j);
InterpolantChain chain_from_json(const Json& j);
MajorantGrid grid_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nevkit

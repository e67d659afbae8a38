#pragma once

// JSON encodings of models, classes, motive sums, R_B elements, descriptors and
// reports. Parsers are strict: unknown keys and malformed values raise
// ArgumentError (DescriptorError for descriptor invariants).

#include "tits/brauer.hpp"
#include "tits/grothendieck_ring.hpp"
#include "tits/motives.hpp"
#include "tits/sigma.hpp"
#include "tits/varieties.hpp"

#include <json.hpp>

namespace tits {

using Json = nlohmann::json;

ModelPtr model_from_json(const Json& j);
Json to_json(const BrauerGroupModel& m);

/// Class spec inside a known model: {"coords":[..]}, {"invariants":[..]} or {"quaternion":["a","b"]}.
BrauerClass class_from_json(const ModelPtr& model, const Json& j);
/// {"coords":[..]} or {"invariants":[..]}.
Json class_to_json(const BrauerClass& c);

/// Self-contained class: {"group":{..}, "coords"/"invariants"/"quaternion": ..}.
BrauerClass standalone_class_from_json(const Json& j);

MotiveSum motive_from_json(const Json& j);
Json to_json(const MotiveSum& x);

RBElement rb_from_json(const Json& j);
Json to_json(const RBElement& x);

VarietyDescriptor descriptor_from_json(const Json& j);
Json to_json(const VarietyDescriptor& v);

Json to_json(const MeasureReport& r);
Json to_json(const ComparisonVerdict& v);
Json to_json(const DeductionReport& r);

/// Integers that fit in int64 become JSON numbers, anything else an exact string.
Json rational_to_json(const BigRational& q);

}  // namespace tits

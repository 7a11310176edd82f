// Copyright 2026 The pomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POMLAB_SERIALIZATION_H_
#define POMLAB_SERIALIZATION_H_

#include <cstdint>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <string_view>

#include "pomlab/classical.h"
#include "pomlab/experiment.h"
#include "pomlab/hvmodel.h"
#include "pomlab/protocol.h"

namespace pomlab {

// Rounds to 12 significant digits so serialized numbers are short and stable.
double JsonNumber(double v);

// {n, preparations: [{x, bloch: [rx, ry, rz]}], measurements: [{y, axis: [...]}]}
nlohmann::json ProtocolToJson(const QuantumProtocol& p);
// Throws parse-error on schema violations, or the validation error of the
// offending state or measurement.
QuantumProtocol ProtocolFromJson(const nlohmann::json& j);

// {n, alphabet, rows: [{x, probs: [...]}]}
nlohmann::json EncodingToJson(const ClassicalEncoding& e);
ClassicalEncoding EncodingFromJson(const nlohmann::json& j);

// {n, lambdas, prep: [[...]], resp: [[...]]}
nlohmann::json ModelToJson(const HiddenVariableModel& h);
HiddenVariableModel ModelFromJson(const nlohmann::json& j);

// {value, std_error, method, seed}
nlohmann::json EstimateToJson(const EstimateWithError& e, std::string_view method,
                              std::uint64_t seed);

// Header "x,y,n0,n1"; x rendered as "x1...xn".
void WriteCountCsv(const CountRecord& c, std::ostream& out);
CountRecord ReadCountCsv(std::istream& in);

// Header "x,axis,n0,n1"; axis is one of x, y, z.
void WriteTomographyCsv(const TomographyRecord& t, std::ostream& out);
TomographyRecord ReadTomographyCsv(std::istream& in);

}  // namespace pomlab

#endif  // POMLAB_SERIALIZATION_H_

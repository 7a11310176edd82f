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

#include "pomlab/serialization.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "pomlab/error.h"

namespace pomlab {
namespace {

using nlohmann::json;

template <typename Fn>
auto Parsing(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

json Vec3(const BlochVector& v) {
  return json::array({JsonNumber(v.x), JsonNumber(v.y), JsonNumber(v.z)});
}

BlochVector ReadVec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::kParseError, "expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  return out;
}

std::uint64_t ParseCount(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParseError, "bad count '" + s + "'");
  }
  return std::stoull(s);
}

// Reads data rows after checking the header; each row must have 4 fields.
template <typename RowFn>
void ReadCsv(std::istream& in, const char* header, RowFn&& row) {
  std::string line;
  if (!std::getline(in, line) || SplitCsvLine(line) != SplitCsvLine(header)) {
    throw Error(ErrorCode::kParseError, std::string("expected CSV header '") + header + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = SplitCsvLine(line);
    if (fields.size() != 4) throw Error(ErrorCode::kParseError, "expected 4 fields: " + line);
    row(fields);
  }
}

}  // namespace

double JsonNumber(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

json ProtocolToJson(const QuantumProtocol& p) {
  p.Validate();
  json preparations = json::array();
  for (std::uint32_t x = 0; x < p.preparations.size(); ++x) {
    preparations.push_back({{"x", RenderBits(p.n, x)}, {"bloch", Vec3(DensityToBloch(p.preparations[x]))}});
  }
  json measurements = json::array();
  for (int y = 1; y <= p.n; ++y) {
    const BinaryMeasurement& m = p.measurement(y);
    if (std::abs(m.effect0().Trace().real() - 1.0) > kQubitTolerance) {
      throw Error(ErrorCode::kMalformedProtocol,
                  "measurement " + std::to_string(y) + " is not of the form (I + a.sigma)/2");
    }
    measurements.push_back({{"y", y}, {"axis", Vec3(m.Axis())}});
  }
  return {{"n", p.n}, {"preparations", preparations}, {"measurements", measurements}};
}

QuantumProtocol ProtocolFromJson(const json& j) {
  return Parsing("protocol", [&] {
    QuantumProtocol p;
    p.n = j.at("n").get<int>();
    CheckBitCount(p.n);
    std::vector<bool> seen_x(StringCount(p.n), false);
    p.preparations.resize(StringCount(p.n));
    for (const json& item : j.at("preparations")) {
      const BitString x = BitString::Parse(item.at("x").get<std::string>());
      if (x.size() != p.n) throw Error(ErrorCode::kParseError, "bit string length differs from n");
      if (seen_x[x.index()]) throw Error(ErrorCode::kParseError, "duplicate preparation " + x.ToString());
      seen_x[x.index()] = true;
      p.preparations[x.index()] = BlochToDensity(ReadVec3(item.at("bloch")));
    }
    std::vector<bool> seen_y(static_cast<std::size_t>(p.n), false);
    p.measurements.resize(static_cast<std::size_t>(p.n));
    for (const json& item : j.at("measurements")) {
      const int y = item.at("y").get<int>();
      if (y < 1 || y > p.n) throw Error(ErrorCode::kParseError, "measurement index out of range");
      if (seen_y[static_cast<std::size_t>(y - 1)]) throw Error(ErrorCode::kParseError, "duplicate measurement");
      seen_y[static_cast<std::size_t>(y - 1)] = true;
      p.measurements[static_cast<std::size_t>(y - 1)] =
          BinaryMeasurement::AlongAxis(ReadVec3(item.at("axis")));
    }
    for (bool b : seen_x) {
      if (!b) throw Error(ErrorCode::kMalformedProtocol, "preparation table incomplete");
    }
    for (bool b : seen_y) {
      if (!b) throw Error(ErrorCode::kMalformedProtocol, "measurement table incomplete");
    }
    return p;
  });
}

json EncodingToJson(const ClassicalEncoding& e) {
  json rows = json::array();
  for (std::uint32_t x = 0; x < e.rows(); ++x) {
    json probs = json::array();
    for (int m = 0; m < e.alphabet(); ++m) probs.push_back(JsonNumber(e(x, m)));
    rows.push_back({{"x", RenderBits(e.n(), x)}, {"probs", probs}});
  }
  return {{"n", e.n()}, {"alphabet", e.alphabet()}, {"rows", rows}};
}

ClassicalEncoding EncodingFromJson(const json& j) {
  return Parsing("encoding", [&] {
    const int n = j.at("n").get<int>();
    const int alphabet = j.at("alphabet").get<int>();
    CheckBitCount(n);
    if (alphabet < 1) throw Error(ErrorCode::kParseError, "alphabet must be positive");
    const auto m_count = static_cast<std::size_t>(alphabet);
    std::vector<double> table(StringCount(n) * m_count, 0.0);
    std::vector<bool> seen(StringCount(n), false);
    for (const json& row : j.at("rows")) {
      const BitString x = BitString::Parse(row.at("x").get<std::string>());
      if (x.size() != n || seen[x.index()]) throw Error(ErrorCode::kParseError, "bad or duplicate row x");
      seen[x.index()] = true;
      const auto probs = row.at("probs").get<std::vector<double>>();
      if (probs.size() != m_count) throw Error(ErrorCode::kParseError, "row has the wrong alphabet size");
      std::copy(probs.begin(), probs.end(), table.begin() + static_cast<std::ptrdiff_t>(x.index() * m_count));
    }
    for (bool b : seen) {
      if (!b) throw Error(ErrorCode::kInvalidEncoding, "encoding rows incomplete");
    }
    return ClassicalEncoding(n, alphabet, std::move(table));
  });
}

json ModelToJson(const HiddenVariableModel& h) {
  json prep = json::array();
  for (std::uint32_t x = 0; x < StringCount(h.n()); ++x) {
    json row = json::array();
    for (int l = 0; l < h.lambdas(); ++l) row.push_back(JsonNumber(h.prep(x, l)));
    prep.push_back(row);
  }
  json resp = json::array();
  for (int l = 0; l < h.lambdas(); ++l) {
    json row = json::array();
    for (int y = 1; y <= h.n(); ++y) row.push_back(JsonNumber(h.resp(l, y)));
    resp.push_back(row);
  }
  return {{"n", h.n()}, {"lambdas", h.lambdas()}, {"prep", prep}, {"resp", resp}};
}

HiddenVariableModel ModelFromJson(const json& j) {
  return Parsing("model", [&] {
    const int n = j.at("n").get<int>();
    const int lambdas = j.at("lambdas").get<int>();
    CheckBitCount(n);
    std::vector<double> prep;
    for (const json& row : j.at("prep")) {
      const auto v = row.get<std::vector<double>>();
      if (v.size() != static_cast<std::size_t>(lambdas)) throw Error(ErrorCode::kParseError, "prep row length");
      prep.insert(prep.end(), v.begin(), v.end());
    }
    std::vector<double> resp;
    for (const json& row : j.at("resp")) {
      const auto v = row.get<std::vector<double>>();
      if (v.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kParseError, "resp row length");
      resp.insert(resp.end(), v.begin(), v.end());
    }
    return HiddenVariableModel(n, lambdas, std::move(prep), std::move(resp));
  });
}

json EstimateToJson(const EstimateWithError& e, std::string_view method, std::uint64_t seed) {
  return {{"value", JsonNumber(e.value)},
          {"std_error", JsonNumber(e.std_error)},
          {"method", std::string(method)},
          {"seed", seed}};
}

void WriteCountCsv(const CountRecord& c, std::ostream& out) {
  out << "x,y,n0,n1\n";
  for (const SettingCounts& s : c.settings) {
    out << RenderBits(c.n, s.x) << ',' << s.y << ',' << s.n0 << ',' << s.n1 << '\n';
  }
}

CountRecord ReadCountCsv(std::istream& in) {
  CountRecord c;
  ReadCsv(in, "x,y,n0,n1", [&](const std::vector<std::string>& f) {
    const BitString x = BitString::Parse(f[0]);
    if (c.n == 0) c.n = x.size();
    if (x.size() != c.n) throw Error(ErrorCode::kParseError, "inconsistent bit-string lengths");
    const auto y = static_cast<int>(ParseCount(f[1]));
    c.settings.push_back({x.index(), y, ParseCount(f[2]), ParseCount(f[3])});
  });
  return c;
}

void WriteTomographyCsv(const TomographyRecord& t, std::ostream& out) {
  out << "x,axis,n0,n1\n";
  for (const auto& e : t.entries) {
    out << RenderBits(t.n, e.x) << ',' << "xyz"[e.axis] << ',' << e.n0 << ',' << e.n1 << '\n';
  }
}

TomographyRecord ReadTomographyCsv(std::istream& in) {
  TomographyRecord t;
  ReadCsv(in, "x,axis,n0,n1", [&](const std::vector<std::string>& f) {
    const BitString x = BitString::Parse(f[0]);
    if (t.n == 0) t.n = x.size();
    if (x.size() != t.n) throw Error(ErrorCode::kParseError, "inconsistent bit-string lengths");
    if (f[1].size() != 1 || std::string_view("xyz").find(f[1][0]) == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "axis must be x, y or z");
    }
    const int axis = static_cast<int>(std::string_view("xyz").find(f[1][0]));
    t.entries.push_back({x.index(), axis, ParseCount(f[2]), ParseCount(f[3])});
  });
  return t;
}

}  // namespace pomlab

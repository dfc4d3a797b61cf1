// Copyright 2026 The alphaconc Authors
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

#include "alphaconc/state_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "alphaconc/errors.hpp"

namespace alphaconc {
namespace {

using nlohmann::json;

Complex read_entry(const json& entry, std::size_t position) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw SchemaError("data[" + std::to_string(position) + "] must be a [re, im] pair of numbers");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

int read_dim(const json& value) {
  if (!value.is_number_integer()) {
    throw SchemaError("dims entries must be integers");
  }
  const auto d = value.get<long long>();
  if (d < 1 || d > 4096) {
    throw SchemaError("dims entries must lie in [1, 4096]");
  }
  return static_cast<int>(d);
}

void append_entry(std::string& out, Complex z) {
  out += '[';
  out += format_double17(z.real());
  out += ", ";
  out += format_double17(z.imag());
  out += ']';
}

}  // namespace

std::string format_double17(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

State parse_state(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SchemaError("state file must hold a JSON object");
  }
  for (const char* key : {"kind", "dims", "data"}) {
    if (!doc.contains(key)) {
      throw SchemaError(std::string("missing key \"") + key + "\"");
    }
  }
  const json& kind = doc["kind"];
  if (!kind.is_string() || (kind != "pure" && kind != "mixed")) {
    throw SchemaError("\"kind\" must be \"pure\" or \"mixed\"");
  }
  const json& dims_json = doc["dims"];
  if (!dims_json.is_array() || dims_json.size() != 2) {
    throw SchemaError("\"dims\" must be [dimA, dimB]");
  }
  const Dims dims{read_dim(dims_json[0]), read_dim(dims_json[1])};
  const json& data = doc["data"];
  if (!data.is_array()) {
    throw SchemaError("\"data\" must be an array");
  }
  const auto n = static_cast<std::size_t>(dims.total());
  const bool pure = kind == "pure";
  const std::size_t expected = pure ? n : n * n;
  if (data.size() != expected) {
    throw SchemaError("\"data\" holds " + std::to_string(data.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  std::vector<Complex> entries;
  entries.reserve(expected);
  for (std::size_t k = 0; k < expected; ++k) {
    entries.push_back(read_entry(data[k], k));
  }
  if (pure) {
    ComplexVector amps = Eigen::Map<const ComplexVector>(entries.data(), static_cast<Eigen::Index>(n));
    return PureState(dims, std::move(amps));
  }
  return DensityMatrix(dims, from_row_major(dims.total(), dims.total(), entries));
}

State load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

std::string format_state(const State& state) {
  std::string out;
  const bool pure = std::holds_alternative<PureState>(state);
  const Dims dims = pure ? std::get<PureState>(state).dims() : std::get<DensityMatrix>(state).dims();
  out += "{\n  \"kind\": \"";
  out += pure ? "pure" : "mixed";
  out += "\",\n  \"dims\": [" + std::to_string(dims.a) + ", " + std::to_string(dims.b) + "],\n  \"data\": [";
  bool first = true;
  auto emit = [&](Complex z) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    append_entry(out, z);
  };
  if (pure) {
    const ComplexVector& amps = std::get<PureState>(state).amplitudes();
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
      emit(amps[k]);
    }
  } else {
    const ComplexMatrix& m = std::get<DensityMatrix>(state).matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        emit(m(r, c));
      }
    }
  }
  out += "\n  ]\n}\n";
  return out;
}

void save_state(const State& state, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << format_state(state);
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

}  // namespace alphaconc

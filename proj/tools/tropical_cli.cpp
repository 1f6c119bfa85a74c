// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tropical: command-line front end over the C API.
//
//   tropical type-of     --input FILE --point "x1,...,xd"
//   tropical check       --input FILE
//   tropical subdivision --input FILE [--flips] [--seed N] [--samples N]
//   tropical render      --input FILE --out FILE.svg
//
// The process exit status is the library status code.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "tropical/tropical.h"

namespace {

struct ArrangementDeleter {
  void operator()(trop_arrangement* arr) const { trop_arrangement_free(arr); }
};
using ArrangementPtr = std::unique_ptr<trop_arrangement, ArrangementDeleter>;

struct StringDeleter {
  void operator()(char* s) const { trop_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Flags {
  std::string input;
  std::string format = "json";
  std::string point;
  std::string out;
  bool json = false;
  bool flips = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  int samples = 0;
};

int Fail(trop_status status) {
  std::cerr << "tropical: " << trop_status_name(status);
  const char* detail = trop_last_error();
  if (detail != nullptr && *detail != '\0') std::cerr << ": " << detail;
  std::cerr << "\n";
  return status;
}

int FailIo(const std::string& message) {
  std::cerr << "tropical: i/o error: " << message << "\n";
  return TROP_IO;
}

bool ReadFile(const std::string& path, std::string& data) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

int Load(const Flags& flags, ArrangementPtr& arr) {
  std::string data;
  if (!ReadFile(flags.input, data)) return FailIo("cannot read '" + flags.input + "'");
  trop_arrangement* raw = nullptr;
  const trop_format format =
      flags.format == "text" ? TROP_FORMAT_TEXT : TROP_FORMAT_JSON;
  const trop_status status =
      trop_arrangement_parse(data.data(), data.size(), format, &raw);
  if (status != TROP_OK) return Fail(status);
  arr.reset(raw);
  return TROP_OK;
}

// Prints the report when one was produced, then maps the status to the exit
// code.
int Finish(trop_status status, char* text) {
  OwnedString owned(text);
  if (owned) std::fwrite(owned.get(), 1, std::strlen(owned.get()), stdout);
  if (status == TROP_CONSISTENCY && owned) return status;
  return status == TROP_OK ? 0 : Fail(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of tropical hyperplane arrangements"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "Arrangement file")->required();
    sub->add_option("--format", flags.format, "Input format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", flags.budget, "Candidate-type enumeration cap");
  };

  CLI::App* type_of = app.add_subcommand("type-of", "Type of a point");
  add_common(type_of);
  type_of->add_option("--point", flags.point, "Point as x1,...,xd")->required();
  type_of->add_flag("--json", flags.json, "Emit JSON");

  CLI::App* check = app.add_subcommand("check", "Genericity, axioms, correspondence");
  add_common(check);
  check->add_flag("--json", flags.json, "Emit JSON");

  CLI::App* subdivision = app.add_subcommand("subdivision", "Dual subdivision");
  add_common(subdivision);
  subdivision->add_flag("--json", flags.json, "Emit JSON");
  subdivision->add_flag("--flips", flags.flips, "Refining triangulations and flips");
  subdivision->add_option("--seed", flags.seed, "Perturbation seed");
  subdivision->add_option("--samples", flags.samples, "Random perturbation count")
      ->check(CLI::NonNegativeNumber);

  CLI::App* render = app.add_subcommand("render", "SVG drawing in the tropical plane");
  add_common(render);
  render->add_option("--out", flags.out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : TROP_PARSE;
  }

  ArrangementPtr arr;
  if (int status = Load(flags, arr); status != TROP_OK) return status;

  std::string echo = "tropical";
  for (int k = 1; k < argc; ++k) echo += std::string(" ") + argv[k];
  trop_options options;
  trop_options_init(&options);
  options.json = flags.json ? 1 : 0;
  options.flips = flags.flips ? 1 : 0;
  options.seed = flags.seed;
  if (flags.budget != 0) options.budget = flags.budget;
  options.samples = flags.samples;
  options.command_echo = echo.c_str();

  char* text = nullptr;
  trop_status status;
  if (*type_of) {
    status = trop_report_type_of(arr.get(), flags.point.c_str(), &options, &text);
    return Finish(status, text);
  }
  if (*check) {
    status = trop_report_check(arr.get(), &options, &text);
    return Finish(status, text);
  }
  if (*subdivision) {
    status = trop_report_subdivision(arr.get(), &options, &text);
    return Finish(status, text);
  }

  status = trop_render_svg(arr.get(), &text);
  OwnedString svg(text);
  if (status != TROP_OK) return Fail(status);
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) return FailIo("cannot write '" + flags.out + "'");
  out << svg.get();
  out.close();
  if (!out) return FailIo("failed writing '" + flags.out + "'");
  return 0;
}

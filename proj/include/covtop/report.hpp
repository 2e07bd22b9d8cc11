#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "covtop/abelian.hpp"
#include "covtop/covering.hpp"
#include "covtop/spanier.hpp"
#include "covtop/tower.hpp"
#include "covtop/verdict.hpp"
#include "covtop/wedge.hpp"
#include "covtop/word.hpp"

namespace covtop {

using json = nlohmann::ordered_json;

/// FNV-1a over the input contents, in order, as 16 hex digits.
std::string inputs_digest(std::span<const std::string> contents);

/// "1", "Z", "Z^2 + Z/3", ...
std::string describe(const AbelianInvariants& a);

json to_json(const Verdict& v);
json to_json(const Budget& b, std::uint64_t seed);
json to_json(const Presentation& p);
json to_json(const NormalSubgroupData& d);
json to_json(const Complex& c, const Cover& u);
json to_json(const SpApproximation& sp);
json to_json(const UniversalCovering& u);
json to_json(const T3Report& r);
json to_json(const Classification& c);
json to_json(const CoverabilityReport& r);

/**
 * Document every command emits: command, inputs, inputs_digest, budgets,
 * verdicts, certificates and a command-specific result object.
 */
class Report {
 public:
  Report(std::string command, std::span<const std::string> input_names, std::span<const std::string> input_contents,
         const Budget& budget, std::uint64_t seed);

  void verdict(const std::string& name, const Verdict& v);
  void certificate(const std::string& name, const std::string& text);
  json& result() { return doc_["result"]; }
  const json& document() const { return doc_; }

  std::string render_json() const;
  std::string render_text() const;

 private:
  json doc_;
};

}  // namespace covtop

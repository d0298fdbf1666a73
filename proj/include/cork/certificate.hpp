#pragma once

// Deduction certificates. A certificate embeds its inputs and lists rule
// applications; each side condition is an arithmetic expression stored with
// the bindings it was evaluated under. Validation re-evaluates every
// condition and regenerates the whole document from the embedded inputs.

#include "cork/error.hpp"
#include "cork/fillings.hpp"
#include "cork/kirby.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cork::certificate {

using Json = nlohmann::ordered_json;

/// A deduction stopped at a step whose side condition failed.
class Aborted : public Error {
 public:
  Aborted(std::string step, const std::string& message) : Error(message), step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

struct Inputs {
  std::string diagram;    // Kirby diagram document
  std::string palf;       // PALF document for W with the inflation handle
  std::string inflation;  // inflation document
  int budget = 8;
  std::uint64_t seed = 0;
  std::optional<int> sigma;  // signature of the closed manifold, if known
};

/// Replays the distinctness argument. Throws Aborted, ParseError or
/// PreconditionError; never returns a certificate without a verdict.
Json certify_distinct(const Inputs& inputs);

struct RelativeInvariant {
  std::string untwisted;  // "±1"
  std::string twisted;    // "0"
  Json extension_fact;
};

/// Throws PreconditionError when the verdict or the composition steps are missing.
RelativeInvariant relative_invariant(const Json& cert);

/// Throws PreconditionError unless the certificate carries both sides.
Json fake_pair_report(const Json& cert);

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> problems;
};

ValidationReport validate(const Json& cert);

/// Human rendering with every rule statement inline.
std::string render_human(const Json& cert);

}  // namespace cork::certificate

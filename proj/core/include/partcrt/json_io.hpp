#pragma once

#include <string>
#include <vector>

#include "partcrt/congruences.hpp"
#include "partcrt/identities.hpp"
#include "partcrt/partitions.hpp"
#include "partcrt/sweep.hpp"

namespace partcrt {

// All serializers emit deterministic two-space-indented JSON with sorted keys
// and a trailing newline.  Numeric values above 2^53 - 1 are written as
// decimal strings so consumers with double-backed JSON numbers stay lossless;
// parsers accept both spellings.

std::string to_json(const DifferenceClass& cls);
std::string to_json(const MultiplicitySet& set);
std::string to_json(const IdentityInstance& inst);
std::string to_json(const CongruenceClaim& claim);
std::string to_json(const CountTable& table);
std::string to_json(const CountsReport& report);
std::string to_json(const ClaimReport& report);
std::string to_json(const ConvolutionReport& report);
std::string to_json(const SweepSummary& summary);

// CSV with header "n,value".
std::string to_csv(const CountTable& table);

DifferenceClass difference_class_from_json(const std::string& text);
MultiplicitySet multiplicity_set_from_json(const std::string& text);

// Rebuilds the instance, re-running every construction-time invariant; the
// coprime-system solution is recomputed from the stored parameters.
IdentityInstance instance_from_json(const std::string& text);

// One claim per line: {"m": 5, "c": 4, "d": 5}.  Blank lines are skipped.
std::vector<CongruenceClaim> claims_from_jsonl(const std::string& text);

}  // namespace partcrt

#pragma once

// Text serialization helpers shared by the CLI and the test suites.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "permlab/updown_dp.hpp"

namespace permlab {

// Wire format of a statistics record:
// {"M":int,"L":int,"B":int,"suffix":{"r":value,...}} with suffix keys in
// ascending offset order.
std::string phase_stats_json(const PhaseStats& stats);

// Decimal expansion of an exact rational with the given number of fraction
// digits, rounded half away from zero. digits == 0 yields a rounded integer.
std::string decimal_string(const mpq_class& value, int digits);

// "num/den" in lowest terms ("num" alone when den == 1).
std::string rational_string(const mpq_class& value);

// FNV-1a 64-bit, used for output checksums in run manifests.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t value);

}  // namespace permlab

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verdier/q7.hpp"

namespace verdier {

enum class EmitFormat { Table, Json, Csv };

std::optional<EmitFormat> parse_emit_format(std::string_view name);
std::string_view emit_format_name(EmitFormat format);

// Deterministic rendering: identical reports produce byte-identical
// output in every format.
std::string emit(const VerificationReport& report, EmitFormat format);

// Whether the verdict is the documented one for the variant: the SD
// delta rule verifies the identity, the printed variant fails it.
bool expected_verdict(const VerificationReport& report);

// One row per configuration for batch runs.
std::string emit_summary(const std::vector<VerificationReport>& reports,
                         EmitFormat format);

}  // namespace verdier

#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "trihex/counting.hpp"
#include "trihex/signature.hpp"

namespace trihex::io {

/// `V,sigma,delta,mu,nu,trihexes,gamma,rot_classes`
std::string csv_header();

/// One CSV line, no trailing newline, no quoting.
std::string csv_row(const counting::CountReport& r);

/// Inverse of csv_row. Throws InvalidInput on malformed rows.
counting::CountReport parse_csv_row(std::string_view line);

nlohmann::ordered_json to_json(const counting::CountReport& r);
nlohmann::ordered_json to_json(const Signature& sig);  // [s, b, f]
nlohmann::ordered_json to_json(std::span<const Signature> sigs);

/// Newline-delimited `(s,b,f)` lines.
std::string signature_lines(std::span<const Signature> sigs);

}  // namespace trihex::io

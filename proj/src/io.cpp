#include "trihex/io.hpp"

#include <array>
#include <charconv>

#include "trihex/errors.hpp"

namespace trihex::io {

std::string csv_header() { return "V,sigma,delta,mu,nu,trihexes,gamma,rot_classes"; }

std::string csv_row(const counting::CountReport& r) {
  std::string out;
  for (std::uint64_t value : {r.vertices, r.sigma, r.delta, r.mu, r.nu,
                              r.trihexes, r.gamma, r.rot_classes}) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(value);
  }
  return out;
}

counting::CountReport parse_csv_row(std::string_view line) {
  std::array<std::uint64_t, 8> fields{};
  const char* cursor = line.data();
  const char* end = line.data() + line.size();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    auto [next, ec] = std::from_chars(cursor, end, fields[i]);
    if (ec != std::errc{} || next == cursor) {
      throw InvalidInput("malformed CSV row '" + std::string(line) + "'");
    }
    cursor = next;
    if (i + 1 < fields.size()) {
      if (cursor == end || *cursor != ',') {
        throw InvalidInput("malformed CSV row '" + std::string(line) + "'");
      }
      ++cursor;
    }
  }
  if (cursor != end) throw InvalidInput("trailing data in CSV row");
  return {fields[0], fields[1], fields[2], fields[3],
          fields[4], fields[5], fields[6], fields[7]};
}

nlohmann::ordered_json to_json(const counting::CountReport& r) {
  return {{"V", r.vertices},         {"sigma", r.sigma},
          {"delta", r.delta},        {"mu", r.mu},
          {"nu", r.nu},              {"trihexes", r.trihexes},
          {"gamma", r.gamma},        {"rot_classes", r.rot_classes}};
}

nlohmann::ordered_json to_json(const Signature& sig) {
  return nlohmann::ordered_json::array({sig.s, sig.b, sig.f});
}

nlohmann::ordered_json to_json(std::span<const Signature> sigs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& sig : sigs) out.push_back(to_json(sig));
  return out;
}

std::string signature_lines(std::span<const Signature> sigs) {
  std::string out;
  for (const auto& sig : sigs) out += to_string(sig) + "\n";
  return out;
}

}  // namespace trihex::io

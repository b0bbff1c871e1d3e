#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <sstream>

#include "locmult/cli.hpp"
#include "locmult/errors.hpp"

namespace locmult::cli {

namespace {

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

// Whitespace carries no meaning in any payload, so the canonical text drops
// it and spells every separator as ", ".
std::string canonical_payload(const std::string& payload) {
  std::string out;
  for (char c : payload) {
    if (c == ' ') continue;
    out += c;
    if (c == ',') out += ' ';
  }
  return out;
}

bool is_identifier(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::vector<std::string> ring_names(const std::string& payload, std::size_t line) {
  std::vector<std::string> names;
  std::string current;
  for (char c : payload + ",") {
    if (c == ',' || c == ' ') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (names.empty()) throw ParseError("ring needs at least one variable", line);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) throw ParseError("bad variable name '" + names[i] + "'", line);
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw ParseError("repeated variable '" + names[i] + "'", line);
    }
  }
  return names;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool have_ring = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string cleaned = collapse_whitespace(raw);
    if (cleaned.empty()) continue;
    const auto space = cleaned.find(' ');
    const std::string keyword = cleaned.substr(0, space);
    const std::string payload = space == std::string::npos ? "" : cleaned.substr(space + 1);
    if (payload.empty()) throw ParseError("'" + keyword + "' needs a payload", line);
    std::optional<std::string>* slot = nullptr;
    if (keyword == "ring") {
      if (have_ring) throw ParseError("more than one ring line", line);
      p.ring = ring_names(payload, line);
      have_ring = true;
    } else if (keyword == "param") {
      slot = &p.param;
    } else if (keyword == "ideal") {
      slot = &p.ideal;
    } else if (keyword == "sub") {
      slot = &p.sub;
    } else if (keyword == "map") {
      slot = &p.map;
    } else if (keyword == "samples") {
      slot = &p.samples;
    } else if (keyword == "element") {
      slot = &p.element;
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line);
    }
    if (slot != nullptr) {
      if (*slot) throw ParseError("repeated '" + keyword + "' line", line);
      *slot = payload;
    }
    if (keyword == "ring") {
      std::string joined;
      for (const auto& name : p.ring) joined += (joined.empty() ? "" : ", ") + name;
      p.canonical += "ring " + joined + "\n";
    } else {
      p.canonical += keyword + " " + canonical_payload(payload) + "\n";
    }
  }
  if (!have_ring) throw ParseError("missing ring line", line);
  if (p.map && !p.param) throw ParseError("a map needs a param line", line);
  if (p.param && !p.map) throw ParseError("a param line needs a map", line);
  if (p.param && !is_identifier(*p.param)) throw ParseError("bad parameter name '" + *p.param + "'", line);
  return p;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &size, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace locmult::cli

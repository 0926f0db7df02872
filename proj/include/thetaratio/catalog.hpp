#pragma once

// Catalog files carry weight distributions that are too large to enumerate.
//
//   # comment
//   n k name source text...
//   w count
//   w count
//   ...
//
// A file may hold several entries; each header starts a new one. Only the
// nonzero counts need to be listed. An entry with 2k = n is treated as a
// self-dual enumerator and must have even weights only and be its own
// MacWilliams transform.

#include "thetaratio/constructions.hpp"
#include "thetaratio/weight_distribution.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace thetaratio {

struct CodeCatalogEntry {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string source;
  WeightDistribution distribution;
  std::optional<BinaryLinearCode> code;  // set for built-ins with a generator

  bool self_dual() const { return 2 * k == n; }
};

/// Throws ValidationError naming the first violated invariant.
inline void validate_entry(const CodeCatalogEntry& e) {
  const auto& d = e.distribution;
  const std::string who = "catalog entry '" + e.name + "': ";
  if (d.n != e.n) throw ValidationError(who + "distribution length differs from n");
  if (e.k > e.n) throw ValidationError(who + "k exceeds n");
  if (d[0] != 1) throw ValidationError(who + "A_0 = 1 violated");
  for (const auto& c : d.counts) {
    if (c < 0) throw ValidationError(who + "negative count");
  }
  if (d.total() != pow2(static_cast<unsigned>(e.k))) {
    throw ValidationError(who + "sum of A_w = 2^k violated (sum " + d.total().str() + ")");
  }
  if (e.self_dual()) {
    if (d.has_odd_weight()) throw ValidationError(who + "self-dual entry has an odd weight");
    WeightDistribution dual;
    try {
      dual = macwilliams_transform(d, e.k);
    } catch (const NonIntegerResult&) {
      throw ValidationError(who + "MacWilliams transform is not integral");
    }
    if (!(dual == d)) throw ValidationError(who + "self-dual entry is not its own MacWilliams transform");
  }
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace detail

inline std::vector<CodeCatalogEntry> parse_catalog(std::istream& in, const std::string& origin) {
  std::vector<CodeCatalogEntry> out;
  std::vector<bool> seen;
  std::optional<CodeCatalogEntry> cur;
  std::size_t header_line = 0;

  auto finish = [&] {
    if (!cur) return;
    try {
      validate_entry(*cur);
    } catch (const ValidationError& e) {
      throw ValidationError(origin + ":" + std::to_string(header_line) + ": " + e.what());
    }
    out.push_back(std::move(*cur));
    cur.reset();
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;

    if (tok.size() >= 3) {
      finish();
      if (!detail::all_digits(tok[0]) || !detail::all_digits(tok[1])) {
        throw ParseError(origin, lineno, "header must start with integers n and k");
      }
      CodeCatalogEntry e;
      e.n = std::stoul(tok[0]);
      e.k = std::stoul(tok[1]);
      if (e.n == 0) throw ParseError(origin, lineno, "n must be positive");
      if (e.n > 100000) throw ParseError(origin, lineno, "n is unreasonably large");
      e.name = tok[2];
      for (std::size_t i = 3; i < tok.size(); ++i) e.source += (i > 3 ? " " : "") + tok[i];
      e.distribution = WeightDistribution(e.n);
      seen.assign(e.n + 1, false);
      cur = std::move(e);
      header_line = lineno;
    } else if (tok.size() == 2) {
      if (!cur) throw ParseError(origin, lineno, "weight line before any header");
      if (!detail::all_digits(tok[0]) || !detail::all_digits(tok[1])) {
        throw ParseError(origin, lineno, "expected 'w count' with non-negative integers");
      }
      const std::size_t w = std::stoul(tok[0]);
      if (w > cur->n) throw ParseError(origin, lineno, "weight " + tok[0] + " exceeds n");
      if (seen[w]) throw ParseError(origin, lineno, "weight " + tok[0] + " listed twice");
      seen[w] = true;
      cur->distribution[w] = Integer(tok[1]);
    } else {
      throw ParseError(origin, lineno, "expected a header 'n k name source' or 'w count'");
    }
  }
  finish();
  return out;
}

inline std::vector<CodeCatalogEntry> parse_catalog(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  return parse_catalog(in, origin);
}

inline std::vector<CodeCatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file " + path.string());
  return parse_catalog(in, path.string());
}

inline CodeCatalogEntry entry_from_code(std::string name, std::string source, BinaryLinearCode code) {
  CodeCatalogEntry e;
  e.name = std::move(name);
  e.source = std::move(source);
  e.n = code.n();
  e.k = code.k();
  e.distribution = weight_distribution(code);
  e.code = std::move(code);
  validate_entry(e);
  return e;
}

/// Enumerator of the [32,16,8] self-dual code used in the worked decomposition example.
inline constexpr const char* kExample32Catalog =
    "32 16 example32 published [32,16,8] self-dual enumerator\n"
    "0 1\n8 364\n10 2048\n12 6720\n14 14336\n16 18598\n"
    "18 14336\n20 6720\n22 2048\n24 364\n32 1\n";

/// Codes available without any catalog file, sorted by name. Built once.
inline const std::vector<CodeCatalogEntry>& builtin_catalog() {
  static const std::vector<CodeCatalogEntry> cat = [] {
    std::vector<CodeCatalogEntry> out;
    out.push_back(parse_catalog(kExample32Catalog, "<builtin>").front());
    out.push_back(entry_from_code("golay24", "extended binary Golay code", golay24()));
    out.push_back(entry_from_code("hamming8", "extended Hamming code RM(1,3)", extended_hamming8()));
    out.push_back(entry_from_code("dc16", std::string("pure double circulant, first row ") + kDc16FirstRow,
                                  double_circulant16()));
    out.push_back(entry_from_code("rep2", "repetition code", repetition_sum(1)));
    out.push_back(entry_from_code("rm-2-5", "Reed-Muller RM(2,5)", reed_muller(2, 5)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return cat;
}

/// Looks `name` up among the built-ins, then among *.txt files in `dir`.
inline std::optional<CodeCatalogEntry> find_entry(const std::string& name,
                                                  const std::filesystem::path& dir = {}) {
  for (const auto& e : builtin_catalog()) {
    if (e.name == name) return e;
  }
  if (dir.empty() || !std::filesystem::is_directory(dir)) return std::nullopt;
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() == ".txt") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    for (auto& e : load_catalog(f)) {
      if (e.name == name) return e;
    }
  }
  return std::nullopt;
}

}  // namespace thetaratio

#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// One built-in algebra with a note on where its tables come from.
struct CorpusEntry {
    std::string key;
    AlgebraSpec spec;
    std::string provenance;
};

/// Keys of all built-in algebras, in listing order.
std::vector<std::string> corpus_keys();

/// Returns the entry for a key; throws UnknownKey.
const CorpusEntry& builtin(const std::string& key);

/// Convenience: validate(builtin(key).spec).
ResiduatedLattice builtin_algebra(const std::string& key);

/// Text file format: `name`, `elements`, `bottom`, `top` header lines, then
/// `join` / `meet` / `prod` / `imp` sections with one table row per line.
/// Round-trips up to whitespace.
AlgebraSpec load(const std::string& path);
AlgebraSpec parse_spec(const std::string& text, const std::string& origin = "<string>");
std::string format_spec(const AlgebraSpec& spec);
void save(const std::string& path, const AlgebraSpec& spec);

/// Covering relation (transitive reduction of <=) in DOT syntax, edges from
/// lower to upper element, bottom at the rank source.
std::string hasse_dot(const ResiduatedLattice& l);
void export_hasse(const ResiduatedLattice& l, const std::string& path);

/// Covering pairs (a, b) with a covered by b, in canonical order.
std::vector<std::pair<int, int>> covering_pairs(const ResiduatedLattice& l);

} // namespace reslat

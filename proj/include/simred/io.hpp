#pragma once

#include <string>
#include <string_view>

#include "simred/dfa.hpp"
#include "simred/lts.hpp"

namespace simred {

// DFA text format:
//
//   dfa <nstates> <nsymbols>
//   symbols <tok_0> ... <tok_{k-1}>
//   init <state>
//   accept <state> ...
//   trans <src> <tok> <dst>          (one per defined entry)
//
// '#' starts a comment. Entries left undefined go to an added sink state.
// The writer emits every entry, sorted by (src, symbol index).
Dfa parse_dfa(std::string_view text);
std::string write_dfa(const Dfa& a);

// LTS text format:
//
//   lts <nstates> <ntransitions> <init>
//   (<src>, "<label>", <dst>)        (one per transition)
//
// The file carries no label declarations, so the reader orders the labels it
// sees by byte-wise string comparison. The writer sorts transitions by
// (src, label index, dst); labels without transitions are not represented.
Lts parse_lts(std::string_view text);
std::string write_lts(const Lts& m);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace simred

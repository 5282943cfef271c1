#include <fstream>
#include <sstream>

#include "simred/errors.hpp"
#include "simred/io.hpp"

namespace simred {
namespace {

// Splits text into lines with comments removed, keeping 1-based numbers of
// the non-blank ones.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.emplace_back(number, std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("dfa line " + std::to_string(line) + ": " + what);
}

std::uint64_t number_at(std::size_t line, const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    fail(line, "integer '" + tok + "' out of range");
  }
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 4) throw InputError("dfa: expected header lines 'dfa', 'symbols', 'init', 'accept'");

  const auto header = tokens_of(lines[0].second);
  if (header.size() != 3 || header[0] != "dfa") fail(lines[0].first, "expected 'dfa <nstates> <nsymbols>'");
  const std::uint64_t nstates = number_at(lines[0].first, header[1]);
  const std::uint64_t nsymbols = number_at(lines[0].first, header[2]);
  if (nstates == 0) fail(lines[0].first, "at least one state is required");

  auto symbols = tokens_of(lines[1].second);
  if (symbols.empty() || symbols[0] != "symbols") fail(lines[1].first, "expected 'symbols <tok> ...'");
  symbols.erase(symbols.begin());
  if (symbols.size() != nsymbols)
    fail(lines[1].first, "declared " + std::to_string(nsymbols) + " symbols, found " +
                             std::to_string(symbols.size()));

  const auto init = tokens_of(lines[2].second);
  if (init.size() != 2 || init[0] != "init") fail(lines[2].first, "expected 'init <state>'");

  const auto accept = tokens_of(lines[3].second);
  if (accept.empty() || accept[0] != "accept") fail(lines[3].first, "expected 'accept <state> ...'");

  DfaBuilder builder = [&] {
    try {
      return DfaBuilder(symbols, nstates);
    } catch (const InputError& e) {
      fail(lines[1].first, e.what());
    }
  }();
  auto wrap = [](std::size_t line, auto&& action) {
    try {
      action();
    } catch (const InputError& e) {
      fail(line, e.what());
    }
  };
  wrap(lines[2].first, [&] { builder.set_initial(static_cast<StateId>(number_at(lines[2].first, init[1]))); });
  for (std::size_t i = 1; i < accept.size(); ++i)
    wrap(lines[3].first,
         [&] { builder.set_accepting(static_cast<StateId>(number_at(lines[3].first, accept[i]))); });

  for (std::size_t i = 4; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto tok = tokens_of(line);
    if (tok.size() != 4 || tok[0] != "trans") fail(number, "expected 'trans <src> <tok> <dst>'");
    wrap(number, [&] {
      builder.add_transition(static_cast<StateId>(number_at(number, tok[1])), tok[2],
                             static_cast<StateId>(number_at(number, tok[3])));
    });
  }
  try {
    return builder.build();
  } catch (const InputError& e) {
    throw InputError(std::string("dfa: ") + e.what());
  }
}

std::string write_dfa(const Dfa& a) {
  std::ostringstream out;
  out << "dfa " << a.num_states() << ' ' << a.num_symbols() << '\n';
  out << "symbols";
  for (const auto& s : a.alphabet()) out << ' ' << s;
  out << "\ninit " << a.initial() << "\naccept";
  for (StateId q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) out << ' ' << q;
  out << '\n';
  for (StateId q = 0; q < a.num_states(); ++q)
    for (std::size_t c = 0; c < a.num_symbols(); ++c)
      out << "trans " << q << ' ' << a.alphabet()[c] << ' ' << a.next(q, c) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace simred

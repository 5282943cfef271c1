#include <algorithm>
#include <map>
#include <sstream>

#include "simred/errors.hpp"
#include "simred/io.hpp"

namespace simred {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("lts line " + std::to_string(line) + ": " + what);
}

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(line_, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) fail(line_, "expected a non-negative integer");
    try {
      return std::stoull(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail(line_, "integer out of range");
    }
  }
  std::string quoted() {
    expect('"');
    const std::size_t close = text_.find('"', pos_);
    if (close == std::string_view::npos) fail(line_, "unterminated label");
    std::string label(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return label;
  }
  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail(line_, "trailing characters");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Lts parse_lts(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.emplace_back(number, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) throw InputError("lts: empty input");

  std::istringstream header{std::string(lines[0].second)};
  std::string keyword;
  long long nstates = -1, ntrans = -1, init = -1;
  std::string extra;
  if (!(header >> keyword >> nstates >> ntrans >> init) || keyword != "lts" || (header >> extra) ||
      nstates <= 0 || ntrans < 0 || init < 0)
    fail(lines[0].first, "expected 'lts <nstates> <ntransitions> <init>'");
  if (lines.size() - 1 != static_cast<std::size_t>(ntrans))
    fail(lines[0].first, "declared " + std::to_string(ntrans) + " transitions, found " +
                             std::to_string(lines.size() - 1));

  struct Raw {
    std::uint64_t src;
    std::string label;
    std::uint64_t dst;
    std::size_t line;
  };
  std::vector<Raw> raw;
  raw.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    LineScanner scan(lines[i].second, lines[i].first);
    scan.expect('(');
    const auto src = scan.number();
    scan.expect(',');
    auto label = scan.quoted();
    scan.expect(',');
    const auto dst = scan.number();
    scan.expect(')');
    scan.expect_end();
    if (src >= static_cast<std::uint64_t>(nstates) || dst >= static_cast<std::uint64_t>(nstates))
      fail(lines[i].first, "state out of range");
    raw.push_back({src, std::move(label), dst, lines[i].first});
  }

  std::map<std::string, LabelId> index;
  for (const Raw& r : raw) index.emplace(r.label, 0);
  std::vector<std::string> labels;
  for (auto& [label, id] : index) {
    id = static_cast<LabelId>(labels.size());
    labels.push_back(label);
  }
  std::vector<Transition> transitions;
  transitions.reserve(raw.size());
  for (const Raw& r : raw)
    transitions.push_back({static_cast<StateId>(r.src), index.at(r.label), static_cast<StateId>(r.dst)});
  if (init >= nstates) fail(lines[0].first, "initial state out of range");
  return Lts(static_cast<std::size_t>(nstates), std::move(labels), std::move(transitions),
             static_cast<StateId>(init));
}

std::string write_lts(const Lts& m) {
  std::ostringstream out;
  out << "lts " << m.num_states() << ' ' << m.num_transitions() << ' ' << m.initial() << '\n';
  for (const Transition& t : m.transitions())
    out << '(' << t.src << ", \"" << m.labels()[t.label] << "\", " << t.dst << ")\n";
  return out.str();
}

}  // namespace simred

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/reflection.hpp"

namespace gmpn {

// ---------------------------------------------------------------------------
// Printing.  The printed forms below are the canonical ones: cycles sorted by
// smallest element with fixed points omitted, weights reduced to [0, m).
// ---------------------------------------------------------------------------

inline std::string print(const Element& g) {
  std::string out = "[";
  CycleData data = cycle_data(g);
  bool any = false;
  for (const Cycle& c : data.cycles) {
    if (c.seq.size() < 2) continue;
    any = true;
    out += "(";
    for (std::size_t k = 0; k < c.seq.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(c.seq[k]);
    }
    out += ")";
  }
  if (!any) out += "id";
  out += "; (";
  for (int k = 1; k <= g.n(); ++k) {
    if (k > 1) out += ",";
    out += std::to_string(g.weight(k));
  }
  out += ")]";
  return out;
}

/** Transposition-like reflections print in the short two-vertex form
 *  "[(i j); a]"; diagonal reflections print as full elements. */
inline std::string print(const Reflection& r) {
  if (r.kind() == Reflection::Kind::transposition_like)
    return "[(" + std::to_string(r.i()) + " " + std::to_string(r.j()) + "); " +
           std::to_string(r.a()) + "]";
  return print(r.to_element());
}

/** Cycle partition, e.g. "{(1 2)(3 4 5)} | {(6)}".  Fixed points are shown
 *  here (unlike element printing) because blocks own them. */
inline std::string print(const CyclePartition& partition, const CycleData& data) {
  std::string out;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (b) out += " | ";
    out += "{";
    for (int ci : partition.blocks[b]) {
      out += "(";
      const Cycle& c = data.cycles[ci];
      for (std::size_t k = 0; k < c.seq.size(); ++k) {
        if (k) out += " ";
        out += std::to_string(c.seq[k]);
      }
      out += ")";
    }
    out += "}";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size())
      throw parse_error("unexpected end of input in \"" + std::string(text) + "\"");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "' at position " +
                        std::to_string(pos) + " in \"" + std::string(text) + "\"");
    ++pos;
  }
  bool try_consume(char c) {
    if (done() || text[pos] != c) return false;
    ++pos;
    return true;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits)
      throw parse_error("expected an integer at position " + std::to_string(start) +
                        " in \"" + std::string(text) + "\"");
    long long value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc())
      throw parse_error("integer out of range in \"" + std::string(text) + "\"");
    return value;
  }
};

/** Parses the PERM part (either "id" or a cycle list) keeping the written
 *  cycle structure.  "id" yields an empty cycle list. */
inline std::vector<std::vector<int>> parse_cycles(Cursor& cur, int n) {
  cur.skip_ws();
  if (cur.peek() == 'i') {
    cur.expect('i');
    cur.expect('d');
    return {};
  }
  std::vector<char> used(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  while (!cur.done() && cur.peek() == '(') {
    cur.expect('(');
    std::vector<int> seq;
    while (cur.peek() != ')') {
      long long v = cur.integer();
      if (v < 1 || v > n)
        throw parse_error("cycle entry " + std::to_string(v) + " out of range 1.." +
                          std::to_string(n));
      if (used[v])
        throw parse_error("cycle entry " + std::to_string(v) + " repeated");
      used[v] = 1;
      seq.push_back(static_cast<int>(v));
    }
    cur.expect(')');
    if (seq.empty()) throw parse_error("empty cycle");
    cycles.push_back(std::move(seq));
  }
  if (cycles.empty()) throw parse_error("expected 'id' or a cycle list");
  return cycles;
}

/** 1-based image sequence of a parsed cycle list (singleton cycles are
 *  fixed points). */
inline std::vector<int> images_of_cycles(const std::vector<std::vector<int>>& cycles,
                                         int n) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  for (const auto& seq : cycles)
    for (std::size_t k = 0; k < seq.size(); ++k)
      images[seq[k] - 1] = seq[(k + 1) % seq.size()];
  return images;
}

inline std::vector<long long> parse_weight_tuple(Cursor& cur, int n) {
  cur.expect('(');
  std::vector<long long> w;
  if (cur.peek() != ')') {
    w.push_back(cur.integer());
    while (cur.try_consume(',')) w.push_back(cur.integer());
  }
  cur.expect(')');
  if (static_cast<int>(w.size()) != n)
    throw parse_error("weight tuple has " + std::to_string(w.size()) +
                      " entries, expected " + std::to_string(n));
  return w;
}

} // namespace detail

/** Parses "[PERM; (w_1,...,w_n)]" where PERM is "id" or whitespace-separated
 *  cycles like "(1 2)(3 4 5)".  Weights may be any-sign integers; they are
 *  reduced mod m.  Membership (weight sum 0 mod p) is enforced. */
inline Element parse_element(const GroupParams& params, std::string_view text) {
  detail::Cursor cur{text};
  cur.expect('[');
  std::vector<int> images =
      detail::images_of_cycles(detail::parse_cycles(cur, params.n), params.n);
  cur.expect(';');
  std::vector<long long> w = detail::parse_weight_tuple(cur, params.n);
  cur.expect(']');
  if (!cur.done())
    throw parse_error("trailing characters after element in \"" + std::string(text) + "\"");
  return Element(params, images, w);
}

/** Parses a reflection literal.  Accepted forms:
 *   - "[(i j); a]"            transposition-like with weight a at the first
 *                             written vertex i (so "[(3 1); 29]" in m=30 is
 *                             the canonical "[(1 3); 1]");
 *   - "[PERM; (w_1,...,w_n)]" full element form (must be a reflection). */
inline Reflection parse_reflection(const GroupParams& params, std::string_view text) {
  detail::Cursor cur{text};
  cur.expect('[');
  std::vector<std::vector<int>> cycles = detail::parse_cycles(cur, params.n);
  cur.expect(';');
  if (cur.peek() == '(') {
    std::vector<long long> w = detail::parse_weight_tuple(cur, params.n);
    cur.expect(']');
    if (!cur.done())
      throw parse_error("trailing characters after reflection in \"" +
                        std::string(text) + "\"");
    auto r = as_reflection(
        Element(params, detail::images_of_cycles(cycles, params.n), w));
    if (!r)
      throw domain_error("not a reflection: \"" + std::string(text) + "\"");
    return *r;
  }
  long long a = cur.integer();
  cur.expect(']');
  if (!cur.done())
    throw parse_error("trailing characters after reflection in \"" + std::string(text) + "\"");
  if (cycles.size() != 1 || cycles[0].size() != 2)
    throw domain_error("bare-weight reflection form needs a single transposition: \"" +
                       std::string(text) + "\"");
  return Reflection::transposition_like(params, cycles[0][0], cycles[0][1], a);
}

/** Splits on ';' at bracket depth zero.  Empty / all-whitespace pieces are a
 *  parse error, but an entirely empty input is the empty sequence. */
inline std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '[') ++depth;
    else if (c == ']') --depth;
    else if (c == ';' && depth == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
    if (depth < 0) throw parse_error("unbalanced ']' in \"" + std::string(text) + "\"");
  }
  if (depth != 0) throw parse_error("unbalanced '[' in \"" + std::string(text) + "\"");
  parts.push_back(text.substr(start));
  bool all_ws = parts.size() == 1;
  if (all_ws)
    for (char c : parts[0])
      if (!std::isspace(static_cast<unsigned char>(c))) all_ws = false;
  if (all_ws) return {};
  return parts;
}

} // namespace gmpn

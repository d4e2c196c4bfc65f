#pragma once

#include "quotrep/group.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace quotrep {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: GROUP = FACTOR ("x" FACTOR)*, FACTOR = LETTER RANK, e.g. "B3",
// "A2xB3".
inline GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) throw ParseError("expected family letter, got end of input", pos);
    const char fam = text[pos];
    if (fam < 'A' || fam > 'G')
      throw ParseError(std::string("unknown family '") + fam + "'", pos);
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected rank digits", pos);
    const int rank = std::stoi(text.substr(start, pos - start));
    SimpleType t{static_cast<Family>(fam), rank};
    if (!valid_simple_type(t))
      throw ParseError("invalid simple type '" + text.substr(start - 1, pos - start + 1) + "'",
                       start - 1);
    g.factors.push_back(t);
    if (pos == text.size()) break;
    if (text[pos] != 'x')
      throw ParseError(std::string("expected 'x' or end, got '") + text[pos] + "'", pos);
    ++pos;
  }
  return g;
}

inline std::string format_group(const GroupSpec& g) { return to_string(g); }

// Grammar: WEIGHT = INTS (";" INTS)*, INTS = INT ("," INT)*; one
// semicolon-separated block per factor, e.g. "1,0,2;0,1".
inline ProductWeight parse_weight(const std::string& text, const GroupSpec& g) {
  ProductWeight out;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    std::vector<int> coords;
    for (int k = 0; k < g.factors[f].rank; ++k) {
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw ParseError("expected integer coordinate", start);
      coords.push_back(std::stoi(text.substr(start, pos - start)));
      if (k + 1 < g.factors[f].rank) {
        if (pos >= text.size() || text[pos] != ',')
          throw ParseError("expected ',' between coordinates", pos);
        ++pos;
      }
    }
    out.emplace_back(std::move(coords));
    if (f + 1 < g.factors.size()) {
      if (pos >= text.size() || text[pos] != ';')
        throw ParseError("expected ';' between factors", pos);
      ++pos;
    }
  }
  if (pos != text.size())
    throw ParseError(std::string("unexpected trailing input '") + text[pos] + "'", pos);
  return out;
}

inline std::string format_weight(const ProductWeight& w) {
  std::string s;
  for (std::size_t f = 0; f < w.size(); ++f) {
    if (f) s += ';';
    for (int i = 0; i < w[f].rank(); ++i) {
      if (i) s += ',';
      s += std::to_string(w[f].c[i]);
    }
  }
  return s;
}

}  // namespace quotrep

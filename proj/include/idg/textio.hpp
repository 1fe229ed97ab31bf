#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "idg/graph.hpp"

namespace idg {

/// Malformed document: 1-based line and column, and the section being read.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string section, const std::string& message);
  std::size_t line, column;
  std::string section;
};

inline constexpr int kFormatVersion = 1;

std::string print(const TypeGraph& g);
std::string print(const TermGraph& t);
std::string print(const Correspondence& c);
std::string print(const Bundle& b);

using Document = std::variant<TypeGraph, TermGraph, Correspondence, Bundle>;

Document parse_document(const std::string& text);
TypeGraph parse_type(const std::string& text);
TermGraph parse_term(const std::string& text);
Correspondence parse_correspondence(const std::string& text);
Bundle parse_bundle(const std::string& text);

Bundle read_bundle_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace idg

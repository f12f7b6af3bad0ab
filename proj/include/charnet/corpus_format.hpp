#pragma once

// Reader and writer for book encounter files and genre maps.
//
// Book file layout (line oriented, `\n` or `\r\n`):
//
//   * comment lines start with an asterisk, anywhere in the file
//   GA Gandalf, a wizard          <- header: CODE<space>name[,description]
//   BI Bilbo Baggins
//                                  <- first blank line ends the header
//   1.1:GA,BI;BI,TH               <- [scene:]clique(;clique)*
//   GA,BI,TH
//
// Codes are 1-3 characters from A-Z/0-9 and are upper-cased on input.
// A header line that is not a well-formed declaration also ends the header,
// so files without a declaration block parse as pure encounter lists.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "charnet/error.hpp"

namespace charnet {

struct CharacterDecl {
  std::string code;
  std::string name;
  std::optional<std::string> description;

  bool operator==(const CharacterDecl&) const = default;
};

using Clique = std::vector<std::string>;

struct EncounterRecord {
  std::optional<std::string> scene;  // carries no semantics
  std::vector<Clique> cliques;

  bool operator==(const EncounterRecord&) const = default;
};

struct ParsedBook {
  std::string book_id;
  std::vector<CharacterDecl> declarations;
  std::vector<EncounterRecord> encounters;
  // Labels used in encounters without a declaration, in order of first use.
  std::vector<std::string> undeclared;

  bool operator==(const ParsedBook&) const = default;

  const CharacterDecl* find_declaration(std::string_view code) const {
    for (const auto& d : declarations) {
      if (d.code == code) return &d;
    }
    return nullptr;
  }

  // Declared name, or the code itself for undeclared labels.
  std::string display_name(std::string_view code) const {
    const auto* d = find_declaration(code);
    return d ? d->name : std::string(code);
  }

  // Declared characters that never occur in any clique.
  std::vector<std::string> unused_declarations() const {
    std::unordered_set<std::string> used;
    for (const auto& rec : encounters)
      for (const auto& clique : rec.cliques) used.insert(clique.begin(), clique.end());
    std::vector<std::string> out;
    for (const auto& d : declarations)
      if (!used.contains(d.code)) out.push_back(d.code);
    return out;
  }
};

struct ParseOptions {
  bool strict = false;  // reject undeclared labels instead of recording them
};

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view rtrim(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string_view ltrim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

inline std::string_view trim(std::string_view s) { return ltrim(rtrim(s)); }

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline bool is_valid_label(std::string_view code) {
  if (code.empty() || code.size() > 3) return false;
  return std::all_of(code.begin(), code.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  });
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::optional<CharacterDecl> try_parse_declaration(std::string_view line) {
  const auto sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) return std::nullopt;
  auto code = to_upper(line.substr(0, sp));
  if (!is_valid_label(code)) return std::nullopt;

  auto rest = ltrim(line.substr(sp));
  CharacterDecl decl{std::move(code), {}, std::nullopt};
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) {
    decl.name = std::string(trim(rest));
  } else {
    decl.name = std::string(trim(rest.substr(0, comma)));
    auto desc = trim(rest.substr(comma + 1));
    if (!desc.empty()) decl.description = std::string(desc);
  }
  return decl;
}

inline EncounterRecord parse_encounter(std::string_view line, std::size_t line_no) {
  EncounterRecord rec;
  const auto colon = line.find(':');
  std::string_view body = line;
  if (colon != std::string_view::npos) {
    rec.scene = std::string(line.substr(0, colon));
    body = line.substr(colon + 1);
  }
  if (trim(body).empty()) return rec;

  for (auto clique_text : split(body, ';')) {
    Clique clique;
    for (auto raw : split(clique_text, ',')) {
      auto token = trim(raw);
      if (token.empty()) throw ParseError(line_no, "empty character label");
      auto code = to_upper(token);
      if (!is_valid_label(code))
        throw ParseError(line_no, "invalid character label '" + std::string(token) + "'");
      if (std::find(clique.begin(), clique.end(), code) == clique.end())
        clique.push_back(std::move(code));
    }
    rec.cliques.push_back(std::move(clique));
  }
  return rec;
}

}  // namespace detail

inline ParsedBook parse_book(std::istream& in, std::string book_id, ParseOptions options = {}) {
  ParsedBook book;
  book.book_id = std::move(book_id);

  std::set<std::string> declared;
  std::set<std::string> undeclared_seen;
  bool in_header = true;
  std::size_t line_no = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto line = detail::rtrim(raw);
    if (!line.empty() && line.front() == '*') continue;

    if (in_header) {
      if (line.empty()) {
        in_header = false;
        continue;
      }
      if (auto decl = detail::try_parse_declaration(line)) {
        if (!declared.insert(decl->code).second)
          throw ParseError(line_no, "duplicate declaration of '" + decl->code + "'");
        book.declarations.push_back(std::move(*decl));
        continue;
      }
      in_header = false;
    }
    if (line.empty()) continue;

    auto rec = detail::parse_encounter(line, line_no);
    for (const auto& clique : rec.cliques) {
      for (const auto& code : clique) {
        if (declared.contains(code) || undeclared_seen.contains(code)) continue;
        if (options.strict) throw ParseError(line_no, "undeclared character label '" + code + "'");
        undeclared_seen.insert(code);
        book.undeclared.push_back(code);
      }
    }
    book.encounters.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read failure while parsing book '" + book.book_id + "'");
  return book;
}

inline ParsedBook parse_book(std::string_view text, std::string book_id, ParseOptions options = {}) {
  std::istringstream in{std::string(text)};
  return parse_book(in, std::move(book_id), options);
}

// Book id is the file stem (`data/hobbit.dat` -> `hobbit`).
inline ParsedBook load_book(const std::filesystem::path& path, ParseOptions options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open book file '" + path.string() + "'");
  return parse_book(in, path.stem().string(), options);
}

// All `*.dat` files of a directory, sorted by file name.
inline std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw IoError("corpus directory '" + dir.string() + "' does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Canonical text form. Comments are not preserved; parse_book(write_book(b)) == b.
inline void write_book(std::ostream& out, const ParsedBook& book) {
  for (const auto& d : book.declarations) {
    out << d.code << ' ' << d.name;
    if (d.description) out << ',' << *d.description;
    out << '\n';
  }
  out << '\n';
  for (const auto& rec : book.encounters) {
    if (rec.scene) out << *rec.scene << ':';
    for (std::size_t c = 0; c < rec.cliques.size(); ++c) {
      if (c) out << ';';
      const auto& clique = rec.cliques[c];
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if (i) out << ',';
        out << clique[i];
      }
    }
    out << '\n';
  }
}

inline std::string to_text(const ParsedBook& book) {
  std::ostringstream out;
  write_book(out, book);
  return out.str();
}

// ---------------------------------------------------------------------------
// Genre map

enum class Genre { Biography, Legendary, Fiction };

inline constexpr char genre_letter(Genre g) {
  switch (g) {
    case Genre::Biography: return 'B';
    case Genre::Legendary: return 'L';
    case Genre::Fiction: return 'F';
  }
  return '?';
}

inline constexpr std::string_view genre_name(Genre g) {
  switch (g) {
    case Genre::Biography: return "Biography";
    case Genre::Legendary: return "Legendary";
    case Genre::Fiction: return "Fiction";
  }
  return "?";
}

inline std::optional<Genre> genre_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'B': return Genre::Biography;
    case 'L': return Genre::Legendary;
    case 'F': return Genre::Fiction;
    default: return std::nullopt;
  }
}

using GenreMap = std::map<std::string, Genre>;

// CSV `book_id,letter`, no header; blank lines are skipped.
inline GenreMap parse_genre_map(std::istream& in) {
  GenreMap map;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos)
      throw ConfigError("genre map line " + std::to_string(line_no) + ": expected 'book_id,genre'");
    const auto id = std::string(detail::trim(line.substr(0, comma)));
    const auto letter = detail::trim(line.substr(comma + 1));
    if (id.empty())
      throw ConfigError("genre map line " + std::to_string(line_no) + ": empty book id");
    const auto genre = letter.size() == 1 ? genre_from_letter(letter.front()) : std::nullopt;
    if (!genre)
      throw ConfigError("genre map line " + std::to_string(line_no) + ": unknown genre '" +
                        std::string(letter) + "' (expected B, L or F)");
    if (!map.emplace(id, *genre).second)
      throw ConfigError("genre map line " + std::to_string(line_no) + ": duplicate book id '" + id + "'");
  }
  if (in.bad()) throw IoError("read failure while parsing genre map");
  return map;
}

inline GenreMap parse_genre_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_genre_map(in);
}

inline GenreMap load_genre_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open genre map '" + path.string() + "'");
  return parse_genre_map(in);
}

}  // namespace charnet

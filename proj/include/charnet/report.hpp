#pragma once

// Per-book and corpus-wide reports: global table, hapax table, density vs
// clustering scatter data, Lobby correlations, power-law fits and mixing.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charnet/centrality.hpp"
#include "charnet/corpus_format.hpp"
#include "charnet/distribution.hpp"
#include "charnet/error.hpp"
#include "charnet/format.hpp"
#include "charnet/global_stats.hpp"
#include "charnet/graph.hpp"
#include "charnet/lexical.hpp"

namespace charnet {

// Product-moment correlation.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("pearson: sequences differ in length");
  if (xs.size() < 2) throw DomainError("pearson: need at least two points");
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelationError("pearson: constant sequence");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// A value, or the marker explaining why it could not be computed.
template <typename T>
class Marked {
 public:
  Marked(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Marked missing(std::string marker) {
    Marked m;
    m.state_ = Marker{std::move(marker)};
    return m;
  }

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) throw DomainError("value unavailable: " + marker());
    return std::get<T>(state_);
  }
  const T* operator->() const { return &value(); }

  const std::string& marker() const {
    static const std::string none;
    return ok() ? none : std::get<Marker>(state_).text;
  }

 private:
  struct Marker {
    std::string text;
  };
  Marked() = default;
  std::variant<T, Marker> state_;
};

namespace detail {

inline std::string marker_for(const DomainError& e) {
  if (dynamic_cast<const InsufficientTailError*>(&e)) return "insufficient-tail";
  if (dynamic_cast<const DegenerateDistributionError*>(&e)) return "degenerate";
  if (dynamic_cast<const UndefinedCorrelationError*>(&e)) return "undefined";
  return "domain-error";
}

template <typename F>
auto capture(F&& f) -> Marked<decltype(f())> {
  try {
    return f();
  } catch (const DomainError& e) {
    return Marked<decltype(f())>::missing(marker_for(e));
  }
}

}  // namespace detail

struct CorrelationResult {
  Measure x_measure;
  Measure y_measure;  // always Lobby in book reports
  Marked<double> r;
  std::vector<std::pair<double, double>> points;  // (x, y) per node
};

struct TopEdge {
  WeightedEdge edge;
  std::string u_name;
  std::string v_name;
  double fraction = 0.0;  // weight / total edge weight
};

struct ReportOptions {
  FitOptions fit;
};

struct BookReport {
  std::string book_id;
  std::optional<Genre> genre;
  GlobalStats global;
  HapaxReport hapax;
  Marked<PowerLawFit> fit = Marked<PowerLawFit>::missing("not-computed");
  Marked<double> assort_slope = Marked<double>::missing("not-computed");
  std::vector<CorrelationResult> correlations;  // Lobby vs Degree, Betweenness, Closeness
  Marked<TopEdge> top_edge = Marked<TopEdge>::missing("not-computed");
  std::vector<std::string> notes;
};

inline CorrelationResult correlate(const CentralityVector& x, const CentralityVector& y) {
  CorrelationResult c{x.measure, y.measure, Marked<double>::missing("not-computed"), {}};
  c.points.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c.points.emplace_back(x.values[i], y.values[i]);
  c.r = detail::capture([&] { return pearson(x.values, y.values); });
  return c;
}

inline BookReport book_report(const ParsedBook& book, std::optional<Genre> genre, ReportOptions options = {}) {
  const auto g = build_graph(book);
  if (g.node_count() < 3)
    throw DomainError("book '" + book.book_id + "' has " + std::to_string(g.node_count()) +
                      " characters; a report needs at least 3");

  BookReport r;
  r.book_id = book.book_id;
  r.genre = genre;
  r.global = global_stats(g);
  r.hapax = hapax_report(book);

  const auto degrees = degree_samples(g);
  r.fit = detail::capture([&] { return fit_power_law(degrees, options.fit); });
  r.assort_slope = detail::capture([&]() -> double {
    const auto curve = knn_curve(g);
    if (curve.mixing() == Mixing::Degenerate) throw DegenerateDistributionError("single-degree graph");
    return *curve.slope;
  });

  const auto lobby = lobby_index(g).normalized;
  r.correlations.push_back(correlate(degree_centrality(g), lobby));
  r.correlations.push_back(correlate(betweenness_centrality(g), lobby));
  r.correlations.push_back(correlate(closeness_centrality(g), lobby));

  r.top_edge = detail::capture([&] {
    auto [edge, fraction] = top_weighted_edge(g);
    TopEdge t{edge, book.display_name(edge.u), book.display_name(edge.v), fraction};
    return t;
  });

  for (const auto& code : book.unused_declarations())
    r.notes.push_back("declared character " + code + " never appears; excluded from the graph");
  for (const auto& code : book.undeclared) r.notes.push_back("label " + code + " used without declaration");
  return r;
}

// ---------------------------------------------------------------------------
// Corpus emission

namespace detail {

inline int genre_rank(const std::optional<Genre>& g) { return g ? static_cast<int>(*g) : 3; }

inline std::string genre_cell(const std::optional<Genre>& g) {
  return g ? std::string(genre_name(*g)) : std::string("NA");
}

inline std::string genre_letter_cell(const std::optional<Genre>& g) {
  return g ? std::string(1, genre_letter(*g)) : std::string("NA");
}

inline std::string marked_real(const Marked<double>& m) { return m ? format_real(m.value()) : "NA"; }

}  // namespace detail

// Genre (Biography, Legendary, Fiction, unknown), then book id.
inline std::vector<const BookReport*> ordered(std::span<const BookReport> reports) {
  std::vector<const BookReport*> out;
  for (const auto& r : reports) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const BookReport* a, const BookReport* b) {
    return std::pair(detail::genre_rank(a->genre), a->book_id) < std::pair(detail::genre_rank(b->genre), b->book_id);
  });
  return out;
}

// genre,book,N,M,avg_k,std_k,D,Cc
inline void write_table1_csv(std::ostream& out, std::span<const BookReport> reports) {
  out << "genre,book,N,M,avg_k,std_k,D,Cc\n";
  for (const auto* r : ordered(reports)) {
    const auto& s = r->global;
    out << detail::genre_cell(r->genre) << ',' << r->book_id << ',' << s.n_nodes << ',' << s.n_edges << ','
        << format_real(s.avg_degree) << ',' << format_real(s.degree_std) << ',' << format_real(s.density) << ','
        << format_real(s.clustering) << '\n';
  }
}

// genre,book,HL,N,HL_ratio; descending ratio within a genre.
inline void write_table2_csv(std::ostream& out, std::span<const BookReport> reports) {
  auto rows = ordered(reports);
  std::stable_sort(rows.begin(), rows.end(), [](const BookReport* a, const BookReport* b) {
    const auto ga = detail::genre_rank(a->genre), gb = detail::genre_rank(b->genre);
    if (ga != gb) return ga < gb;
    return a->hapax.hapax_ratio > b->hapax.hapax_ratio;
  });
  out << "genre,book,HL,N,HL_ratio\n";
  for (const auto* r : rows) {
    out << detail::genre_cell(r->genre) << ',' << r->book_id << ',' << r->hapax.hapax_count << ','
        << r->hapax.n_characters << ',' << format_real(r->hapax.hapax_ratio) << '\n';
  }
}

// book,genre,D,Cc (density vs clustering scatter)
inline void write_fig1_csv(std::ostream& out, std::span<const BookReport> reports) {
  out << "book,genre,D,Cc\n";
  for (const auto* r : ordered(reports)) {
    out << r->book_id << ',' << detail::genre_letter_cell(r->genre) << ',' << format_real(r->global.density)
        << ',' << format_real(r->global.clustering) << '\n';
  }
}

// One row per book with fit, mixing, Lobby correlations and heaviest edge.
inline void write_book_summary_csv(std::ostream& out, std::span<const BookReport> reports) {
  out << "book,genre,alpha,kmin,ks,tail_size,assort_slope,r_lobby_degree,r_lobby_betweenness,r_lobby_closeness,"
         "top_u,top_v,top_weight,top_fraction\n";
  for (const auto* r : ordered(reports)) {
    out << r->book_id << ',' << detail::genre_letter_cell(r->genre) << ',';
    if (r->fit)
      out << format_real(r->fit->alpha) << ',' << r->fit->k_min << ',' << format_real(r->fit->ks_distance) << ','
          << r->fit->tail_size;
    else
      out << r->fit.marker() << ",NA,NA,NA";
    out << ',' << (r->assort_slope ? format_real(r->assort_slope.value()) : r->assort_slope.marker());
    for (const auto& c : r->correlations) out << ',' << detail::marked_real(c.r);
    if (r->top_edge)
      out << ',' << r->top_edge->edge.u << ',' << r->top_edge->edge.v << ',' << r->top_edge->edge.weight << ','
          << format_real(r->top_edge->fraction);
    else
      out << ",NA,NA,NA,NA";
    out << '\n';
  }
}

inline void write_report_csv(std::ostream& out, std::span<const BookReport> reports) {
  out << "# global\n";
  write_table1_csv(out, reports);
  out << "\n# hapax\n";
  write_table2_csv(out, reports);
  out << "\n# density_clustering\n";
  write_fig1_csv(out, reports);
  out << "\n# books\n";
  write_book_summary_csv(out, reports);
  bool any_notes = false;
  for (const auto* r : ordered(reports)) {
    for (const auto& note : r->notes) {
      if (!any_notes) out << "\n# notes\nbook,note\n";
      any_notes = true;
      out << r->book_id << ',' << note << '\n';
    }
  }
}

inline nlohmann::json to_json(const BookReport& r) {
  using nlohmann::json;
  json j;
  j["book"] = r.book_id;
  j["genre"] = r.genre ? json(std::string(genre_name(*r.genre))) : json(nullptr);
  j["global"] = {{"N", r.global.n_nodes},          {"M", r.global.n_edges},
                 {"avg_k", r.global.avg_degree},   {"std_k", r.global.degree_std},
                 {"D", r.global.density},          {"Cc", r.global.clustering}};
  j["hapax"] = {{"N", r.hapax.n_characters},   {"HL", r.hapax.hapax_count}, {"DL", r.hapax.dis_count},
                {"HL_ratio", r.hapax.hapax_ratio}, {"DL_ratio", r.hapax.dis_ratio}};
  if (r.fit)
    j["fit"] = {{"alpha", r.fit->alpha},
                {"kmin", r.fit->k_min},
                {"ks", r.fit->ks_distance},
                {"tail_size", r.fit->tail_size}};
  else
    j["fit"] = {{"error", r.fit.marker()}};
  if (r.assort_slope)
    j["assortativity"] = {{"slope", r.assort_slope.value()}};
  else
    j["assortativity"] = {{"error", r.assort_slope.marker()}};
  json corr = json::array();
  for (const auto& c : r.correlations) {
    json entry{{"x", measure_name(c.x_measure)}, {"y", measure_name(c.y_measure)}};
    if (c.r) {
      entry["r"] = c.r.value();
    } else {
      entry["r"] = nullptr;
      entry["error"] = c.r.marker();
    }
    corr.push_back(std::move(entry));
  }
  j["correlations"] = std::move(corr);
  if (r.top_edge)
    j["top_edge"] = {{"u", r.top_edge->edge.u},           {"v", r.top_edge->edge.v},
                     {"u_name", r.top_edge->u_name},      {"v_name", r.top_edge->v_name},
                     {"weight", r.top_edge->edge.weight}, {"fraction", r.top_edge->fraction}};
  else
    j["top_edge"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

inline nlohmann::json to_json(std::span<const BookReport> reports) {
  auto arr = nlohmann::json::array();
  for (const auto* r : ordered(reports)) arr.push_back(to_json(*r));
  return arr;
}

// Parses every `*.dat` file in a directory (sorted by name).
inline std::vector<ParsedBook> load_corpus(const std::filesystem::path& dir, ParseOptions options = {}) {
  std::vector<ParsedBook> books;
  for (const auto& path : list_corpus(dir)) books.push_back(load_book(path, options));
  return books;
}

inline std::optional<Genre> lookup_genre(const GenreMap& genres, const std::string& book_id) {
  auto it = genres.find(book_id);
  if (it == genres.end()) return std::nullopt;
  return it->second;
}

}  // namespace charnet

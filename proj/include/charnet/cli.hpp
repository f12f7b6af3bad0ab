#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// it can be driven in-process; exit status 0 on success, 1 on I/O, parse or
// domain errors, 2 on usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charnet/centrality.hpp"
#include "charnet/corpus_format.hpp"
#include "charnet/distribution.hpp"
#include "charnet/error.hpp"
#include "charnet/graph.hpp"
#include "charnet/report.hpp"
#include "charnet/svg.hpp"

namespace charnet::cli {

struct Options {
  std::string corpus;
  std::string book;
  std::string genres;
  std::string format = "csv";
  std::string out;
  bool strict = false;
  std::size_t tail_min = 5;
  std::uint64_t seed = 0;  // reserved for sampling utilities
  bool edges = false;      // parse: emit the weighted edge list
  bool ccdf = false;       // fit: emit the degree CCDF instead of the fit
  std::string kind = "lobby-degree";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct Input {
  std::vector<ParsedBook> books;
  GenreMap genres;
  bool single = false;

  std::optional<Genre> genre_of(const ParsedBook& b) const { return lookup_genre(genres, b.book_id); }
};

inline Input load_input(const Options& o, std::ostream& err) {
  if (o.book.empty() == o.corpus.empty()) throw UsageError("exactly one of --book or --corpus is required");
  Input in;
  const ParseOptions po{o.strict};
  if (!o.book.empty()) {
    in.books.push_back(load_book(o.book, po));
    in.single = true;
  } else {
    in.books = load_corpus(o.corpus, po);
    if (in.books.empty()) throw IoError("no .dat files in corpus directory '" + o.corpus + "'");
  }
  if (!o.genres.empty()) in.genres = load_genre_map(o.genres);
  for (const auto& b : in.books) {
    for (const auto& code : b.undeclared)
      err << "warning: " << b.book_id << ": label " << code << " used without declaration\n";
    for (const auto& code : b.unused_declarations())
      err << "warning: " << b.book_id << ": declared character " << code << " never appears\n";
  }
  return in;
}

inline void section(std::ostream& out, const Input& in, const ParsedBook& b) {
  if (!in.single) out << "# " << b.book_id << '\n';
}

inline nlohmann::json book_json(const ParsedBook& b) {
  using nlohmann::json;
  json decls = json::array();
  for (const auto& d : b.declarations) {
    json e{{"code", d.code}, {"name", d.name}};
    e["description"] = d.description ? json(*d.description) : json(nullptr);
    decls.push_back(std::move(e));
  }
  json encounters = json::array();
  for (const auto& rec : b.encounters)
    encounters.push_back({{"scene", rec.scene ? json(*rec.scene) : json(nullptr)}, {"cliques", rec.cliques}});
  return {{"book", b.book_id}, {"declarations", decls}, {"encounters", encounters}, {"undeclared", b.undeclared}};
}

inline std::vector<BookReport> reports_for(const Input& in, const Options& o) {
  std::vector<BookReport> reports;
  for (const auto& b : in.books) reports.push_back(book_report(b, in.genre_of(b), {FitOptions{o.tail_min}}));
  return reports;
}

inline int cmd_parse(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& b : in.books) arr.push_back(book_json(b));
    out << (in.single ? arr.front() : arr).dump(2) << '\n';
    return 0;
  }
  for (const auto& b : in.books) {
    section(out, in, b);
    if (o.edges) {
      out << "u,v,weight\n";
      write_edge_list(out, build_graph(b));
    } else {
      write_book(out, b);
    }
  }
  return 0;
}

inline int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  std::vector<BookReport> rows;
  for (const auto& b : in.books) {
    BookReport r;
    r.book_id = b.book_id;
    r.genre = in.genre_of(b);
    r.global = global_stats(build_graph(b));
    rows.push_back(std::move(r));
  }
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto* r : ordered(rows)) {
      auto row = to_json(*r)["global"];
      row["book"] = r->book_id;
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
  } else {
    write_table1_csv(out, rows);
  }
  return 0;
}

inline int cmd_centrality(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& b : in.books) {
      const auto g = build_graph(b);
      const auto deg = degree_centrality(g);
      const auto clo = closeness_centrality(g);
      const auto lob = lobby_index(g);
      const auto bet = g.node_count() >= 3 ? betweenness_centrality(g).values : std::vector<double>{};
      auto nodes = nlohmann::json::array();
      for (NodeId i = 0; i < g.node_count(); ++i) {
        nodes.push_back({{"node", g.label(i)},
                         {"degree", g.degree(i)},
                         {"degree_norm", deg[i]},
                         {"betweenness_norm", bet.empty() ? nlohmann::json(nullptr) : nlohmann::json(bet[i])},
                         {"closeness_norm", clo[i]},
                         {"lobby_raw", lob.raw[i]},
                         {"lobby_norm", lob.normalized[i]}});
      }
      arr.push_back({{"book", b.book_id}, {"nodes", nodes}});
    }
    out << (in.single ? arr.front() : arr).dump(2) << '\n';
    return 0;
  }
  for (const auto& b : in.books) {
    section(out, in, b);
    write_centrality_csv(out, build_graph(b));
  }
  return 0;
}

inline int cmd_assort(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  auto arr = nlohmann::json::array();
  for (const auto& b : in.books) {
    const auto curve = knn_curve(build_graph(b));
    if (o.format == "json") {
      auto pts = [](const std::vector<KnnPoint>& v) {
        auto a = nlohmann::json::array();
        for (const auto& p : v) a.push_back({p.k, p.knn});
        return a;
      };
      arr.push_back({{"book", b.book_id},
                     {"slope", curve.slope ? nlohmann::json(*curve.slope) : nlohmann::json(nullptr)},
                     {"mixing", mixing_name(curve.mixing())},
                     {"k_max", curve.k_max},
                     {"knn_max", curve.knn_max},
                     {"scatter", pts(curve.normalized_scatter())},
                     {"averaged", pts(curve.normalized_averaged())}});
    } else {
      section(out, in, b);
      write_assortativity_csv(out, curve);
      err << b.book_id << ": slope " << (curve.slope ? format_real(*curve.slope) : "NA") << " ("
          << mixing_name(curve.mixing()) << ")\n";
    }
  }
  if (o.format == "json") out << (in.single ? arr.front() : arr).dump(2) << '\n';
  return 0;
}

inline int cmd_fit(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  int status = 0;
  auto arr = nlohmann::json::array();
  for (const auto& b : in.books) {
    const auto degrees = degree_samples(build_graph(b));
    if (o.ccdf) {
      const auto c = ccdf(degrees);
      if (o.format == "json") {
        auto pts = nlohmann::json::array();
        for (const auto& p : c.points) pts.push_back({p.k, p.p});
        arr.push_back({{"book", b.book_id}, {"ccdf", pts}});
      } else {
        section(out, in, b);
        write_ccdf_csv(out, c);
      }
      continue;
    }
    try {
      const auto fit = fit_power_law(degrees, FitOptions{o.tail_min});
      if (o.format == "json") {
        arr.push_back({{"book", b.book_id},
                       {"alpha", fit.alpha},
                       {"kmin", fit.k_min},
                       {"ks", fit.ks_distance},
                       {"tail_size", fit.tail_size}});
      } else {
        section(out, in, b);
        write_fit_csv(out, fit);
      }
    } catch (const DomainError& e) {
      err << "error: " << b.book_id << ": " << e.what() << '\n';
      status = 1;
    }
  }
  if (o.format == "json" && !arr.empty()) out << (in.single ? arr.front() : arr).dump(2) << '\n';
  return status;
}

inline int cmd_hapax(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  std::vector<BookReport> rows;
  for (const auto& b : in.books) {
    BookReport r;
    r.book_id = b.book_id;
    r.genre = in.genre_of(b);
    r.hapax = hapax_report(b);
    rows.push_back(std::move(r));
  }
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto* r : ordered(rows)) {
      auto row = to_json(*r)["hapax"];
      row["book"] = r->book_id;
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
  } else {
    write_table2_csv(out, rows);
  }
  return 0;
}

inline int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  const auto reports = reports_for(in, o);
  if (o.format == "json")
    out << to_json(reports).dump(2) << '\n';
  else
    write_report_csv(out, reports);
  return 0;
}

inline int cmd_plot(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, err);
  std::vector<PlotSeries> series;
  PlotSpec spec;
  const std::map<std::string, Measure> lobby_pairs{
      {"lobby-degree", Measure::Degree}, {"lobby-betweenness", Measure::Betweenness},
      {"lobby-closeness", Measure::Closeness}};

  if (auto it = lobby_pairs.find(o.kind); it != lobby_pairs.end()) {
    spec = {"Lobby vs " + std::string(measure_name(it->second)), std::string(measure_name(it->second)) + " (norm.)",
            "lobby (norm.)"};
    for (const auto& r : reports_for(in, o)) {
      for (const auto& c : r.correlations) {
        if (c.x_measure != it->second) continue;
        series.push_back({r.book_id + " r=" + (c.r ? format_real(c.r.value(), 3) : std::string("NA")), c.points});
      }
    }
  } else if (o.kind == "assort") {
    spec = {"Assortativity", "k / k_max", "knn / knn_max"};
    for (const auto& b : in.books) {
      const auto curve = knn_curve(build_graph(b));
      PlotSeries scatter{b.book_id, {}}, avg{b.book_id + " <knn>", {}, true};
      for (const auto& p : curve.normalized_scatter()) scatter.points.emplace_back(p.k, p.knn);
      for (const auto& p : curve.normalized_averaged()) avg.points.emplace_back(p.k, p.knn);
      series.push_back(std::move(scatter));
      series.push_back(std::move(avg));
    }
  } else if (o.kind == "ccdf") {
    spec = {"Degree distribution", "k", "P(k)", true, true};
    for (const auto& b : in.books) {
      const auto degrees = degree_samples(build_graph(b));
      PlotSeries s{b.book_id, {}};
      for (const auto& p : ccdf(degrees).points) s.points.emplace_back(p.k, p.p);
      series.push_back(std::move(s));
      try {
        const auto fit = fit_power_law(degrees, FitOptions{o.tail_min});
        const auto c = ccdf(degrees);
        double at_kmin = 1.0;
        for (const auto& p : c.points)
          if (p.k == fit.k_min) at_kmin = p.p;
        const double norm = hurwitz_zeta(fit.alpha, fit.k_min);
        PlotSeries line{b.book_id + " alpha=" + format_real(fit.alpha, 3), {}, true};
        for (const auto& p : c.points)
          if (p.k >= fit.k_min) line.points.emplace_back(p.k, at_kmin * hurwitz_zeta(fit.alpha, p.k) / norm);
        series.push_back(std::move(line));
      } catch (const DomainError& e) {
        err << "warning: " << b.book_id << ": no fit (" << e.what() << ")\n";
      }
    }
  } else if (o.kind == "density-clustering") {
    spec = {"Density vs clustering", "D", "Cc"};
    std::map<int, PlotSeries> by_genre;
    for (const auto& r : reports_for(in, o)) {
      auto& s = by_genre[charnet::detail::genre_rank(r.genre)];
      s.label = charnet::detail::genre_cell(r.genre);
      s.points.emplace_back(r.global.density, r.global.clustering);
    }
    for (auto& [rank, s] : by_genre) series.push_back(std::move(s));
  } else {
    throw UsageError("unknown plot kind '" + o.kind + "'");
  }
  write_svg_scatter(out, spec, series);
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character network analysis for book encounter files", "charnet"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "Directory of *.dat book files");
    sub->add_option("--book", o.book, "Single book file");
    sub->add_option("--genres", o.genres, "CSV map book_id,genre_letter (B/L/F)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to this path instead of stdout");
    sub->add_flag("--strict", o.strict, "Reject labels without a declaration");
    sub->add_option("--tail-min", o.tail_min, "Minimum tail size for power-law fits")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for sampling utilities");
  };

  using Handler = int (*)(const Options&, std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("parse", "Parse books and print the canonical form", detail::cmd_parse)
      ->add_flag("--edges", o.edges, "Print the weighted edge list u,v,weight");
  add("stats", "Global network statistics (N, M, degree, density, clustering)", detail::cmd_stats);
  add("centrality", "Per-node degree, betweenness, closeness and lobby", detail::cmd_centrality);
  add("assort", "Nearest-neighbour degree curve and mixing slope", detail::cmd_assort);
  add("fit", "Discrete power-law fit of the degree distribution", detail::cmd_fit)
      ->add_flag("--ccdf", o.ccdf, "Print the degree CCDF k,P instead of the fit");
  add("hapax", "Hapax legomena of character labels", detail::cmd_hapax);
  add("report", "Full per-book and corpus report", detail::cmd_report);
  add("plot", "SVG dispersion plots", detail::cmd_plot)
      ->add_option("--kind", o.kind,
                   "lobby-degree|lobby-betweenness|lobby-closeness|assort|ccdf|density-clustering");

  std::vector<const char*> argv{"charnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      if (o.out.empty()) return handler(o, out, err);
      std::ostringstream buffer;
      const int status = handler(o, buffer, err);
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw IoError("cannot open output file '" + o.out + "'");
      file << buffer.str();
      if (!file) throw IoError("write failure on '" + o.out + "'");
      return status;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace charnet::cli

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "gis/congruence.hpp"
#include "gis/graph.hpp"
#include "gis/io.hpp"
#include "gis/oracle.hpp"

namespace gis::cli {

  using nlohmann::json;

  namespace {

    struct Options {
      std::string              format = "text";
      std::string              graph_file;
      std::string              triple_file;
      std::vector<std::string> triple_files;
      std::string              x;
      std::string              y;
      std::string              dot_file;
      std::uint64_t            f_cap        = 4;
      std::size_t              len_bound    = 8;
      std::size_t              steps        = 100000;
      std::size_t              max_elements = 20;
      bool                     certify      = false;
      bool                     brute        = false;
    };

    // Raised by subcommands after partial output (e.g. equiv without a
    // certificate), carrying the exit code.
    struct ExitStatus {
      int code;
    };

    json json_list(Graph const& g, std::vector<VertexSet> const& sets) {
      json out = json::array();
      for (auto const& s : sets) {
        out.push_back(to_json(g, s));
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // report
    ////////////////////////////////////////////////////////////////////

    int cmd_report(Options const& o, std::ostream& out) {
      auto const g         = read_graph(o.graph_file);
      auto const hered     = enumerate_hereditary(g);
      auto const vbar      = index_one_vertices(g);
      bool const strongly  = is_strongly_connected(g);
      bool const zero_simp = hered.size() <= 2
                             && std::all_of(hered.begin(), hered.end(),
                                            [&](VertexSet const& h) {
                                              return h.empty()
                                                     || h == g.all_vertices();
                                            });
      bool const rees      = rees_only_condition(g);
      bool const cong_free = is_congruence_free_graph(g);

      if (!o.dot_file.empty()) {
        std::ofstream dot(o.dot_file);
        if (!dot) {
          throw Error("cannot write " + o.dot_file);
        }
        dot << to_dot(g);
      }

      json per_h = json::array();
      for (auto const& h : hered) {
        auto const vh     = index_one_vertices(g, h);
        json       cycles = json::array();
        for (auto const& c : cycles_in(g, vh, h)) {
          cycles.push_back(to_string(g, c.path()));
        }
        per_h.push_back({{"H", to_json(g, h)},
                         {"index_one", to_json(g, vh)},
                         {"cycles", cycles}});
      }

      std::string const free_reason
          = !strongly      ? "not strongly connected"
            : !vbar.empty() ? "vertex " + g.vertex_id(vbar.members().front())
                                  + " has index one"
                            : "strongly connected, no vertex of index one";

      if (o.format == "json") {
        json j;
        j["hereditary"]          = json_list(g, hered);
        j["index_one"]           = to_json(g, vbar);
        j["by_hereditary"]       = per_h;
        j["strongly_connected"]  = strongly;
        j["zero_simple"]         = zero_simp;
        j["rees_only"]           = rees;
        j["congruence_free"]     = cong_free;
        j["congruence_free_reason"] = free_reason;
        out << j.dump(2) << '\n';
        return success;
      }
      out << "vertices: " << g.number_of_vertices()
          << ", edges: " << g.number_of_edges() << '\n';
      out << "hereditary subsets:";
      for (auto const& h : hered) {
        out << ' ' << to_string(g, h);
      }
      out << "\nindex-one vertices: " << to_string(g, vbar) << '\n';
      for (std::size_t i = 0; i < hered.size(); ++i) {
        out << "  H = " << to_string(g, hered[i]) << ": index one in G\\H "
            << to_string(g, index_one_vertices(g, hered[i])) << ", cycles "
            << per_h[i]["cycles"].dump() << '\n';
      }
      auto yes = [](bool b) { return b ? "yes" : "no"; };
      out << "strongly connected: " << yes(strongly) << '\n';
      out << "0-simple (hereditary subsets are only {} and V): "
          << yes(zero_simp) << '\n';
      out << "only Rees congruences (no index-one vertex in G\\H for any hereditary H): "
          << yes(rees) << '\n';
      out << "congruence-free: " << yes(cong_free) << " (" << free_reason
          << ")\n";
      return success;
    }

    ////////////////////////////////////////////////////////////////////
    // equiv / nf
    ////////////////////////////////////////////////////////////////////

    int cmd_equiv(Options const& o, std::ostream& out) {
      auto const g = read_graph(o.graph_file);
      auto const t = read_triple(g, o.triple_file);
      auto const x = parse_element(g, o.x);
      auto const y = parse_element(g, o.y);
      TripleCongruence const rho(g, t);
      bool const             related = rho.contains(x, y);

      std::optional<TransitionResult> cert;
      if (o.certify && related) {
        cert = transition_reachable(g, t, x, y, o.len_bound, o.steps);
      }
      if (o.format == "json") {
        json j = {{"x", to_string(g, x)},
                  {"y", to_string(g, y)},
                  {"related", related}};
        if (cert) {
          json chain = json::array();
          for (auto const& z : cert->chain) {
            chain.push_back(to_string(g, z));
          }
          j["certificate"] = {{"found", cert->reached}, {"chain", chain}};
        }
        out << j.dump(2) << '\n';
      } else {
        out << (related ? "true" : "false") << '\n';
        if (cert) {
          if (cert->reached) {
            out << "certificate:";
            for (auto const& z : cert->chain) {
              out << ' ' << to_string(g, z);
            }
            out << '\n';
          } else {
            out << "certificate: none within length " << o.len_bound
                << " and " << o.steps << " steps\n";
          }
        }
      }
      if (cert && !cert->reached) {
        return inconclusive;
      }
      return success;
    }

    int cmd_nf(Options const& o, std::ostream& out) {
      auto const g  = read_graph(o.graph_file);
      auto const t  = read_triple(g, o.triple_file);
      auto const x  = parse_element(g, o.x);
      auto const nf = normal_form(g, t, x);
      if (o.format == "json") {
        out << json{{"input", to_string(g, x)}, {"normal_form", to_string(g, nf)}}
                   .dump(2)
            << '\n';
      } else {
        out << to_string(g, nf) << '\n';
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////
    // enumerate
    ////////////////////////////////////////////////////////////////////

    struct BruteForce {
      std::size_t congruences = 0;
      bool        bijection   = false;
    };

    BruteForce brute_force(Graph const& g, TripleEnumeration const& e,
                           std::size_t max_elements) {
      auto const s     = materialize(g);
      auto const cong  = enumerate_congruences(s, max_elements);
      BruteForce result{cong.size(), cong.size() == e.triples.size()};
      std::vector<CongruenceTriple> images;
      for (auto const& rho : cong) {
        auto t = triple_of_congruence(g, s, rho);
        if (!validate_triple(g, t)
            || congruence_closure(s, generating_pairs(g, t)) != rho) {
          result.bijection = false;
        }
        images.push_back(std::move(t));
      }
      for (auto const& t : e.triples) {
        if (std::count(images.begin(), images.end(), t) != 1) {
          result.bijection = false;
        }
      }
      return result;
    }

    int cmd_enumerate(Options const& o, std::ostream& out) {
      auto const g = read_graph(o.graph_file);
      if (o.brute && !is_acyclic(g)) {
        throw Error("--brute needs an acyclic graph: with a cycle the "
                    "semigroup is infinite and cannot be materialized");
      }
      auto const e = enumerate_triples(g, o.f_cap);
      std::optional<BruteForce> brute;
      if (o.brute) {
        brute = brute_force(g, e, o.max_elements);
      }
      if (o.format == "json") {
        json j;
        j["f_cap"]           = o.f_cap;
        j["infinite_family"] = e.infinite_family;
        j["triples"]         = json::array();
        for (auto const& t : e.triples) {
          j["triples"].push_back(to_json(g, t));
        }
        if (brute) {
          j["brute"] = {{"congruences", brute->congruences},
                        {"bijection", brute->bijection}};
        }
        out << j.dump(2) << '\n';
      } else {
        out << e.triples.size() << " triples";
        if (e.infinite_family) {
          out << " with f-values <= " << o.f_cap
              << " or inf (infinite family: some C(W) is nonempty)";
        }
        out << '\n';
        for (auto const& t : e.triples) {
          out << "  " << to_string(g, t) << '\n';
        }
        if (brute) {
          out << "brute force: " << brute->congruences << " congruences = "
              << e.triples.size() << " triples, bijection "
              << (brute->bijection ? "verified" : "FAILED") << '\n';
        }
      }
      if (brute && !brute->bijection) {
        throw ExitStatus{invalid_input};
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////
    // triples
    ////////////////////////////////////////////////////////////////////

    int cmd_triples(Options const& o, std::ostream& out) {
      auto const g = read_graph(o.graph_file);
      std::vector<CongruenceTriple> ts;
      for (auto const& f : o.triple_files) {
        ts.push_back(read_triple(g, f));
      }
      json j = json::array();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        json pairs = json::array();
        for (auto const& [a, b] : generating_pairs(g, ts[i])) {
          pairs.push_back({to_string(g, a), to_string(g, b)});
        }
        json leq = json::array();
        for (std::size_t k = 0; k < ts.size(); ++k) {
          leq.push_back(triple_leq(g, ts[i], ts[k]));
        }
        j.push_back({{"file", o.triple_files[i]},
                     {"triple", to_json(g, ts[i])},
                     {"generators", pairs},
                     {"leq", leq}});
      }
      bool increasing = true;
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        increasing = increasing && triple_leq(g, ts[i], ts[i + 1]);
      }
      std::optional<Stabilization> stab;
      if (increasing && !ts.empty()) {
        stab = chain_stabilizes(g, ts);
      }

      if (o.format == "json") {
        json doc = {{"triples", j}, {"chain_increasing", increasing}};
        if (stab) {
          doc["stabilization_index"] = stab->index;
          doc["stabilization_witnessed"] = stab->witnessed;
        }
        out << doc.dump(2) << '\n';
        return success;
      }
      for (std::size_t i = 0; i < ts.size(); ++i) {
        out << o.triple_files[i] << ": valid " << to_string(g, ts[i]) << '\n';
        out << "  generators:";
        for (auto const& p : j[i]["generators"]) {
          out << " (" << p[0].get<std::string>() << ", "
              << p[1].get<std::string>() << ")";
        }
        out << "\n  <= :";
        for (std::size_t k = 0; k < ts.size(); ++k) {
          if (j[i]["leq"][k].get<bool>()) {
            out << ' ' << o.triple_files[k];
          }
        }
        out << '\n';
      }
      if (stab) {
        out << "chain stabilizes at index " << stab->index
            << (stab->witnessed ? "" : " (final value not repeated)") << '\n';
      } else if (ts.size() > 1) {
        out << "files do not form an increasing chain\n";
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////
    // oracle
    ////////////////////////////////////////////////////////////////////

    int cmd_oracle(Options const& o, std::ostream& out) {
      auto const g = read_graph(o.graph_file);
      if (!o.triple_file.empty()) {
        if (o.x.empty() || o.y.empty()) {
          throw Error("--triple needs both --x and --y");
        }
        auto const t = read_triple(g, o.triple_file);
        auto const x = parse_element(g, o.x);
        auto const y = parse_element(g, o.y);
        auto const r = transition_reachable(g, t, x, y, o.len_bound, o.steps);
        json       chain = json::array();
        for (auto const& z : r.chain) {
          chain.push_back(to_string(g, z));
        }
        if (o.format == "json") {
          out << json{{"reached", r.reached},
                      {"chain", chain},
                      {"expanded", r.expanded}}
                     .dump(2)
              << '\n';
        } else if (r.reached) {
          out << "reached in " << (r.chain.size() - 1) << " steps:";
          for (auto const& z : r.chain) {
            out << ' ' << to_string(g, z);
          }
          out << '\n';
        } else {
          out << "not within bounds (length " << o.len_bound << ", "
              << o.steps << " steps)\n";
        }
        return r.reached ? success : inconclusive;
      }

      auto const s    = materialize(g);
      auto const cong = enumerate_congruences(s, o.max_elements);
      json       list = json::array();
      for (auto const& rho : cong) {
        json classes = json::array();
        for (auto const& cls : rho.classes()) {
          json c = json::array();
          for (auto i : cls) {
            c.push_back(to_string(g, s.element(
                                         static_cast<FiniteSemigroup::index_type>(i))));
          }
          classes.push_back(c);
        }
        list.push_back({{"classes", classes},
                        {"triple", to_json(g, triple_of_congruence(g, s, rho))}});
      }
      if (o.format == "json") {
        json elements = json::array();
        for (auto const& x : s.elements()) {
          elements.push_back(to_string(g, x));
        }
        out << json{{"elements", elements},
                    {"associative", is_associative(s)},
                    {"congruences", list}}
                   .dump(2)
            << '\n';
        return success;
      }
      out << s.size() << " elements:";
      for (auto const& x : s.elements()) {
        out << ' ' << to_string(g, x);
      }
      out << "\nassociative: " << (is_associative(s) ? "yes" : "no") << '\n';
      out << cong.size() << " congruences\n";
      for (std::size_t i = 0; i < cong.size(); ++i) {
        out << "  " << to_string(g, triple_of_congruence(g, s, cong[i])) << ":";
        for (auto const& cls : list[i]["classes"]) {
          out << ' ' << cls.dump();
        }
        out << '\n';
      }
      return success;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Congruences on graph inverse semigroups", "gis"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_bounds = [&](CLI::App* sub) {
      sub->add_option("--len-bound", o.len_bound,
                      "Longest path in transition search")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--steps", o.steps, "Elements expanded by the search")
          ->check(CLI::PositiveNumber);
    };

    auto* report = app.add_subcommand("report", "Graph-side facts and predicates");
    report->add_option("graph", o.graph_file, "Graph JSON")->required();
    report->add_option("--dot", o.dot_file, "Also write the graph as DOT");
    add_format(report);

    auto* eq = app.add_subcommand("equiv", "Decide whether x and y are related");
    eq->add_option("graph", o.graph_file, "Graph JSON")->required();
    eq->add_option("triple", o.triple_file, "Triple JSON")->required();
    eq->add_option("x", o.x, "Element literal")->required();
    eq->add_option("y", o.y, "Element literal")->required();
    eq->add_flag("--certify", o.certify,
                 "Search for a chain of elementary transitions");
    add_bounds(eq);
    add_format(eq);

    auto* nf = app.add_subcommand("nf", "Normal form of an element");
    nf->add_option("graph", o.graph_file, "Graph JSON")->required();
    nf->add_option("triple", o.triple_file, "Triple JSON")->required();
    nf->add_option("x", o.x, "Element literal")->required();
    add_format(nf);

    auto* en = app.add_subcommand("enumerate", "List congruence triples");
    en->add_option("graph", o.graph_file, "Graph JSON")->required();
    en->add_option("--f-cap", o.f_cap, "Largest finite f-value listed")
        ->check(CLI::PositiveNumber);
    en->add_flag("--brute", o.brute,
                 "Also enumerate congruences of the finite semigroup");
    en->add_option("--max-elements", o.max_elements,
                   "Largest semigroup enumerated by --brute");
    add_format(en);

    auto* tr = app.add_subcommand("triples", "Validate and compare triples");
    tr->add_option("graph", o.graph_file, "Graph JSON")->required();
    tr->add_option("triple", o.triple_files, "Triple JSON files")
        ->required();
    add_format(tr);

    auto* orc = app.add_subcommand("oracle", "Brute-force ground truth");
    orc->add_option("graph", o.graph_file, "Graph JSON")->required();
    orc->add_option("--triple", o.triple_file, "Triple for a transition search");
    orc->add_option("--x", o.x, "Element literal");
    orc->add_option("--y", o.y, "Element literal");
    orc->add_option("--max-elements", o.max_elements,
                    "Largest semigroup enumerated");
    add_bounds(orc);
    add_format(orc);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      // prints help to out and parse errors to err
      return app.exit(e, out, err) == 0 ? success : invalid_input;
    }

    try {
      if (report->parsed()) {
        return cmd_report(o, out);
      }
      if (eq->parsed()) {
        return cmd_equiv(o, out);
      }
      if (nf->parsed()) {
        return cmd_nf(o, out);
      }
      if (en->parsed()) {
        return cmd_enumerate(o, out);
      }
      if (tr->parsed()) {
        return cmd_triples(o, out);
      }
      return cmd_oracle(o, out);
    } catch (ExitStatus const& s) {
      return s.code;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return invalid_input;
    } catch (nlohmann::json::exception const& e) {
      err << "error: " << e.what() << '\n';
      return invalid_input;
    }
  }

}  // namespace gis::cli

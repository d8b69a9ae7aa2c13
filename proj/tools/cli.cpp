#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <stdexcept>

#include "graphprod/canonical.hpp"
#include "graphprod/error.hpp"
#include "graphprod/graph_io.hpp"
#include "graphprod/isomorphism.hpp"
#include "graphprod/oracle.hpp"
#include "graphprod/word.hpp"

namespace graphprod::cli {

namespace {

// Parse failures inside a named input, reported with the input's name.
struct InputError {
  std::string where;
  ParseError error;
};

LabeledGraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw InputError{path, e};
  }
}

Word load_word(const ContextPtr& ctx, const std::string& text) {
  try {
    return parse_word(ctx, text);
  } catch (const ParseError& e) {
    throw InputError{"word", e};
  }
}

std::string format_set(const VertexSet& vs) {
  std::string out = "{";
  for (const auto& v : vs) {
    if (out.size() > 1) out += ", ";
    out += v;
  }
  return out + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graph products of finitely-generated abelian groups"};
  app.name("graphprod");
  app.require_subcommand(1);

  std::string graph_path, graph2_path, word_text;
  std::size_t radius = 0;
  BallOptions ball_options;
  bool minimal = false;
  std::function<int()> action;

  auto word_command = [&](const std::string& name, const std::string& help,
                          std::function<int(const Word&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_path, "labeled-graph file")->required();
    sub->add_option("word", word_text, "word, e.g. \"a b^-1 a^3\"")
        ->required();
    sub->callback([&, body] {
      action = [&, body] {
        auto ctx = Context::make(load_graph(graph_path));
        return body(load_word(ctx, word_text));
      };
    });
    return sub;
  };
  auto graph_command = [&](const std::string& name, const std::string& help,
                           std::function<int(const LabeledGraph&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_path, "labeled-graph file")->required();
    sub->callback([&, body] {
      action = [&, body] { return body(load_graph(graph_path)); };
    });
    return sub;
  };

  word_command("reduce", "reduced form of a word", [&](const Word& w) {
    out << normal_form(reduce(w)).to_string() << "\n";
    return kOk;
  });
  word_command("nf", "normal form of a word", [&](const Word& w) {
    out << normal_form(w).to_string() << "\n";
    return kOk;
  });
  word_command("support", "support of an element", [&](const Word& w) {
    out << format_set(support(w)) << "\n";
    return kOk;
  });
  word_command("cyclic-reduce", "shortest conjugate and its conjugator",
               [&](const Word& w) {
                 if (minimal) {
                   out << minimal_conjugacy_rep(w).to_string() << "\n";
                   return kOk;
                 }
                 auto r = cyclically_reduce(w);
                 out << "conjugator: " << r.conjugator.to_string() << "\n"
                     << "core: " << r.core.to_string() << "\n";
                 return kOk;
               })
      ->add_flag("--minimal", minimal,
                 "print only the minimal conjugacy representative (finite "
                 "order elements)");
  word_command("centralizer", "star subgraph generating the centralizer",
               [&](const Word& w) {
                 out << serialize(centralizer_of_cp(w));
                 return kOk;
               });
  word_command("order", "order of an element", [&](const Word& w) {
    out << element_order(w).to_string() << "\n";
    return kOk;
  });

  graph_command("refine", "split labels into indecomposable cyclic factors",
                [&](const LabeledGraph& g) {
                  out << serialize(refine(g));
                  return kOk;
                });
  graph_command("t0", "T0-quotient", [&](const LabeledGraph& g) {
    out << serialize(t0_quotient(g));
    return kOk;
  });
  graph_command("canonical", "canonical indecomposable-cyclic decomposition",
                [&](const LabeledGraph& g) {
                  out << serialize(canonical_indecomposable(g));
                  return kOk;
                });
  graph_command("canonical-t0", "canonical T0 abelian decomposition",
                [&](const LabeledGraph& g) {
                  out << serialize(canonical_t0_abelian(g));
                  return kOk;
                });
  graph_command("maxfinite",
                "representatives of maximal finite subgroups up to conjugacy",
                [&](const LabeledGraph& g) {
                  for (const auto& clique : maximal_finite_reps(g)) {
                    std::string line;
                    for (const auto& v : clique)
                      line += (line.empty() ? "" : " ") + v;
                    out << line << "\n";
                  }
                  return kOk;
                });

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two groups");
  iso->add_option("graph1", graph_path, "labeled-graph file")->required();
  iso->add_option("graph2", graph2_path, "labeled-graph file")->required();
  iso->callback([&] {
    action = [&] {
      auto witness =
          groups_isomorphic(load_graph(graph_path), load_graph(graph2_path));
      if (!witness) {
        out << "NOT ISOMORPHIC\n";
        return kNegative;
      }
      for (const auto& [u, v] : witness->mapping)
        out << u << " -> " << v << "\n";
      return kOk;
    };
  });

  auto* ball = app.add_subcommand("ball", "cumulative ball sizes by radius");
  ball->add_option("graph", graph_path, "labeled-graph file")->required();
  ball->add_option("radius", radius, "radius")->required();
  ball->add_option("--radius-cap", ball_options.radius_cap,
                   "largest radius accepted")
      ->capture_default_str();
  ball->callback([&] {
    action = [&] {
      auto b = enumerate_ball(load_graph(graph_path), radius, ball_options);
      for (std::size_t r = 0; r < b.sizes().size(); ++r)
        out << r << " " << b.sizes()[r] << "\n";
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.where << ": " << e.error.what() << "\n";
    return kParseError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const std::runtime_error& e) {
    // Unreadable input files.
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }
}

}  // namespace graphprod::cli

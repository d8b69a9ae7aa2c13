#include "graphprod/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "checked.hpp"
#include "graphprod/error.hpp"
#include "graphprod/graph_io.hpp"
#include "word_internal.hpp"

namespace graphprod {

// ---------------------------------------------------------------------------
// Context

Context::Context(LabeledGraph graph) : graph_(std::move(graph)) {
  for (VertexIndex v = 0; v < graph_.size(); ++v) {
    const AbelianLabel& label = graph_.label(v);
    if (!label.is_cyclic())
      throw std::invalid_argument("vertex '" + graph_.name(v) + "' has group " +
                                  label.to_string() +
                                  ", which is not cyclic; refine the graph "
                                  "before computing with words");
    CyclicFactor f = label.as_cyclic();
    if (f.order() > static_cast<Order>(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("vertex order of '" + graph_.name(v) +
                                "' too large for word arithmetic");
    orders_.push_back(f.order());
  }
  std::vector<VertexIndex> by_name(graph_.size());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(), [&](VertexIndex a, VertexIndex b) {
    return graph_.name(a) < graph_.name(b);
  });
  name_rank_.resize(graph_.size());
  for (std::size_t r = 0; r < by_name.size(); ++r) name_rank_[by_name[r]] = r;
}

std::shared_ptr<const Context> Context::make(LabeledGraph graph) {
  return std::shared_ptr<const Context>(new Context(std::move(graph)));
}

std::int64_t Context::normalize(VertexIndex v, std::int64_t exponent) const {
  Order n = orders_[v];
  if (n == 0) return exponent;
  auto m = static_cast<std::int64_t>(n);
  std::int64_t r = exponent % m;
  return r < 0 ? r + m : r;
}

std::uint64_t Context::letter_length(VertexIndex v,
                                     std::int64_t exponent) const {
  Order n = orders_[v];
  std::uint64_t magnitude =
      exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent)
                   : static_cast<std::uint64_t>(exponent);
  if (n == 0) return magnitude;
  auto k = static_cast<std::uint64_t>(normalize(v, exponent));
  return std::min(k, n - k);
}

// ---------------------------------------------------------------------------
// Syllable-level algorithms

namespace detail {

std::int64_t add_exponents(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("exponent arithmetic overflows 64 bits");
  return out;
}

void push_reduced(const Context& ctx, Syllables& out, Syllable s) {
  for (std::size_t j = out.size(); j-- > 0;) {
    VertexIndex u = out[j].vertex;
    if (u == s.vertex) {
      std::int64_t e =
          ctx.normalize(u, add_exponents(out[j].exponent, s.exponent));
      if (e == 0)
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
      else
        out[j].exponent = e;
      return;
    }
    if (!ctx.commute(u, s.vertex)) break;
  }
  out.push_back(s);
}

Syllables reduced(const Context& ctx, const Syllables& in) {
  Syllables out;
  out.reserve(in.size());
  for (const Syllable& s : in) push_reduced(ctx, out, s);
  return out;
}

Syllables lex_order(const Context& ctx, Syllables rest) {
  Syllables out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    VertexMask seen = 0;
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      VertexIndex v = rest[i].vertex;
      if ((seen & ~ctx.graph().neighbors(v)) == 0 &&
          (best == rest.size() ||
           ctx.name_rank(v) < ctx.name_rank(rest[best].vertex)))
        best = i;
      seen |= bit(v);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Syllables normal_syllables(const Context& ctx, const Syllables& in) {
  return lex_order(ctx, reduced(ctx, in));
}

Syllables inverse_syllables(const Context& ctx, const Syllables& in) {
  Syllables out;
  out.reserve(in.size());
  for (auto it = in.rbegin(); it != in.rend(); ++it) {
    if (it->exponent == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("exponent arithmetic overflows 64 bits");
    out.push_back({it->vertex, ctx.normalize(it->vertex, -it->exponent)});
  }
  return out;
}

std::uint64_t letter_length(const Context& ctx, const Syllables& in) {
  std::uint64_t total = 0;
  for (const Syllable& s : in) total += ctx.letter_length(s.vertex, s.exponent);
  return total;
}

}  // namespace detail

using detail::Syllables;

// ---------------------------------------------------------------------------
// Word

Word::Word(ContextPtr context, std::vector<Syllable> syllables)
    : context_(std::move(context)) {
  if (!context_) throw std::invalid_argument("word without a context");
  syllables_.reserve(syllables.size());
  for (Syllable s : syllables) {
    if (s.vertex >= context_->size())
      throw std::invalid_argument("syllable vertex index " +
                                  std::to_string(s.vertex) +
                                  " outside the context");
    s.exponent = context_->normalize(s.vertex, s.exponent);
    if (s.exponent != 0) syllables_.push_back(s);
  }
}

Word Word::letter(ContextPtr context, VertexIndex v, std::int64_t exponent) {
  return Word(std::move(context), {{v, exponent}});
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const Syllable& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += context_->graph().name(s.vertex);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.syllables_ == b.syllables_ &&
         (a.context_ == b.context_ || *a.context_ == *b.context_);
}

Word parse_word(const ContextPtr& context, std::string_view text) {
  std::vector<Syllable> syllables;
  std::size_t i = 0;
  std::size_t tokens = 0;
  bool saw_identity = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view token = text.substr(start, i - start);
    ++tokens;
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    std::size_t caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    if (!is_valid_vertex_name(name))
      throw ParseError("invalid generator '" + std::string(name) + "'", 0,
                       start + 1);
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      std::size_t col = start + caret + 2;
      if (digits.empty() || ptr != last || ec != std::errc())
        throw ParseError("malformed exponent '" + std::string(digits) + "'", 0,
                         col);
      if (exponent == 0) throw ParseError("exponent must be non-zero", 0, col);
    }
    syllables.push_back({context->graph().index_of(name), exponent});
  }
  if (saw_identity && tokens > 1)
    throw ParseError("'1' must appear alone", 0, 1);
  return Word(context, std::move(syllables));
}

std::uint64_t letter_length(const Word& w) {
  return detail::letter_length(w.context(), w.syllables());
}

std::uint64_t geodesic_length(const Word& w) {
  return detail::letter_length(w.context(),
                               detail::reduced(w.context(), w.syllables()));
}

Word reduce(const Word& w) {
  return Word(w.context_ptr(), detail::reduced(w.context(), w.syllables()));
}

Word normal_form(const Word& w) {
  return Word(w.context_ptr(),
              detail::normal_syllables(w.context(), w.syllables()));
}

namespace {

void require_same_context(const Word& a, const Word& b) {
  if (a.context_ptr() != b.context_ptr() && !(a.context() == b.context()))
    throw std::invalid_argument("words belong to different graph products");
}

}  // namespace

Word multiply(const Word& a, const Word& b) {
  require_same_context(a, b);
  Syllables s = a.syllables();
  s.insert(s.end(), b.syllables().begin(), b.syllables().end());
  return Word(a.context_ptr(), detail::normal_syllables(a.context(), s));
}

Word invert(const Word& w) {
  return Word(w.context_ptr(),
              detail::lex_order(w.context(),
                                detail::inverse_syllables(
                                    w.context(),
                                    detail::reduced(w.context(),
                                                    w.syllables()))));
}

bool equal(const Word& a, const Word& b) {
  return multiply(a, invert(b)).empty();
}

VertexMask support_mask(const Word& w) {
  VertexMask m = 0;
  for (const Syllable& s : detail::reduced(w.context(), w.syllables()))
    m |= bit(s.vertex);
  return m;
}

VertexSet support(const Word& w) {
  return w.context().graph().names_of(support_mask(w));
}

// ---------------------------------------------------------------------------
// Conjugacy

CyclicReduction cyclically_reduce(const Word& w) {
  const Context& ctx = w.context();
  const LabeledGraph& g = ctx.graph();
  Syllables core = detail::normal_syllables(ctx, w.syllables());
  Syllables conjugator;

  // A syllable that can be shuffled to the front and a distinct one of the
  // same vertex that can be shuffled to the back merge under conjugation;
  // each step removes at least one syllable and never adds letters.
  while (true) {
    std::vector<bool> front(core.size()), back(core.size());
    VertexMask seen = 0;
    for (std::size_t i = 0; i < core.size(); ++i) {
      VertexIndex v = core[i].vertex;
      front[i] = (seen & ~g.neighbors(v)) == 0;
      seen |= bit(v);
    }
    seen = 0;
    for (std::size_t i = core.size(); i-- > 0;) {
      VertexIndex v = core[i].vertex;
      back[i] = (seen & ~g.neighbors(v)) == 0;
      seen |= bit(v);
    }
    std::optional<std::size_t> pick;
    for (std::size_t f = 0; f < core.size() && !pick; ++f) {
      if (!front[f]) continue;
      for (std::size_t b = 0; b < core.size(); ++b)
        if (b != f && back[b] && core[b].vertex == core[f].vertex) {
          pick = f;
          break;
        }
    }
    if (!pick) break;

    Syllable s = core[*pick];
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(*pick));
    detail::push_reduced(ctx, core, s);
    core = detail::lex_order(ctx, std::move(core));
    detail::push_reduced(ctx, conjugator, s);
  }
  return {Word(w.context_ptr(), detail::lex_order(ctx, std::move(conjugator))),
          Word(w.context_ptr(), std::move(core))};
}

VertexSet cyclic_support(const Word& w) {
  return support(cyclically_reduce(w).core);
}

bool is_cp(const Word& w) {
  return is_clique(w.context().graph(), support_mask(w));
}

LabeledGraph centralizer_of_cp(const Word& w) {
  const LabeledGraph& g = w.context().graph();
  VertexMask supp = support_mask(w);
  if (supp == 0)
    throw std::invalid_argument(
        "centralizer requested for the identity; it is the whole group");
  if (!is_clique(g, supp))
    throw std::invalid_argument(
        "element " + normal_form(w).to_string() +
        " is not a CP element (its support does not span a clique); "
        "conjugate it into a clique subgroup first");
  return full_subgraph(g, star_mask(g, supp));
}

std::string ElementOrder::to_string() const {
  return value_ ? std::to_string(*value_) : "infinite";
}

ElementOrder element_order(const Word& w) {
  const Context& ctx = w.context();
  Word core = cyclically_reduce(w).core;
  VertexMask supp = support_mask(core);
  if (!is_clique(ctx.graph(), supp)) return ElementOrder::infinite();
  Order order = 1;
  for (const Syllable& s : core.syllables()) {
    Order n = ctx.order(s.vertex);
    if (n == 0) return ElementOrder::infinite();
    auto e = static_cast<Order>(s.exponent);
    order = detail::checked_lcm(order, n / std::gcd(n, e));
  }
  return ElementOrder::finite(order);
}

Word minimal_conjugacy_rep(const Word& w) {
  if (element_order(w).is_infinite())
    throw std::invalid_argument(
        "minimal conjugacy representative is only defined for elements of "
        "finite order; " +
        normal_form(w).to_string() + " has infinite order");
  return cyclically_reduce(w).core;
}

// ---------------------------------------------------------------------------
// Torsion / Artin structure

std::pair<LabeledGraph, LabeledGraph> torsion_artin_split(
    const LabeledGraph& g) {
  VertexMask torsion = 0;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (!is_indecomposable(g.label(v)))
      throw std::invalid_argument(
          "vertex '" + g.name(v) + "' has group " + g.label(v).to_string() +
          ", which is not directly indecomposable; refine the graph first");
    if (g.label(v).free_rank() == 0) torsion |= bit(v);
  }
  return {full_subgraph(g, torsion), full_subgraph(g, g.all() & ~torsion)};
}

Word retract_to_artin(const Word& w) {
  const Context& ctx = w.context();
  const LabeledGraph& g = ctx.graph();
  VertexMask artin = 0;
  std::vector<VertexIndex> new_index(g.size());
  VertexIndex next = 0;
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (!ctx.is_torsion(v)) {
      artin |= bit(v);
      new_index[v] = next++;
    }
  ContextPtr target = Context::make(full_subgraph(g, artin));
  Syllables kept;
  for (const Syllable& s : w.syllables())
    if (!ctx.is_torsion(s.vertex))
      kept.push_back({new_index[s.vertex], s.exponent});
  return Word(target, detail::normal_syllables(*target, kept));
}

std::vector<VertexSet> maximal_finite_reps(const LabeledGraph& g) {
  return maximal_cliques(torsion_artin_split(g).first);
}

}  // namespace graphprod

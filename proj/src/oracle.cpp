#include "graphprod/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "word_internal.hpp"

namespace graphprod {

namespace {

std::string key_of(const detail::Syllables& normal) {
  std::string key(normal.size() * (1 + sizeof(std::int64_t)), '\0');
  char* out = key.data();
  for (const Syllable& s : normal) {
    *out++ = static_cast<char>(s.vertex);
    std::memcpy(out, &s.exponent, sizeof s.exponent);
    out += sizeof s.exponent;
  }
  return key;
}

}  // namespace

std::string element_key(const Word& w) {
  return key_of(detail::normal_syllables(w.context(), w.syllables()));
}

std::optional<std::size_t> Ball::distance_of(const Word& w) const {
  auto it = index_.find(element_key(w));
  if (it == index_.end()) return std::nullopt;
  return distance_[it->second];
}

Ball enumerate_ball(const ContextPtr& context, std::size_t radius,
                    const BallOptions& options) {
  if (radius > options.radius_cap)
    throw std::out_of_range("radius " + std::to_string(radius) +
                            " exceeds the cap of " +
                            std::to_string(options.radius_cap));
  const Context& ctx = *context;
  const LabeledGraph& g = ctx.graph();
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (!is_indecomposable(g.label(v)))
      throw std::invalid_argument("ball enumeration needs indecomposable "
                                  "cyclic vertex groups; vertex '" +
                                  g.name(v) + "' has " +
                                  g.label(v).to_string());

  std::vector<Syllable> letters;
  for (VertexIndex v = 0; v < ctx.size(); ++v) {
    letters.push_back({v, ctx.normalize(v, 1)});
    if (ctx.normalize(v, -1) != ctx.normalize(v, 1))
      letters.push_back({v, ctx.normalize(v, -1)});
  }

  Ball ball;
  ball.context_ = context;
  ball.radius_ = radius;
  ball.elements_.emplace_back(context);
  ball.distance_.push_back(0);
  ball.index_.emplace(std::string(), 0);
  ball.sizes_.push_back(1);

  std::size_t frontier_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t frontier_end = ball.elements_.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Syllable& letter : letters) {
        detail::Syllables s = ball.elements_[i].syllables();
        detail::push_reduced(ctx, s, letter);
        s = detail::lex_order(ctx, std::move(s));
        auto [it, inserted] =
            ball.index_.emplace(key_of(s), ball.elements_.size());
        if (!inserted) continue;
        if (ball.elements_.size() >= options.max_elements)
          throw std::out_of_range("ball exceeds " +
                                  std::to_string(options.max_elements) +
                                  " elements");
        ball.elements_.emplace_back(context, std::move(s));
        ball.distance_.push_back(r);
      }
    }
    frontier_begin = frontier_end;
    ball.sizes_.push_back(ball.elements_.size());
  }
  return ball;
}

Ball enumerate_ball(const LabeledGraph& g, std::size_t radius,
                    const BallOptions& options) {
  return enumerate_ball(Context::make(g), radius, options);
}

std::size_t conjugacy_min_length(const Ball& ball, const Word& w) {
  const Context& ctx = *ball.context();
  if (!(w.context() == ctx))
    throw std::invalid_argument("word and ball belong to different groups");
  detail::Syllables base = detail::reduced(ctx, w.syllables());
  std::size_t best = detail::letter_length(ctx, base);
  for (const Word& x : ball.elements()) {
    detail::Syllables s = detail::inverse_syllables(ctx, x.syllables());
    for (const Syllable& t : base) detail::push_reduced(ctx, s, t);
    for (const Syllable& t : x.syllables()) detail::push_reduced(ctx, s, t);
    best = std::min<std::size_t>(best, detail::letter_length(ctx, s));
  }
  return best;
}

std::size_t conjugacy_min_length(const LabeledGraph& g, const Word& w,
                                 std::size_t radius,
                                 const BallOptions& options) {
  return conjugacy_min_length(enumerate_ball(g, radius, options), w);
}

std::vector<Word> commutation_table(const Ball& ball, const Word& u) {
  const Context& ctx = *ball.context();
  if (!(u.context() == ctx))
    throw std::invalid_argument("word and ball belong to different groups");
  detail::Syllables base = detail::reduced(ctx, u.syllables());
  std::vector<Word> out;
  for (const Word& x : ball.elements()) {
    detail::Syllables xu = x.syllables();
    for (const Syllable& t : base) detail::push_reduced(ctx, xu, t);
    detail::Syllables ux = base;
    for (const Syllable& t : x.syllables()) detail::push_reduced(ctx, ux, t);
    if (detail::lex_order(ctx, std::move(xu)) ==
        detail::lex_order(ctx, std::move(ux)))
      out.push_back(x);
  }
  return out;
}

std::vector<Word> commutation_table(const LabeledGraph& g, const Word& u,
                                    std::size_t radius,
                                    const BallOptions& options) {
  return commutation_table(enumerate_ball(g, radius, options), u);
}

}  // namespace graphprod

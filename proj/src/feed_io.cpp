#include "cvq/feed_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cvq {

using nlohmann::json;

std::string seed_to_json(const Seed& s) {
  json j;
  j["n"] = s.feed.n;
  j["epsilon"] = s.feed.eps;
  j["d"] = s.feed.d;
  j["kind"] = seed_kind_name(s.kind);
  j["labels"] = s.labels;
  return j.dump(2);
}

Seed seed_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("n") || !j.contains("epsilon"))
    throw std::invalid_argument("seed_from_json: need at least n and epsilon");
  int n = j["n"].get<int>();
  auto eps = j["epsilon"].get<std::vector<std::int64_t>>();
  std::vector<std::int64_t> d(static_cast<size_t>(n), 1);
  if (j.contains("d")) d = j["d"].get<std::vector<std::int64_t>>();
  SeedKind kind = SeedKind::X;
  if (j.contains("kind")) {
    std::string k = j["kind"].get<std::string>();
    if (k == "A") kind = SeedKind::A;
    else if (k == "X") kind = SeedKind::X;
    else if (k == "D") kind = SeedKind::D;
    else throw std::invalid_argument("seed_from_json: unknown kind " + k);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return make_seed(make_feed(n, std::move(eps), std::move(d)), kind, std::move(labels));
}

static Seed builtin_seed(const std::string& name) {
  auto xseed = [](Feed f) { return make_seed(std::move(f), SeedKind::X); };
  if (name == "a1xa1") return xseed(embed_rank2(2, 0, 1, Rank2Type::A1xA1, {1, 1}));
  if (name == "a2") return xseed(embed_rank2(2, 0, 1, Rank2Type::A2, {1, 1}));
  if (name == "b2") return xseed(embed_rank2(2, 0, 1, Rank2Type::B2, {1, 2}));
  if (name == "g2") return xseed(embed_rank2(2, 0, 1, Rank2Type::G2, {1, 3}));
  if (name == "markov")
    return xseed(make_feed(3, {0, 2, -2, -2, 0, 2, 2, -2, 0}, {1, 1, 1}));
  if (name == "a2x3")
    return xseed(embed_rank2(3, 0, 1, Rank2Type::A2, {1, 1, 1}, {{2, 0, 1}}));
  if (name == "b2x3")
    return xseed(embed_rank2(3, 0, 1, Rank2Type::B2, {1, 2, 1}, {{2, 0, 1}}));
  if (name == "g2x3")
    return xseed(embed_rank2(3, 0, 1, Rank2Type::G2, {1, 3, 1}, {{2, 1, 3}}));
  if (name == "a2x5")
    return xseed(embed_rank2(5, 1, 2, Rank2Type::A2, {1, 1, 1, 2, 1},
                             {{0, 1, 1}, {3, 2, 2}, {4, 0, 1}}));
  if (name == "b2x5")
    return xseed(embed_rank2(5, 1, 2, Rank2Type::B2, {1, 1, 2, 2, 1},
                             {{0, 1, 1}, {3, 2, 2}, {4, 0, 1}}));
  if (name == "g2x5")
    return xseed(embed_rank2(5, 1, 2, Rank2Type::G2, {1, 1, 3, 3, 1},
                             {{0, 1, 1}, {3, 2, 3}, {4, 0, 1}}));
  throw std::invalid_argument("unknown builtin seed: " + name);
}

Seed load_seed(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return seed_from_json(spec);
  std::ifstream in(spec);
  if (in.good()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return seed_from_json(buf.str());
  }
  return builtin_seed(spec);
}

}  // namespace cvq

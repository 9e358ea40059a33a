#include "majassign/profile.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "majassign/errors.hpp"

namespace majassign {

namespace {

std::vector<int> inverse_ranks(std::span<const HouseId> ranking) {
  std::vector<int> rank(ranking.size(), 0);
  std::vector<char> seen(ranking.size(), 0);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const HouseId h = ranking[i];
    if (h < 0 || static_cast<std::size_t>(h) >= ranking.size() || seen[static_cast<std::size_t>(h)]) {
      throw std::invalid_argument("preference order is not a permutation");
    }
    seen[static_cast<std::size_t>(h)] = 1;
    rank[static_cast<std::size_t>(h)] = static_cast<int>(i) + 1;
  }
  return rank;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view line, char sep) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(sep, pos);
    if (end == std::string_view::npos) end = line.size();
    auto tok = trim(line.substr(pos, end - pos));
    if (!tok.empty() || sep != ' ') tokens.push_back(tok);
    pos = end + 1;
  }
  return tokens;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool valid_label(std::string_view s) {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; });
}

}  // namespace

PreferenceOrder::PreferenceOrder(std::vector<HouseId> ranking)
    : ranking_(std::move(ranking)), rank_(inverse_ranks(ranking_)) {
  if (ranking_.empty()) {
    throw std::invalid_argument("empty preference order");
  }
}

PreferenceOrder PreferenceOrder::reversed() const {
  return PreferenceOrder(std::vector<HouseId>(ranking_.rbegin(), ranking_.rend()));
}

std::shared_ptr<const std::vector<std::string>> default_labels(int n) {
  constexpr int kCached = 32;
  static std::array<std::shared_ptr<const std::vector<std::string>>, kCached + 1> cache;
  static std::array<std::once_flag, kCached + 1> flags;
  auto make = [n] {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "h" + std::to_string(i + 1));
    }
    return std::make_shared<const std::vector<std::string>>(std::move(labels));
  };
  if (n >= 0 && n <= kCached) {
    std::call_once(flags[static_cast<std::size_t>(n)], [&] { cache[static_cast<std::size_t>(n)] = make(); });
    return cache[static_cast<std::size_t>(n)];
  }
  return make();
}

Profile::Profile(std::vector<PreferenceOrder> orders, std::vector<std::string> labels)
    : orders_(std::move(orders)), labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
  const std::size_t n = orders_.size();
  if (n == 0) {
    throw std::invalid_argument("profile needs at least one agent");
  }
  if (labels_->size() != n) {
    throw std::invalid_argument("label table size does not match the number of agents");
  }
  for (const auto& o : orders_) {
    if (o.ranking().size() != n) {
      throw std::invalid_argument("every order must rank exactly n houses");
    }
  }
}

Profile::Profile(std::vector<PreferenceOrder> orders) : orders_(std::move(orders)) {
  const std::size_t n = orders_.size();
  if (n == 0) {
    throw std::invalid_argument("profile needs at least one agent");
  }
  for (const auto& o : orders_) {
    if (o.ranking().size() != n) {
      throw std::invalid_argument("every order must rank exactly n houses");
    }
  }
  labels_ = default_labels(static_cast<int>(n));
}

Profile Profile::from_rankings(const std::vector<std::vector<HouseId>>& rankings) {
  std::vector<PreferenceOrder> orders;
  orders.reserve(rankings.size());
  for (const auto& r : rankings) orders.emplace_back(r);
  return Profile(std::move(orders));
}

std::optional<HouseId> Profile::house(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return static_cast<HouseId>(i);
  }
  return std::nullopt;
}

bool operator==(const Profile& a, const Profile& b) {
  return a.orders_ == b.orders_ && (a.labels_ == b.labels_ || *a.labels_ == *b.labels_);
}

Profile parse_profile(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty()) {
    throw ParseError("profile is empty");
  }
  int n = 0;
  {
    auto head = lines.front();
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc() || ptr != head.data() + head.size()) {
      throw ParseError("first line must be the integer n, got '" + std::string(head) + "'");
    }
  }
  if (n <= 0) {
    throw ParseError("n must be positive");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("expected " + std::to_string(n) + " preference lines, got " + std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<std::string_view>> rows;
  for (int i = 1; i <= n; ++i) {
    auto tokens = split_whitespace(lines[static_cast<std::size_t>(i)]);
    if (tokens.size() != static_cast<std::size_t>(n)) {
      throw ParseError("line " + std::to_string(i) + " ranks " + std::to_string(tokens.size()) + " houses, expected " +
                       std::to_string(n));
    }
    std::vector<std::string_view> sorted = tokens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("duplicate house in line " + std::to_string(i));
    }
    for (auto t : tokens) {
      if (!valid_label(t)) throw ParseError("invalid house label '" + std::string(t) + "'");
    }
    rows.push_back(std::move(tokens));
  }

  std::vector<std::string> labels(rows.front().begin(), rows.front().end());
  std::sort(labels.begin(), labels.end());
  std::map<std::string_view, HouseId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<HouseId>(i));

  std::vector<PreferenceOrder> orders;
  orders.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<HouseId> ranking;
    ranking.reserve(rows[i].size());
    for (auto t : rows[i]) {
      auto it = index.find(t);
      if (it == index.end()) {
        throw ParseError("line " + std::to_string(i + 1) + " uses house '" + std::string(t) +
                         "' which is not ranked by agent 1");
      }
      ranking.push_back(it->second);
    }
    orders.emplace_back(std::move(ranking));
  }
  return Profile(std::move(orders), std::move(labels));
}

Profile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open profile file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

std::string format_profile(const Profile& profile) {
  std::string out = std::to_string(profile.size()) + "\n";
  for (const auto& order : profile.orders()) {
    bool first = true;
    for (HouseId h : order.ranking()) {
      if (!first) out += ' ';
      out += profile.label(h);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Assignment parse_assignment(const Profile& profile, std::string_view literal) {
  auto body = trim(literal);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  auto tokens = split_tokens(body, ',');
  if (tokens.size() != static_cast<std::size_t>(profile.size())) {
    throw ParseError("assignment '" + std::string(literal) + "' must list " + std::to_string(profile.size()) +
                     " houses");
  }
  std::vector<HouseId> houses;
  for (auto t : tokens) {
    auto h = profile.house(t);
    if (!h) throw ParseError("unknown house '" + std::string(t) + "' in assignment");
    houses.push_back(*h);
  }
  try {
    return Assignment(std::move(houses));
  } catch (const std::invalid_argument&) {
    throw ParseError("assignment '" + std::string(literal) + "' gives some house twice");
  }
}

std::string format_assignment(const Profile& profile, const Assignment& assignment) {
  std::string out = "(";
  for (int x = 0; x < assignment.size(); ++x) {
    if (x) out += ',';
    out += profile.label(assignment[x]);
  }
  out += ')';
  return out;
}

Profile invert_profile(const Profile& profile) {
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<std::size_t>(profile.size()));
  for (const auto& o : profile.orders()) orders.push_back(o.reversed());
  return Profile(std::move(orders), std::vector<std::string>(profile.labels().begin(), profile.labels().end()));
}

Profile restrict_profile(const Profile& profile, std::span<const AgentId> agents, std::span<const HouseId> houses) {
  if (agents.size() != houses.size() || agents.empty()) {
    throw std::invalid_argument("restriction needs equally many (and at least one) agents and houses");
  }
  const int n = profile.size();
  std::vector<AgentId> kept_agents(agents.begin(), agents.end());
  std::vector<HouseId> kept_houses(houses.begin(), houses.end());
  std::sort(kept_agents.begin(), kept_agents.end());
  std::sort(kept_houses.begin(), kept_houses.end());
  if (std::adjacent_find(kept_agents.begin(), kept_agents.end()) != kept_agents.end() ||
      std::adjacent_find(kept_houses.begin(), kept_houses.end()) != kept_houses.end()) {
    throw std::invalid_argument("restriction sets contain duplicates");
  }
  if (kept_agents.front() < 0 || kept_agents.back() >= n || kept_houses.front() < 0 || kept_houses.back() >= n) {
    throw std::invalid_argument("unknown agent or house in restriction");
  }
  std::vector<HouseId> new_id(static_cast<std::size_t>(n), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept_houses.size(); ++i) {
    new_id[static_cast<std::size_t>(kept_houses[i])] = static_cast<HouseId>(i);
    labels.push_back(profile.label(kept_houses[i]));
  }
  std::vector<PreferenceOrder> orders;
  for (AgentId x : kept_agents) {
    std::vector<HouseId> ranking;
    for (HouseId h : profile.order(x).ranking()) {
      if (new_id[static_cast<std::size_t>(h)] >= 0) ranking.push_back(new_id[static_cast<std::size_t>(h)]);
    }
    orders.emplace_back(std::move(ranking));
  }
  return Profile(std::move(orders), std::move(labels));
}

Profile canonical_form(const Profile& profile) {
  const int n = profile.size();
  // house h -> position of h in agent 1's ranking
  std::vector<HouseId> mapping(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) mapping[static_cast<std::size_t>(h)] = profile.order(0).rank_of(h) - 1;
  std::vector<std::vector<HouseId>> rankings;
  rankings.reserve(static_cast<std::size_t>(n));
  for (const auto& o : profile.orders()) {
    std::vector<HouseId> r;
    r.reserve(static_cast<std::size_t>(n));
    for (HouseId h : o.ranking()) r.push_back(mapping[static_cast<std::size_t>(h)]);
    rankings.push_back(std::move(r));
  }
  std::sort(rankings.begin() + 1, rankings.end());
  return Profile::from_rankings(rankings);
}

Profile permute_agents(const Profile& profile, std::span<const AgentId> perm) {
  if (static_cast<int>(perm.size()) != profile.size()) {
    throw std::invalid_argument("agent permutation has the wrong size");
  }
  PriorityOrder check(std::vector<AgentId>(perm.begin(), perm.end()));
  std::vector<PreferenceOrder> orders;
  for (AgentId x : perm) orders.push_back(profile.order(x));
  return Profile(std::move(orders), std::vector<std::string>(profile.labels().begin(), profile.labels().end()));
}

Profile relabel_houses(const Profile& profile, std::span<const HouseId> mapping) {
  if (static_cast<int>(mapping.size()) != profile.size()) {
    throw std::invalid_argument("house relabeling has the wrong size");
  }
  Assignment check(std::vector<HouseId>(mapping.begin(), mapping.end()));
  std::vector<PreferenceOrder> orders;
  for (const auto& o : profile.orders()) {
    std::vector<HouseId> r;
    for (HouseId h : o.ranking()) r.push_back(mapping[static_cast<std::size_t>(h)]);
    orders.emplace_back(std::move(r));
  }
  return Profile(std::move(orders), std::vector<std::string>(profile.labels().begin(), profile.labels().end()));
}

}  // namespace majassign

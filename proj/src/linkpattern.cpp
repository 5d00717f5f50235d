#include "slekit/linkpattern.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slekit {

using json = nlohmann::json;

namespace {

void validate(const std::vector<Link>& links) {
  const int n2 = 2 * static_cast<int>(links.size());
  std::vector<bool> seen(n2 + 1, false);
  for (const auto& [a, b] : links) {
    if (a < 1 || b < 1 || a > n2 || b > n2 || a >= b)
      throw std::invalid_argument("LinkPattern: endpoints must satisfy 1 <= a < b <= 2N");
    if (seen[a] || seen[b]) throw std::invalid_argument("LinkPattern: repeated endpoint");
    seen[a] = seen[b] = true;
  }
  for (size_t j = 0; j < links.size(); ++j) {
    for (size_t k = j + 1; k < links.size(); ++k) {
      long aj = links[j].first, bj = links[j].second;
      long ak = links[k].first, bk = links[k].second;
      if ((aj - ak) * (bj - bk) * (bj - ak) * (aj - bk) <= 0)
        throw std::invalid_argument("LinkPattern: crossing links");
    }
  }
}

}  // namespace

LinkPattern::LinkPattern(std::vector<Link> links) : links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  validate(links_);
}

bool LinkPattern::contains(int a, int b) const {
  return std::binary_search(links_.begin(), links_.end(), Link{a, b});
}

int LinkPattern::partner(int a) const {
  for (const auto& [x, y] : links_) {
    if (x == a) return y;
    if (y == a) return x;
  }
  throw std::invalid_argument("LinkPattern: endpoint not present");
}

std::string LinkPattern::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < links_.size(); ++i) {
    if (i) out << ",";
    out << links_[i].first << "-" << links_[i].second;
  }
  return out.str();
}

LinkPattern LinkPattern::parse(const std::string& text) {
  std::vector<Link> links;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("LinkPattern: expected a-b");
    links.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return LinkPattern(std::move(links));
}

std::string LinkPattern::to_json() const {
  json arr = json::array();
  for (const auto& [a, b] : links_) arr.push_back(json::array({a, b}));
  return arr.dump();
}

LinkPattern LinkPattern::from_json(const std::string& text) {
  std::vector<Link> links;
  for (const auto& pair : json::parse(text))
    links.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  return LinkPattern(std::move(links));
}

LinkPattern rainbow(int n) {
  std::vector<Link> links;
  for (int k = 1; k <= n; ++k) links.emplace_back(k, 2 * n + 1 - k);
  return LinkPattern(std::move(links));
}

Walk to_walk(const LinkPattern& alpha) {
  const int n2 = 2 * alpha.size();
  std::vector<bool> is_left(n2 + 1, false);
  for (const auto& [a, b] : alpha.links()) is_left[a] = true;
  Walk w;
  w.values.assign(n2 + 1, 0);
  for (int t = 1; t <= n2; ++t) w.values[t] = w.values[t - 1] + (is_left[t] ? 1 : -1);
  return w;
}

LinkPattern from_walk(const Walk& w) {
  if (w.values.empty() || w.values.front() != 0 || w.values.back() != 0)
    throw std::invalid_argument("Walk: must start and end at zero");
  std::vector<Link> links;
  std::vector<int> open;
  for (size_t t = 1; t < w.values.size(); ++t) {
    int step = w.values[t] - w.values[t - 1];
    if (w.values[t] < 0 || (step != 1 && step != -1))
      throw std::invalid_argument("Walk: invalid step");
    if (step == 1) {
      open.push_back(static_cast<int>(t));
    } else {
      links.emplace_back(open.back(), static_cast<int>(t));
      open.pop_back();
    }
  }
  return LinkPattern(std::move(links));
}

bool leq(const LinkPattern& alpha, const LinkPattern& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("leq: size mismatch");
  Walk wa = to_walk(alpha);
  Walk wb = to_walk(beta);
  for (size_t t = 0; t < wa.values.size(); ++t)
    if (wa.values[t] > wb.values[t]) return false;
  return true;
}

LinkPattern remove_link(const LinkPattern& alpha, int j) {
  if (!alpha.contains(j, j + 1)) throw std::invalid_argument("remove_link: link absent");
  std::vector<Link> links;
  for (const auto& [a, b] : alpha.links()) {
    if (a == j) continue;
    auto shift = [j](int x) { return x > j + 1 ? x - 2 : x; };
    links.emplace_back(shift(a), shift(b));
  }
  return LinkPattern(std::move(links));
}

LinkPattern tie(const LinkPattern& alpha, int j) {
  if (j < 1 || j + 1 > 2 * alpha.size()) throw std::invalid_argument("tie: bad position");
  if (alpha.contains(j, j + 1)) return alpha;
  int l1 = alpha.partner(j);
  int l2 = alpha.partner(j + 1);
  std::vector<Link> links;
  for (const auto& link : alpha.links()) {
    if (link == Link{std::min(l1, j), std::max(l1, j)}) continue;
    if (link == Link{std::min(l2, j + 1), std::max(l2, j + 1)}) continue;
    links.push_back(link);
  }
  links.emplace_back(j, j + 1);
  links.emplace_back(std::min(l1, l2), std::max(l1, l2));
  return LinkPattern(std::move(links));
}

std::vector<LinkPattern> tie_fiber(const LinkPattern& alpha, int j) {
  LinkPattern target = tie(alpha, j);
  std::vector<LinkPattern> fiber;
  for (const auto& beta : enumerate_patterns(alpha.size()))
    if (tie(beta, j) == target) fiber.push_back(beta);
  return fiber;
}

std::vector<LinkPattern> tie_fiber_constructive(const LinkPattern& alpha, int j) {
  LinkPattern gamma = tie(alpha, j);
  std::set<LinkPattern> fiber;
  fiber.insert(gamma);
  // Cut {j, j+1} together with one other link and reconnect crosswise; keep
  // the planar reconnections that tie back to gamma.
  for (const auto& [a, b] : gamma.links()) {
    if (a == j && b == j + 1) continue;
    std::vector<Link> rest;
    for (const auto& link : gamma.links()) {
      if (link == Link{j, j + 1} || link == Link{a, b}) continue;
      rest.push_back(link);
    }
    for (int variant = 0; variant < 2; ++variant) {
      int x = variant == 0 ? a : b;
      int y = variant == 0 ? b : a;
      std::vector<Link> links = rest;
      links.emplace_back(std::min(j, x), std::max(j, x));
      links.emplace_back(std::min(j + 1, y), std::max(j + 1, y));
      try {
        LinkPattern beta{std::move(links)};
        if (tie(beta, j) == gamma) fiber.insert(beta);
      } catch (const std::invalid_argument&) {
        // non-planar reconnection
      }
    }
  }
  return {fiber.begin(), fiber.end()};
}

namespace {

void orderings_rec(std::vector<Link> current, std::vector<Link> original,
                   std::vector<RemovalStep>& prefix,
                   std::vector<std::vector<RemovalStep>>& out, bool first_only) {
  if (current.empty()) {
    out.push_back(prefix);
    return;
  }
  for (size_t i = 0; i < current.size(); ++i) {
    auto [a, b] = current[i];
    if (b != a + 1) continue;
    std::vector<Link> next_current;
    std::vector<Link> next_original;
    for (size_t k = 0; k < current.size(); ++k) {
      if (k == i) continue;
      auto shift = [a](int x) { return x > a + 1 ? x - 2 : x; };
      next_current.emplace_back(shift(current[k].first), shift(current[k].second));
      next_original.push_back(original[k]);
    }
    prefix.push_back({original[i], a});
    orderings_rec(std::move(next_current), std::move(next_original), prefix, out, first_only);
    prefix.pop_back();
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<std::vector<RemovalStep>> allowable_orderings(const LinkPattern& alpha) {
  std::vector<std::vector<RemovalStep>> out;
  std::vector<RemovalStep> prefix;
  orderings_rec(alpha.links(), alpha.links(), prefix, out, false);
  return out;
}

std::vector<RemovalStep> first_allowable_ordering(const LinkPattern& alpha) {
  std::vector<std::vector<RemovalStep>> out;
  std::vector<RemovalStep> prefix;
  orderings_rec(alpha.links(), alpha.links(), prefix, out, true);
  if (out.empty()) throw std::logic_error("first_allowable_ordering: none found");
  return out.front();
}

bool is_allowable_ordering(const LinkPattern& alpha, const std::vector<Link>& order,
                           std::vector<RemovalStep>* steps) {
  if (order.size() != alpha.links().size()) return false;
  std::vector<Link> current = alpha.links();
  std::vector<Link> original = alpha.links();
  if (steps) steps->clear();
  for (const auto& wanted : order) {
    size_t i = 0;
    for (; i < original.size(); ++i)
      if (original[i] == wanted) break;
    if (i == original.size()) return false;
    auto [a, b] = current[i];
    if (b != a + 1) return false;
    if (steps) steps->push_back({wanted, a});
    std::vector<Link> next_current;
    std::vector<Link> next_original;
    for (size_t k = 0; k < current.size(); ++k) {
      if (k == i) continue;
      auto shift = [a](int x) { return x > a + 1 ? x - 2 : x; };
      next_current.emplace_back(shift(current[k].first), shift(current[k].second));
      next_original.push_back(original[k]);
    }
    current = std::move(next_current);
    original = std::move(next_original);
  }
  return true;
}

namespace {

void walks_rec(int remaining, int height, std::vector<int>& values,
               std::vector<Walk>& out) {
  if (remaining == 0) {
    if (height == 0) out.push_back(Walk{values});
    return;
  }
  if (height + 1 <= remaining) {
    values.push_back(height + 1);
    walks_rec(remaining - 1, height + 1, values, out);
    values.pop_back();
  }
  if (height > 0) {
    values.push_back(height - 1);
    walks_rec(remaining - 1, height - 1, values, out);
    values.pop_back();
  }
}

}  // namespace

std::vector<LinkPattern> enumerate_patterns(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_patterns: negative N");
  std::vector<Walk> walks;
  std::vector<int> values{0};
  walks_rec(2 * n, 0, values, walks);
  std::sort(walks.begin(), walks.end());
  std::vector<LinkPattern> out;
  out.reserve(walks.size());
  for (const auto& w : walks) out.push_back(from_walk(w));
  return out;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

long walk_area(const LinkPattern& alpha) {
  Walk w = to_walk(alpha);
  return std::accumulate(w.values.begin(), w.values.end(), 0L);
}

std::vector<LinkPattern> linear_extension(int n) {
  std::vector<LinkPattern> patterns = enumerate_patterns(n);
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const LinkPattern& a, const LinkPattern& b) {
                     long aa = walk_area(a);
                     long ab = walk_area(b);
                     if (aa != ab) return aa > ab;
                     return to_walk(a) < to_walk(b);
                   });
  return patterns;
}

}  // namespace slekit

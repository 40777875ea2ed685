#include "mhg/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace mhg {

CanonicalCode::CanonicalCode(std::vector<int> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.front() < 0 ||
      tokens_.size() != 1 + pair_count(static_cast<std::size_t>(tokens_.front())))
    throw InvalidInput("malformed canonical code");
}

MetricSpace CanonicalCode::representative() const {
  const int n = size();
  std::vector<Distance> upper(pair_count(static_cast<std::size_t>(n)));
  MetricSpace shape = MetricSpace::from_trusted(n, upper);
  std::size_t t = 1;
  for (Point k = 1; k < n; ++k)
    for (Point i = 0; i < k; ++i) upper[shape.index(i, k)] = tokens_[t++];
  return MetricSpace::from_trusted(n, std::move(upper));
}

std::string CanonicalCode::to_string() const {
  std::ostringstream os;
  os << tokens_.front() << ":";
  for (std::size_t i = 1; i < tokens_.size(); ++i) os << (i > 1 ? "," : "") << tokens_[i];
  return os.str();
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int t : c.tokens()) {
    h ^= static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<int> refine_cells(const MetricSpace& a) {
  const int n = a.size();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = n == 0 ? 0 : 1;
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (;;) {
    for (Point x = 0; x < n; ++x) {
      std::vector<std::pair<int, int>> nb;
      nb.reserve(static_cast<std::size_t>(n));
      for (Point y = 0; y < n; ++y)
        if (y != x) nb.emplace_back(a.d(x, y), color[y]);
      std::sort(nb.begin(), nb.end());
      auto& s = sig[x];
      s.assign(1, color[x]);
      for (auto [d, c] : nb) {
        s.push_back(d);
        s.push_back(c);
      }
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Point x = 0; x < n; ++x)
      color[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[x]) - distinct.begin());
    const int next = static_cast<int>(distinct.size());
    if (next == classes) break;
    classes = next;
  }
  return color;
}

namespace {

class LeastColumnSearch {
 public:
  LeastColumnSearch(const MetricSpace& a, std::vector<int> cell)
      : a_(a), n_(a.size()), cell_(std::move(cell)), used_(static_cast<std::size_t>(n_), 0) {
    slot_.assign(cell_.begin(), cell_.end());
    std::sort(slot_.begin(), slot_.end());
    order_.reserve(static_cast<std::size_t>(n_));
    cur_.reserve(pair_count(static_cast<std::size_t>(n_)));
  }

  CanonicalForm run() {
    search(0, false);
    std::vector<int> tokens;
    tokens.reserve(1 + best_.size());
    tokens.push_back(n_);
    tokens.insert(tokens.end(), best_.begin(), best_.end());
    return {CanonicalCode(std::move(tokens)), best_order_};
  }

 private:
  // `below` means the current prefix is already strictly less than best_.
  void search(int k, bool below) {
    if (k == n_) {
      if (below || !have_best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
        ++updates_;
      }
      return;
    }
    for (Point t = 0; t < n_; ++t) {
      if (used_[t] || cell_[t] != slot_[k]) continue;
      const std::size_t mark = cur_.size();
      bool child_below = below;
      bool prune = false;
      for (int i = 0; i < k; ++i) {
        const int v = a_.d(order_[i], t);
        cur_.push_back(v);
        if (have_best_ && !child_below) {
          const int b = best_[mark + i];
          if (v > b) {
            prune = true;
            break;
          }
          if (v < b) child_below = true;
        }
      }
      if (!prune) {
        used_[t] = 1;
        order_.push_back(t);
        const std::size_t before = updates_;
        search(k + 1, child_below);
        // A new best found below shares this prefix.
        if (updates_ != before) below = false;
        order_.pop_back();
        used_[t] = 0;
      }
      cur_.resize(mark);
    }
  }

  const MetricSpace& a_;
  int n_;
  std::vector<int> cell_;
  std::vector<int> slot_;
  std::vector<char> used_;
  std::vector<Point> order_;
  std::vector<int> cur_;
  std::vector<int> best_;
  std::vector<Point> best_order_;
  bool have_best_ = false;
  std::size_t updates_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const MetricSpace& a) {
  return LeastColumnSearch(a, refine_cells(a)).run();
}

}  // namespace mhg

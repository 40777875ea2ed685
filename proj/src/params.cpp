#include "mhg/params.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mhg {

std::int64_t ExtNat::value() const {
  if (!finite_) throw std::logic_error("value() of infinite ExtNat");
  return value_;
}

std::string ExtNat::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

ExtNat ExtNat::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0)
    throw InvalidParameters("not a nonnegative integer or \"inf\": " + text);
  return ExtNat(v);
}

ExtNat min(ExtNat a, ExtNat b) { return a <= b ? a : b; }
ExtNat max(ExtNat a, ExtNat b) { return a >= b ? a : b; }

bool HensonSet::mentions(Distance d) const {
  return std::any_of(constraints_.begin(), constraints_.end(), [d](const MetricSpace& h) {
    return std::find(h.upper().begin(), h.upper().end(), d) != h.upper().end();
  });
}

ParameterSequence::ParameterSequence(int delta, ExtNat k1, ExtNat k2, ExtNat c0, ExtNat c1,
                                     HensonSet henson)
    : delta_(delta), k1_(k1), k2_(k2), c0_(c0), c1_(c1), henson_(std::move(henson)) {
  if (delta_ < 3) throw InvalidParameters("delta must be at least 3");
  // The bipartite case has K1 = inf and K2 = 0, so the order only binds finite K1.
  if (k1_.is_finite() && k1_ > k2_)
    throw InvalidParameters("K1 must not exceed K2 (K1=" + k1_.to_string() + ", K2=" + k2_.to_string() + ")");
  const Distance second = henson_alphabet() == HensonAlphabet::OneDelta ? delta_ : delta_ - 1;
  for (const auto& h : henson_.constraints()) {
    if (h.size() < 2) throw InvalidParameters("Henson constraint needs at least 2 points: " + mhg::to_string(h));
    for (Distance d : h.upper())
      if (d != 1 && d != second)
        throw InvalidParameters("Henson constraint " + mhg::to_string(h) + " uses distance " +
                                std::to_string(d) + " outside {1," + std::to_string(second) + "}");
  }
}

HensonAlphabet ParameterSequence::henson_alphabet() const {
  return c() == ExtNat(2 * delta_ + 1) ? HensonAlphabet::OneDeltaMinusOne : HensonAlphabet::OneDelta;
}

std::string ParameterSequence::to_string() const {
  std::ostringstream os;
  os << "(delta=" << delta_ << ", K1=" << k1_.to_string() << ", K2=" << k2_.to_string()
     << ", C0=" << c0_.to_string() << ", C1=" << c1_.to_string() << ", |S|=" << henson_.constraints().size()
     << ")";
  return os.str();
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::BipartiteK2Zero: return "a.K2_zero";
    case Condition::BipartiteC1: return "a.C1_eq_2delta_plus_1";
    case Condition::LowCPerimeterForm: return "b.C_eq_2K1_2K2_1";
    case Condition::LowCPerimeterFloor: return "b.C_ge_2delta_plus_1";
    case Condition::LowCKSum: return "b.K1_2K2_le_2delta_minus_1";
    case Condition::LowCWideGap: return "b.wide_gap";
    case Condition::HighCKSum: return "c.K1_2K2_ge_2delta_minus_1";
    case Condition::HighCK2: return "c.3K2_ge_2delta";
    case Condition::HighCTight: return "c.tight_sum";
    case Condition::HighCWideGap: return "c.wide_gap";
  }
  return "?";
}

std::string condition_text(Condition c) {
  switch (c) {
    case Condition::BipartiteK2Zero: return "K2 = 0";
    case Condition::BipartiteC1: return "C1 = 2delta+1";
    case Condition::LowCPerimeterForm: return "C = 2K1+2K2+1";
    case Condition::LowCPerimeterFloor: return "2K1+2K2+1 >= 2delta+1";
    case Condition::LowCKSum: return "K1+2K2 <= 2delta-1";
    case Condition::LowCWideGap: return "if C' > C+1 then K1 = K2 and 3K2 = 2delta-1";
    case Condition::HighCKSum: return "K1+2K2 >= 2delta-1";
    case Condition::HighCK2: return "3K2 >= 2delta";
    case Condition::HighCTight: return "if K1+2K2 = 2delta-1 then C >= 2delta+K1+2";
    case Condition::HighCWideGap: return "if C' > C+1 then C >= 2delta+K2";
  }
  return "?";
}

bool condition_holds(const ParameterSequence& p, Condition c) {
  const std::int64_t d = p.delta();
  const ExtNat k1 = p.k1(), k2 = p.k2(), cc = p.c(), cp = p.c_prime();
  const ExtNat k_sum = k1 + 2 * k2;
  const bool wide_gap = cp > cc + 1;
  switch (c) {
    case Condition::BipartiteK2Zero: return k2 == ExtNat(0);
    case Condition::BipartiteC1: return p.c1() == ExtNat(2 * d + 1);
    case Condition::LowCPerimeterForm: return cc == 2 * k1 + 2 * k2 + 1;
    case Condition::LowCPerimeterFloor: return 2 * k1 + 2 * k2 + 1 >= ExtNat(2 * d + 1);
    case Condition::LowCKSum: return k_sum <= ExtNat(2 * d - 1);
    case Condition::LowCWideGap: return !wide_gap || (k1 == k2 && 3 * k2 == ExtNat(2 * d - 1));
    case Condition::HighCKSum: return k_sum >= ExtNat(2 * d - 1);
    case Condition::HighCK2: return 3 * k2 >= ExtNat(2 * d);
    case Condition::HighCTight: return k_sum != ExtNat(2 * d - 1) || cc >= ExtNat(2 * d + 2) + k1;
    case Condition::HighCWideGap: return !wide_gap || cc >= ExtNat(2 * d) + k2;
  }
  return false;
}

bool AdmissibilityVerdict::names(Condition c) const {
  return std::any_of(failures.begin(), failures.end(), [c](const auto& f) { return f.condition == c; });
}

std::string AdmissibilityVerdict::label() const {
  switch (tag) {
    case AdmissibleCase::Bipartite: return "Bipartite(a)";
    case AdmissibleCase::LowC: return "LowC(b)";
    case AdmissibleCase::HighC: return "HighC(c)";
    case AdmissibleCase::Rejected: return "Rejected";
  }
  return "?";
}

AdmissibilityVerdict classify_admissible(const ParameterSequence& p) {
  AdmissibilityVerdict v;
  std::vector<Condition> side;
  if (!p.k1().is_finite()) {
    v.attempted = AdmissibleCase::Bipartite;
    side = {Condition::BipartiteK2Zero, Condition::BipartiteC1};
  } else if (p.c() <= ExtNat(2 * p.delta()) + p.k1()) {
    v.attempted = AdmissibleCase::LowC;
    side = {Condition::LowCPerimeterForm, Condition::LowCPerimeterFloor, Condition::LowCKSum,
            Condition::LowCWideGap};
  } else {
    v.attempted = AdmissibleCase::HighC;
    side = {Condition::HighCKSum, Condition::HighCK2, Condition::HighCTight, Condition::HighCWideGap};
  }
  for (Condition c : side)
    if (!condition_holds(p, c)) v.failures.push_back({c, condition_text(c) + " fails for " + p.to_string()});
  v.tag = v.failures.empty() ? v.attempted : AdmissibleCase::Rejected;
  return v;
}

bool triangle_allowed(const ParameterSequence& p, const TriangleType& t) {
  if (!t.is_metric()) return false;
  if (t.k > p.delta()) return false;
  const int per = t.perimeter();
  if (per % 2 == 1) {
    if (!(2 * p.k1() < ExtNat(per))) return false;
    if (!(ExtNat(per) < 2 * p.k2() + ExtNat(2 * t.min_side()))) return false;
  }
  return ExtNat(per) < p.c_eps(per % 2);
}

std::vector<TriangleType> forbidden_triangles(const ParameterSequence& p) {
  std::vector<TriangleType> out;
  const int d = p.delta();
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j)
      for (int k = j; k <= std::min(d, i + j); ++k) {
        TriangleType t(i, j, k);
        if (!triangle_allowed(p, t)) out.push_back(t);
      }
  return out;
}

namespace {

bool distances_bounded(const ParameterSequence& p, const MetricSpace& a) { return a.max_distance() <= p.delta(); }

}  // namespace

std::optional<std::string> age_violation(const ParameterSequence& p, const MetricSpace& a) {
  if (!distances_bounded(p, a))
    return "distance " + std::to_string(a.max_distance()) + " exceeds delta=" + std::to_string(p.delta());
  for (const auto& t : triangle_types(a))
    if (!triangle_allowed(p, t)) return "forbidden triangle " + t.to_string();
  for (const auto& h : p.henson().constraints())
    if (embeds(h, a)) return "Henson constraint " + to_string(h) + " embeds";
  return std::nullopt;
}

bool in_age(const ParameterSequence& p, const MetricSpace& a) { return !age_violation(p, a).has_value(); }

bool in_age_with_new_point(const ParameterSequence& p, const MetricSpace& a, Point fresh) {
  const int n = a.size();
  for (Point x = 0; x < n; ++x)
    if (x != fresh && a.d(x, fresh) > p.delta()) return false;
  for (Point x = 0; x < n; ++x) {
    if (x == fresh) continue;
    for (Point y = x + 1; y < n; ++y) {
      if (y == fresh) continue;
      if (!triangle_allowed(p, TriangleType(a.d(x, y), a.d(x, fresh), a.d(y, fresh)))) return false;
    }
  }
  for (const auto& h : p.henson().constraints())
    if (embeds(h, a, fresh)) return false;
  return true;
}

}  // namespace mhg

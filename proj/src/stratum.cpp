#include "flatsurf/stratum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace flatsurf {

StratumSignature::StratumSignature(Kind k, std::vector<int> o) : kind(k), orders(std::move(o)) {
  std::sort(orders.begin(), orders.end(), std::greater<int>());
  int lo = kind == Kind::Translation ? 0 : -1;
  for (int k_ : orders)
    if (k_ < lo) throw Error("inconsistent-signature", "order below minimum: " + std::to_string(k_));
}

StratumSignature abelian_signature(std::vector<int> orders) {
  return StratumSignature(Kind::Translation, std::move(orders));
}

StratumSignature quadratic_signature(std::vector<int> orders) {
  return StratumSignature(Kind::Quadratic, std::move(orders));
}

int StratumSignature::order_sum() const {
  return std::accumulate(orders.begin(), orders.end(), 0);
}

StratumSignature StratumSignature::unmarked() const {
  StratumSignature out = *this;
  out.orders.erase(std::remove(out.orders.begin(), out.orders.end(), 0), out.orders.end());
  return out;
}

std::string to_string(const StratumSignature& sig) {
  std::ostringstream os;
  os << (sig.kind == Kind::Translation ? "H(" : "Q(");
  for (size_t i = 0; i < sig.orders.size(); ++i) {
    if (i) os << ",";
    os << sig.orders[i];
  }
  os << ")";
  return os.str();
}

StratumSignature parse_signature(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error("parse-error", "bad signature '" + text + "'");
  std::string head = text.substr(0, open);
  Kind kind;
  if (head == "H" || head == "h")
    kind = Kind::Translation;
  else if (head == "Q" || head == "q")
    kind = Kind::Quadratic;
  else
    throw Error("parse-error", "signature kind must be H or Q, got '" + head + "'");
  std::vector<int> orders;
  std::string body = text.substr(open + 1, close - open - 1);
  std::istringstream bs(body);
  std::string item;
  while (std::getline(bs, item, ',')) {
    if (item.empty()) continue;
    auto caret = item.find('^');
    try {
      if (caret == std::string::npos) {
        orders.push_back(std::stoi(item));
      } else {
        int value = std::stoi(item.substr(0, caret));
        int count = std::stoi(item.substr(caret + 1));
        for (int i = 0; i < count; ++i) orders.push_back(value);
      }
    } catch (const std::exception&) {
      throw Error("parse-error", "bad order '" + item + "' in signature");
    }
  }
  return StratumSignature(kind, std::move(orders));
}

GenusDimension genus_dimension(const StratumSignature& sig) {
  int sum = sig.order_sum();
  int n = static_cast<int>(sig.orders.size());
  GenusDimension gd;
  if (sig.kind == Kind::Translation) {
    if (sum % 2 != 0 || sum < -2)
      throw Error("inconsistent-signature", to_string(sig));
    gd.genus = sum / 2 + 1;
    gd.dimension = 2 * gd.genus + n - 1;
    if (n == 0) gd.dimension = 2 * gd.genus;  // unmarked torus family H()
  } else {
    if (sum % 4 != 0 || sum < -4)
      throw Error("inconsistent-signature", to_string(sig));
    gd.genus = sum / 4 + 1;
    gd.dimension = 2 * gd.genus + n - 2;
  }
  if (gd.genus < 0) throw Error("inconsistent-signature", to_string(sig));
  return gd;
}

RankRel rank_rel(const StratumSignature& sig) {
  auto gd = genus_dimension(sig);
  RankRel rr;
  if (sig.kind == Kind::Translation) {
    rr.rank = gd.genus;
    rr.rel = std::max(0, static_cast<int>(sig.orders.size()) - 1);
  } else {
    int m_odd = 0, m_even = 0;
    for (int k : sig.orders) (std::abs(k) % 2 == 1 ? m_odd : m_even)++;
    if (m_odd % 2 != 0) throw Error("inconsistent-signature", "odd count of odd orders");
    rr.rank = gd.genus + m_odd / 2 - 1;
    rr.rel = m_even;
  }
  return rr;
}

std::vector<int> order_image_1(int a) {
  if (a % 2 != 0) return {a, a};
  return {2 * a + 2};
}

std::vector<int> order_image_2(int a) {
  if (a % 2 != 0) return {a + 1};
  return {a / 2, a / 2};
}

std::vector<int> order_image_3(int a) {
  if (a % 2 != 0) return {a + 1, a + 1};
  return {2 * a + 4};
}

HyperellipticLadder hyperelliptic_ladder(int a, int b) {
  if (a < -1 || b < -1) throw Error("inconsistent-signature", "ladder needs a,b >= -1");
  HyperellipticLadder L;
  L.a = a;
  L.b = b;
  std::vector<int> base_orders{a, b};
  for (int i = 0; i < a + b + 4; ++i) base_orders.push_back(-1);
  L.base = quadratic_signature(base_orders);
  L.top = abelian_signature({a + 1, a + 1, b + 1, b + 1});
  std::vector<int> sj = order_image_1(a);
  for (int k : order_image_1(b)) sj.push_back(k);
  L.side_J = quadratic_signature(sj);
  std::vector<int> sjt{2 * a + 2, 2 * b + 2};
  for (int i = 0; i < 2 * a + 2 * b + 8; ++i) sjt.push_back(-1);
  L.side_JT = quadratic_signature(sjt);
  std::vector<int> st = order_image_2(a);
  for (int k : order_image_2(b)) st.push_back(k);
  L.side_T = abelian_signature(st);
  return L;
}

bool is_hyperelliptic_component_signature(const StratumSignature& sig) {
  StratumSignature u = sig.unmarked();
  if (u.kind == Kind::Translation) {
    auto gd = genus_dimension(u);
    if (u.orders.size() == 1 && u.orders[0] == 2 * gd.genus - 2) return true;
    if (u.orders.size() == 2 && u.orders[0] == u.orders[1] &&
        u.orders[0] == gd.genus - 1)
      return true;
    if (u.orders.empty() && gd.genus == 1) return true;  // bare torus
    return false;
  }
  int sum = u.order_sum();
  // Q(a1, b1) has order sum 2a + 2b (computed case by case), so a + b is
  // bounded by the sum; enumerate.
  int hi = std::max(0, sum / 2 + 2);
  for (int a = -1; a <= hi; ++a) {
    for (int b = -1; b <= a; ++b) {
      std::vector<int> want = order_image_1(a);
      for (int k : order_image_1(b)) want.push_back(k);
      std::sort(want.begin(), want.end(), std::greater<int>());
      if (want == u.orders) return true;
    }
  }
  return false;
}

StratumSignature stratum_of(const Surface& s) {
  auto rep = validate(s);
  if (!rep.ok())
    throw Error("invalid-surface", rep.issues.front().code + ": " + rep.issues.front().detail);
  auto va = analyze_vertices(s);
  Kind kind = kind_of(s);
  std::vector<int> orders;
  for (const auto& vc : va.classes) {
    if (kind == Kind::Translation) {
      int k = vc.angle_pi / 2 - 1;
      if (k == 0 && !vc.marked) continue;  // erasable regular point
      orders.push_back(k);
    } else {
      int k = vc.angle_pi - 2;
      if (k == 0 && !vc.marked) continue;
      orders.push_back(k);
    }
  }
  return StratumSignature(kind, std::move(orders));
}

int total_stratum_dimension(const Surface& s) {
  int dim = 0;
  for (const auto& comp : components(s)) dim += genus_dimension(stratum_of(comp)).dimension;
  return dim;
}

std::vector<StratumSignature> enumerate_signatures(Kind kind, int max_dim) {
  // Quadratic: dim = sum/2 + n, each extra order k contributes k/2 + 1 > 0.
  // Abelian:   dim = sum + n - 1, each extra order contributes k + 1 > 0.
  // Both contributions are positive, so partial dimension prunes exactly.
  std::vector<StratumSignature> out;
  int lo = kind == Kind::Translation ? 0 : -1;
  std::vector<int> acc;
  std::function<void(int)> rec = [&](int max_next) {
    if (!acc.empty()) {
      int sum = std::accumulate(acc.begin(), acc.end(), 0);
      bool ok = kind == Kind::Translation ? (sum % 2 == 0 && sum >= 0)
                                          : (sum % 4 == 0 && sum >= -4);
      if (ok && kind == Kind::Quadratic) {
        int m_odd = 0;
        for (int k : acc)
          if (std::abs(k) % 2 == 1) ++m_odd;
        ok = m_odd % 2 == 0;
      }
      if (ok) {
        StratumSignature sig(kind, acc);
        if (genus_dimension(sig).dimension <= max_dim) out.push_back(sig);
      }
    }
    for (int k = std::min(max_next, 2 * max_dim); k >= lo; --k) {
      acc.push_back(k);
      int sum = std::accumulate(acc.begin(), acc.end(), 0);
      int n = static_cast<int>(acc.size());
      bool feasible = kind == Kind::Translation ? (sum + n - 1 <= max_dim)
                                                : (sum + 2 * n <= 2 * max_dim);
      if (feasible) rec(k);
      acc.pop_back();
    }
  };
  rec(2 * max_dim);
  std::sort(out.begin(), out.end(), [](const StratumSignature& a, const StratumSignature& b) {
    return a.orders < b.orders;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace flatsurf

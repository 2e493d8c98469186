#include "kac/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw NotAPartition("negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw NotAPartition("parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int j) const {
  if (j < 1 || j > length()) return 0;
  return parts_[static_cast<size_t>(j - 1)];
}

MultiPartition make_multipartition(int r, std::vector<Partition> legs) {
  if (r < 1) throw InvalidInput("r must be positive");
  if (legs.empty()) throw InvalidInput("need at least one leg partition");
  for (const Partition& leg : legs)
    if (leg.empty()) throw NotAPartition("each leg must be a non-zero partition");
  return MultiPartition{r, std::move(legs)};
}

namespace {

int parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("expected an unsigned integer, got \"" + s + "\"");
  return std::atoi(s.c_str());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

MultiPartition parse_input(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("r=", 0) != 0)
    throw InvalidInput("input must look like \"r=5; mu=2\"");
  size_t semi = s.find(';');
  if (semi == std::string::npos || s.compare(semi + 1, 3, "mu=") != 0)
    throw InvalidInput("input must look like \"r=5; mu=2\"");
  int r = parse_int(s.substr(2, semi - 2));
  std::vector<Partition> legs;
  for (const std::string& leg : split(s.substr(semi + 4), '|')) {
    std::vector<int> parts;
    for (const std::string& p : split(leg, ',')) parts.push_back(parse_int(p));
    legs.emplace_back(std::move(parts));
  }
  return make_multipartition(r, std::move(legs));
}

std::string format_input(const MultiPartition& mu) {
  std::ostringstream out;
  out << "r=" << mu.r << "; mu=";
  for (size_t i = 0; i < mu.legs.size(); ++i) {
    if (i) out << '|';
    const auto& parts = mu.legs[i].parts();
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j) out << ',';
      out << parts[j];
    }
  }
  return out.str();
}

int SupernovaQuiver::short_vertex(int l) const {
  if (l < 1 || l > r) throw InvalidInput("short vertex index out of range");
  return l - 1;
}

int SupernovaQuiver::hub_vertex(int i) const { return leg_vertex(i, 0); }

int SupernovaQuiver::leg_vertex(int i, int j) const {
  if (i < 1 || i > legs()) throw InvalidInput("leg index out of range");
  if (j < 0 || j > leg_len[static_cast<size_t>(i - 1)])
    throw InvalidInput("leg position out of range");
  int base = r;
  for (int t = 1; t < i; ++t) base += leg_len[static_cast<size_t>(t - 1)] + 1;
  return base + j;
}

std::string SupernovaQuiver::vertex_name(int idx) const {
  if (idx >= 0 && idx < r) return "(" + std::to_string(idx + 1) + ")";
  int base = r;
  for (int i = 1; i <= legs(); ++i) {
    int len = leg_len[static_cast<size_t>(i - 1)] + 1;
    if (idx < base + len)
      return "(" + std::to_string(i) + ";" + std::to_string(idx - base) + ")";
    base += len;
  }
  throw InvalidInput("vertex index out of range");
}

std::pair<SupernovaQuiver, DimVector> build_supernova(const MultiPartition& mu) {
  SupernovaQuiver qv;
  qv.r = mu.r;
  for (const Partition& leg : mu.legs) qv.leg_len.push_back(leg.length() - 1);
  int total = mu.r;
  for (int s : qv.leg_len) total += s + 1;
  qv.adjacency.assign(static_cast<size_t>(total),
                      std::vector<int>(static_cast<size_t>(total), 0));
  auto connect = [&](int a, int b) {
    qv.adjacency[static_cast<size_t>(a)][static_cast<size_t>(b)] += 1;
    qv.adjacency[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1;
  };
  for (int i = 1; i <= qv.legs(); ++i) {
    int hub = qv.hub_vertex(i);
    for (int l = 1; l <= mu.r; ++l) connect(qv.short_vertex(l), hub);
    for (int j = 1; j <= qv.leg_len[static_cast<size_t>(i - 1)]; ++j)
      connect(qv.leg_vertex(i, j - 1), qv.leg_vertex(i, j));
  }

  DimVector v(static_cast<size_t>(total), 1);
  for (int i = 1; i <= qv.legs(); ++i) {
    const Partition& leg = mu.legs[static_cast<size_t>(i - 1)];
    long long remaining = leg.size();
    v[static_cast<size_t>(qv.hub_vertex(i))] = remaining;
    for (int j = 1; j <= qv.leg_len[static_cast<size_t>(i - 1)]; ++j) {
      remaining -= leg.part(j);
      v[static_cast<size_t>(qv.leg_vertex(i, j))] = remaining;
    }
  }
  return {std::move(qv), std::move(v)};
}

ColoredMultigraph underlying_graph(const SupernovaQuiver& qv) {
  std::vector<Edge> edges;
  int n = qv.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      for (int m = 0; m < qv.adjacency[static_cast<size_t>(u)][static_cast<size_t>(w)]; ++m)
        edges.push_back({u + 1, w + 1, 0});
  return make_graph(n, std::move(edges));
}

namespace {

void check_dims(const SupernovaQuiver& qv, const DimVector& v) {
  if (static_cast<int>(v.size()) != qv.vertex_count())
    throw InvalidInput("dimension vector has wrong length");
}

long long pair_with_unit(const SupernovaQuiver& qv, const DimVector& v, int i) {
  long long acc = 2 * v[static_cast<size_t>(i)];
  for (int w = 0; w < qv.vertex_count(); ++w)
    acc -= static_cast<long long>(
               qv.adjacency[static_cast<size_t>(i)][static_cast<size_t>(w)]) *
           v[static_cast<size_t>(w)];
  return acc;
}

bool support_connected(const SupernovaQuiver& qv, const DimVector& v) {
  int n = qv.vertex_count();
  int start = -1;
  for (int u = 0; u < n; ++u)
    if (v[static_cast<size_t>(u)] != 0) {
      start = u;
      break;
    }
  if (start < 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (qv.adjacency[static_cast<size_t>(u)][static_cast<size_t>(w)] > 0 &&
          v[static_cast<size_t>(w)] != 0 && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  for (int u = 0; u < n; ++u)
    if (v[static_cast<size_t>(u)] != 0 && !seen[static_cast<size_t>(u)])
      return false;
  return true;
}

}  // namespace

DimVector unit_vector(const SupernovaQuiver& qv, int vertex) {
  if (vertex < 0 || vertex >= qv.vertex_count())
    throw InvalidInput("vertex index out of range");
  DimVector v(static_cast<size_t>(qv.vertex_count()), 0);
  v[static_cast<size_t>(vertex)] = 1;
  return v;
}

long long cartan_pairing(const SupernovaQuiver& qv, const DimVector& a,
                         const DimVector& b) {
  check_dims(qv, a);
  check_dims(qv, b);
  long long acc = 0;
  int n = qv.vertex_count();
  for (int u = 0; u < n; ++u) {
    acc += 2 * a[static_cast<size_t>(u)] * b[static_cast<size_t>(u)];
    for (int w = 0; w < n; ++w)
      if (w != u)
        acc -= static_cast<long long>(
                   qv.adjacency[static_cast<size_t>(u)][static_cast<size_t>(w)]) *
               a[static_cast<size_t>(u)] * b[static_cast<size_t>(w)];
  }
  return acc;
}

long long delta(const SupernovaQuiver& qv, const DimVector& v) {
  return -cartan_pairing(qv, v, v) / 2;
}

DimVector reflect(const SupernovaQuiver& qv, const DimVector& v, int vertex) {
  check_dims(qv, v);
  if (vertex < 0 || vertex >= qv.vertex_count())
    throw InvalidInput("vertex index out of range");
  DimVector out = v;
  out[static_cast<size_t>(vertex)] -= pair_with_unit(qv, v, vertex);
  return out;
}

const char* root_tag_name(RootTag tag) {
  switch (tag) {
    case RootTag::Real: return "Real";
    case RootTag::FundamentalImaginary: return "FundamentalImaginary";
    case RootTag::Imaginary: return "Imaginary";
    case RootTag::NotARoot: return "NotARoot";
  }
  return "NotARoot";
}

RootClass classify_root(const SupernovaQuiver& qv, const DimVector& v) {
  check_dims(qv, v);
  bool any_pos = false, any_neg = false;
  for (long long c : v) {
    any_pos = any_pos || c > 0;
    any_neg = any_neg || c < 0;
  }
  if (!any_pos && !any_neg) throw ZeroVector("cannot classify the zero vector");
  DimVector cur = v;
  if (!any_pos)
    for (long long& c : cur) c = -c;

  long long total = 0;
  for (long long c : cur) total += c > 0 ? c : -c;
  const long long cap = 10 * total + 10;

  RootClass result;
  for (long long step = 0; step <= cap; ++step) {
    bool negative = false;
    long long sum = 0;
    for (long long c : cur) {
      negative = negative || c < 0;
      sum += c;
    }
    if (negative) return result;  // left the positive cone: NotARoot
    if (sum == 1) {
      result.tag = RootTag::Real;
      return result;
    }
    if (!support_connected(qv, cur)) return result;
    int pivot = -1;
    for (int u = 0; u < qv.vertex_count(); ++u)
      if (pair_with_unit(qv, cur, u) > 0) {
        pivot = u;
        break;
      }
    if (pivot < 0) {
      result.tag = result.witness.empty() ? RootTag::FundamentalImaginary
                                          : RootTag::Imaginary;
      return result;
    }
    cur = reflect(qv, cur, pivot);
    result.witness.push_back(pivot);
  }
  throw InternalNonTermination("root classification exceeded its step cap");
}

bool in_fundamental_domain(const SupernovaQuiver& qv, const DimVector& v) {
  check_dims(qv, v);
  bool any = false;
  for (long long c : v) {
    if (c < 0) throw InvalidInput("fundamental-domain test needs a nonnegative vector");
    any = any || c > 0;
  }
  if (!any) throw ZeroVector("fundamental-domain test needs a nonzero vector");

  long long shorts = 0;
  for (int l = 1; l <= qv.r; ++l) shorts += v[static_cast<size_t>(qv.short_vertex(l))];
  bool closed = true;
  long long hub_sum = 0;
  for (int i = 1; i <= qv.legs(); ++i) {
    int s = qv.leg_len[static_cast<size_t>(i - 1)];
    long long hub = v[static_cast<size_t>(qv.hub_vertex(i))];
    hub_sum += hub;
    long long next = s >= 1 ? v[static_cast<size_t>(qv.leg_vertex(i, 1))] : 0;
    if (-2 * hub + next + shorts < 0) closed = false;
    for (int j = 0; j + 1 <= s; ++j) {
      long long a = v[static_cast<size_t>(qv.leg_vertex(i, j))];
      long long b = v[static_cast<size_t>(qv.leg_vertex(i, j + 1))];
      long long c = j + 2 <= s ? v[static_cast<size_t>(qv.leg_vertex(i, j + 2))] : 0;
      if (a - b < b - c) closed = false;
    }
  }
  for (int l = 1; l <= qv.r; ++l)
    if (2 * v[static_cast<size_t>(qv.short_vertex(l))] > hub_sum) closed = false;

  bool direct = support_connected(qv, v);
  for (int u = 0; direct && u < qv.vertex_count(); ++u)
    if (pair_with_unit(qv, v, u) > 0) direct = false;

  if (closed != direct)
    throw Error("fundamental-domain closed form disagrees with direct check");
  return direct;
}

bool vmu_in_M(const MultiPartition& mu) {
  if (mu.legs.size() == 1 && mu.legs[0].size() == 1)
    throw HypothesisViolated(
        "closed form needs k > 1 legs or a hub coordinate above 1");
  for (const Partition& leg : mu.legs)
    if (mu.r < leg.size() + leg.part(1)) return false;
  return true;
}

}  // namespace kac

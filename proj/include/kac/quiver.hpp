/*
  quiver.hpp — supernova quivers, their Cartan form, Weyl reflections, root
  classification, and the fundamental-domain predicates.

  A supernova quiver on (r; mu^1..mu^k) is the complete bipartite graph on r
  short vertices (1)..(r) and k hubs (1;0)..(k;0), with a path of length
  s_i = len(mu^i) - 1 attached to hub i. Flat vertex order: shorts first,
  then per leg the hub followed by (i;1)..(i;s_i).

  The canonical dimension vector v_mu puts 1 on shorts, |mu^i| on hub i and
  the partial-sum complements |mu^i| - mu^i_1 - ... - mu^i_j along leg i.
*/
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kac/graph.hpp"

namespace kac {

class Partition {
 public:
  Partition() = default;
  // weakly decreasing, zero parts stripped; NotAPartition otherwise
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int j) const;  // 1-based, 0 beyond the end
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct MultiPartition {
  int r = 0;
  std::vector<Partition> legs;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
};

// validates r >= 1 and k >= 1 nonempty legs
MultiPartition make_multipartition(int r, std::vector<Partition> legs);

// "r=5; mu=2" or "r=3; mu=1|1": legs split on '|', parts on ','
MultiPartition parse_input(const std::string& text);
std::string format_input(const MultiPartition& mu);

struct SupernovaQuiver {
  int r = 0;
  std::vector<int> leg_len;                 // s_i per leg
  std::vector<std::vector<int>> adjacency;  // symmetric multiplicity matrix

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  int legs() const { return static_cast<int>(leg_len.size()); }
  int short_vertex(int l) const;       // l in 1..r
  int hub_vertex(int i) const;         // i in 1..k
  int leg_vertex(int i, int j) const;  // j in 0..s_i
  std::string vertex_name(int idx) const;
};

using DimVector = std::vector<long long>;

std::pair<SupernovaQuiver, DimVector> build_supernova(const MultiPartition& mu);

ColoredMultigraph underlying_graph(const SupernovaQuiver& qv);

DimVector unit_vector(const SupernovaQuiver& qv, int vertex);
long long cartan_pairing(const SupernovaQuiver& qv, const DimVector& a,
                         const DimVector& b);
long long delta(const SupernovaQuiver& qv, const DimVector& v);
DimVector reflect(const SupernovaQuiver& qv, const DimVector& v, int vertex);

enum class RootTag { Real, FundamentalImaginary, Imaginary, NotARoot };

struct RootClass {
  RootTag tag = RootTag::NotARoot;
  std::vector<int> witness;  // vertices reflected at, in order
};

const char* root_tag_name(RootTag tag);

/*
  Minimizing algorithm: flip a nonpositive vector, then repeatedly reflect
  at the smallest vertex with (v, e_i) > 0. Each such step strictly lowers
  the coordinate sum of a positive vector, so the walk terminates; a step
  cap of 10x the initial coordinate sum guards against bugs. Ends at a
  simple root (Real), at a fundamental-domain vector (Fundamental/Imaginary
  depending on whether any reflections happened), or leaves the positive
  cone / disconnects its support (NotARoot).
*/
RootClass classify_root(const SupernovaQuiver& qv, const DimVector& v);

// Conditions: delta_i(v) >= 0 at each hub, sum of hub coordinates >= twice
// each short coordinate, concavity along each leg; checked against the
// direct definition ((e_u,v) <= 0 everywhere, connected support).
bool in_fundamental_domain(const SupernovaQuiver& qv, const DimVector& v);

// r >= |mu^i| + mu^i_1 for all i; HypothesisViolated when k = 1 and
// |mu^1| = 1, where this closed form does not apply.
bool vmu_in_M(const MultiPartition& mu);

}  // namespace kac

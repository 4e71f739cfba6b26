#include "f3/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace f3::lattice {

CubicLattice::CubicLattice(std::array<int, 3> dims, std::array<bool, 3> periodic,
                           Layout layout)
    : dims_(dims), periodic_(periodic), layout_(layout) {
  for (int a = 0; a < 3; a++)
    if (dims[a] < 2) throw std::invalid_argument("lattice dimension < 2");
  // enumerate cells type by type, lexicographic coordinates
  std::array<int, 3> hi;
  for (int a = 0; a < 3; a++) hi[a] = periodic_[a] ? 2 * dims_[a] - 1 : 2 * dims_[a];
  for (int x = 0; x <= hi[0]; x++)
    for (int y = 0; y <= hi[1]; y++)
      for (int z = 0; z <= hi[2]; z++) {
        DCoord c = {x, y, z};
        cells_[int(cell_type(c))].push_back(c);
      }
  for (int t = 0; t < 4; t++) {
    std::sort(cells_[t].begin(), cells_[t].end());
    for (size_t i = 0; i < cells_[t].size(); i++) rank_[key(cells_[t][i])] = int(i);
  }
  num_edges_ = cells_[int(CellType::Edge)].size();
  size_t num_faces = cells_[int(CellType::Face)].size();
  num_qubits_ = layout_ == Layout::Original ? 2 * num_edges_ : num_edges_ + num_faces;
}

std::optional<DCoord> CubicLattice::normalize(DCoord c) const {
  for (int a = 0; a < 3; a++) {
    if (periodic_[a]) {
      int m = 2 * dims_[a];
      c[a] = ((c[a] % m) + m) % m;
    } else if (c[a] < 0 || c[a] > 2 * dims_[a]) {
      return std::nullopt;
    }
  }
  return c;
}

int CubicLattice::cell_rank(const DCoord& c) const {
  auto n = normalize(c);
  if (!n) return -1;
  auto it = rank_.find(key(*n));
  return it == rank_.end() ? -1 : it->second;
}

int CubicLattice::sigma_qubit(const DCoord& edge) const {
  auto n = normalize(edge);
  if (!n || cell_type(*n) != CellType::Edge) return -1;
  int r = cell_rank(*n);
  if (r < 0) return -1;
  return layout_ == Layout::Original ? 2 * r : r;
}

int CubicLattice::tau_qubit(const DCoord& cell) const {
  auto n = normalize(cell);
  if (!n) return -1;
  if (layout_ == Layout::Original) {
    if (cell_type(*n) != CellType::Edge) return -1;
    int r = cell_rank(*n);
    return r < 0 ? -1 : 2 * r + 1;
  }
  if (cell_type(*n) != CellType::Face) return -1;
  int r = cell_rank(*n);
  return r < 0 ? -1 : int(num_edges_) + r;
}

std::array<DCoord, 6> CubicLattice::star(const DCoord& v) {
  return {DCoord{v[0] + 1, v[1], v[2]}, DCoord{v[0] - 1, v[1], v[2]},
          DCoord{v[0], v[1] + 1, v[2]}, DCoord{v[0], v[1] - 1, v[2]},
          DCoord{v[0], v[1], v[2] + 1}, DCoord{v[0], v[1], v[2] - 1}};
}

std::array<DCoord, 4> CubicLattice::boundary(const DCoord& f) {
  // the two odd axes span the face
  std::array<DCoord, 4> r;
  int k = 0;
  for (int a = 0; a < 3; a++) {
    if (!(f[a] & 1)) continue;
    DCoord p = f, m = f;
    p[a] += 1;
    m[a] -= 1;
    r[k++] = p;
    r[k++] = m;
  }
  return r;
}

std::array<DCoord, 4> CubicLattice::coboundary(const DCoord& e) {
  std::array<DCoord, 4> r;
  int k = 0;
  for (int a = 0; a < 3; a++) {
    if (e[a] & 1) continue;
    DCoord p = e, m = e;
    p[a] += 1;
    m[a] -= 1;
    r[k++] = p;
    r[k++] = m;
  }
  return r;
}

std::array<DCoord, 6> CubicLattice::cube_faces(const DCoord& q) {
  return star(q);  // same +-1 pattern in doubled coordinates
}

bool CubicLattice::demand_sigma(PauliOperator& op, const DCoord& edge, char p) const {
  int q = sigma_qubit(edge);
  if (q < 0) return false;
  op.mul(PauliOperator::single(num_qubits_, size_t(q), p));
  return true;
}

bool CubicLattice::demand_tau(PauliOperator& op, const DCoord& cell, char p) const {
  int q = tau_qubit(cell);
  if (q < 0) return false;
  op.mul(PauliOperator::single(num_qubits_, size_t(q), p));
  return true;
}

namespace {

void vertex_terms(const CubicLattice& lat, Theory th, std::vector<HamiltonianTerm>& out) {
  const char* ra = th == Theory::ThreeFermion ? "A_v^r" : "A_v^e";
  const char* ga = th == Theory::ThreeFermion ? "A_v^g" : "A_v^m";
  for (const DCoord& v : lat.cells(CellType::Vertex)) {
    PauliOperator pr(lat.num_qubits()), pg(lat.num_qubits());
    for (const DCoord& e : CubicLattice::star(v)) {
      lat.demand_sigma(pr, e, 'X');
      lat.demand_tau(pg, e, 'X');
    }
    out.push_back({pr, ra, v});
    out.push_back({pg, ga, v});
  }
}

void original_plaquettes(const CubicLattice& lat, Theory th,
                         std::vector<HamiltonianTerm>& out) {
  bool f3 = th == Theory::ThreeFermion;
  for (const DCoord& f : lat.cells(CellType::Face)) {
    DCoord over = add(f, kShift), under = sub(f, kShift);
    PauliOperator pr(lat.num_qubits());
    bool trunc_r = false;
    for (const DCoord& e : CubicLattice::boundary(f))
      trunc_r |= !lat.demand_sigma(pr, e, 'Z');
    if (f3) trunc_r |= !lat.demand_sigma(pr, over, 'X');
    if (f3) trunc_r |= !lat.demand_sigma(pr, under, 'X');
    trunc_r |= !lat.demand_tau(pr, under, 'X');
    out.push_back({pr, std::string(f3 ? "B_f^r" : "B_f^e") + (trunc_r ? "[t]" : ""), f});

    PauliOperator pg(lat.num_qubits());
    bool trunc_g = false;
    for (const DCoord& e : CubicLattice::boundary(f))
      trunc_g |= !lat.demand_tau(pg, e, 'Z');
    trunc_g |= !lat.demand_sigma(pg, over, 'X');
    if (f3) trunc_g |= !lat.demand_tau(pg, over, 'X');
    if (f3) trunc_g |= !lat.demand_tau(pg, under, 'X');
    out.push_back({pg, std::string(f3 ? "B_f^g" : "B_f^m") + (trunc_g ? "[t]" : ""), f});
  }
}

void modified_terms(const CubicLattice& lat, Theory th, std::vector<HamiltonianTerm>& out) {
  bool f3 = th == Theory::ThreeFermion;
  for (const DCoord& v : lat.cells(CellType::Vertex)) {
    PauliOperator p(lat.num_qubits());
    for (const DCoord& e : CubicLattice::star(v)) lat.demand_sigma(p, e, 'X');
    out.push_back({p, f3 ? "At_v^r" : "At_v^e", v});
  }
  for (const DCoord& q : lat.cells(CellType::Cube)) {
    PauliOperator p(lat.num_qubits());
    for (const DCoord& f : CubicLattice::cube_faces(q)) lat.demand_tau(p, f, 'X');
    out.push_back({p, f3 ? "At_q^g" : "At_q^m", q});
  }
  for (const DCoord& f : lat.cells(CellType::Face)) {
    PauliOperator p(lat.num_qubits());
    bool trunc = false;
    lat.demand_tau(p, f, 'X');
    for (const DCoord& e : CubicLattice::boundary(f)) trunc |= !lat.demand_sigma(p, e, 'Z');
    if (f3) {
      trunc |= !lat.demand_sigma(p, add(f, kShift), 'X');
      trunc |= !lat.demand_sigma(p, sub(f, kShift), 'X');
    }
    out.push_back({p, std::string(f3 ? "Bt_f^r" : "Bt_f^e") + (trunc ? "[t]" : ""), f});
  }
  for (const DCoord& e : lat.cells(CellType::Edge)) {
    PauliOperator p(lat.num_qubits());
    bool trunc = false;
    lat.demand_sigma(p, e, 'X');
    for (const DCoord& f : CubicLattice::coboundary(e)) trunc |= !lat.demand_tau(p, f, 'Z');
    if (f3) {
      trunc |= !lat.demand_tau(p, add(e, kShift), 'X');
      trunc |= !lat.demand_tau(p, sub(e, kShift), 'X');
    }
    out.push_back({p, std::string(f3 ? "Bt_e^g" : "Bt_e^m") + (trunc ? "[t]" : ""), e});
  }
}

}  // namespace

std::vector<HamiltonianTerm> build_terms(const CubicLattice& lat, Theory theory) {
  std::vector<HamiltonianTerm> out;
  if (lat.layout() == Layout::Original) {
    vertex_terms(lat, theory, out);
    original_plaquettes(lat, theory, out);
  } else {
    modified_terms(lat, theory, out);
  }
  return out;
}

std::vector<HamiltonianTerm> build_3f(const CubicLattice& lat) {
  if (lat.layout() != Layout::Original) throw std::invalid_argument("build_3f: original layout");
  return build_terms(lat, Theory::ThreeFermion);
}

std::vector<HamiltonianTerm> build_modified_3f(const CubicLattice& lat) {
  if (lat.layout() != Layout::Modified)
    throw std::invalid_argument("build_modified_3f: modified layout");
  return build_terms(lat, Theory::ThreeFermion);
}

std::vector<HamiltonianTerm> build_tc_walker_wang(const CubicLattice& lat) {
  return build_terms(lat, Theory::ToricCode);
}

std::vector<HamiltonianTerm> build_boundary(const CubicLattice& lat, Theory theory) {
  int smooth = 0;
  for (int a = 0; a < 3; a++) smooth += !lat.periodic()[a];
  if (smooth != 1) throw std::invalid_argument("build_boundary: exactly one smooth axis");
  return build_terms(lat, theory);
}

StabilizerGroup group_of(const std::vector<HamiltonianTerm>& terms, bool check_commuting,
                         bool track_witness) {
  std::vector<PauliOperator> gens;
  gens.reserve(terms.size());
  for (const auto& t : terms) gens.push_back(t.op);
  return canonicalize(gens, check_commuting, track_witness);
}

std::vector<int> tau_translation_map(const CubicLattice& original,
                                     const CubicLattice& modified) {
  if (original.layout() != Layout::Original || modified.layout() != Layout::Modified)
    throw std::invalid_argument("tau_translation_map: layouts");
  std::vector<int> map(original.num_qubits(), -1);
  for (const DCoord& e : original.cells(CellType::Edge)) {
    map[original.sigma_qubit(e)] = modified.sigma_qubit(e);
    int dst = modified.tau_qubit(add(e, kShift));
    if (dst < 0) throw std::invalid_argument("tau translation leaves the lattice");
    map[original.tau_qubit(e)] = dst;
  }
  return map;
}

std::vector<int> translation_permutation(const CubicLattice& lat, const DCoord& w) {
  if (lat.layout() != Layout::Modified)
    throw std::invalid_argument("translation_permutation: modified layout");
  std::vector<int> map(lat.num_qubits(), -1);
  auto qubit_at = [&](const DCoord& c) {
    return cell_type(c) == CellType::Edge ? lat.sigma_qubit(c) : lat.tau_qubit(c);
  };
  for (const DCoord& e : lat.cells(CellType::Edge)) {
    int dst = qubit_at(add(e, w));
    if (dst < 0) throw std::invalid_argument("translation leaves the lattice");
    map[lat.sigma_qubit(e)] = dst;
  }
  for (const DCoord& f : lat.cells(CellType::Face)) {
    int dst = qubit_at(add(f, w));
    if (dst < 0) throw std::invalid_argument("translation leaves the lattice");
    map[lat.tau_qubit(f)] = dst;
  }
  return map;
}

PauliOperator apply_qubit_map(const PauliOperator& p, const std::vector<int>& perm,
                              size_t out_qubits) {
  PauliOperator r(out_qubits);
  r.phase = p.phase;
  for (size_t q = 0; q < p.num_qubits(); q++) {
    char c = p.get(q);
    if (c == 'I') continue;
    if (perm[q] < 0) throw std::invalid_argument("qubit map undefined on support");
    r.set(size_t(perm[q]), c);
  }
  return r;
}

PauliOperator boundary_logical(const CubicLattice& lat, const BoundaryCycle& c,
                               char species) {
  if (lat.layout() != Layout::Original)
    throw std::invalid_argument("boundary_logical: original layout");
  // over-link rule: push each cycle edge by the in-plane diagonal, toward
  // +(1,1) on the low boundary and -(1,1) on the high boundary
  DCoord d = kShift;
  d[c.axis] = 0;
  if (c.side == 1) d = {-d[0], -d[1], -d[2]};
  PauliOperator op(lat.num_qubits());
  for (const DCoord& e : c.edges) {
    if (species == 'r') {
      if (!lat.demand_sigma(op, e, 'Z')) throw std::invalid_argument("cycle edge missing");
    } else {
      if (!lat.demand_tau(op, e, 'Z')) throw std::invalid_argument("cycle edge missing");
    }
  }
  // Which X dressing keeps the over-links commuting with the truncated
  // plaquettes depends on the boundary side: the low boundary deletes the
  // under decorations, the high boundary the over decorations.
  bool use_sigma = (c.side == 0) || species == 'r';
  bool use_tau = (c.side == 1) || species == 'g';
  for (const DCoord& e : c.edges) {
    DCoord o = add(e, d);
    bool ok = true;
    if (use_sigma) ok &= lat.demand_sigma(op, o, 'X');
    if (use_tau) ok &= lat.demand_tau(op, o, 'X');
    if (!ok) throw std::invalid_argument("over-link missing");
  }
  return op;
}

BoundaryCycle straight_boundary_cycle(const CubicLattice& lat, int smooth_axis, int side,
                                      int dir, int at) {
  if (!lat.periodic()[dir]) throw std::invalid_argument("cycle direction must be periodic");
  BoundaryCycle c;
  c.axis = smooth_axis;
  c.side = side;
  int plane = side == 0 ? 0 : 2 * lat.dims()[smooth_axis];
  for (int k = 0; k < lat.dims()[dir]; k++) {
    DCoord e = {0, 0, 0};
    e[smooth_axis] = plane;
    e[dir] = 2 * k + 1;
    int other = 3 - smooth_axis - dir;
    e[other] = at;
    c.edges.push_back(e);
  }
  return c;
}

BoundaryCycle rect_boundary_cycle(const CubicLattice& lat, int smooth_axis, int side,
                                  std::array<int, 2> lo, std::array<int, 2> hi) {
  BoundaryCycle c;
  c.axis = smooth_axis;
  c.side = side;
  int plane = side == 0 ? 0 : 2 * lat.dims()[smooth_axis];
  std::array<int, 2> inplane;
  int k = 0;
  for (int a = 0; a < 3; a++)
    if (a != smooth_axis) inplane[k++] = a;
  auto mk = [&](int u, int v) {
    DCoord e = {0, 0, 0};
    e[smooth_axis] = plane;
    e[inplane[0]] = u;
    e[inplane[1]] = v;
    return e;
  };
  for (int u = lo[0] + 1; u < hi[0]; u += 2) {
    c.edges.push_back(mk(u, lo[1]));
    c.edges.push_back(mk(u, hi[1]));
  }
  for (int v = lo[1] + 1; v < hi[1]; v += 2) {
    c.edges.push_back(mk(lo[0], v));
    c.edges.push_back(mk(hi[0], v));
  }
  return c;
}

std::string terms_to_json(const std::vector<HamiltonianTerm>& terms) {
  std::ostringstream os;
  os << "[\n";
  for (size_t i = 0; i < terms.size(); i++) {
    const auto& t = terms[i];
    os << "  {\"kind\": \"" << t.kind << "\", \"anchor\": [" << t.anchor[0] << ", "
       << t.anchor[1] << ", " << t.anchor[2] << "], \"pauli\": \"" << t.op.str() << "\"}"
       << (i + 1 < terms.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

}  // namespace f3::lattice

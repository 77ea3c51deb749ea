#include "qfermat/hilb1.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace qfermat {

std::vector<int> face_members(Face face) {
  std::vector<int> out;
  for (int i = 0; face; ++i, face >>= 1) {
    if (face & 1U) out.push_back(i);
  }
  return out;
}

int triangle_exponent(const QuantumParams& params, int i, int j, int k) {
  return mod_n(params.e(i, j) + params.e(j, k) + params.e(k, i), params.n());
}

bool is_generic(const QuantumParams& params) {
  const int n = params.n();
  if (n < 3) throw InputError("genericity needs n >= 3");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (triangle_exponent(params, i, j, k) == 0) return false;
      }
    }
  }
  return true;
}

bool is_admissible(const QuantumParams& params, Face face) {
  const auto members = face_members(face);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      for (std::size_t c = b + 1; c < members.size(); ++c) {
        if (triangle_exponent(params, members[a], members[b], members[c]) != 0) return false;
      }
    }
  }
  return true;
}

bool FaceComplex::is_one_skeleton() const {
  return std::all_of(maximal_faces.begin(), maximal_faces.end(),
                     [](Face f) { return std::popcount(f) == 2; });
}

FaceComplex face_complex(const QuantumParams& params) {
  const int n = params.n();
  if (n < 3) throw InputError("face complex needs n >= 3");
  if (n > 24) throw CapacityError("face complex enumeration limited to n <= 24");
  const Face all = (Face{1} << n) - 1;
  std::vector<Face> admissible;
  for (Face s = 1; s <= all; ++s) {
    if (std::popcount(s) >= 2 && is_admissible(params, s)) admissible.push_back(s);
  }
  // Admissibility is inherited by subsets, so a face is maximal iff no one-element
  // extension is admissible.
  std::vector<bool> ok(static_cast<std::size_t>(all) + 1, false);
  for (Face s : admissible) ok[s] = true;
  FaceComplex out;
  out.n = n;
  for (Face s : admissible) {
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      const Face bit = Face{1} << i;
      if (!(s & bit) && ok[s | bit]) maximal = false;
    }
    if (maximal) out.maximal_faces.push_back(s);
  }
  std::sort(out.maximal_faces.begin(), out.maximal_faces.end(), [](Face a, Face b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
    return a < b;
  });
  out.is_full = out.maximal_faces.size() == 1 && out.maximal_faces.front() == all;
  return out;
}

std::vector<int> shift_automorphism(const QuantumParams& params, Face face, int base) {
  if (!(face & (Face{1} << base))) throw InputError("shift base index is not in the face");
  if (!is_admissible(params, face)) throw InputError("face is not admissible: some triangle exponent is nonzero");
  std::vector<int> out;
  for (int j : face_members(face)) out.push_back(params.e(base, j));
  return out;
}

bool verify_point_sequence(const QuantumParams& params, std::span<const Cyclotomic> xi, int steps) {
  const int n = params.n();
  if (xi.size() != static_cast<std::size_t>(n)) throw InputError("point has the wrong number of coordinates");
  const FieldRef field = xi.front().field();
  if (field->conductor() % n != 0) throw FieldMismatch("point coordinates need a conductor divisible by n");
  const int scale = field->conductor() / n;
  Face support = 0;
  for (int j = 0; j < n; ++j) {
    if (!xi[j].is_zero()) support |= Face{1} << j;
  }
  if (support == 0) return false;
  const int base = std::countr_zero(support);
  // The shift is read off the base row even on inadmissible supports; the relations
  // then fail, which is the point of the check.
  std::vector<Cyclotomic> phase;
  for (int j = 0; j < n; ++j) phase.push_back(root_of_unity(field, static_cast<long long>(params.e(base, j)) * scale));
  std::vector<Cyclotomic> cur(xi.begin(), xi.end());
  for (int step = 0; step < steps; ++step) {
    std::vector<Cyclotomic> next;
    for (int j = 0; j < n; ++j) next.push_back(cur[j] * phase[j]);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Cyclotomic q = root_of_unity(field, static_cast<long long>(params.e(a, b)) * scale);
        if (!(cur[a] * next[b] == q * cur[b] * next[a])) return false;
      }
    }
    cur = std::move(next);
  }
  return true;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::ProjectiveSpace: return "projective-space";
    case ComponentKind::HypersurfaceInFace: return "hypersurface-in-face";
    case ComponentKind::FinitePoints: return "finite-points";
  }
  return "unknown";
}

namespace {

// The n solutions of xi_i^n + xi_j^n = 0 on the edge {i, j}, normalized xi_i = 1,
// with their decomposition into shift orbits.
void fill_edge_points(const QuantumParams& params, Hilb1Component& comp) {
  const int n = params.n();
  const FieldRef field = CycloField::get(2 * n);
  const auto members = face_members(comp.face);
  const int i = members[0];
  const int j = members[1];
  for (int t = 0; t < n; ++t) {
    std::vector<Cyclotomic> point(n, Cyclotomic::zero(field));
    point[i] = Cyclotomic::one(field);
    point[j] = root_of_unity(field, 2 * t + 1);
    comp.points.push_back(std::move(point));
  }
  comp.point_count = n;
  const Cyclotomic step = root_of_unity(field, 2LL * params.e(i, j));
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    Cyclotomic coord = comp.points[start][j];
    for (;;) {
      const auto it = std::find_if(comp.points.begin(), comp.points.end(),
                                   [&](const auto& p) { return p[j] == coord; });
      if (it == comp.points.end()) throw std::logic_error("hilb1: shift left the Fermat locus");
      const int idx = static_cast<int>(it - comp.points.begin());
      if (seen[idx]) break;
      seen[idx] = true;
      orbit.push_back(idx);
      coord *= step;
    }
    comp.orbits.push_back(std::move(orbit));
  }
  comp.orbit_length = static_cast<int>(comp.orbits.front().size());
}

}  // namespace

Hilb1Report hilb1(const QuantumParams& params, Algebra algebra) {
  const int n = params.n();
  Hilb1Report report;
  report.n = n;
  report.algebra = algebra;
  report.complex = face_complex(params);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) report.triangles.push_back({i, j, k, triangle_exponent(params, i, j, k)});
    }
  }
  long long total = 0;
  bool all_finite = true;
  for (Face face : report.complex.maximal_faces) {
    Hilb1Component comp;
    comp.face = face;
    const int size = std::popcount(face);
    comp.shift = shift_automorphism(params, face, std::countr_zero(face));
    if (algebra == Algebra::B) {
      comp.kind = ComponentKind::ProjectiveSpace;
      comp.dimension = size - 1;
      all_finite = false;
    } else if (size == 2) {
      comp.kind = ComponentKind::FinitePoints;
      comp.dimension = 0;
      fill_edge_points(params, comp);
      total += *comp.point_count;
    } else {
      comp.kind = ComponentKind::HypersurfaceInFace;
      comp.dimension = size - 2;
      all_finite = false;
    }
    report.components.push_back(std::move(comp));
  }
  report.discrete = all_finite;
  if (report.discrete) report.total_points = total;
  return report;
}

long long euler_number_n4(const Hilb1Report& report) {
  if (report.n != 4) throw InputError("euler_number_n4 applies to n = 4 only");
  if (report.algebra != Algebra::A) throw InputError("euler_number_n4 needs a report for A_4");
  if (report.complex.is_full) return 24;
  if (report.discrete && report.total_points) return *report.total_points;
  throw InputError("Hilb^1(A_4) is neither the quartic surface nor discrete");
}

}  // namespace qfermat

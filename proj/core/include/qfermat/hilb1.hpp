#pragma once

// Point modules over B_n and A_n.
//
// A point module is a sequence of points xi_0, xi_1, ... in P^{n-1} with
//   xi_a xi'_b = q_ab xi_b xi'_a
// between consecutive points. Solutions are orbits of a diagonal shift on the
// coordinate faces P_S whose triangle exponents e_ij + e_jk + e_ki all vanish;
// every edge {i, j} is such a face. Over A_n the faces are cut by the Fermat
// equation, so an edge contributes the n points (1 : t), t^n = -1.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfermat/cyclo.hpp"
#include "qfermat/params.hpp"
#include "qfermat/skew_poly.hpp"

namespace qfermat {

/// Subsets of {0..n-1} as bitmasks.
using Face = std::uint32_t;

std::vector<int> face_members(Face face);

/// e_ij + e_jk + e_ki mod n.
int triangle_exponent(const QuantumParams& params, int i, int j, int k);

/// Every triangle exponent nonzero. Requires n >= 3.
bool is_generic(const QuantumParams& params);

/// All triangles inside the face vanish (always true for |S| <= 2).
bool is_admissible(const QuantumParams& params, Face face);

struct FaceComplex {
  int n = 0;
  std::vector<Face> maximal_faces;  // sorted by size descending, then by mask
  bool is_full = false;

  bool is_one_skeleton() const;
};

FaceComplex face_complex(const QuantumParams& params);

/// Phases d_j (aligned with face_members(face)) with d_base = 0 and d_j = e_{base j}:
/// the shift xi -> diag(w^d) xi carries each point of the sequence to the next.
/// Throws InputError for inadmissible faces or a base outside the face.
std::vector<int> shift_automorphism(const QuantumParams& params, Face face, int base);

/// Checks the relations between consecutive points of xi, phi xi, ..., phi^steps xi,
/// phi the shift on the support of xi based at its smallest index.
/// Coordinates may use any conductor divisible by n.
bool verify_point_sequence(const QuantumParams& params, std::span<const Cyclotomic> xi, int steps);

enum class ComponentKind { ProjectiveSpace, HypersurfaceInFace, FinitePoints };

const char* to_string(ComponentKind kind);

struct Hilb1Component {
  Face face = 0;
  ComponentKind kind = ComponentKind::ProjectiveSpace;
  int dimension = 0;
  std::vector<int> shift;  // shift_automorphism(face, smallest member)
  std::optional<int> point_count;
  std::vector<std::vector<Cyclotomic>> points;  // conductor 2n, length n each
  std::vector<std::vector<int>> orbits;         // indices into points
  std::optional<int> orbit_length;
};

struct TriangleRecord {
  int i, j, k;
  int exponent;
};

struct Hilb1Report {
  int n = 0;
  Algebra algebra = Algebra::B;
  FaceComplex complex;
  std::vector<TriangleRecord> triangles;
  std::vector<Hilb1Component> components;
  std::optional<long long> total_points;
  bool discrete = false;
};

Hilb1Report hilb1(const QuantumParams& params, Algebra algebra);

/// Euler number of Hilb^1(A_4): 24 for the quartic surface, the point count when
/// discrete. Throws InputError off the two-case dichotomy or when n != 4.
long long euler_number_n4(const Hilb1Report& report);

}  // namespace qfermat

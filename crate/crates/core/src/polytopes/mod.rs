//! Regular 3- and 4-polytopes, hypervectors, and discrete isotropy checks.
//!
//! A finite unit-vector set stands in for an isotropic measure when its
//! centroid vanishes and its frame operator `Σ v vᵀ` is proportional to the
//! identity (a tight frame). Every regular polytope here satisfies both,
//! which is what ties their vertex sets to private-quantum-channel key sets.

mod coords;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The five regular 3-polytopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlatonicSolid {
    Tetrahedron,
    Hexahedron,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Hexahedron,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron,
        PlatonicSolid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Hexahedron => "hexahedron",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PlatonicSolid::Tetrahedron => 4,
            PlatonicSolid::Octahedron => 6,
            PlatonicSolid::Hexahedron => 8,
            PlatonicSolid::Icosahedron => 12,
            PlatonicSolid::Dodecahedron => 20,
        }
    }

    /// Solid with the given vertex count, for t ∈ {4, 6, 8, 12, 20}.
    pub fn with_vertex_count(t: usize) -> Option<PlatonicSolid> {
        PlatonicSolid::ALL.into_iter().find(|s| s.vertex_count() == t)
    }
}

impl FromStr for PlatonicSolid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlatonicSolid::ALL
            .into_iter()
            .find(|solid| solid.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "platonic solid", name: s.to_string() })
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six regular convex 4-polytopes, under the names used by the
/// correspondence table. Note the table's labels key "hypercube" to the
/// 8-cell [4,3,3] and "tesseract16" to the 16-cell [3,3,4]; the Schläfli
/// symbol is the unambiguous identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polytope4 {
    Simplex,
    Hypercube,
    Tesseract16,
    Octaplex,
    Dodecaplex,
    Tetraplex,
}

impl Polytope4 {
    pub const ALL: [Polytope4; 6] = [
        Polytope4::Simplex,
        Polytope4::Hypercube,
        Polytope4::Tesseract16,
        Polytope4::Octaplex,
        Polytope4::Dodecaplex,
        Polytope4::Tetraplex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Polytope4::Simplex => "simplex",
            Polytope4::Hypercube => "hypercube",
            Polytope4::Tesseract16 => "tesseract16",
            Polytope4::Octaplex => "octaplex",
            Polytope4::Dodecaplex => "dodecaplex",
            Polytope4::Tetraplex => "tetraplex",
        }
    }

    pub fn schlaefli(self) -> [u32; 3] {
        match self {
            Polytope4::Simplex => [3, 3, 3],
            Polytope4::Hypercube => [4, 3, 3],
            Polytope4::Tesseract16 => [3, 3, 4],
            Polytope4::Octaplex => [3, 4, 3],
            Polytope4::Dodecaplex => [5, 3, 3],
            Polytope4::Tetraplex => [3, 3, 5],
        }
    }

    /// Coxeter symmetry-group label (metadata only).
    pub fn coxeter_group(self) -> &'static str {
        match self {
            Polytope4::Simplex => "A4",
            Polytope4::Hypercube | Polytope4::Tesseract16 => "B4",
            Polytope4::Octaplex => "F4",
            Polytope4::Dodecaplex | Polytope4::Tetraplex => "H4",
        }
    }

    pub fn cell_count(self) -> usize {
        match self {
            Polytope4::Simplex => 5,
            Polytope4::Hypercube => 8,
            Polytope4::Tesseract16 => 16,
            Polytope4::Octaplex => 24,
            Polytope4::Dodecaplex => 120,
            Polytope4::Tetraplex => 600,
        }
    }
}

impl FromStr for Polytope4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Polytope4::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "4-polytope", name: s.to_string() })
    }
}

impl fmt::Display for Polytope4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element counts of a regular polytope; `cells` is present only at dim 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<usize>,
}

/// A named regular polytope with unit-circumradius vertices.
#[derive(Clone, Debug, Serialize)]
pub struct Polytope {
    name: String,
    dim: usize,
    schlaefli: Vec<u32>,
    vertices: Vec<Vec<f64>>,
    expected_counts: ElementCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    coxeter_group: Option<&'static str>,
}

impl Polytope {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn schlaefli(&self) -> &[u32] {
        &self.schlaefli
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn expected_counts(&self) -> ElementCounts {
        self.expected_counts
    }

    pub fn coxeter_group(&self) -> Option<&'static str> {
        self.coxeter_group
    }

    /// Isotropy report for this polytope's vertex set.
    pub fn isotropy(&self) -> IsotropyReport {
        verify_isotropy(&self.vertices, self.dim).expect("polytope vertices are well-formed")
    }
}

/// Centroid and frame-operator deviations of a unit-vector set.
///
/// `centroid_norm` is `‖Σ v / n‖`; `frame_deviation` is the max entrywise
/// deviation of `Σ v vᵀ` from `(n/dim)·I`. The set is (discretely) isotropic
/// when both vanish; thresholds are the caller's business.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IsotropyReport {
    pub n: usize,
    pub centroid_norm: f64,
    pub frame_deviation: f64,
}

/// An ordered tuple of unit 3-vectors matching a regular polyhedron's
/// vertex set (t ∈ {4, 6, 8, 12, 20}).
#[derive(Clone, Debug, Serialize)]
pub struct Hypervector {
    solid: PlatonicSolid,
    vectors: Vec<[f64; 3]>,
}

impl Hypervector {
    pub fn t(&self) -> usize {
        self.vectors.len()
    }

    pub fn solid(&self) -> PlatonicSolid {
        self.solid
    }

    pub fn vectors(&self) -> &[[f64; 3]] {
        &self.vectors
    }

    pub fn isotropy(&self) -> IsotropyReport {
        verify_isotropy(&self.vectors, 3).expect("hypervector components are well-formed")
    }
}

/// Unit-circumradius vertex model of a Platonic solid.
pub fn platonic(solid: PlatonicSolid) -> Polytope {
    let (vertices, schlaefli, counts) = match solid {
        PlatonicSolid::Tetrahedron => (coords::tetrahedron(), vec![3, 3], (4, 6, 4)),
        PlatonicSolid::Hexahedron => (coords::hexahedron(), vec![4, 3], (8, 12, 6)),
        PlatonicSolid::Octahedron => (coords::octahedron(), vec![3, 4], (6, 12, 8)),
        PlatonicSolid::Dodecahedron => (coords::dodecahedron(), vec![5, 3], (20, 30, 12)),
        PlatonicSolid::Icosahedron => (coords::icosahedron(), vec![3, 5], (12, 30, 20)),
    };
    Polytope {
        name: solid.name().to_string(),
        dim: 3,
        schlaefli,
        vertices,
        expected_counts: ElementCounts {
            vertices: counts.0,
            edges: counts.1,
            faces: counts.2,
            cells: None,
        },
        coxeter_group: None,
    }
}

/// Unit-circumradius vertex model of a regular convex 4-polytope.
pub fn regular_4polytope(p: Polytope4) -> Polytope {
    let (vertices, counts) = match p {
        Polytope4::Simplex => (coords::simplex(), (5, 10, 10)),
        Polytope4::Hypercube => (coords::hypercube(), (16, 32, 24)),
        Polytope4::Tesseract16 => (coords::tesseract16(), (8, 24, 32)),
        Polytope4::Octaplex => (coords::octaplex(), (24, 96, 96)),
        Polytope4::Dodecaplex => (coords::dodecaplex(), (600, 1200, 720)),
        Polytope4::Tetraplex => (coords::tetraplex(), (120, 720, 1200)),
    };
    Polytope {
        name: p.name().to_string(),
        dim: 4,
        schlaefli: p.schlaefli().to_vec(),
        vertices,
        expected_counts: ElementCounts {
            vertices: counts.0,
            edges: counts.1,
            faces: counts.2,
            cells: Some(p.cell_count()),
        },
        coxeter_group: Some(p.coxeter_group()),
    }
}

/// Measures how far a vector set is from discrete isotropy. Never rejects a
/// non-isotropic input; callers threshold the report.
pub fn verify_isotropy<V: AsRef<[f64]>>(vectors: &[V], dim: usize) -> Result<IsotropyReport> {
    if vectors.is_empty() {
        return Err(Error::shape("isotropy check", "empty vector list"));
    }
    if let Some(v) = vectors.iter().find(|v| v.as_ref().len() != dim) {
        return Err(Error::shape(
            "isotropy check",
            format!("vector of length {} in a dim-{dim} check", v.as_ref().len()),
        ));
    }
    let n = vectors.len();

    let mut centroid = vec![0.0; dim];
    let mut frame = vec![0.0; dim * dim];
    for v in vectors {
        let v = v.as_ref();
        for i in 0..dim {
            centroid[i] += v[i];
            for j in 0..dim {
                frame[i * dim + j] += v[i] * v[j];
            }
        }
    }

    let centroid_norm =
        centroid.iter().map(|x| (x / n as f64) * (x / n as f64)).sum::<f64>().sqrt();
    let target = n as f64 / dim as f64;
    let mut frame_deviation = 0.0_f64;
    for i in 0..dim {
        for j in 0..dim {
            let expect = if i == j { target } else { 0.0 };
            frame_deviation = frame_deviation.max((frame[i * dim + j] - expect).abs());
        }
    }

    Ok(IsotropyReport { n, centroid_norm, frame_deviation })
}

/// All unordered vertex pairs at the minimal pairwise distance (within
/// 1e-9), i.e. the polytope's edges.
pub fn edge_graph(p: &Polytope) -> Vec<(usize, usize)> {
    minimal_distance_pairs(&p.vertices)
}

fn minimal_distance_pairs(vertices: &[Vec<f64>]) -> Vec<(usize, usize)> {
    let n = vertices.len();
    let mut min_dist = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let d = distance(&vertices[i], &vertices[j]);
            if d < min_dist {
                min_dist = d;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if distance(&vertices[i], &vertices[j]) <= min_dist + 1e-9 {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Standard SO(3) rotation matrix R(φ, θ, ϕ) in the z-y-z convention.
///
/// Angles outside the principal domains (0 ≤ ϕ < π, |θ| ≤ π/2, −π < φ ≤ π)
/// are accepted; the matrix stays orthogonal with determinant +1.
pub fn so3_rotation(phi: f64, theta: f64, varphi: f64) -> [[f64; 3]; 3] {
    let (sp, cp) = phi.sin_cos();
    let (st, ct) = theta.sin_cos();
    let (sv, cv) = varphi.sin_cos();
    [
        [cp * ct * cv + sp * sv, -cp * ct * sv + sp * cv, st * cp],
        [-sp * ct * cv + cp * sv, sp * ct * sv + cp * cv, -sp * st],
        [-st * cv, st * sv, ct],
    ]
}

/// The solid's vertex set packaged as the hypervector V_t, t = vertex count.
pub fn hypervector_of(solid: PlatonicSolid) -> Hypervector {
    let polytope = platonic(solid);
    let vectors = polytope
        .vertices()
        .iter()
        .map(|v| [v[0], v[1], v[2]])
        .collect();
    Hypervector { solid, vectors }
}

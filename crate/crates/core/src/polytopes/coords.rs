//! Vertex coordinate constructions for the eleven regular polytopes.
//!
//! Every construction returns unit-circumradius vertices. The 4-polytope
//! orbits follow the standard golden-ratio coordinate sets; sign and
//! permutation orbits are generated mechanically and deduplicated bitwise
//! (negation and permutation of identical constants are exact in binary
//! floating point, so duplicates collide exactly).

use std::collections::HashSet;

/// Golden ratio φ = (1 + √5)/2.
pub(crate) fn phi() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

fn normalize<const N: usize>(v: [f64; N]) -> [f64; N] {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / norm)
}

fn to_vecs<const N: usize>(vs: Vec<[f64; N]>) -> Vec<Vec<f64>> {
    vs.into_iter().map(|v| v.to_vec()).collect()
}

/// Three cyclic shifts of a coordinate template.
fn cyclic3(t: [f64; 3]) -> [[f64; 3]; 3] {
    [[t[0], t[1], t[2]], [t[2], t[0], t[1]], [t[1], t[2], t[0]]]
}

/// Sign spread over the nonzero coordinates of each template.
fn signed<const N: usize>(templates: impl IntoIterator<Item = [f64; N]>) -> Vec<[f64; N]> {
    let mut out = Vec::new();
    for t in templates {
        for mask in 0..(1u32 << N) {
            let mut v = t;
            let mut valid = true;
            for (k, entry) in v.iter_mut().enumerate() {
                if mask & (1 << k) != 0 {
                    if *entry == 0.0 {
                        valid = false;
                        break;
                    }
                    *entry = -*entry;
                }
            }
            if valid {
                out.push(v);
            }
        }
    }
    dedup_exact(out)
}

fn dedup_exact<const N: usize>(vs: Vec<[f64; N]>) -> Vec<[f64; N]> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in vs {
        let key = v.map(|x| if x == 0.0 { 0u64 } else { x.to_bits() });
        if seen.insert(key) {
            out.push(v);
        }
    }
    out
}

/// All 24 coordinate permutations with their parity (`true` = odd).
fn permutations4() -> Vec<([usize; 4], bool)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            if b == a {
                continue;
            }
            for c in 0..4 {
                if c == a || c == b {
                    continue;
                }
                let d = 6 - a - b - c;
                let p = [a, b, c, d];
                let mut inversions = 0;
                for i in 0..4 {
                    for j in i + 1..4 {
                        if p[i] > p[j] {
                            inversions += 1;
                        }
                    }
                }
                out.push((p, inversions % 2 == 1));
            }
        }
    }
    out
}

/// Permutation orbit of a template (optionally even permutations only),
/// with all sign choices on nonzero coordinates.
fn orbit4(template: [f64; 4], even_only: bool) -> Vec<[f64; 4]> {
    let mut arrangements = Vec::new();
    for (perm, odd) in permutations4() {
        if even_only && odd {
            continue;
        }
        arrangements.push([template[perm[0]], template[perm[1]], template[perm[2]], template[perm[3]]]);
    }
    signed(dedup_exact(arrangements))
}

// ---- regular 3-polytopes (Platonic solids) ----

pub(crate) fn tetrahedron() -> Vec<Vec<f64>> {
    // Sign triples with an even number of minus signs.
    let raw = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
    to_vecs(raw.into_iter().map(normalize).collect())
}

pub(crate) fn hexahedron() -> Vec<Vec<f64>> {
    to_vecs(signed([[1.0, 1.0, 1.0]]).into_iter().map(normalize).collect())
}

pub(crate) fn octahedron() -> Vec<Vec<f64>> {
    to_vecs(signed([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))
}

pub(crate) fn icosahedron() -> Vec<Vec<f64>> {
    let templates = cyclic3([0.0, 1.0, phi()]);
    to_vecs(signed(templates).into_iter().map(normalize).collect())
}

pub(crate) fn dodecahedron() -> Vec<Vec<f64>> {
    let mut vs: Vec<[f64; 3]> = signed([[1.0, 1.0, 1.0]]);
    vs.extend(signed(cyclic3([0.0, 1.0 / phi(), phi()])));
    to_vecs(vs.into_iter().map(normalize).collect())
}

// ---- regular convex 4-polytopes ----

/// Regular 4-simplex: five mutually equidistant unit vectors
/// (pairwise dot products −1/4), via the Helmert basis of the
/// sum-zero hyperplane in 5-space.
pub(crate) fn simplex() -> Vec<Vec<f64>> {
    // Orthonormal rows spanning {x ∈ R⁵ : Σx = 0}.
    let mut helmert = [[0.0; 5]; 4];
    for k in 1..=4 {
        let scale = 1.0 / ((k * (k + 1)) as f64).sqrt();
        for col in 0..k {
            helmert[k - 1][col] = scale;
        }
        helmert[k - 1][k] = -(k as f64) * scale;
    }
    let centered_norm = (4.0_f64 / 5.0).sqrt(); // ‖e_i - centroid‖
    (0..5)
        .map(|i| {
            (0..4)
                .map(|row| {
                    // ⟨h_row, e_i - c⟩ = h_row[i] because Σ h_row = 0.
                    helmert[row][i] / centered_norm
                })
                .collect()
        })
        .collect()
}

/// Paper's "Hypercube" [4,3,3]: 16 vertices, 8 cells.
pub(crate) fn hypercube() -> Vec<Vec<f64>> {
    to_vecs(signed([[0.5, 0.5, 0.5, 0.5]]))
}

/// Paper's "Tesseract (T1)" [3,3,4]: 8 vertices, 16 cells (the 16-cell).
pub(crate) fn tesseract16() -> Vec<Vec<f64>> {
    to_vecs(orbit4([1.0, 0.0, 0.0, 0.0], false))
}

/// Octaplex [3,4,3]: 24 vertices, permutations of (±1, ±1, 0, 0)/√2.
pub(crate) fn octaplex() -> Vec<Vec<f64>> {
    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    to_vecs(orbit4([inv_sqrt2, inv_sqrt2, 0.0, 0.0], false))
}

/// Tetraplex [3,3,5]: the 120 vertices of the 600-cell.
pub(crate) fn tetraplex() -> Vec<Vec<f64>> {
    let p = phi();
    let mut vs = orbit4([1.0, 0.0, 0.0, 0.0], false);
    vs.extend(signed([[0.5, 0.5, 0.5, 0.5]]));
    vs.extend(orbit4([p / 2.0, 0.5, 1.0 / (2.0 * p), 0.0], true));
    to_vecs(vs)
}

/// Dodecaplex [5,3,3]: the 600 vertices of the 120-cell, as the standard
/// golden-ratio orbit set (circumradius 2√2 before normalization).
pub(crate) fn dodecaplex() -> Vec<Vec<f64>> {
    let p = phi();
    let sqrt5 = 5.0_f64.sqrt();
    let mut vs: Vec<[f64; 4]> = Vec::with_capacity(600);
    // All-permutation orbits.
    vs.extend(orbit4([0.0, 0.0, 2.0, 2.0], false));
    vs.extend(orbit4([1.0, 1.0, 1.0, sqrt5], false));
    vs.extend(orbit4([p.powi(-2), p, p, p], false));
    vs.extend(orbit4([1.0 / p, 1.0 / p, 1.0 / p, p * p], false));
    // Even-permutation orbits.
    vs.extend(orbit4([0.0, p.powi(-2), 1.0, p * p], true));
    vs.extend(orbit4([0.0, 1.0 / p, p, sqrt5], true));
    vs.extend(orbit4([1.0 / p, 1.0, p, 2.0], true));
    let radius = 2.0 * 2.0_f64.sqrt();
    to_vecs(vs.into_iter().map(|v| v.map(|x| x / radius)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_unit(vertices: &[Vec<f64>]) {
        for v in vertices {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() <= 1e-12, "non-unit vertex {v:?}");
        }
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(tetrahedron().len(), 4);
        assert_eq!(octahedron().len(), 6);
        assert_eq!(hexahedron().len(), 8);
        assert_eq!(icosahedron().len(), 12);
        assert_eq!(dodecahedron().len(), 20);
        assert_eq!(simplex().len(), 5);
        assert_eq!(hypercube().len(), 16);
        assert_eq!(tesseract16().len(), 8);
        assert_eq!(octaplex().len(), 24);
        assert_eq!(tetraplex().len(), 120);
        assert_eq!(dodecaplex().len(), 600);
    }

    #[test]
    fn all_vertices_unit_norm() {
        for vs in [
            tetrahedron(),
            hexahedron(),
            octahedron(),
            icosahedron(),
            dodecahedron(),
            simplex(),
            hypercube(),
            tesseract16(),
            octaplex(),
            tetraplex(),
            dodecaplex(),
        ] {
            assert_unit(&vs);
        }
    }

    #[test]
    fn simplex_gram_matrix() {
        let vs = simplex();
        for i in 0..5 {
            for j in 0..5 {
                let dot: f64 = vs[i].iter().zip(&vs[j]).map(|(a, b)| a * b).sum();
                let expected = if i == j { 1.0 } else { -0.25 };
                assert!((dot - expected).abs() <= 1e-12, "({i},{j}): {dot}");
            }
        }
    }

    #[test]
    fn even_permutation_count() {
        let evens = permutations4().into_iter().filter(|(_, odd)| !odd).count();
        assert_eq!(evens, 12);
    }
}

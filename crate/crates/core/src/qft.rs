//! Quantum Fourier transform matrices, the extended QFT_D map, and the
//! 4-polytope correspondence table.
//!
//! QFT_d sends |j⟩ to (1/√d) Σ_k ω^{jk}|k⟩ with ω = e^{2πi/d}. The extended
//! map QFT_D widens the output register to D ≥ d levels, producing a state
//! with uniform probability 1/D in every basis direction; clustering those D
//! basis indices into cells of size t then matches each cell to a
//! hypervector V_t. The cell counts and basis-vector totals per 4-polytope
//! are stored table data, not derived quantities.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, PureState};
use crate::polytopes::{hypervector_of, Hypervector, PlatonicSolid, Polytope4};

/// The d-dimensional QFT matrix: entry (k, j) = ω^{jk}/√d, ω = e^{2πi/d}.
pub fn qft_matrix(d: usize) -> ComplexMatrix {
    assert!(d >= 2, "QFT needs d >= 2");
    let scale = 1.0 / (d as f64).sqrt();
    ComplexMatrix::from_fn(d, d, |k, j| {
        // Reduce the exponent mod d before the trig call to keep phases exact.
        let m = (k * j) % d;
        C64::from_polar(scale, 2.0 * std::f64::consts::PI * m as f64 / d as f64)
    })
}

/// The extended QFT_D image of the d-level basis state |j⟩: amplitudes
/// ω^{jℓ}/√D for ℓ = 0..D−1 with ω = e^{2πi/D}.
///
/// The base ω is taken in the output dimension D, so distinct j map to
/// orthogonal states and D = d recovers the columns of [`qft_matrix`].
pub fn extended_qft_map(j: usize, d: usize, big_d: usize) -> Result<PureState> {
    if j >= d {
        return Err(Error::invalid("QFT input index", format!("j = {j} outside 0..{d}")));
    }
    if big_d < d {
        return Err(Error::invalid(
            "extended QFT dimension",
            format!("D = {big_d} smaller than d = {d}"),
        ));
    }
    let scale = 1.0 / (big_d as f64).sqrt();
    let amplitudes = (0..big_d)
        .map(|l| {
            let m = (j * l) % big_d;
            C64::from_polar(scale, 2.0 * std::f64::consts::PI * m as f64 / big_d as f64)
        })
        .collect();
    PureState::new(amplitudes)
}

/// Basis-vector totals of the correspondence table (equal to the key-set
/// cardinality |K| of the matching channel).
pub fn basis_vector_count(p: Polytope4) -> usize {
    match p {
        Polytope4::Simplex => 20,
        Polytope4::Hypercube => 48,
        Polytope4::Tesseract16 => 96,
        Polytope4::Octaplex => 192,
        Polytope4::Dodecaplex => 1440,
        Polytope4::Tetraplex => 12000,
    }
}

/// The D basis indices of QFT_D grouped into one cell per 3-dimensional
/// facet, each cell carrying t = D/s indices and the hypervector V_t.
#[derive(Clone, Debug, Serialize)]
pub struct HypervectorPartition {
    /// Output dimension D of the extended QFT.
    pub total_dim: usize,
    /// One ordered index group per cell, jointly partitioning 0..D.
    pub cells: Vec<Vec<usize>>,
    /// The V_t assigned to every cell.
    pub hypervector: Hypervector,
}

/// Partitions the D basis indices of the polytope's extended QFT into its
/// s cells as contiguous blocks [c·t, (c+1)·t), and attaches V_t.
pub fn hypervector_partition(p: Polytope4) -> HypervectorPartition {
    let cells = p.cell_count();
    let total = basis_vector_count(p);
    let t = total / cells;
    debug_assert_eq!(t * cells, total, "table rows factor exactly");
    let solid = PlatonicSolid::with_vertex_count(t)
        .expect("every table ratio D/s is a Platonic vertex count");
    let groups = (0..cells).map(|c| (c * t..(c + 1) * t).collect()).collect();
    HypervectorPartition { total_dim: total, cells: groups, hypervector: hypervector_of(solid) }
}

/// One 4-polytope row of the correspondence table.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceRow {
    pub polytope_name: &'static str,
    pub schlaefli: [u32; 3],
    pub coxeter_group: &'static str,
    /// Cell count s.
    pub cells: usize,
    /// Component count t of the hypervector V_t attached to each cell.
    pub hypervector_t: usize,
    /// Basis-vector total D = s × t.
    pub basis_vectors: usize,
    /// Key-set cardinality |K| (equals the basis-vector total).
    pub cardinality: usize,
    pub optimal: bool,
    pub secure: bool,
}

/// The standalone optimal column: the |K| = 9 qutrit key set, whose matching
/// 4-polytope the table leaves unidentified.
#[derive(Clone, Debug, Serialize)]
pub struct OptimalColumn {
    /// No known polytope; the column is conjectural.
    pub polytope_name: Option<&'static str>,
    pub basis_vectors: usize,
    pub cardinality: usize,
    pub optimal: bool,
    pub secure: bool,
    /// Label of the ensemble realizing the column.
    pub ensemble_label: &'static str,
}

/// The full correspondence table: six polytope rows plus the optimal column.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub rows: Vec<CorrespondenceRow>,
    pub optimal: OptimalColumn,
}

/// Reproduces the summary table linking regular 4-polytopes to qutrit
/// key sets, with the conjectured optimal column cross-linked to the
/// generalized Gell-Mann ensemble.
pub fn correspondence_report() -> CorrespondenceReport {
    let rows = Polytope4::ALL
        .into_iter()
        .map(|p| {
            let cells = p.cell_count();
            let basis_vectors = basis_vector_count(p);
            CorrespondenceRow {
                polytope_name: p.name(),
                schlaefli: p.schlaefli(),
                coxeter_group: p.coxeter_group(),
                cells,
                hypervector_t: basis_vectors / cells,
                basis_vectors,
                cardinality: basis_vectors,
                optimal: false,
                secure: true,
            }
        })
        .collect();
    CorrespondenceReport {
        rows,
        optimal: OptimalColumn {
            polytope_name: None,
            basis_vectors: 9,
            cardinality: 9,
            optimal: true,
            secure: true,
            ensemble_label: "gell-mann",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::verify_isotropy;

    #[test]
    fn qft2_is_hadamard() {
        let h = 1.0 / 2.0_f64.sqrt();
        let hadamard = ComplexMatrix::from_real(2, 2, &[h, h, h, -h]).unwrap();
        assert!(qft_matrix(2).approx_eq(&hadamard, 1e-15));
    }

    #[test]
    fn qft_unitary_for_small_dims() {
        for d in 2..=8 {
            assert!(qft_matrix(d).unitary_deviation() <= 1e-12, "d = {d}");
        }
    }

    #[test]
    fn qft3_column_one() {
        let f = qft_matrix(3);
        let w = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let inv_sqrt3 = 1.0 / 3.0_f64.sqrt();
        let expected = [C64::new(inv_sqrt3, 0.0), w * inv_sqrt3, w * w * inv_sqrt3];
        for (k, want) in expected.iter().enumerate() {
            assert!((f.get(k, 1) - want).norm() <= 1e-12);
        }
    }

    #[test]
    fn extended_map_is_uniform_and_normalized() {
        for big_d in [3, 20, 48, 96] {
            let state = extended_qft_map(1, 3, big_d).unwrap();
            let total: f64 = state.amplitudes().iter().map(|a| a.norm_sqr()).sum();
            assert!((total - 1.0).abs() <= 1e-12);
            for a in state.amplitudes() {
                assert!((a.norm_sqr() - 1.0 / big_d as f64).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn extended_map_zero_index_is_uniform_positive() {
        let state = extended_qft_map(0, 3, 20).unwrap();
        let value = C64::new(1.0 / 20.0_f64.sqrt(), 0.0);
        for a in state.amplitudes() {
            assert!((a - value).norm() <= 1e-15);
        }
    }

    #[test]
    fn extended_map_matches_qft_columns_at_equal_dims() {
        for d in 2..=6 {
            let f = qft_matrix(d);
            for j in 0..d {
                let state = extended_qft_map(j, d, d).unwrap();
                for (k, a) in state.amplitudes().iter().enumerate() {
                    assert!((a - f.get(k, j)).norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn extended_map_rejects_bad_arguments() {
        assert!(extended_qft_map(3, 3, 20).is_err());
        assert!(extended_qft_map(0, 3, 2).is_err());
    }

    #[test]
    fn partitions_cover_disjointly() {
        for p in Polytope4::ALL {
            let part = hypervector_partition(p);
            let mut seen = vec![false; part.total_dim];
            for cell in &part.cells {
                assert_eq!(cell.len(), part.hypervector.t());
                for &idx in cell {
                    assert!(!seen[idx], "{p}: index {idx} in two cells");
                    seen[idx] = true;
                }
            }
            assert!(seen.into_iter().all(|covered| covered), "{p}: gap in cover");
            assert!(part.hypervector.isotropy().centroid_norm <= 1e-9);
        }
    }

    #[test]
    fn simplex_partition_matches_worked_example() {
        // D = 20 splits into 5 cells of 4 indices carrying V_4.
        let part = hypervector_partition(Polytope4::Simplex);
        assert_eq!(part.total_dim, 20);
        assert_eq!(part.cells.len(), 5);
        assert_eq!(part.cells[0], vec![0, 1, 2, 3]);
        assert_eq!(part.hypervector.t(), 4);
        assert_eq!(part.hypervector.solid(), PlatonicSolid::Tetrahedron);
    }

    #[test]
    fn hypercube_and_tetraplex_partitions() {
        let hc = hypervector_partition(Polytope4::Hypercube);
        assert_eq!((hc.total_dim, hc.cells.len(), hc.hypervector.t()), (48, 8, 6));
        let tp = hypervector_partition(Polytope4::Tetraplex);
        assert_eq!((tp.total_dim, tp.cells.len(), tp.hypervector.t()), (12000, 600, 20));
    }

    #[test]
    fn report_reproduces_table_values() {
        let report = correspondence_report();
        let basis: Vec<usize> = report.rows.iter().map(|r| r.basis_vectors).collect();
        assert_eq!(basis, vec![20, 48, 96, 192, 1440, 12000]);
        let cells: Vec<usize> = report.rows.iter().map(|r| r.cells).collect();
        assert_eq!(cells, vec![5, 8, 16, 24, 120, 600]);
        for row in &report.rows {
            assert_eq!(row.cells * row.hypervector_t, row.basis_vectors, "{}", row.polytope_name);
            assert_eq!(row.cardinality, row.basis_vectors);
            assert!(!row.optimal);
            assert!(row.secure);
        }
        assert_eq!(report.optimal.cardinality, 9);
        assert!(report.optimal.optimal);
        assert_eq!(report.optimal.ensemble_label, "gell-mann");
    }

    #[test]
    fn octaplex_row_uses_v8() {
        let report = correspondence_report();
        let row = report.rows.iter().find(|r| r.polytope_name == "octaplex").unwrap();
        assert_eq!(row.hypervector_t, 8);
    }

    #[test]
    fn partition_hypervectors_pass_isotropy() {
        for p in Polytope4::ALL {
            let hv = hypervector_partition(p).hypervector;
            let report = verify_isotropy(hv.vectors(), 3).unwrap();
            assert!(report.centroid_norm <= 1e-9, "{p}");
            assert!(report.frame_deviation <= 1e-9, "{p}");
        }
    }
}

//! Brute-force ground truth: full 2^N state-vector evolution, partial
//! traces by bitmask gather, purities, I-concurrence from reduced-state
//! purity, Wootters concurrence, and the monogamy-residual 3-tangle.
//!
//! Everything here is definition-level and independent of the cosine
//! series in [`crate::closedform`]; the two engines are cross-validated
//! against each other in the test suite.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::closedform::Bipartition;
use crate::geometry::PairPhaseTable;
use crate::numeric::NEGATIVE_TOL;

/// Default qubit cap: 2^24 complex doubles is about 256 MB.
pub const DEFAULT_QUBIT_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("{n} qubits exceed the cap of {cap}")]
    TooManyQubits { n: usize, cap: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset must be a proper subset of the qubits")]
    FullSubset,
    #[error("subset mask selects qubits outside 0..{n}")]
    InvalidSubset { n: usize },
    #[error("expected a two-qubit density matrix, got dimension {dim}")]
    NotTwoQubit { dim: usize },
    #[error("operation requires a 3-qubit state, got {n}")]
    NotThreeQubit { n: usize },
    #[error("bipartition is over {bip_n} masses but the state has {n} qubits")]
    InvalidBipartition { bip_n: usize, n: usize },
    #[error("mass index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("3-tangle residual {0} below -1e-9")]
    NegativeResidual(f64),
}

/// The 2^N-amplitude pure state; bit p of a basis index is the branch of
/// mass p.
#[derive(Debug, Clone)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Evolve the uniform product state under the pair phase table for time t:
/// the amplitude at basis index (j_1 .. j_N) is
/// 2^{-N/2} exp(i t sum_{p<q} phi_{j_p j_q}).
pub fn evolve(table: &PairPhaseTable, t: f64) -> Result<StateVector, OracleError> {
    evolve_capped(table, t, DEFAULT_QUBIT_CAP)
}

/// [`evolve`] with an explicit qubit cap.
pub fn evolve_capped(
    table: &PairPhaseTable,
    t: f64,
    cap: usize,
) -> Result<StateVector, OracleError> {
    let n = table.n();
    if n > cap {
        return Err(OracleError::TooManyQubits { n, cap });
    }
    let dim = 1usize << n;

    // Accumulated pair phases per basis index. Built index-by-index from
    // the index with the highest set bit cleared: flipping bit h from 0
    // to 1 changes exactly the pairs that involve mass h.
    let mut phase = vec![0.0f64; dim];
    let mut base = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            base += table.rate(p, q, 0, 0);
        }
    }
    phase[0] = base;
    for idx in 1..dim {
        let h = usize::BITS as usize - 1 - idx.leading_zeros() as usize;
        let rest = idx & !(1 << h);
        let mut ph = phase[rest];
        for q in 0..n {
            if q == h {
                continue;
            }
            let jq = (idx >> q & 1) as u8;
            ph += table.rate(q, h, jq, 1) - table.rate(q, h, jq, 0);
        }
        phase[idx] = ph;
    }

    let norm = 1.0 / (dim as f64).sqrt();
    let amplitudes = phase
        .iter()
        .map(|&ph| Complex64::from_polar(norm, ph * t))
        .collect();
    Ok(StateVector {
        n_qubits: n,
        amplitudes,
    })
}

/// Hermitian reduced density matrix of a qubit subset, dimension 2^k.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.mat[(i, i)].re).sum()
    }

    /// Largest Hermiticity defect max |rho_ij - conj(rho_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                worst = worst.max((self.mat[(i, j)] - self.mat[(j, i)].conj()).norm());
            }
        }
        worst
    }
}

/// Scatter the low bits of `compact` into the given bit positions.
fn scatter(compact: usize, positions: &[usize]) -> usize {
    let mut out = 0;
    for (i, &pos) in positions.iter().enumerate() {
        out |= (compact >> i & 1) << pos;
    }
    out
}

/// Partial trace over the complement of `subset_mask`, by bitmask gather:
/// rho[a, b] = sum_e psi[merge(a, e)] conj(psi[merge(b, e)]).
pub fn reduced_density(state: &StateVector, subset_mask: u64) -> Result<DensityMatrix, OracleError> {
    let n = state.n_qubits;
    let full: u64 = (1u64 << n) - 1;
    if subset_mask & !full != 0 {
        return Err(OracleError::InvalidSubset { n });
    }
    if subset_mask == 0 {
        return Err(OracleError::EmptySubset);
    }
    if subset_mask == full {
        return Err(OracleError::FullSubset);
    }
    let kept: Vec<usize> = (0..n).filter(|i| subset_mask >> i & 1 == 1).collect();
    let comp: Vec<usize> = (0..n).filter(|i| subset_mask >> i & 1 == 0).collect();
    let dk = 1usize << kept.len();
    let de = 1usize << comp.len();
    let kept_idx: Vec<usize> = (0..dk).map(|a| scatter(a, &kept)).collect();
    let comp_idx: Vec<usize> = (0..de).map(|e| scatter(e, &comp)).collect();

    let psi = &state.amplitudes;
    let mut mat = DMatrix::<Complex64>::zeros(dk, dk);
    for &e in &comp_idx {
        for (a, &ia) in kept_idx.iter().enumerate() {
            let va = psi[ia | e];
            for (b, &ib) in kept_idx.iter().enumerate() {
                mat[(a, b)] += va * psi[ib | e].conj();
            }
        }
    }
    Ok(DensityMatrix { mat })
}

/// Tr rho^2; for Hermitian rho this is the squared Frobenius norm.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.mat.iter().map(|z| z.norm_sqr()).sum()
}

/// Amplitudes rearranged as a 2^k x 2^(N-k) matrix: rows run over the
/// subset configurations, columns over the complement.
fn amplitude_matrix(state: &StateVector, subset_mask: u64) -> DMatrix<Complex64> {
    let n = state.n_qubits;
    let kept: Vec<usize> = (0..n).filter(|i| subset_mask >> i & 1 == 1).collect();
    let comp: Vec<usize> = (0..n).filter(|i| subset_mask >> i & 1 == 0).collect();
    let dk = 1usize << kept.len();
    let de = 1usize << comp.len();
    DMatrix::from_fn(dk, de, |a, e| {
        state.amplitudes[scatter(a, &kept) | scatter(e, &comp)]
    })
}

/// Squared I-concurrence from the Schmidt spectrum,
/// C^2 = 4 sum_{i<j} sigma_i^2 sigma_j^2 (Cauchy-Binet). Singular values
/// come out of the SVD with ~1e-16 absolute error, which enters the sum
/// squared, so near-zero deficits stay near-zero instead of picking up
/// the sqrt-amplified purity dust.
fn schmidt_deficit_sq(state: &StateVector, subset_mask: u64) -> f64 {
    let m = amplitude_matrix(state, subset_mask);
    let sigma = nalgebra::linalg::SVD::new(m, false, false).singular_values;
    let sq: Vec<f64> = sigma.iter().map(|s| s * s).collect();
    let mut acc = 0.0;
    let mut tail: f64 = sq.iter().sum();
    for &s in &sq {
        tail -= s;
        acc += s * tail.max(0.0);
    }
    4.0 * acc
}

/// I-concurrence sqrt(2 (1 - Tr rho^2)) of the bipartition, from the
/// purity of the smaller part's reduction.
///
/// When the purity deficit falls below 1e-12 (where its cancellation
/// noise would dominate the square root) the value is recomputed from the
/// Schmidt spectrum, which is exact down to machine scale.
pub fn iconcurrence_oracle(state: &StateVector, bip: &Bipartition) -> Result<f64, OracleError> {
    if bip.n() != state.n_qubits {
        return Err(OracleError::InvalidBipartition {
            bip_n: bip.n(),
            n: state.n_qubits,
        });
    }
    let (small, _) = bip.by_size();
    let rho = reduced_density(state, small as u64)?;
    let mut c_sq = 2.0 * (1.0 - purity(&rho));
    if c_sq < 1e-12 {
        c_sq = schmidt_deficit_sq(state, small as u64);
    }
    Ok(c_sq.max(0.0).sqrt())
}

/// Eigenvalues of rho below this are treated as rank deficiency. The
/// matrices here have unit trace, so 1e-12 sits far above eigenvalue dust
/// and far below any eigenvalue that matters.
const RANK_CUT: f64 = 1e-12;

/// Wootters concurrence of a two-qubit density matrix:
/// C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of
/// the eigenvalues of rho (sy x sy) rho* (sy x sy).
///
/// The l_i are computed as the singular values of the preconcurrence
/// matrix tau_ij = v_i^dag (sy x sy) v_j^*, where {v_i} is a subnormalized
/// eigendecomposition of rho truncated at [`RANK_CUT`]. Taking the square
/// root of near-zero eigenvalues of rho rho~ directly would amplify
/// 1e-16 eigenvalue dust to 1e-8; the rank-truncated route keeps the
/// exactly-zero l_i exact.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64, OracleError> {
    if rho.dim() != 4 {
        return Err(OracleError::NotTwoQubit { dim: rho.dim() });
    }
    // sigma_y tensor sigma_y is the same in either qubit ordering
    let mut yy = DMatrix::<Complex64>::zeros(4, 4);
    yy[(0, 3)] = Complex64::new(-1.0, 0.0);
    yy[(1, 2)] = Complex64::new(1.0, 0.0);
    yy[(2, 1)] = Complex64::new(1.0, 0.0);
    yy[(3, 0)] = Complex64::new(-1.0, 0.0);

    let eig = nalgebra::linalg::SymmetricEigen::new(rho.mat.clone());
    let mut cols: Vec<nalgebra::DVector<Complex64>> = Vec::new();
    for (i, &mu) in eig.eigenvalues.iter().enumerate() {
        if mu > RANK_CUT {
            let scale = Complex64::new(mu.sqrt(), 0.0);
            cols.push(eig.eigenvectors.column(i).map(|z| z * scale));
        }
    }
    if cols.is_empty() {
        return Ok(0.0);
    }
    let r = cols.len();
    let flipped: Vec<nalgebra::DVector<Complex64>> =
        cols.iter().map(|v| &yy * v.map(|z| z.conj())).collect();
    let tau = DMatrix::from_fn(r, r, |i, j| cols[i].dotc(&flipped[j]));

    let mut lambdas: Vec<f64> = nalgebra::linalg::SVD::new(tau, false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    lambdas.resize(4, 0.0);
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Monogamy-residual 3-tangle
/// tau_123 = C^2_{p|qr} - C^2_pq - C^2_pr, with the one-vs-rest
/// I-concurrence (which equals the bipartite concurrence for a
/// qubit-vs-rest split) and Wootters concurrences of the pair reductions.
///
/// The result is independent of the choice of `p` up to rounding.
pub fn three_tangle_residual(state: &StateVector, p: usize) -> Result<f64, OracleError> {
    let n = state.n_qubits;
    if n != 3 {
        return Err(OracleError::NotThreeQubit { n });
    }
    if p >= 3 {
        return Err(OracleError::IndexOutOfRange { index: p, n });
    }
    let (q, r) = match p {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let bip = Bipartition::one_vs_rest(3, p).expect("valid index");
    let c_rest = iconcurrence_oracle(state, &bip)?;
    let c_pq = wootters_concurrence(&reduced_density(state, (1 << p | 1 << q) as u64)?)?;
    let c_pr = wootters_concurrence(&reduced_density(state, (1 << p | 1 << r) as u64)?)?;
    let residual = c_rest * c_rest - c_pq * c_pq - c_pr * c_pr;
    if residual < -NEGATIVE_TOL {
        return Err(OracleError::NegativeResidual(residual));
    }
    Ok(residual.max(0.0))
}

/// Meyer-Wallach Q_k from the purity-average definition,
/// Q_k = 2^k/(2^k - 1) (1 - mean_S Tr rho_S^2) over all C(N, k) subsets.
pub fn meyer_wallach_qk_oracle(state: &StateVector, k: usize) -> Result<f64, OracleError> {
    let n = state.n_qubits;
    let max = n / 2;
    if k < 1 || k > max {
        return Err(OracleError::IndexOutOfRange { index: k, n: max + 1 });
    }
    let mut sum = 0.0;
    let mut count = 0u64;
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        sum += purity(&reduced_density(state, mask)?);
        count += 1;
    }
    let dk = (1u64 << k) as f64;
    let qk = dk / (dk - 1.0) * (1.0 - sum / count as f64);
    Ok(qk.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform;
    use crate::geometry::PhaseMatrix;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn table3(phi12: f64, phi13: f64, phi23: f64) -> PairPhaseTable {
        let mut m = PhaseMatrix::zeros(3);
        m.set(0, 1, phi12);
        m.set(0, 2, phi13);
        m.set(1, 2, phi23);
        PairPhaseTable::from_phase_matrix(&m)
    }

    #[test]
    fn initial_state_is_uniform() {
        let table = PairPhaseTable::zeros(4);
        let state = evolve(&table, 0.0).unwrap();
        let amp = Complex64::new(0.25, 0.0);
        for a in state.amplitudes() {
            assert_abs_diff_eq!((a - amp).norm(), 0.0, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(state.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn two_qubit_amplitudes_match_definition() {
        let mut table = PairPhaseTable::zeros(2);
        table.set(0, 1, [0.3, 1.1, 0.7, 0.2]);
        let t = 1.9;
        let state = evolve(&table, t).unwrap();
        for (j1, j2, rate) in [(0u8, 0u8, 0.3), (0, 1, 1.1), (1, 0, 0.7), (1, 1, 0.2)] {
            // index bit 0 is mass 0's branch
            let idx = (j1 as usize) | (j2 as usize) << 1;
            let want = Complex64::from_polar(0.5, rate * t);
            assert_abs_diff_eq!((state.amplitudes()[idx] - want).norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn qubit_cap_enforced() {
        let table = PairPhaseTable::zeros(5);
        assert!(matches!(
            evolve_capped(&table, 1.0, 4),
            Err(OracleError::TooManyQubits { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn global_rate_shift_is_a_global_phase() {
        let mut table = PairPhaseTable::zeros(3);
        table.set(0, 1, [0.4, 1.3, 0.9, 0.1]);
        table.set(0, 2, [0.2, 0.8, 0.5, 1.7]);
        table.set(1, 2, [1.0, 0.3, 0.6, 0.2]);
        let mut shifted = PairPhaseTable::zeros(3);
        let c = 0.77;
        for p in 0..3 {
            for q in p + 1..3 {
                let mut rates = [0.0; 4];
                for jp in 0..2u8 {
                    for jq in 0..2u8 {
                        rates[(jp * 2 + jq) as usize] = table.rate(p, q, jp, jq) + c;
                    }
                }
                shifted.set(p, q, rates);
            }
        }
        let t = 2.3;
        let a = evolve(&table, t).unwrap();
        let b = evolve(&shifted, t).unwrap();
        assert_abs_diff_eq!(a.norm_sqr(), 1.0, epsilon = 1e-12);
        // the shift contributes c per pair, C(3,2) pairs
        let global = Complex64::from_polar(1.0, 3.0 * c * t);
        for (za, zb) in a.amplitudes().iter().zip(b.amplitudes()) {
            assert_abs_diff_eq!((za * global - zb).norm(), 0.0, epsilon = 1e-12);
        }
        for mask in [0b001u64, 0b011, 0b101] {
            let ra = reduced_density(&a, mask).unwrap();
            let rb = reduced_density(&b, mask).unwrap();
            let defect: f64 = (ra.matrix() - rb.matrix()).iter().map(|z| z.norm()).sum();
            assert!(defect < 1e-12);
        }
    }

    #[test]
    fn reduction_of_product_state_is_pure() {
        let state = evolve(&PairPhaseTable::zeros(4), 0.0).unwrap();
        let rho = reduced_density(&state, 0b0011).unwrap();
        assert_abs_diff_eq!(purity(&rho), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-12);
        assert!(rho.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn complementary_purities_agree() {
        let mut table = PairPhaseTable::zeros(4);
        let mut v = 0.31;
        for p in 0..4 {
            for q in p + 1..4 {
                table.set(p, q, [v, v * 1.7, v * 0.4, v * 2.2]);
                v += 0.29;
            }
        }
        let state = evolve(&table, 1.37).unwrap();
        for mask in [0b0001u64, 0b0011, 0b0101, 0b0111] {
            let a = purity(&reduced_density(&state, mask).unwrap());
            let b = purity(&reduced_density(&state, !mask & 0b1111).unwrap());
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn subset_validation() {
        let state = evolve(&PairPhaseTable::zeros(3), 0.0).unwrap();
        assert!(matches!(
            reduced_density(&state, 0),
            Err(OracleError::EmptySubset)
        ));
        assert!(matches!(
            reduced_density(&state, 0b111),
            Err(OracleError::FullSubset)
        ));
        assert!(matches!(
            reduced_density(&state, 0b1000),
            Err(OracleError::InvalidSubset { n: 3 })
        ));
    }

    #[test]
    fn ghz_time_reductions_are_maximally_mixed() {
        // odd-ratio phases (3, 1, 0) at t = pi
        let state = evolve(&table3(3.0, 1.0, 0.0), PI).unwrap();
        for p in 0..3 {
            let rho = reduced_density(&state, 1 << p).unwrap();
            assert_abs_diff_eq!(rho.matrix()[(0, 0)].re, 0.5, epsilon = 1e-10);
            assert_abs_diff_eq!(rho.matrix()[(1, 1)].re, 0.5, epsilon = 1e-10);
            assert_abs_diff_eq!(rho.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-10);
            assert_abs_diff_eq!(purity(&rho), 0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn two_body_oracle_matches_closed_form() {
        let mut m = PhaseMatrix::zeros(2);
        m.set(0, 1, 1.7);
        let table = PairPhaseTable::from_phase_matrix(&m);
        let bip = Bipartition::one_vs_rest(2, 0).unwrap();
        for t in [0.0, 0.3, 1.0, PI / 1.7, 5.9, 12.0] {
            let state = evolve(&table, t).unwrap();
            let oracle_c = iconcurrence_oracle(&state, &bip).unwrap();
            let closed_c = closedform::concurrence_two_body(1.7, t);
            assert_abs_diff_eq!(oracle_c, closed_c, epsilon = 1e-12);
        }
    }

    #[test]
    fn wootters_bell_and_mixed_anchors() {
        // |Phi+> projector
        let mut bell = DMatrix::<Complex64>::zeros(4, 4);
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            bell[(i, j)] = Complex64::new(0.5, 0.0);
        }
        let c = wootters_concurrence(&DensityMatrix { mat: bell }).unwrap();
        assert_abs_diff_eq!(c, 1.0, epsilon = 1e-10);

        let mixed = DensityMatrix {
            mat: DMatrix::<Complex64>::identity(4, 4).map(|z| z * 0.25),
        };
        assert_abs_diff_eq!(purity(&mixed), 0.25, epsilon = 1e-15);
        let c = wootters_concurrence(&mixed).unwrap();
        assert_abs_diff_eq!(c, 0.0, epsilon = 1e-12);

        let small = DMatrix::<Complex64>::identity(2, 2).map(|z| z * 0.5);
        assert!(matches!(
            wootters_concurrence(&DensityMatrix { mat: small }),
            Err(OracleError::NotTwoQubit { dim: 2 })
        ));
    }

    #[test]
    fn ghz_pair_reductions_are_unentangled() {
        let state = evolve(&table3(3.0, 1.0, 0.0), PI).unwrap();
        for mask in [0b011u64, 0b101, 0b110] {
            let c = wootters_concurrence(&reduced_density(&state, mask).unwrap()).unwrap();
            assert_abs_diff_eq!(c, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn residual_tangle_anchors() {
        let state = evolve(&PairPhaseTable::zeros(3), 1.0).unwrap();
        assert_abs_diff_eq!(three_tangle_residual(&state, 0).unwrap(), 0.0, epsilon = 1e-12);

        let state = evolve(&table3(3.0, 1.0, 0.0), PI).unwrap();
        assert_abs_diff_eq!(three_tangle_residual(&state, 0).unwrap(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn relabeling_masses_with_their_rates_is_invariant() {
        // permute the masses 0,1,2,3 -> 2,0,3,1 together with the table
        let perm = [2usize, 0, 3, 1];
        let mut table = PairPhaseTable::zeros(4);
        let mut permuted = PairPhaseTable::zeros(4);
        let mut v = 0.41;
        for p in 0..4 {
            for q in p + 1..4 {
                let rates = [v, v * 1.3, v * 0.6, v * 2.4];
                table.set(p, q, rates);
                permuted.set(perm[p], perm[q], rates);
                v += 0.33;
            }
        }
        let t = 1.7;
        let a = evolve(&table, t).unwrap();
        let b = evolve(&permuted, t).unwrap();
        for bip in [0b0001u32, 0b0011, 0b0101, 0b1001, 0b0111] {
            let mapped = (0..4).fold(0u32, |m, i| {
                if bip >> i & 1 == 1 { m | 1 << perm[i] } else { m }
            });
            let ca = iconcurrence_oracle(&a, &Bipartition::new(4, bip).unwrap()).unwrap();
            let cb = iconcurrence_oracle(&b, &Bipartition::new(4, mapped).unwrap()).unwrap();
            assert_abs_diff_eq!(ca, cb, epsilon = 1e-12);
        }
    }

    #[test]
    fn residual_tangle_is_index_independent() {
        let state = evolve(&table3(1.9, 0.7, 1.3), 2.1).unwrap();
        let t0 = three_tangle_residual(&state, 0).unwrap();
        let t1 = three_tangle_residual(&state, 1).unwrap();
        let t2 = three_tangle_residual(&state, 2).unwrap();
        assert_abs_diff_eq!(t0, t1, epsilon = 1e-9);
        assert_abs_diff_eq!(t0, t2, epsilon = 1e-9);
    }
}

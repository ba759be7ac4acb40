//! Physical setups: masses with two branch positions each, pairwise
//! distances, gravitational phase rates, and the entangling-phase matrix.
//!
//! The entangling phase of a mass pair,
//! `Phi_pq = |phi_01 + phi_10 - phi_00 - phi_11|`, is the only geometric
//! quantity the entanglement formulas ever see; two different setups with
//! equal phase matrices are indistinguishable downstream.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default Newton constant, m^3 kg^-1 s^-2.
pub const DEFAULT_G: f64 = 6.674e-11;
/// Default reduced Planck constant, J s.
pub const DEFAULT_HBAR: f64 = 1.054571817e-34;
/// Default closest-approach threshold in metres, of the order of the
/// closest approach in proposed tabletop experiments. Below it the
/// short-range Casimir-Polder force would no longer be negligible; the
/// physics of that regime is not modelled here, only the threshold.
pub const DEFAULT_MIN_PAIR_DISTANCE: f64 = 1e-4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("at least two masses are required, got {0}")]
    TooFewMasses(usize),
    #[error("mass {} must be strictly positive, got {mass} kg", p + 1)]
    InvalidMass { p: usize, mass: f64 },
    #[error("the two branches of mass {} coincide", p + 1)]
    DegenerateSuperposition { p: usize },
    #[error("branch {jp} of mass {} coincides with branch {jq} of mass {}", p + 1, q + 1)]
    ZeroDistance { p: usize, q: usize, jp: u8, jq: u8 },
    #[error(
        "distance between branch {jp} of mass {} and branch {jq} of mass {} is {distance} m, below the {threshold} m threshold",
        p + 1, q + 1
    )]
    ThresholdViolation {
        p: usize,
        q: usize,
        jp: u8,
        jq: u8,
        distance: f64,
        threshold: f64,
    },
    #[error("matrix is not square: row {row} has {len} entries for n = {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("phase matrix asymmetric at ({}, {})", p + 1, q + 1)]
    Asymmetric { p: usize, q: usize },
    #[error("phase matrix entry ({}, {}) must be finite and nonnegative", p + 1, q + 1)]
    InvalidPhase { p: usize, q: usize },
    #[error("phase matrix diagonal entry {} must be zero", p + 1)]
    NonzeroDiagonal { p: usize },
    #[error("phase rate for pair ({}, {}) is not finite", p + 1, q + 1)]
    NonFiniteRate { p: usize, q: usize },
}

/// One test mass prepared in a superposition of two localised wavepackets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MassSpec {
    /// Mass in kilograms.
    pub mass: f64,
    /// Centre of the first branch, metres.
    pub loc0: [f64; 3],
    /// Centre of the second branch, metres.
    pub loc1: [f64; 3],
}

impl MassSpec {
    pub fn new(mass: f64, loc0: [f64; 3], loc1: [f64; 3]) -> Self {
        Self { mass, loc0, loc1 }
    }

    /// Separation between the two branch centres.
    pub fn branch_separation(&self) -> f64 {
        dist(&self.loc0, &self.loc1)
    }

    fn branch(&self, j: u8) -> &[f64; 3] {
        if j == 0 {
            &self.loc0
        } else {
            &self.loc1
        }
    }
}

/// The physical configuration: N masses plus the closest-approach threshold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemSetup {
    pub masses: Vec<MassSpec>,
    /// Minimum admissible distance between branches of different masses.
    pub min_pair_distance: f64,
}

impl SystemSetup {
    pub fn new(masses: Vec<MassSpec>) -> Self {
        Self {
            masses,
            min_pair_distance: DEFAULT_MIN_PAIR_DISTANCE,
        }
    }

    pub fn with_min_distance(masses: Vec<MassSpec>, min_pair_distance: f64) -> Self {
        Self {
            masses,
            min_pair_distance,
        }
    }

    pub fn n(&self) -> usize {
        self.masses.len()
    }

    fn check_masses(&self) -> Result<(), GeometryError> {
        if self.n() < 2 {
            return Err(GeometryError::TooFewMasses(self.n()));
        }
        for (p, m) in self.masses.iter().enumerate() {
            if !m.mass.is_finite() || m.mass <= 0.0 {
                return Err(GeometryError::InvalidMass { p, mass: m.mass });
            }
            if m.branch_separation() == 0.0 {
                return Err(GeometryError::DegenerateSuperposition { p });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Newton's constant, m^3 kg^-1 s^-2.
    pub g: f64,
    /// Reduced Planck constant, J s.
    pub hbar: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            g: DEFAULT_G,
            hbar: DEFAULT_HBAR,
        }
    }
}

fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Index of pair (p, q), p < q, into a flat upper-triangle array.
fn pair_index(n: usize, p: usize, q: usize) -> usize {
    debug_assert!(p < q && q < n);
    p * n - p * (p + 1) / 2 + (q - p - 1)
}

/// All 4 C(N,2) cross-pair branch distances of a setup.
///
/// `distance(p, q, jp, jq)` is the separation between branch `jp` of mass
/// `p` and branch `jq` of mass `q`; it is symmetric under swapping the two
/// (mass, branch) arguments together.
#[derive(Debug, Clone)]
pub struct BranchDistances {
    n: usize,
    // entry [jp * 2 + jq] of pair (p, q) with p < q
    d: Vec<[f64; 4]>,
}

impl BranchDistances {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, p: usize, q: usize, jp: u8, jq: u8) -> f64 {
        if p < q {
            self.d[pair_index(self.n, p, q)][(jp * 2 + jq) as usize]
        } else {
            self.d[pair_index(self.n, q, p)][(jq * 2 + jp) as usize]
        }
    }

    /// Smallest cross-pair distance in the setup.
    pub fn min_distance(&self) -> f64 {
        self.d
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// The four gravitational phase rates of every unordered mass pair, rad/s.
///
/// Built from geometry all entries are `G m_p m_q / (hbar d) > 0`;
/// user-supplied tables may hold any finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct PairPhaseTable {
    n: usize,
    rates: Vec<[f64; 4]>,
}

impl PairPhaseTable {
    /// All-zero table for `n` masses.
    pub fn zeros(n: usize) -> Self {
        let pairs = n * (n - 1) / 2;
        Self {
            n,
            rates: vec![[0.0; 4]; pairs],
        }
    }

    /// Table from explicit per-pair rates `[phi_00, phi_01, phi_10, phi_11]`,
    /// pairs ordered (0,1), (0,2), .., (n-2,n-1).
    pub fn from_rates(n: usize, rates: Vec<[f64; 4]>) -> Result<Self, GeometryError> {
        assert_eq!(rates.len(), n * (n - 1) / 2, "wrong number of pair entries");
        let table = Self { n, rates };
        for p in 0..n {
            for q in p + 1..n {
                if table.rates[pair_index(n, p, q)]
                    .iter()
                    .any(|r| !r.is_finite())
                {
                    return Err(GeometryError::NonFiniteRate { p, q });
                }
            }
        }
        Ok(table)
    }

    /// A minimal table realizing a given phase matrix: `phi_01 = Phi_pq`,
    /// the other three rates zero.
    pub fn from_phase_matrix(phases: &PhaseMatrix) -> Self {
        let n = phases.n();
        let mut table = Self::zeros(n);
        for p in 0..n {
            for q in p + 1..n {
                table.set(p, q, [0.0, phases.get(p, q), 0.0, 0.0]);
            }
        }
        table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, p: usize, q: usize, rates: [f64; 4]) {
        if p < q {
            self.rates[pair_index(self.n, p, q)] = rates;
        } else {
            let [r00, r01, r10, r11] = rates;
            self.rates[pair_index(self.n, q, p)] = [r00, r10, r01, r11];
        }
    }

    /// phi_{j_p j_q} for the pair (p, q).
    pub fn rate(&self, p: usize, q: usize, jp: u8, jq: u8) -> f64 {
        if p < q {
            self.rates[pair_index(self.n, p, q)][(jp * 2 + jq) as usize]
        } else {
            self.rates[pair_index(self.n, q, p)][(jq * 2 + jp) as usize]
        }
    }
}

/// Symmetric matrix of entangling phases Phi_pq in rad/s, zero diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseMatrix {
    n: usize,
    phi: Vec<f64>,
}

impl PhaseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            phi: vec![0.0; n * n],
        }
    }

    /// Validate and adopt a full n x n matrix.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, GeometryError> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GeometryError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
        }
        let mut m = Self::zeros(n);
        for p in 0..n {
            if rows[p][p] != 0.0 {
                return Err(GeometryError::NonzeroDiagonal { p });
            }
            for q in p + 1..n {
                let v = rows[p][q];
                if v != rows[q][p] {
                    return Err(GeometryError::Asymmetric { p, q });
                }
                if !v.is_finite() || v < 0.0 {
                    return Err(GeometryError::InvalidPhase { p, q });
                }
                m.set(p, q, v);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> f64 {
        self.phi[p * self.n + q]
    }

    /// Set Phi_pq = Phi_qp = v.
    pub fn set(&mut self, p: usize, q: usize, v: f64) {
        assert_ne!(p, q, "diagonal is fixed at zero");
        self.phi[p * self.n + q] = v;
        self.phi[q * self.n + p] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|p| self.phi[p * self.n..(p + 1) * self.n].to_vec())
            .collect()
    }

    /// Iterate over unordered pairs (p, q, Phi_pq), p < q.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |p| (p + 1..self.n).map(move |q| (p, q, self.get(p, q))))
    }

    /// The phase matrix of the (n-1)-mass system obtained by deleting one
    /// mass; remaining masses keep their relative order.
    pub fn without_mass(&self, removed: usize) -> PhaseMatrix {
        assert!(removed < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != removed).collect();
        let mut m = PhaseMatrix::zeros(keep.len());
        for (a, &p) in keep.iter().enumerate() {
            for (b, &q) in keep.iter().enumerate().skip(a + 1) {
                m.set(a, b, self.get(p, q));
            }
        }
        m
    }
}

/// All cross-pair branch distances; fails on coincident cross-pair points
/// (the 1/d potential diverges) or any distance below the threshold.
pub fn pairwise_distances(setup: &SystemSetup) -> Result<BranchDistances, GeometryError> {
    setup.check_masses()?;
    let n = setup.n();
    let mut d = vec![[0.0; 4]; n * (n - 1) / 2];
    for p in 0..n {
        for q in p + 1..n {
            let entry = &mut d[pair_index(n, p, q)];
            for jp in 0..2u8 {
                for jq in 0..2u8 {
                    let dv = dist(setup.masses[p].branch(jp), setup.masses[q].branch(jq));
                    if dv == 0.0 {
                        return Err(GeometryError::ZeroDistance { p, q, jp, jq });
                    }
                    if dv < setup.min_pair_distance {
                        return Err(GeometryError::ThresholdViolation {
                            p,
                            q,
                            jp,
                            jq,
                            distance: dv,
                            threshold: setup.min_pair_distance,
                        });
                    }
                    entry[(jp * 2 + jq) as usize] = dv;
                }
            }
        }
    }
    Ok(BranchDistances { n, d })
}

/// Phase rates phi_{j_p j_q} = G m_p m_q / (hbar d_{j_p j_q}).
pub fn phase_table(
    setup: &SystemSetup,
    constants: &PhysicalConstants,
) -> Result<PairPhaseTable, GeometryError> {
    let distances = pairwise_distances(setup)?;
    let n = setup.n();
    let mut table = PairPhaseTable::zeros(n);
    for p in 0..n {
        for q in p + 1..n {
            let pref = constants.g * setup.masses[p].mass * setup.masses[q].mass / constants.hbar;
            let mut rates = [0.0; 4];
            for jp in 0..2u8 {
                for jq in 0..2u8 {
                    rates[(jp * 2 + jq) as usize] = pref / distances.distance(p, q, jp, jq);
                }
            }
            table.set(p, q, rates);
        }
    }
    Ok(table)
}

/// Entangling phases Phi_pq = |phi_01 + phi_10 - phi_00 - phi_11|.
pub fn entangling_phases(table: &PairPhaseTable) -> PhaseMatrix {
    let n = table.n();
    let mut m = PhaseMatrix::zeros(n);
    for p in 0..n {
        for q in p + 1..n {
            let phi = (table.rate(p, q, 0, 1) + table.rate(p, q, 1, 0)
                - table.rate(p, q, 0, 0)
                - table.rate(p, q, 1, 1))
            .abs();
            m.set(p, q, phi);
        }
    }
    m
}

/// One diagnostic finding of [`validate_setup`]. Mass indices are 1-based
/// for display and serialization.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SetupViolation {
    TooFewMasses { n: usize },
    NonPositiveMass { mass: usize, mass_kg: f64 },
    CoincidentBranches { mass: usize },
    CoincidentCrossPair { p: usize, q: usize, branch_p: u8, branch_q: u8 },
    BelowThreshold {
        p: usize,
        q: usize,
        branch_p: u8,
        branch_q: u8,
        distance_m: f64,
        threshold_m: f64,
    },
}

/// Report-only diagnostics for a setup; never fails.
#[derive(Debug, Clone, Serialize)]
pub struct SetupReport {
    pub n: usize,
    pub violations: Vec<SetupViolation>,
    /// Smallest cross-pair branch distance found, if any pair exists.
    pub min_cross_distance_m: Option<f64>,
}

impl SetupReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every setup invariant and report all violations at once.
pub fn validate_setup(setup: &SystemSetup) -> SetupReport {
    let n = setup.n();
    let mut violations = Vec::new();
    if n < 2 {
        violations.push(SetupViolation::TooFewMasses { n });
    }
    for (p, m) in setup.masses.iter().enumerate() {
        if !m.mass.is_finite() || m.mass <= 0.0 {
            violations.push(SetupViolation::NonPositiveMass {
                mass: p + 1,
                mass_kg: m.mass,
            });
        }
        if m.branch_separation() == 0.0 {
            violations.push(SetupViolation::CoincidentBranches { mass: p + 1 });
        }
    }
    let mut min_cross = f64::INFINITY;
    for p in 0..n {
        for q in p + 1..n {
            for jp in 0..2u8 {
                for jq in 0..2u8 {
                    let dv = dist(setup.masses[p].branch(jp), setup.masses[q].branch(jq));
                    min_cross = min_cross.min(dv);
                    if dv == 0.0 {
                        violations.push(SetupViolation::CoincidentCrossPair {
                            p: p + 1,
                            q: q + 1,
                            branch_p: jp,
                            branch_q: jq,
                        });
                    } else if dv < setup.min_pair_distance {
                        violations.push(SetupViolation::BelowThreshold {
                            p: p + 1,
                            q: q + 1,
                            branch_p: jp,
                            branch_q: jq,
                            distance_m: dv,
                            threshold_m: setup.min_pair_distance,
                        });
                    }
                }
            }
        }
    }
    SetupReport {
        n,
        violations,
        min_cross_distance_m: (n >= 2).then_some(min_cross),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two masses on the x-axis: branches of m1 at 0 and 1e-4, branches of
    /// m2 at 4.5e-4 and 5.5e-4.
    fn collinear_setup(mass: f64) -> SystemSetup {
        SystemSetup::new(vec![
            MassSpec::new(mass, [0.0, 0.0, 0.0], [1e-4, 0.0, 0.0]),
            MassSpec::new(mass, [4.5e-4, 0.0, 0.0], [5.5e-4, 0.0, 0.0]),
        ])
    }

    #[test]
    fn collinear_distances() {
        let close = |a: f64, b: f64| (a - b).abs() < 1e-18;
        let d = pairwise_distances(&collinear_setup(1e-14)).unwrap();
        assert!(close(d.distance(0, 1, 0, 0), 4.5e-4));
        assert!(close(d.distance(0, 1, 0, 1), 5.5e-4));
        assert!(close(d.distance(0, 1, 1, 0), 3.5e-4));
        assert!(close(d.distance(0, 1, 1, 1), 4.5e-4));
        assert!(close(d.min_distance(), 3.5e-4));
        // metric symmetry under swapping the (mass, branch) arguments
        assert_eq!(d.distance(1, 0, 1, 0), d.distance(0, 1, 0, 1));
    }

    #[test]
    fn coincident_cross_points_error() {
        let setup = SystemSetup::new(vec![
            MassSpec::new(1.0, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
            MassSpec::new(1.0, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
        ]);
        assert!(matches!(
            pairwise_distances(&setup),
            Err(GeometryError::ZeroDistance { p: 0, q: 1, jp: 0, jq: 0 })
        ));
    }

    #[test]
    fn threshold_violation_detected() {
        let mut setup = collinear_setup(1e-14);
        setup.min_pair_distance = 4e-4; // d_10 = 3.5e-4 falls below
        let err = pairwise_distances(&setup).unwrap_err();
        assert!(matches!(
            err,
            GeometryError::ThresholdViolation { p: 0, q: 1, jp: 1, jq: 0, .. }
        ));
    }

    #[test]
    fn unit_cancellation_rate() {
        // m_p = m_q = 1 kg at distance G/hbar gives phi = 1 rad/s. The
        // distance is ~6e23 m, far beyond the ulp of a 1 m offset, so the
        // second branches sit off-axis.
        let c = PhysicalConstants::default();
        let big = c.g / c.hbar;
        let setup = SystemSetup::with_min_distance(
            vec![
                MassSpec::new(1.0, [0.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
                MassSpec::new(1.0, [big, 0.0, 0.0], [big, 1.0, 0.0]),
            ],
            1e-4,
        );
        let table = phase_table(&setup, &c).unwrap();
        assert!((table.rate(0, 1, 0, 0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_distance_law() {
        let c = PhysicalConstants::default();
        let table = phase_table(&collinear_setup(1e-14), &c).unwrap();
        let mut far = collinear_setup(1e-14);
        // double d_00 by moving branch 0 of m2 (and keep others fixed is
        // impossible geometrically, so compare ratios entry-by-entry on a
        // stretched copy instead)
        for m in &mut far.masses {
            for v in m.loc0.iter_mut().chain(m.loc1.iter_mut()) {
                *v *= 2.0;
            }
        }
        let table_far = phase_table(&far, &c).unwrap();
        for jp in 0..2u8 {
            for jq in 0..2u8 {
                let ratio = table.rate(0, 1, jp, jq) / table_far.rate(0, 1, jp, jq);
                assert!((ratio - 2.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn collinear_rate_fixtures() {
        // Frozen from direct evaluation of G m^2 / (hbar d) with the
        // default constants and m = 1e-14 kg.
        let c = PhysicalConstants::default();
        let table = phase_table(&collinear_setup(1e-14), &c).unwrap();
        let expect = [
            (0u8, 0u8, 0.14063633099262987),
            (0, 1, 0.11506608899396989),
            (1, 0, 0.18081813984766698),
            (1, 1, 0.14063633099262987),
        ];
        for (jp, jq, want) in expect {
            let got = table.rate(0, 1, jp, jq);
            assert!(
                (got - want).abs() <= 1e-15 * want.abs(),
                "rate({jp},{jq}) = {got}, want {want}"
            );
        }
        let phi = entangling_phases(&table).get(0, 1);
        assert!((phi - 0.01461156685637711).abs() <= 1e-12 * 0.01461156685637711);
    }

    #[test]
    fn entangling_phase_cancellations() {
        let mut table = PairPhaseTable::zeros(2);
        table.set(0, 1, [3.0, 3.0, 3.0, 3.0]);
        assert_eq!(entangling_phases(&table).get(0, 1), 0.0);

        // phi_01 = phi_10 = a, phi_00 = phi_11 = b -> Phi = 2|a - b|
        table.set(0, 1, [5.0, 2.0, 2.0, 5.0]);
        assert_eq!(entangling_phases(&table).get(0, 1), 6.0);
    }

    #[test]
    fn branch_relabel_leaves_phase_matrix_invariant() {
        let c = PhysicalConstants::default();
        let setup = collinear_setup(1e-14);
        let phi = entangling_phases(&phase_table(&setup, &c).unwrap());

        let mut swapped = setup.clone();
        let m0 = &mut swapped.masses[0];
        std::mem::swap(&mut m0.loc0, &mut m0.loc1);
        let phi_swapped = entangling_phases(&phase_table(&swapped, &c).unwrap());
        assert_eq!(phi.get(0, 1), phi_swapped.get(0, 1));
    }

    #[test]
    fn validate_setup_reports() {
        let ok = validate_setup(&collinear_setup(1e-14));
        assert!(ok.is_ok());
        assert_eq!(ok.min_cross_distance_m, Some(3.5e-4));

        let mut bad = collinear_setup(1e-14);
        bad.min_pair_distance = 4e-4;
        let report = validate_setup(&bad);
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(
            report.violations[0],
            SetupViolation::BelowThreshold { p: 1, q: 2, branch_p: 1, branch_q: 0, .. }
        ));

        let single = SystemSetup::new(vec![MassSpec::new(1.0, [0.0; 3], [1.0, 0.0, 0.0])]);
        let report = validate_setup(&single);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, SetupViolation::TooFewMasses { n: 1 })));
    }

    #[test]
    fn phase_matrix_validation() {
        assert!(PhaseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).is_ok());
        assert!(matches!(
            PhaseMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(GeometryError::Asymmetric { .. })
        ));
        assert!(matches!(
            PhaseMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 0.0]]),
            Err(GeometryError::NonzeroDiagonal { .. })
        ));
        assert!(matches!(
            PhaseMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]),
            Err(GeometryError::InvalidPhase { .. })
        ));
    }

    #[test]
    fn without_mass_keeps_order() {
        let m = PhaseMatrix::from_rows(&[
            vec![0.0, 1.0, 2.0, 3.0],
            vec![1.0, 0.0, 4.0, 5.0],
            vec![2.0, 4.0, 0.0, 6.0],
            vec![3.0, 5.0, 6.0, 0.0],
        ])
        .unwrap();
        let sub = m.without_mass(1);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.get(0, 1), 2.0);
        assert_eq!(sub.get(0, 2), 3.0);
        assert_eq!(sub.get(1, 2), 6.0);
    }
}

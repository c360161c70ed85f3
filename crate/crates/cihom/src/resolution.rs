//! Minimal graded free resolutions over Q and over R, with the hypersurface
//! matrix factorization and the degree -2 operators of the quotient
//! presentation.
//!
//! A resolution starts from the minimal presentation and repeatedly takes a
//! minimal generating set of syzygies, so every differential has entries in
//! the graded maximal ideal; this is asserted. Over the polynomial ring the
//! process provably stops within `n` steps; over R an incomplete resolution
//! at the requested horizon is reported as such (finite projective dimension
//! over the quotient would force completion within `dim Q` steps).

use crate::freemod::{PolyMatrix, PolyVec};
use crate::linalg::KMatrix;
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::ring::Base;


/// A (possibly truncated) minimal free resolution F_• → M.
pub struct Resolution {
    pub module: Presentation,
    pub base: Base,
    /// twists[i] lists the generator degrees of F_i.
    pub twists: Vec<Vec<i64>>,
    /// steps[i] is the differential d_{i+1} : F_{i+1} → F_i.
    pub steps: Vec<PolyMatrix>,
    /// True when the last computed syzygy module was zero.
    pub complete: bool,
}

impl Resolution {
    /// Rank of F_i; zero beyond the end of a complete resolution, `None`
    /// when the resolution is truncated before i.
    pub fn betti(&self, i: usize) -> Option<usize> {
        if i < self.twists.len() {
            Some(self.twists[i].len())
        } else if self.complete {
            Some(0)
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Projective dimension, when the resolution completed.
    pub fn pd(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        let mut p = self.twists.len() - 1;
        while p > 0 && self.twists[p].is_empty() {
            p -= 1;
        }
        if self.twists[p].is_empty() {
            // the zero module
            return Some(0);
        }
        Some(p)
    }

    /// Differential d_i (1-indexed).
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.steps[i - 1]
    }

    /// No differential entry is a unit.
    pub fn is_minimal(&self) -> bool {
        self.steps.iter().all(|m| {
            m.columns.iter().all(|c| {
                c.comps
                    .iter()
                    .all(|p| p.constant_value().is_none())
            })
        })
    }

    /// d_i ∘ d_{i+1} = 0 over the base ring, for every computed i.
    pub fn verify_complex(&self) -> bool {
        let ring = &self.module.ring;
        let ctx = ring.ctx();
        for i in 0..self.steps.len().saturating_sub(1) {
            let prod = self.steps[i].compose(&self.steps[i + 1], ctx);
            for col in &prod.columns {
                for p in &col.comps {
                    if !ring.reduce_scalar(self.base, p).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exactness at F_i for 1 ≤ i < len: ker d_i = im d_{i+1}, established
    /// by Groebner membership in both directions.
    pub fn verify_exactness(&self) -> bool {
        let ring = &self.module.ring;
        if !self.verify_complex() {
            return false;
        }
        for i in 1..self.steps.len() {
            let target_twists = &self.twists[i - 1];
            let dcols = &self.steps[i - 1].columns;
            let _ = target_twists;
            // kernel of d_i = syzygies of its columns (in F_i coordinates)
            let ker = ring.syzygies(self.base, &self.twists[i - 1], dcols);
            // each kernel generator must lie in the image of d_{i+1} ...
            // careful: syzygies are coefficient vectors on the columns of
            // d_i, i.e. elements of F_i.
            for s in ker.iter() {
                if !ring.is_member(
                    self.base,
                    &self.twists[i],
                    &self.steps[i].columns,
                    s,
                ) {
                    return false;
                }
            }
            // ... and conversely the image lies in the kernel (d∘d = 0,
            // already covered by verify_complex).
        }
        true
    }
}

/// Resolve minimally for up to `max_steps` differentials.
pub fn resolve(pres: &Presentation, max_steps: usize) -> Resolution {
    let min = pres.minimal_presentation();
    let ring = pres.ring.clone();
    let base = pres.base;
    let mut twists: Vec<Vec<i64>> = vec![min.gen_twists.clone()];
    let mut steps: Vec<PolyMatrix> = Vec::new();
    let mut complete = false;
    if min.ngens() == 0 {
        return Resolution {
            module: min,
            base,
            twists,
            steps,
            complete: true,
        };
    }
    let mut current_cols: Vec<PolyVec> = min.matrix.columns.clone();
    let mut current_twists: Vec<i64> = min.rel_twists.clone();
    let mut ambient: Vec<i64> = min.gen_twists.clone();
    for _ in 0..max_steps {
        if current_cols.is_empty() {
            complete = true;
            break;
        }
        let mat = PolyMatrix::from_columns(ambient.len(), current_cols.clone());
        debug_assert!(mat
            .check_homogeneous(ring.ctx(), &ambient, &current_twists)
            .is_ok());
        steps.push(mat);
        twists.push(current_twists.clone());
        // Next: a minimal generating set of the syzygies of these columns.
        let syz = ring.syzygies(base, &ambient, &current_cols);
        let kept = ring.minimal_generators(base, &current_twists, &syz, &[]);
        let next_cols: Vec<PolyVec> = kept.iter().map(|&i| syz[i].clone()).collect();
        let next_twists: Vec<i64> = next_cols
            .iter()
            .map(|v| {
                v.homogeneous_degree(ring.ctx(), &current_twists)
                    .expect("syzygy column must be homogeneous")
            })
            .collect();
        ambient = current_twists;
        current_twists = next_twists;
        current_cols = next_cols;
    }
    if current_cols.is_empty() {
        complete = true;
    }
    let res = Resolution {
        module: min,
        base,
        twists,
        steps,
        complete,
    };
    assert!(res.is_minimal(), "resolution step produced a unit entry");
    res
}

/// Depth via the Auslander–Buchsbaum formula over the polynomial ring:
/// depth M = n − pd_Q M. `None` for the zero module (depth +∞).
pub fn depth(pres: &Presentation) -> Option<i64> {
    if pres.is_zero_module() {
        return None;
    }
    let q_pres = pres.as_q_module();
    let n = pres.ring.nvars();
    let res = resolve(&q_pres, n + 1);
    let pd = res
        .pd()
        .expect("resolution over the polynomial ring must terminate within n steps");
    Some(n as i64 - pd as i64)
}

/// A matrix factorization (A, B) of the hypersurface equation: AB = BA = f·I.
pub struct MatrixFactorization {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    /// Index s of the first differential with d_{i+2} = d_i for all i ≥ s.
    pub onset: usize,
}

/// Extract the matrix factorization from a (sufficiently long) resolution
/// over a hypersurface R = Q/(f). Returns the verified pair and the
/// periodicity onset; a free module yields the empty factorization.
pub fn matrix_factorization(res: &Resolution) -> Result<MatrixFactorization, String> {
    let ring = &res.module.ring;
    let ctx = ring.ctx();
    if ring.codim() != 1 {
        return Err("matrix factorizations require a hypersurface (one relation)".into());
    }
    if res.base != Base::R {
        return Err("matrix factorization lives over the quotient ring".into());
    }
    let f = &ring.relations()[0];
    if res.complete && res.pd() == Some(0) {
        return Ok(MatrixFactorization {
            a: PolyMatrix::zero(0, 0),
            b: PolyMatrix::zero(0, 0),
            onset: 0,
        });
    }
    if res.len() < 4 {
        return Err("resolution too short to exhibit periodicity".into());
    }
    // Least s ≥ 1 with d_{i+2} = d_i for every computed i ≥ s.
    let mut onset: Option<usize> = None;
    's: for s in 1..=(res.len() - 2) {
        for i in s..=(res.len() - 2) {
            if res.steps[i - 1] != res.steps[i + 1] {
                continue 's;
            }
        }
        onset = Some(s);
        break;
    }
    let s = onset.ok_or_else(|| "no periodic tail found in the computed range".to_string())?;
    let a = res.differential(s).clone();
    let b = res.differential(s + 1).clone();
    if a.rows != b.cols() || a.cols() != b.rows {
        return Err("periodic tail is not square".into());
    }
    // AB = f·C with C a constant matrix; normalize B so that AB = f·I.
    let prod = a.compose(&b, ctx);
    let m = a.rows;
    let mut c = KMatrix::zero(m, m, ctx.field);
    for i in 0..m {
        for j in 0..m {
            let entry = prod.entry(i, j);
            // entry must be f times a constant
            let quot = crate::poly::divide(entry, &[f], ctx);
            if !quot.remainder.is_zero() {
                return Err("product of the periodic pair is not divisible by f".into());
            }
            let q = quot.quotients[0].clone();
            match (q.is_zero(), q.constant_value()) {
                (true, _) => c.set(i, j, ctx.field.zero()),
                (false, Some(v)) => c.set(i, j, v),
                (false, None) => {
                    return Err("product of the periodic pair is not f times a constant".into())
                }
            }
        }
    }
    let cinv = c
        .inverse()
        .ok_or_else(|| "constant factor of AB/f is singular".to_string())?;
    // b' = b · C^{-1} (columns recombined by constants).
    let mut b2 = PolyMatrix::zero(b.rows, b.cols());
    for j in 0..b.cols() {
        let mut col = PolyVec::zero(b.rows);
        for l in 0..b.cols() {
            let coef = cinv.get(l, j);
            if !coef.is_zero() {
                col = col.add(&b.columns[l].scale(coef), ctx);
            }
        }
        b2.columns[j] = col;
    }
    // Verify both products on the nose.
    let fid_a = identity_times(f, a.rows, ctx);
    let fid_b = identity_times(f, b2.cols(), ctx);
    if a.compose(&b2, ctx) != fid_a {
        return Err("AB ≠ f·I after normalization".into());
    }
    if b2.compose(&a, ctx) != fid_b {
        return Err("BA ≠ f·I after normalization".into());
    }
    Ok(MatrixFactorization { a, b: b2, onset: s })
}

fn identity_times(f: &Polynomial, n: usize, _ctx: &crate::poly::PolyCtx) -> PolyMatrix {
    let mut m = PolyMatrix::zero(n, n);
    for i in 0..n {
        m.set_entry(i, i, f.clone());
    }
    m
}

/// The degree −2 operators t_1..t_r on a resolution over R: lift the
/// differential to Q (entries are already canonical representatives),
/// compute the square, and split each entry along the regular sequence.
/// Returns `ops[j][i] : F_{i+2} → F_i` for j = 1..r.
pub struct QuotientOperators {
    pub ops: Vec<Vec<PolyMatrix>>,
}

pub fn eisenbud_operators(res: &Resolution) -> QuotientOperators {
    let ring = &res.module.ring;
    let ctx = ring.ctx();
    let r = ring.codim();
    let fs: Vec<PolyVec> = ring
        .relations()
        .iter()
        .map(|f| PolyVec {
            comps: vec![f.clone()],
        })
        .collect();
    let mut ops: Vec<Vec<PolyMatrix>> = vec![Vec::new(); r];
    if res.len() < 2 {
        return QuotientOperators { ops };
    }
    for i in 0..=(res.len() - 2) {
        // d̃_{i+1} ∘ d̃_{i+2} over Q.
        let square = res.steps[i].compose(&res.steps[i + 1], ctx);
        let rows = square.rows;
        let cols = square.cols();
        let mut mats: Vec<PolyMatrix> = (0..r).map(|_| PolyMatrix::zero(rows, cols)).collect();
        for jj in 0..cols {
            for ii in 0..rows {
                let entry = square.entry(ii, jj);
                if entry.is_zero() {
                    continue;
                }
                let v = PolyVec {
                    comps: vec![entry.clone()],
                };
                let cof = ring
                    .membership_cofactors(Base::Q, &[0], &fs, &v)
                    .expect("square of the lifted differential must land in (f_1..f_r)");
                for (j, c) in cof.into_iter().enumerate() {
                    mats[j].set_entry(ii, jj, c);
                }
            }
        }
        // Identity check: d̃² = Σ f_j·t̃_j exactly over Q.
        let mut acc = PolyMatrix::zero(rows, cols);
        for (j, m) in mats.iter().enumerate() {
            acc = acc.add(&m.scale_poly(&ring.relations()[j], ctx), ctx);
        }
        assert_eq!(acc, square, "operator decomposition failed to reproduce d²");
        for (j, m) in mats.into_iter().enumerate() {
            ops[j].push(m);
        }
    }
    QuotientOperators { ops }
}

impl QuotientOperators {
    /// Verify that operator j commutes with the differential over R:
    /// t_j(i) ∘ d_{i+3} ≡ d_{i+1} ∘ t_j(i+1) mod (f_1..f_r).
    pub fn verify_chain_maps(&self, res: &Resolution) -> bool {
        let ring = &res.module.ring;
        let ctx = ring.ctx();
        for ops_j in &self.ops {
            for i in 0..ops_j.len().saturating_sub(1) {
                if i + 2 >= res.steps.len() {
                    break;
                }
                let lhs = ops_j[i].compose(&res.steps[i + 2], ctx);
                let rhs = res.steps[i].compose(&ops_j[i + 1], ctx);
                let diff = lhs.sub(&rhs, ctx);
                for col in &diff.columns {
                    for p in &col.comps {
                        if !ring.reduce_scalar(Base::R, p).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// A scalar (constant-entry) inverse for KMatrix, needed by the matrix
/// factorization normalization.
impl KMatrix {
    pub fn inverse(&self) -> Option<KMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = KMatrix::zero(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).any(|&p| p >= n) {
            return None;
        }
        let mut inv = KMatrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

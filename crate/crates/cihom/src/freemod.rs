//! Elements of twisted free modules and homogeneous matrices between them.
//!
//! A free module here is `⊕_j Q(-a_j)` presented by its twist vector
//! `a = (a_1..a_k)`: the j-th generator has degree `a_j`. An element is a
//! dense vector of polynomials, one per component; a map is stored by
//! columns (images of the source generators).

use crate::monomial::{ModTerm, ModuleOrder, Monomial};
use crate::poly::{PolyCtx, Polynomial};
use crate::scalar::Scalar;

/// An element of a twisted free module (dense by component).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVec {
    pub comps: Vec<Polynomial>,
}

impl PolyVec {
    pub fn zero(rank: usize) -> PolyVec {
        PolyVec {
            comps: vec![Polynomial::zero(); rank],
        }
    }

    pub fn unit(rank: usize, comp: usize, ctx: &PolyCtx) -> PolyVec {
        let mut v = PolyVec::zero(rank);
        v.comps[comp] = Polynomial::one(ctx);
        v
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &PolyVec, ctx: &PolyCtx) -> PolyVec {
        PolyVec {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b, ctx))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyVec, ctx: &PolyCtx) -> PolyVec {
        PolyVec {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b, ctx))
                .collect(),
        }
    }

    pub fn neg(&self) -> PolyVec {
        PolyVec {
            comps: self.comps.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> PolyVec {
        PolyVec {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> PolyVec {
        PolyVec {
            comps: self.comps.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial, ctx: &PolyCtx) -> PolyVec {
        PolyVec {
            comps: self.comps.iter().map(|p| p.mul(f, ctx)).collect(),
        }
    }

    /// Leading module term under the given module order.
    pub fn lead(
        &self,
        ctx: &PolyCtx,
        twists: &[i64],
        morder: ModuleOrder,
    ) -> Option<(ModTerm, Scalar)> {
        let mut best: Option<(ModTerm, Scalar)> = None;
        for (comp, p) in self.comps.iter().enumerate() {
            if let Some((m, c)) = p.lead() {
                let cand = ModTerm { comp, mon: m.clone() };
                match &best {
                    None => best = Some((cand, c.clone())),
                    Some((bt, _)) => {
                        if morder
                            .cmp(&cand, bt, &ctx.weights, twists, ctx.order)
                            .is_gt()
                        {
                            best = Some((cand, c.clone()));
                        }
                    }
                }
            }
        }
        best
    }

    /// Homogeneous degree (all components agree relative to their twists);
    /// `None` for inhomogeneous, `Some(None)` is not used — zero vectors
    /// report `Some(d)` for no particular `d`, so callers check `is_zero`
    /// first when the degree matters.
    pub fn homogeneous_degree(&self, ctx: &PolyCtx, twists: &[i64]) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (comp, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree(ctx)? + twists[comp];
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 == d => {}
                _ => return None,
            }
        }
        deg.or(Some(0))
    }

    pub fn renormalize(&self, ctx: &PolyCtx) -> PolyVec {
        PolyVec {
            comps: self.comps.iter().map(|p| p.renormalize(ctx)).collect(),
        }
    }
}

/// A matrix of polynomials, stored by columns. Maps the free module with
/// `cols` generators to the one with `rows` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub columns: Vec<PolyVec>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            columns: vec![PolyVec::zero(rows); cols],
        }
    }

    pub fn identity(n: usize, ctx: &PolyCtx) -> PolyMatrix {
        PolyMatrix {
            rows: n,
            columns: (0..n).map(|i| PolyVec::unit(n, i, ctx)).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<PolyVec>) -> PolyMatrix {
        for c in &columns {
            assert_eq!(c.rank(), rows);
        }
        PolyMatrix { rows, columns }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j].comps[i]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        self.columns[j].comps[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Apply to an element of the source module: `sum_j v_j * col_j`.
    pub fn apply(&self, v: &PolyVec, ctx: &PolyCtx) -> PolyVec {
        assert_eq!(v.rank(), self.cols());
        let mut acc = PolyVec::zero(self.rows);
        for (j, col) in self.columns.iter().enumerate() {
            if !v.comps[j].is_zero() {
                acc = acc.add(&col.mul_poly(&v.comps[j], ctx), ctx);
            }
        }
        acc
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &PolyMatrix, ctx: &PolyCtx) -> PolyMatrix {
        assert_eq!(self.cols(), other.rows);
        PolyMatrix {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c, ctx)).collect(),
        }
    }

    pub fn transpose(&self, _ctx: &PolyCtx) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.cols(), self.rows);
        for j in 0..self.cols() {
            for i in 0..self.rows {
                out.set_entry(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix, ctx: &PolyCtx) -> PolyMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols(), other.cols());
        PolyMatrix {
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b, ctx))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix, ctx: &PolyCtx) -> PolyMatrix {
        self.add(&other.neg(), ctx)
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            columns: self.columns.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale_poly(&self, f: &Polynomial, ctx: &PolyCtx) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            columns: self.columns.iter().map(|c| c.mul_poly(f, ctx)).collect(),
        }
    }

    /// Every entry homogeneous of degree `source_j - target_i` (zero entries
    /// are always fine). Returns the offending position on failure.
    pub fn check_homogeneous(
        &self,
        ctx: &PolyCtx,
        targets: &[i64],
        sources: &[i64],
    ) -> Result<(), (usize, usize)> {
        assert_eq!(targets.len(), self.rows);
        assert_eq!(sources.len(), self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, p) in col.comps.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                match p.homogeneous_degree(ctx) {
                    Some(d) if d == sources[j] - targets[i] => {}
                    _ => return Err((i, j)),
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_poly;
    use crate::monomial::MonomialOrder;
    use crate::scalar::FieldSpec;

    fn ctx() -> PolyCtx {
        PolyCtx::new(
            FieldSpec::Q,
            vec!["x".into(), "y".into()],
            vec![1, 1],
            MonomialOrder::DegRevLex,
        )
    }

    #[test]
    fn matrix_apply_and_compose() {
        let c = ctx();
        let p = |s: &str| parse_poly(s, &c).unwrap();
        // d1 = [x y] : R(-1)^2 -> R
        let d1 = PolyMatrix::from_columns(
            1,
            vec![
                PolyVec { comps: vec![p("x")] },
                PolyVec { comps: vec![p("y")] },
            ],
        );
        // koszul d2 = (y, -x)^T
        let d2 = PolyMatrix::from_columns(
            2,
            vec![PolyVec {
                comps: vec![p("y"), p("-x")],
            }],
        );
        let comp = d1.compose(&d2, &c);
        assert!(comp.is_zero());
        assert!(d1
            .check_homogeneous(&c, &[0], &[1, 1])
            .is_ok());
        assert!(d2.check_homogeneous(&c, &[1, 1], &[2]).is_ok());
    }

    #[test]
    fn module_lead_term_top_order() {
        let c = ctx();
        let p = |s: &str| parse_poly(s, &c).unwrap();
        let v = PolyVec {
            comps: vec![p("y^2"), p("x*y")],
        };
        // untwisted TOP: x*y and y^2 have equal degree, degrevlex puts x*y first
        let (t, _) = v.lead(&c, &[0, 0], ModuleOrder::Top).unwrap();
        assert_eq!(t.comp, 1);
        // twisting component 0 up by one makes its term dominate
        let (t, _) = v.lead(&c, &[1, 0], ModuleOrder::Top).unwrap();
        assert_eq!(t.comp, 0);
    }
}

//! The ambient rings: a weighted polynomial ring Q and its quotient
//! R = Q/(f_1..f_r) by a verified homogeneous regular sequence.
//!
//! All R-side module computations are performed in free Q-modules by
//! adjoining the relation multiples `f_i·e_j`: normal forms taken against
//! the combined basis are canonical representatives for R, syzygies over R
//! are projections of Q-syzygies of the adjoined family, and minimal
//! generators are selected degree by degree (graded Nakayama). Groebner
//! bases, tracked runs, and syzygy sets are cached per ring.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::freemod::PolyVec;
use crate::grammar::render_poly;
use crate::groebner::{
    groebner_basis, normal_form, syzygy_generators, tracked_groebner, QModCtx,
};
use crate::hilbert::HilbertSeries;
use crate::monomial::{monomials_of_degree, ModTerm, ModuleOrder, MonomialOrder};
use crate::poly::{PolyCtx, Polynomial};
use crate::scalar::FieldSpec;

/// Which ring a module computation is over: the polynomial ring itself or
/// the complete intersection quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Q,
    R,
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("no variables given")]
    NoVariables,
    #[error("invalid variable name `{0}`")]
    BadVariable(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable weights must be positive")]
    BadWeight,
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("relation {index} has degree zero")]
    DegreeZeroRelation { index: usize },
    #[error(
        "relations do not form a regular sequence: \
         `{witness}` · f_{index} lies in (f_1..f_{prior}) but `{witness}` does not"
    )]
    NotRegular {
        index: usize,
        prior: usize,
        witness: String,
    },
}

/// A reduced Groebner basis, cached.
pub struct GbData {
    pub elements: Vec<PolyVec>,
    pub partial: bool,
}

/// A tracked basis for membership-with-cofactors, cached.
pub struct TrackedData {
    pub basis: Vec<PolyVec>,
    /// `basis[l] = Σ_j reps[l][j] · gens[j]` over the adjoined generator list.
    pub reps: Vec<Vec<Polynomial>>,
}

#[derive(Default)]
struct Caches {
    gb: HashMap<String, Arc<GbData>>,
    tracked: HashMap<String, Arc<TrackedData>>,
    syz: HashMap<String, Arc<Vec<PolyVec>>>,
}

/// A graded complete intersection `R = Q/(f_1..f_r)` (possibly with r = 0,
/// i.e. the polynomial ring itself). The regular sequence is verified at
/// construction.
pub struct RingSpec {
    ctx: PolyCtx,
    relations: Vec<Polynomial>,
    caches: Mutex<Caches>,
}

impl Clone for RingSpec {
    fn clone(&self) -> Self {
        RingSpec {
            ctx: self.ctx.clone(),
            relations: self.relations.clone(),
            caches: Mutex::new(Caches::default()),
        }
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.field == other.ctx.field
            && self.ctx.vars == other.ctx.vars
            && self.ctx.weights == other.ctx.weights
            && self.ctx.order == other.ctx.order
            && self.relations == other.relations
    }
}

impl std::fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingSpec({:?}[{}]/({}))",
            self.ctx.field,
            self.ctx.vars.join(","),
            self.relations
                .iter()
                .map(|p| render_poly(p, &self.ctx))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl RingSpec {
    pub fn new(
        field: FieldSpec,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
        relations: Vec<Polynomial>,
    ) -> Result<RingSpec, RingError> {
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        for v in &vars {
            if !crate::grammar::is_valid_ident(v) {
                return Err(RingError::BadVariable(v.clone()));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        if weights.len() != vars.len() || weights.iter().any(|&w| w == 0) {
            return Err(RingError::BadWeight);
        }
        let ctx = PolyCtx::new(field, vars, weights, order);
        for (i, f) in relations.iter().enumerate() {
            if f.is_zero() {
                return Err(RingError::ZeroRelation { index: i + 1 });
            }
            match f.homogeneous_degree(&ctx) {
                None => return Err(RingError::InhomogeneousRelation { index: i + 1 }),
                Some(d) if d <= 0 => {
                    return Err(RingError::DegreeZeroRelation { index: i + 1 })
                }
                _ => {}
            }
        }
        let ring = RingSpec {
            ctx,
            relations,
            caches: Mutex::new(Caches::default()),
        };
        ring.verify_regular_sequence()?;
        Ok(ring)
    }

    /// The polynomial ring with no relations.
    pub fn polynomial(
        field: FieldSpec,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<RingSpec, RingError> {
        RingSpec::new(field, vars, weights, order, Vec::new())
    }

    /// The intermediate quotient by the first `keep` relations.
    pub fn truncated(&self, keep: usize) -> RingSpec {
        assert!(keep <= self.relations.len());
        RingSpec {
            ctx: self.ctx.clone(),
            relations: self.relations[..keep].to_vec(),
            caches: Mutex::new(Caches::default()),
        }
    }

    pub fn ctx(&self) -> &PolyCtx {
        &self.ctx
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn codim(&self) -> usize {
        self.relations.len()
    }

    /// Krull dimension of R (n - r for a complete intersection).
    pub fn dim(&self) -> i64 {
        self.nvars() as i64 - self.codim() as i64
    }

    pub fn relation_degrees(&self) -> Vec<i64> {
        self.relations
            .iter()
            .map(|f| f.homogeneous_degree(&self.ctx).unwrap())
            .collect()
    }

    /// Each f_{i+1} must be a non-zerodivisor modulo its predecessors:
    /// (I_i : f_{i+1}) = I_i, established through syzygies.
    fn verify_regular_sequence(&self) -> Result<(), RingError> {
        let ctx = &self.ctx;
        let twists = [0i64];
        for i in 0..self.relations.len() {
            let prior: Vec<PolyVec> = self.relations[..i]
                .iter()
                .map(|f| PolyVec {
                    comps: vec![f.clone()],
                })
                .collect();
            let q = QModCtx {
                ctx,
                twists: &twists,
                morder: ModuleOrder::Top,
            };
            let prior_gb = groebner_basis(&prior, &q, None);
            let mut family = vec![PolyVec {
                comps: vec![self.relations[i].clone()],
            }];
            family.extend(prior.iter().cloned());
            let syz = syzygy_generators(&family, &q);
            for s in &syz.generators {
                let c = &s.comps[0];
                if c.is_zero() {
                    continue;
                }
                let red = normal_form(
                    &PolyVec {
                        comps: vec![c.clone()],
                    },
                    &prior_gb.elements,
                    &q,
                );
                if !red.remainder.is_zero() {
                    return Err(RingError::NotRegular {
                        index: i + 1,
                        prior: i,
                        witness: render_poly(&red.remainder.comps[0], ctx),
                    });
                }
            }
        }
        Ok(())
    }

    fn cache_key(&self, base: Base, twists: &[i64], gens: &[PolyVec]) -> String {
        let mut key = format!("{:?}|{:?}|", base, twists);
        for g in gens {
            for p in &g.comps {
                key.push_str(&render_poly(p, &self.ctx));
                key.push(',');
            }
            key.push(';');
        }
        key
    }

    /// Adjoin the relation multiples `f_i·e_j` when working over R.
    pub fn adjoin(&self, base: Base, rank: usize, gens: &[PolyVec]) -> Vec<PolyVec> {
        let mut all = gens.to_vec();
        if base == Base::R {
            for f in &self.relations {
                for j in 0..rank {
                    let mut v = PolyVec::zero(rank);
                    v.comps[j] = f.clone();
                    all.push(v);
                }
            }
        }
        all
    }

    /// Reduced Groebner basis of the submodule generated by `gens` (with the
    /// relation multiples adjoined over R), in the free module with `twists`.
    pub fn gb(&self, base: Base, twists: &[i64], gens: &[PolyVec]) -> Arc<GbData> {
        let key = self.cache_key(base, twists, gens);
        if let Some(hit) = self.caches.lock().unwrap().gb.get(&key) {
            return hit.clone();
        }
        let all = self.adjoin(base, twists.len(), gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        let gb = groebner_basis(&all, &q, None);
        let data = Arc::new(GbData {
            elements: gb.elements,
            partial: gb.partial,
        });
        self.caches.lock().unwrap().gb.insert(key, data.clone());
        data
    }

    /// Canonical normal form of `v` modulo the submodule generated by `gens`.
    pub fn normal_form(
        &self,
        base: Base,
        twists: &[i64],
        gens: &[PolyVec],
        v: &PolyVec,
    ) -> PolyVec {
        let gb = self.gb(base, twists, gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        normal_form(v, &gb.elements, &q).remainder
    }

    pub fn is_member(
        &self,
        base: Base,
        twists: &[i64],
        gens: &[PolyVec],
        v: &PolyVec,
    ) -> bool {
        self.normal_form(base, twists, gens, v).is_zero()
    }

    /// Canonical representative of a ring element of R (rank-one normal form
    /// against the relations); the identity over Q.
    pub fn reduce_scalar(&self, base: Base, p: &Polynomial) -> Polynomial {
        match base {
            Base::Q => p.clone(),
            Base::R => {
                let v = PolyVec {
                    comps: vec![p.clone()],
                };
                self.normal_form(Base::R, &[0], &[], &v).comps[0].clone()
            }
        }
    }

    /// Generating set of the syzygy module of `gens` over the base ring.
    /// Over R this is the projection of the Q-syzygies of the adjoined
    /// family to the generator block, entries reduced to canonical form.
    pub fn syzygies(
        &self,
        base: Base,
        twists: &[i64],
        gens: &[PolyVec],
    ) -> Arc<Vec<PolyVec>> {
        let key = self.cache_key(base, twists, gens);
        if let Some(hit) = self.caches.lock().unwrap().syz.get(&key) {
            return hit.clone();
        }
        let all = self.adjoin(base, twists.len(), gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        let out = syzygy_generators(&all, &q);
        let m = gens.len();
        let mut projected: Vec<PolyVec> = Vec::new();
        for s in &out.generators {
            let mut head = PolyVec {
                comps: s.comps[..m].to_vec(),
            };
            if base == Base::R {
                head = PolyVec {
                    comps: head
                        .comps
                        .iter()
                        .map(|p| self.reduce_scalar(Base::R, p))
                        .collect(),
                };
            }
            if !head.is_zero() {
                projected.push(head);
            }
        }
        let data = Arc::new(projected);
        self.caches.lock().unwrap().syz.insert(key, data.clone());
        data
    }

    fn tracked(&self, base: Base, twists: &[i64], gens: &[PolyVec]) -> Arc<TrackedData> {
        let key = self.cache_key(base, twists, gens);
        if let Some(hit) = self.caches.lock().unwrap().tracked.get(&key) {
            return hit.clone();
        }
        let all = self.adjoin(base, twists.len(), gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        let tg = tracked_groebner(&all, &q, None);
        let data = Arc::new(TrackedData {
            basis: tg.basis,
            reps: tg.reps,
        });
        self.caches
            .lock()
            .unwrap()
            .tracked
            .insert(key, data.clone());
        data
    }

    /// If `v` lies in the submodule generated by `gens`, produce cofactors
    /// `c` with `v = Σ c_j·gens[j]` over the base ring (over R the relation
    /// block's contribution is dropped — it is zero in R).
    pub fn membership_cofactors(
        &self,
        base: Base,
        twists: &[i64],
        gens: &[PolyVec],
        v: &PolyVec,
    ) -> Option<Vec<Polynomial>> {
        let td = self.tracked(base, twists, gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        let red = normal_form(v, &td.basis, &q);
        if !red.remainder.is_zero() {
            return None;
        }
        let mut out = vec![Polynomial::zero(); gens.len()];
        for (l, qp) in red.quotients.iter().enumerate() {
            if qp.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                if !td.reps[l][j].is_zero() {
                    *o = o.add(&qp.mul(&td.reps[l][j], &self.ctx), &self.ctx);
                }
            }
        }
        if base == Base::R {
            out = out
                .iter()
                .map(|p| self.reduce_scalar(Base::R, p))
                .collect();
        }
        Some(out)
    }

    /// Indices of a minimal generating set among homogeneous `candidates`,
    /// relative to a background submodule, selected degree by degree.
    pub fn minimal_generators(
        &self,
        base: Base,
        twists: &[i64],
        candidates: &[PolyVec],
        background: &[PolyVec],
    ) -> Vec<usize> {
        let ctx = &self.ctx;
        let mut order: Vec<(i64, usize)> = Vec::new();
        for (i, c) in candidates.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c
                .homogeneous_degree(ctx, twists)
                .expect("minimal_generators: inhomogeneous candidate");
            order.push((d, i));
        }
        order.sort();
        let mut kept: Vec<usize> = Vec::new();
        for (_, i) in order {
            let mut family: Vec<PolyVec> = kept
                .iter()
                .map(|&k| candidates[k].clone())
                .collect();
            family.extend(background.iter().cloned());
            if !self.is_member(base, twists, &family, &candidates[i]) {
                kept.push(i);
            }
        }
        kept
    }

    /// Hilbert series of the quotient of the twisted free module by the
    /// submodule generated by `gens` (over the base ring).
    pub fn quotient_series(
        &self,
        base: Base,
        twists: &[i64],
        gens: &[PolyVec],
    ) -> HilbertSeries {
        let gb = self.gb(base, twists, gens);
        let q = QModCtx {
            ctx: &self.ctx,
            twists,
            morder: ModuleOrder::Top,
        };
        let leads: Vec<ModTerm> = gb
            .elements
            .iter()
            .map(|e| e.lead(&self.ctx, twists, ModuleOrder::Top).unwrap().0)
            .collect();
        let _ = q;
        HilbertSeries::quotient_by_leads(&leads, twists, &self.ctx.weights)
    }

    /// Monomial k-basis of the twisted free module over the base ring in one
    /// internal degree: all monomials over Q, the standard monomials modulo
    /// the relation ideal's lead terms over R.
    pub fn free_basis_in_degree(
        &self,
        base: Base,
        twists: &[i64],
        degree: i64,
    ) -> Vec<ModTerm> {
        let rel_leads: Vec<crate::monomial::Monomial> = if base == Base::R {
            self.gb(Base::Q, &[0], &self.relation_vectors())
                .elements
                .iter()
                .map(|e| e.lead(&self.ctx, &[0], ModuleOrder::Top).unwrap().0.mon)
                .collect()
        } else {
            Vec::new()
        };
        let mut out = Vec::new();
        for (j, &a) in twists.iter().enumerate() {
            let d = degree - a;
            if d < 0 {
                continue;
            }
            for m in monomials_of_degree(&self.ctx.weights, d) {
                if rel_leads.iter().any(|l| l.divides(&m)) {
                    continue;
                }
                out.push(ModTerm { comp: j, mon: m });
            }
        }
        out
    }

    fn relation_vectors(&self) -> Vec<PolyVec> {
        self.relations
            .iter()
            .map(|f| PolyVec {
                comps: vec![f.clone()],
            })
            .collect()
    }

    /// Hilbert series of R itself.
    pub fn ring_series(&self) -> HilbertSeries {
        self.quotient_series(Base::R, &[0], &[])
    }
}

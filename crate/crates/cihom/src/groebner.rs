//! Buchberger's algorithm for submodules of twisted free modules over the
//! polynomial ring, with optional cofactor tracking.
//!
//! Invariants maintained throughout:
//! - the working basis is append-only and every element is monic;
//! - with tracking on, `basis[l] = Σ_j reps[l][j] · gens[j]` exactly;
//! - S-pairs are formed only between elements with the same lead component
//!   and are processed in ascending (twisted) degree, so for homogeneous
//!   input every intermediate object is homogeneous;
//! - in syzygy mode no pair-elimination criteria are applied: the recorded
//!   division certificates of *all* same-component S-pairs are exactly the
//!   generating set of syzygies of the basis (Schreyer's theorem), and each
//!   certificate's lead term under the Schreyer order is verified.

use std::cmp::Ordering;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::freemod::PolyVec;
use crate::monomial::{ModTerm, ModuleOrder, Monomial};
use crate::poly::{PolyCtx, Polynomial};
use crate::scalar::Scalar;

/// Ambient data for Groebner computations: coefficient/variable context,
/// twists of the free module, and the module order.
#[derive(Clone, Debug)]
pub struct QModCtx<'a> {
    pub ctx: &'a PolyCtx,
    pub twists: &'a [i64],
    pub morder: ModuleOrder,
}

impl<'a> QModCtx<'a> {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.morder
            .cmp(a, b, &self.ctx.weights, self.twists, self.ctx.order)
    }

    /// Twisted degree of a module term.
    pub fn term_degree(&self, t: &ModTerm) -> i64 {
        t.mon.degree(&self.ctx.weights) + self.twists[t.comp]
    }
}

/// Result of a full normal-form computation.
pub struct Reduction {
    pub remainder: PolyVec,
    /// Quotients against the basis: `v = Σ quotients[l]·basis[l] + remainder`.
    pub quotients: Vec<Polynomial>,
}

/// Fully reduce `v` modulo `basis` (every term of the remainder is divisible
/// by no lead term of the basis). Basis elements must be monic. Divisor
/// selection is deterministic: first match in basis order.
pub fn normal_form(v: &PolyVec, basis: &[PolyVec], q: &QModCtx) -> Reduction {
    let ctx = q.ctx;
    let leads: Vec<Option<(ModTerm, Scalar)>> = basis
        .iter()
        .map(|b| b.lead(ctx, q.twists, q.morder))
        .collect();
    let mut current = v.clone();
    let mut remainder = PolyVec::zero(v.rank());
    let mut quotients = vec![Polynomial::zero(); basis.len()];
    while let Some((lt, c)) = current.lead(ctx, q.twists, q.morder) {
        let mut reduced = false;
        for (l, bl) in leads.iter().enumerate() {
            if let Some((bt, _)) = bl {
                if bt.comp == lt.comp && bt.mon.divides(&lt.mon) {
                    let m = lt.mon.quot(&bt.mon);
                    let step = basis[l].mul_term(&m, &c);
                    current = current.sub(&step, ctx);
                    quotients[l] =
                        quotients[l].add(&Polynomial::from_term(m, c.clone()), ctx);
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            let t = Polynomial::from_term(lt.mon.clone(), c.clone());
            remainder.comps[lt.comp] = remainder.comps[lt.comp].add(&t, ctx);
            current.comps[lt.comp] = current.comps[lt.comp].sub(&t, ctx);
        }
    }
    Reduction {
        remainder,
        quotients,
    }
}

/// A Groebner basis element's provenance when cofactors are tracked.
#[derive(Clone, Debug)]
struct Tracked {
    vec: PolyVec,
    /// Cofactors on the original generators.
    rep: Vec<Polynomial>,
}

/// One recorded syzygy certificate from a reduced-to-zero S-pair.
#[derive(Clone, Debug)]
pub struct SyzygyCertificate {
    /// Coordinates in the free module over the (final) basis.
    pub coords: PolyVec,
    /// The pair of basis indices it came from.
    pub pair: (usize, usize),
    /// The lcm of the two lead monomials.
    pub lcm: Monomial,
}

/// Output of the tracked, criteria-free Buchberger run.
pub struct TrackedGb {
    /// Monic, append-only basis (original nonzero generators first).
    pub basis: Vec<PolyVec>,
    /// `basis[l] = Σ_j reps[l][j]·gens[j]`.
    pub reps: Vec<Vec<Polynomial>>,
    /// Schreyer-certified syzygies of `basis`.
    pub certificates: Vec<SyzygyCertificate>,
    pub partial: bool,
}

/// Output of the plain (untracked) run: a reduced Groebner basis.
pub struct Gb {
    /// Reduced: pairwise non-divisible monic leads, tails fully reduced.
    /// Sorted descending by lead term.
    pub elements: Vec<PolyVec>,
    pub partial: bool,
}

impl Gb {
    pub fn leads(&self, q: &QModCtx) -> Vec<ModTerm> {
        self.elements
            .iter()
            .map(|e| e.lead(q.ctx, q.twists, q.morder).unwrap().0)
            .collect()
    }
}

struct Engine<'a, 'b> {
    q: &'b QModCtx<'a>,
    basis: Vec<Tracked>,
    leads: Vec<(ModTerm, i64)>,
    queue: BinaryHeap<Reverse<(i64, usize, usize)>>,
    handled: HashSet<(usize, usize)>,
    certificates: Vec<SyzygyCertificate>,
    track: bool,
    all_pairs: bool,
    ngens: usize,
    partial: bool,
}

impl<'a, 'b> Engine<'a, 'b> {
    fn new(q: &'b QModCtx<'a>, track: bool, all_pairs: bool, ngens: usize) -> Self {
        Engine {
            q,
            basis: Vec::new(),
            leads: Vec::new(),
            queue: BinaryHeap::new(),
            handled: HashSet::new(),
            certificates: Vec::new(),
            track,
            all_pairs,
            ngens,
            partial: false,
        }
    }

    fn insert(&mut self, v: PolyVec, rep: Vec<Polynomial>) {
        let ctx = self.q.ctx;
        let (lt, lc) = v.lead(ctx, self.q.twists, self.q.morder).unwrap();
        let inv = lc.inv();
        let monic = v.scale(&inv);
        let rep = if self.track {
            rep.iter().map(|p| p.scale(&inv)).collect()
        } else {
            Vec::new()
        };
        let new = self.basis.len();
        let deg = self.q.term_degree(&lt);
        for (i, (ti, di)) in self.leads.iter().enumerate() {
            if ti.comp == lt.comp {
                let lcm = ti.mon.lcm(&lt.mon);
                let pair_deg = lcm.degree(&self.q.ctx.weights) + self.q.twists[lt.comp];
                let _ = di;
                self.queue.push(Reverse((pair_deg, i, new)));
            }
        }
        self.leads.push((lt, deg));
        self.basis.push(Tracked { vec: monic, rep });
    }

    /// Buchberger's chain criterion (valid for modules): skip (a,b) when a
    /// third element's lead divides the pair lcm and both companion pairs
    /// were already handled.
    fn chain_criterion(&self, a: usize, b: usize, lcm: &Monomial) -> bool {
        let comp = self.leads[a].0.comp;
        for (c, (tc, _)) in self.leads.iter().enumerate() {
            if c == a || c == b || tc.comp != comp || !tc.mon.divides(lcm) {
                continue;
            }
            let p1 = (a.min(c), a.max(c));
            let p2 = (b.min(c), b.max(c));
            if self.handled.contains(&p1) && self.handled.contains(&p2) {
                return true;
            }
        }
        false
    }

    fn run(&mut self, cap: Option<i64>) {
        let ctx = self.q.ctx;
        while let Some(Reverse((deg, a, b))) = self.queue.pop() {
            if let Some(c) = cap {
                if deg > c {
                    self.partial = true;
                    break;
                }
            }
            let key = (a, b);
            let ta = &self.leads[a].0;
            let tb = &self.leads[b].0;
            debug_assert_eq!(ta.comp, tb.comp);
            let lcm = ta.mon.lcm(&tb.mon);
            if !self.all_pairs {
                // Product criterion is sound only in ambient rank one.
                if self.q.rank() == 1 && ta.mon.gcd_is_one(&tb.mon) {
                    self.handled.insert(key);
                    continue;
                }
                if self.chain_criterion(a, b, &lcm) {
                    self.handled.insert(key);
                    continue;
                }
            }
            self.handled.insert(key);
            let ma = lcm.quot(&ta.mon);
            let mb = lcm.quot(&tb.mon);
            let one = ctx.field.one();
            let s = self.basis[a]
                .vec
                .mul_term(&ma, &one)
                .sub(&self.basis[b].vec.mul_term(&mb, &one), ctx);
            let vecs: Vec<PolyVec> = self.basis.iter().map(|t| t.vec.clone()).collect();
            let red = normal_form(&s, &vecs, self.q);
            if red.remainder.is_zero() {
                if self.track {
                    // (lcm/lm_a)·ε_a − (lcm/lm_b)·ε_b − Σ q_l·ε_l
                    let mut coords = vec![Polynomial::zero(); self.basis.len()];
                    coords[a] = coords[a].add(
                        &Polynomial::from_term(ma.clone(), one.clone()),
                        ctx,
                    );
                    coords[b] = coords[b].sub(
                        &Polynomial::from_term(mb.clone(), one.clone()),
                        ctx,
                    );
                    for (l, qp) in red.quotients.iter().enumerate() {
                        coords[l] = coords[l].sub(qp, ctx);
                    }
                    self.certificates.push(SyzygyCertificate {
                        coords: PolyVec { comps: coords },
                        pair: (a, b),
                        lcm,
                    });
                }
            } else {
                let rep = if self.track {
                    let mut rep = vec![Polynomial::zero(); self.ngens];
                    for j in 0..self.ngens {
                        let pa = self.basis[a].rep[j].mul_term(&ma, &one);
                        let pb = self.basis[b].rep[j].mul_term(&mb, &one);
                        rep[j] = pa.sub(&pb, ctx);
                        for (l, qp) in red.quotients.iter().enumerate() {
                            if !qp.is_zero() {
                                rep[j] = rep[j].sub(&qp.mul(&self.basis[l].rep[j], ctx), ctx);
                            }
                        }
                    }
                    rep
                } else {
                    Vec::new()
                };
                self.insert(red.remainder, rep);
            }
        }
    }
}

fn engine_run(
    gens: &[PolyVec],
    q: &QModCtx,
    track: bool,
    all_pairs: bool,
    cap: Option<i64>,
) -> (Vec<Tracked>, Vec<SyzygyCertificate>, bool) {
    let ctx = q.ctx;
    let mut eng = Engine::new(q, track, all_pairs, gens.len());
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut rep = vec![Polynomial::zero(); gens.len()];
        if track {
            rep[j] = Polynomial::one(ctx);
        }
        eng.insert(g.clone(), rep);
    }
    eng.run(cap);
    let mut certs = eng.certificates;
    // Pad syzygy coordinates to final basis length.
    let n = eng.basis.len();
    for c in &mut certs {
        c.coords.comps.resize(n, Polynomial::zero());
    }
    (eng.basis, certs, eng.partial)
}

/// Compute a reduced Groebner basis of the submodule generated by `gens`.
pub fn groebner_basis(gens: &[PolyVec], q: &QModCtx, cap: Option<i64>) -> Gb {
    let (basis, _, partial) = engine_run(gens, q, false, false, cap);
    let vecs: Vec<PolyVec> = basis.into_iter().map(|t| t.vec).collect();
    Gb {
        elements: interreduce(vecs, q),
        partial,
    }
}

/// Minimalize and tail-reduce a monic Groebner basis; sort descending by lead.
fn interreduce(vecs: Vec<PolyVec>, q: &QModCtx) -> Vec<PolyVec> {
    let ctx = q.ctx;
    let leads: Vec<Option<ModTerm>> = vecs
        .iter()
        .map(|v| v.lead(ctx, q.twists, q.morder).map(|(t, _)| t))
        .collect();
    let n = vecs.len();
    let mut dropped = vec![false; n];
    for i in 0..n {
        let ti = match &leads[i] {
            Some(t) => t,
            None => {
                dropped[i] = true;
                continue;
            }
        };
        for j in 0..n {
            if i == j || dropped[j] {
                continue;
            }
            if let Some(tj) = &leads[j] {
                if tj.comp == ti.comp && tj.mon.divides(&ti.mon) {
                    // Strict divisor always wins; equal leads keep the earlier.
                    if tj.mon != ti.mon || j < i {
                        dropped[i] = true;
                        break;
                    }
                }
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&i| !dropped[i]).collect();
    let mut out = Vec::with_capacity(kept.len());
    for &i in &kept {
        let others: Vec<PolyVec> = kept
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| vecs[j].clone())
            .collect();
        let red = normal_form(&vecs[i], &others, q);
        // Lead survives (no other lead divides it); re-normalize monic.
        let (_, lc) = red
            .remainder
            .lead(ctx, q.twists, q.morder)
            .expect("reduced basis element vanished");
        out.push(red.remainder.scale(&lc.inv()));
    }
    out.sort_by(|a, b| {
        let ta = a.lead(ctx, q.twists, q.morder).unwrap().0;
        let tb = b.lead(ctx, q.twists, q.morder).unwrap().0;
        q.cmp_terms(&tb, &ta)
    });
    out
}

/// Tracked, criteria-free Buchberger run for syzygy extraction.
pub fn tracked_groebner(gens: &[PolyVec], q: &QModCtx, cap: Option<i64>) -> TrackedGb {
    let (basis, certificates, partial) = engine_run(gens, q, true, true, cap);
    let mut vecs = Vec::with_capacity(basis.len());
    let mut reps = Vec::with_capacity(basis.len());
    for t in basis {
        vecs.push(t.vec);
        reps.push(t.rep);
    }
    TrackedGb {
        basis: vecs,
        reps,
        certificates,
        partial,
    }
}

/// Compare module terms over the basis by the Schreyer order: map a term
/// `m·ε_l` to `lm(m·basis[l])` in the ambient module and compare there,
/// breaking ties toward the lower basis index (lower index is larger).
pub fn schreyer_cmp(
    a: &ModTerm,
    b: &ModTerm,
    basis_leads: &[ModTerm],
    q: &QModCtx,
) -> Ordering {
    let la = &basis_leads[a.comp];
    let lb = &basis_leads[b.comp];
    let ia = ModTerm {
        comp: la.comp,
        mon: a.mon.mul(&la.mon),
    };
    let ib = ModTerm {
        comp: lb.comp,
        mon: b.mon.mul(&lb.mon),
    };
    match q.cmp_terms(&ia, &ib) {
        Ordering::Equal => b.comp.cmp(&a.comp),
        o => o,
    }
}

/// Leading term of a vector over the basis under the Schreyer order.
pub fn schreyer_lead(s: &PolyVec, basis_leads: &[ModTerm], q: &QModCtx) -> Option<ModTerm> {
    let mut best: Option<ModTerm> = None;
    for (l, p) in s.comps.iter().enumerate() {
        for (m, _) in &p.terms {
            let cand = ModTerm {
                comp: l,
                mon: m.clone(),
            };
            match &best {
                None => best = Some(cand),
                Some(bt) => {
                    if schreyer_cmp(&cand, bt, basis_leads, q).is_gt() {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

/// A generating set for the syzygy module of `gens`, together with the
/// tracked basis data it was derived from.
pub struct SyzygyOutput {
    pub gb: TrackedGb,
    /// Generators of `Syz(gens) ⊆ ⊕_j Q(-deg g_j)` (may be non-minimal).
    pub generators: Vec<PolyVec>,
}

/// Compute a generating set of the syzygy module of `gens` over the
/// polynomial ring. Each recorded certificate is verified to have its
/// Schreyer lead at the expected spot before being trusted.
pub fn syzygy_generators(gens: &[PolyVec], q: &QModCtx) -> SyzygyOutput {
    let ctx = q.ctx;
    let tg = tracked_groebner(gens, q, None);
    let basis_leads: Vec<ModTerm> = tg
        .basis
        .iter()
        .map(|b| b.lead(ctx, q.twists, q.morder).unwrap().0)
        .collect();
    for cert in &tg.certificates {
        let (a, b) = cert.pair;
        let lo = a.min(b);
        let expected = ModTerm {
            comp: lo,
            mon: cert.lcm.quot(&basis_leads[lo].mon),
        };
        let got = schreyer_lead(&cert.coords, &basis_leads, q)
            .expect("syzygy certificate is the zero vector");
        assert!(
            got == expected,
            "Schreyer lead of a syzygy certificate is misplaced"
        );
    }
    let m = gens.len();
    let mut generators: Vec<PolyVec> = Vec::new();
    // Certificates pushed through the representation matrix: s ↦ s·A.
    for cert in &tg.certificates {
        let mut out = PolyVec::zero(m);
        for (l, coeff) in cert.coords.comps.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for j in 0..m {
                if !tg.reps[l][j].is_zero() {
                    out.comps[j] =
                        out.comps[j].add(&coeff.mul(&tg.reps[l][j], ctx), ctx);
                }
            }
        }
        if !out.is_zero() {
            generators.push(out);
        }
    }
    // Rows of I − B·A, where B re-expresses the generators in the basis.
    for (j, g) in gens.iter().enumerate() {
        let red = normal_form(g, &tg.basis, q);
        assert!(
            red.remainder.is_zero(),
            "generator failed to reduce to zero against its own basis"
        );
        let mut row = PolyVec::zero(m);
        row.comps[j] = Polynomial::one(ctx);
        for (l, bq) in red.quotients.iter().enumerate() {
            if bq.is_zero() {
                continue;
            }
            for jj in 0..m {
                if !tg.reps[l][jj].is_zero() {
                    row.comps[jj] =
                        row.comps[jj].sub(&bq.mul(&tg.reps[l][jj], ctx), ctx);
                }
            }
        }
        if !row.is_zero() {
            generators.push(row);
        }
    }
    SyzygyOutput { gb: tg, generators }
}

/// Check the Buchberger criterion outright: every same-component S-pair of
/// `elements` reduces to zero. Used as an independent audit in tests.
pub fn is_groebner_basis(elements: &[PolyVec], q: &QModCtx) -> bool {
    let ctx = q.ctx;
    let leads: Vec<(ModTerm, Scalar)> = match elements
        .iter()
        .map(|e| e.lead(ctx, q.twists, q.morder))
        .collect::<Option<Vec<_>>>()
    {
        Some(l) => l,
        None => return false,
    };
    for a in 0..elements.len() {
        for b in (a + 1)..elements.len() {
            let (ta, ca) = &leads[a];
            let (tb, cb) = &leads[b];
            if ta.comp != tb.comp {
                continue;
            }
            let lcm = ta.mon.lcm(&tb.mon);
            let sa = elements[a].mul_term(&lcm.quot(&ta.mon), &ca.inv());
            let sb = elements[b].mul_term(&lcm.quot(&tb.mon), &cb.inv());
            let s = sa.sub(&sb, ctx);
            if !normal_form(&s, elements, q).remainder.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse_poly, render_poly};
    use crate::monomial::MonomialOrder;
    use crate::scalar::FieldSpec;

    fn ctx3() -> PolyCtx {
        PolyCtx::new(
            FieldSpec::Q,
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            MonomialOrder::DegRevLex,
        )
    }

    fn ideal(ctx: &PolyCtx, gens: &[&str]) -> Vec<PolyVec> {
        gens.iter()
            .map(|s| PolyVec {
                comps: vec![parse_poly(s, ctx).unwrap()],
            })
            .collect()
    }

    #[test]
    fn twisted_cubic_weighted_basis() {
        // Under weights (1,2,3) these generators are homogeneous and their
        // reduced degrevlex basis is the classical three-element one.
        let ctx = PolyCtx::new(
            FieldSpec::Q,
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 2, 3],
            MonomialOrder::DegRevLex,
        );
        let gens = ideal(&ctx, &["x^2 - y", "x*y - z"]);
        let twists = [0i64];
        let q = QModCtx {
            ctx: &ctx,
            twists: &twists,
            morder: ModuleOrder::Top,
        };
        let gb = groebner_basis(&gens, &q, None);
        assert!(!gb.partial);
        let printed: Vec<String> = gb
            .elements
            .iter()
            .map(|e| render_poly(&e.comps[0], &ctx))
            .collect();
        let mut sorted = printed.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![
                "x*y - z".to_string(),
                "x^2 - y".to_string(),
                "y^2 - x*z".to_string()
            ]
        );
        assert!(is_groebner_basis(&gb.elements, &q));
    }

    #[test]
    fn normal_form_is_canonical() {
        let ctx = ctx3();
        let gens = ideal(&ctx, &["x^2 - y^2", "x*y"]);
        let twists = [0i64];
        let q = QModCtx {
            ctx: &ctx,
            twists: &twists,
            morder: ModuleOrder::Top,
        };
        let gb = groebner_basis(&gens, &q, None);
        // x^3 ≡ x·y^2 ≡ ... should land in a reduced normal form; NF is
        // idempotent and linear.
        let f = PolyVec {
            comps: vec![parse_poly("x^3 + y^3", &ctx).unwrap()],
        };
        let r1 = normal_form(&f, &gb.elements, &q).remainder;
        let r2 = normal_form(&r1, &gb.elements, &q).remainder;
        assert_eq!(r1, r2);
        let g = PolyVec {
            comps: vec![parse_poly("y^3", &ctx).unwrap()],
        };
        let h = PolyVec {
            comps: vec![parse_poly("x^3", &ctx).unwrap()],
        };
        let rg = normal_form(&g, &gb.elements, &q).remainder;
        let rh = normal_form(&h, &gb.elements, &q).remainder;
        assert_eq!(
            normal_form(&g.add(&h, &ctx), &gb.elements, &q).remainder,
            rg.add(&rh, &ctx)
        );
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let ctx = ctx3();
        let gens = ideal(&ctx, &["x", "y"]);
        let twists = [0i64];
        let q = QModCtx {
            ctx: &ctx,
            twists: &twists,
            morder: ModuleOrder::Top,
        };
        let out = syzygy_generators(&gens, &q);
        // Koszul relation (y, -x) up to sign/scale generates everything.
        let nonzero: Vec<&PolyVec> = out.generators.iter().collect();
        assert!(!nonzero.is_empty());
        // every generator must actually be a syzygy
        for s in &out.generators {
            let combo = s.comps[0]
                .mul(&gens[0].comps[0], &ctx)
                .add(&s.comps[1].mul(&gens[1].comps[0], &ctx), &ctx);
            assert!(combo.is_zero());
        }
        // and (y, -x) must reduce to zero against their Groebner basis
        let syz_twists = [1i64, 1];
        let qs = QModCtx {
            ctx: &ctx,
            twists: &syz_twists,
            morder: ModuleOrder::Top,
        };
        let syz_gb = groebner_basis(&out.generators, &qs, None);
        let koszul = PolyVec {
            comps: vec![
                parse_poly("y", &ctx).unwrap(),
                parse_poly("-x", &ctx).unwrap(),
            ],
        };
        assert!(normal_form(&koszul, &syz_gb.elements, &qs)
            .remainder
            .is_zero());
    }

    #[test]
    fn redundant_generator_syzygy_detected() {
        let ctx = ctx3();
        // g2 = x*g1, so e2 - x*e1 is a syzygy.
        let gens = ideal(&ctx, &["y", "x*y"]);
        let twists = [0i64];
        let q = QModCtx {
            ctx: &ctx,
            twists: &twists,
            morder: ModuleOrder::Top,
        };
        let out = syzygy_generators(&gens, &q);
        let target = PolyVec {
            comps: vec![
                parse_poly("-x", &ctx).unwrap(),
                parse_poly("1", &ctx).unwrap(),
            ],
        };
        let syz_twists = [1i64, 2];
        let qs = QModCtx {
            ctx: &ctx,
            twists: &syz_twists,
            morder: ModuleOrder::Top,
        };
        let syz_gb = groebner_basis(&out.generators, &qs, None);
        assert!(normal_form(&target, &syz_gb.elements, &qs)
            .remainder
            .is_zero());
    }
}

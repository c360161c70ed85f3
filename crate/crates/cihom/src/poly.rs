//! Sparse multivariate polynomials over an exact field.
//!
//! Invariant: `terms` is sorted strictly descending under the active order of
//! the owning context, holds no zero coefficients, and no duplicate
//! monomials. The active order and the variable weights live in [`PolyCtx`];
//! every order-sensitive operation takes the context explicitly.

use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{FieldSpec, Scalar};
use std::cmp::Ordering;

/// The ambient polynomial-ring context: field, named weighted variables, and
/// the active term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCtx {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
}

impl PolyCtx {
    pub fn new(field: FieldSpec, vars: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> PolyCtx {
        assert_eq!(vars.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "variable weights must be positive");
        PolyCtx { field, vars, weights, order }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    /// The same context with a different active order (polynomials must be
    /// re-normalized when moved across).
    pub fn with_order(&self, order: MonomialOrder) -> PolyCtx {
        PolyCtx { order, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(ctx: &PolyCtx, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![(Monomial::one(ctx.nvars()), c)],
        }
    }

    pub fn one(ctx: &PolyCtx) -> Polynomial {
        Polynomial::constant(ctx, ctx.field.one())
    }

    pub fn var(ctx: &PolyCtx, v: usize) -> Polynomial {
        Polynomial {
            terms: vec![(Monomial::var(ctx.nvars(), v), ctx.field.one())],
        }
    }

    pub fn from_term(mon: Monomial, c: Scalar) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(mon, c)] }
        }
    }

    /// `Some(c)` when the polynomial is the constant c ≠ 0 (degree-zero
    /// unit); `None` for zero or anything of positive degree.
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs, combining and
    /// sorting under the context order.
    pub fn from_terms(ctx: &PolyCtx, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let mut map: Vec<(Monomial, Scalar)> = Vec::new();
        'outer: for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (m2, c2) in map.iter_mut() {
                if *m2 == m {
                    *c2 = c2.add(&c);
                    continue 'outer;
                }
            }
            map.push((m, c));
        }
        map.retain(|(_, c)| !c.is_zero());
        map.sort_by(|a, b| ctx.cmp_mono(&b.0, &a.0));
        Polynomial { terms: map }
    }

    /// Re-establish the sort invariant after a context/order change.
    pub fn renormalize(&self, ctx: &PolyCtx) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.clone())
    }

    pub fn lead(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Weighted degree of the highest term, `None` for zero.
    pub fn degree(&self, ctx: &PolyCtx) -> Option<i64> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree(&ctx.weights))
            .max()
    }

    /// `Some(d)` when every term has weighted degree `d`; zero is homogeneous
    /// of every degree and reports `None` separately via `is_zero`.
    pub fn homogeneous_degree(&self, ctx: &PolyCtx) -> Option<i64> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree(&ctx.weights));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        // merge two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ctx.cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        self.add(&other.neg(), ctx)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    /// Multiply by a single term `c * m` (preserves sorting).
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m2, c2)| (m.mul(m2), c.mul(c2)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c), ctx);
        }
        acc
    }

    pub fn pow(&self, n: u32, ctx: &PolyCtx) -> Polynomial {
        let mut acc = Polynomial::one(ctx);
        for _ in 0..n {
            acc = acc.mul(self, ctx);
        }
        acc
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, _ctx: &PolyCtx) -> Polynomial {
        match self.lead() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Evaluate the coefficient field image of substituting `t = value` is not
    /// meaningful for multivariate polynomials; this instead returns the
    /// coefficient of a given monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial, field: FieldSpec) -> Scalar {
        for (m2, c) in &self.terms {
            if m2 == m {
                return c.clone();
            }
        }
        field.zero()
    }
}

/// Result of multivariate division: `f = sum(q[i] * g[i]) + r` and no term of
/// `r` is divisible by any divisor's leading monomial.
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Deterministic multivariate division: at each step the current leading term
/// is reduced by the first divisor (in the given sequence) whose lead divides
/// it, otherwise moved to the remainder.
pub fn divide(f: &Polynomial, divisors: &[&Polynomial], ctx: &PolyCtx) -> DivisionResult {
    let mut p = f.clone();
    let mut quotients = vec![Polynomial::zero(); divisors.len()];
    let mut remainder = Polynomial::zero();
    'outer: while let Some((lm, lc)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        for (i, g) in divisors.iter().enumerate() {
            if let Some((gm, gc)) = g.lead() {
                if gm.divides(&lm) {
                    let m = lm.quot(&gm);
                    let c = lc.div(gc);
                    quotients[i] = quotients[i].add(&Polynomial::from_term(m.clone(), c.clone()), ctx);
                    p = p.sub(&g.mul_term(&m, &c), ctx);
                    continue 'outer;
                }
            }
        }
        // no divisor matches: move the lead term to the remainder
        remainder = remainder.add(&Polynomial::from_term(lm.clone(), lc.clone()), ctx);
        p = p.sub(&Polynomial::from_term(lm, lc), ctx);
    }
    DivisionResult { quotients, remainder }
}

/// Assert the division identity exactly (used by tests and check suites).
pub fn division_identity_holds(
    f: &Polynomial,
    divisors: &[&Polynomial],
    res: &DivisionResult,
    ctx: &PolyCtx,
) -> bool {
    let mut acc = res.remainder.clone();
    for (q, g) in res.quotients.iter().zip(divisors) {
        acc = acc.add(&q.mul(g, ctx), ctx);
    }
    if acc != *f {
        return false;
    }
    // remainder irreducibility
    for (m, _) in &res.remainder.terms {
        for g in divisors {
            if let Some((gm, _)) = g.lead() {
                if gm.divides(m) {
                    return false;
                }
            }
        }
    }
    true
}

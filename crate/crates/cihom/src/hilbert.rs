//! Hilbert series of graded subquotients, kept exact.
//!
//! A series is stored as a Laurent-polynomial numerator over ℤ against the
//! fixed denominator `Π_v (1 - t^{w_v})`. The numerator of a quotient by a
//! monomial submodule decomposes componentwise and is computed by the colon
//! recursion `N_{I+(m)} = N_I - t^{deg m}·N_{I:m}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::monomial::{ModTerm, Monomial};

/// A Laurent polynomial over ℤ: `coeffs[i]` is the coefficient of
/// `t^(offset + i)`. Normalized so the ends are nonzero (zero polynomial has
/// empty coeffs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    pub offset: i64,
    pub coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly {
            offset: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn monomial(deg: i64) -> LaurentPoly {
        LaurentPoly {
            offset: deg,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> LaurentPoly {
        LaurentPoly { offset, coeffs }.normalized()
    }

    fn normalized(mut self) -> LaurentPoly {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest degrees with nonzero coefficient.
    pub fn bot(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn get(&self, deg: i64) -> BigInt {
        if deg < self.offset {
            return BigInt::zero();
        }
        let i = (deg - self.offset) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Human-readable form in the variable `t`, lowest degree first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let deg = self.offset + i as i64;
            let mag = c.magnitude().to_string();
            let negative = c.sign() == num_bigint::Sign::Minus;
            if parts.is_empty() {
                if negative {
                    parts.push('-');
                }
            } else {
                parts.push_str(if negative { " - " } else { " + " });
            }
            let coeff = if mag == "1" && deg != 0 { None } else { Some(mag) };
            let power = match deg {
                0 => None,
                1 => Some("t".to_string()),
                d => Some(format!("t^{d}")),
            };
            match (coeff, power) {
                (Some(c), Some(p)) => {
                    parts.push_str(&c);
                    parts.push('*');
                    parts.push_str(&p);
                }
                (Some(c), None) => parts.push_str(&c),
                (None, Some(p)) => parts.push_str(&p),
                (None, None) => unreachable!(),
            }
        }
        parts
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.top().unwrap().max(other.top().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.offset - lo) as usize + i] += c;
        }
        LaurentPoly { offset: lo, coeffs }.normalized()
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            offset: self.offset + other.offset,
            coeffs,
        }
        .normalized()
    }

    pub fn shift(&self, by: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            offset: self.offset + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let deg = self.offset + i as i64;
            if deg.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact division by `1 - t^w`; `None` if the division has a remainder.
    pub fn div_one_minus_tw(&self, w: u32) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let w = w as i64;
        let lo = self.offset;
        let hi = self.top().unwrap();
        if hi - w < lo && !self.is_zero() {
            // quotient would need degrees below lo; only exact if self == 0
            // or handled by the general check below
        }
        let mut q: Vec<BigInt> = Vec::new();
        // q[d] = c[d] + q[d-w], quotient supported on [lo, hi - w]
        for d in lo..=hi {
            let prev = if d - w >= lo && ((d - w - lo) as usize) < q.len() {
                q[(d - w - lo) as usize].clone()
            } else {
                BigInt::zero()
            };
            q.push(self.get(d) + prev);
        }
        let quot = LaurentPoly::from_coeffs(lo, q[..q.len().saturating_sub(w as usize)].to_vec());
        let back = quot.mul(&LaurentPoly::from_coeffs(0, vec![BigInt::one()]).sub(
            &LaurentPoly::monomial(w),
        ));
        if back == *self {
            Some(quot)
        } else {
            None
        }
    }

    /// Exact division by `1 + t`; `None` if the division has a remainder.
    pub fn div_one_plus_t(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let lo = self.offset;
        let hi = self.top().unwrap();
        let mut q: Vec<BigInt> = Vec::new();
        // (1+t)·q = c ⇒ q[d] = c[d] - q[d-1]
        for d in lo..=hi {
            let prev = if d - 1 >= lo && ((d - 1 - lo) as usize) < q.len() {
                q[(d - 1 - lo) as usize].clone()
            } else {
                BigInt::zero()
            };
            q.push(self.get(d) - prev);
        }
        let quot = LaurentPoly::from_coeffs(lo, q[..q.len().saturating_sub(1)].to_vec());
        let back = quot.mul(&LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::one()]));
        if back == *self {
            Some(quot)
        } else {
            None
        }
    }

    /// Multiplicity of the root t = 1, i.e. the largest s with (1-t)^s
    /// dividing self. Undefined (returns 0) for the zero polynomial.
    pub fn order_at_one(&self) -> u32 {
        let mut s = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.div_one_minus_tw(1) {
                Some(next) => {
                    cur = next;
                    s += 1;
                }
                None => break,
            }
        }
        s
    }

    /// Divide out (1-t)^s exactly; panics if not divisible.
    pub fn strip_one_minus_t(&self, s: u32) -> LaurentPoly {
        let mut cur = self.clone();
        for _ in 0..s {
            cur = cur
                .div_one_minus_tw(1)
                .expect("polynomial not divisible by 1 - t");
        }
        cur
    }
}

/// Minimalize a monomial generating set (drop anything divisible by another
/// generator; deduplicate).
pub fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted: Vec<&Monomial> = gens.iter().collect();
    sorted.sort_by_key(|m| m.exps.iter().map(|&e| e as u64).sum::<u64>());
    for m in sorted {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

/// Numerator of the Hilbert series of Q/I for a monomial ideal I, against
/// the denominator Π (1 - t^{w_v}).
pub fn monomial_ideal_numerator(gens: &[Monomial], weights: &[u32]) -> LaurentPoly {
    let gens = minimalize_monomials(gens);
    numerator_rec(&gens, weights)
}

fn numerator_rec(gens: &[Monomial], weights: &[u32]) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return LaurentPoly::zero();
    }
    // Pivot on a generator of maximal degree.
    let (pi, pivot) = gens
        .iter()
        .enumerate()
        .max_by_key(|(_, m)| m.degree(weights))
        .map(|(i, m)| (i, m.clone()))
        .unwrap();
    let rest: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pi)
        .map(|(_, m)| m.clone())
        .collect();
    let n_rest = numerator_rec(&minimalize_monomials(&rest), weights);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            // g : pivot, i.e. g / gcd(g, pivot)
            let exps: Vec<u32> = g
                .exps
                .iter()
                .zip(&pivot.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect();
            Monomial { exps }
        })
        .collect();
    let n_colon = numerator_rec(&minimalize_monomials(&colon), weights);
    n_rest.sub(&n_colon.shift(pivot.degree(weights)))
}

/// The Hilbert series of a graded module, as numerator over
/// `Π_v (1 - t^{w_v})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub num: LaurentPoly,
    pub weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn zero(weights: &[u32]) -> HilbertSeries {
        HilbertSeries {
            num: LaurentPoly::zero(),
            weights: weights.to_vec(),
        }
    }

    /// Series of the free module ⊕_j Q(-a_j).
    pub fn free(twists: &[i64], weights: &[u32]) -> HilbertSeries {
        let mut num = LaurentPoly::zero();
        for &a in twists {
            num = num.add(&LaurentPoly::monomial(a));
        }
        HilbertSeries {
            num,
            weights: weights.to_vec(),
        }
    }

    /// Series of `P/U` where `U` has the given lead terms in the free module
    /// `P = ⊕_j Q(-a_j)`: the initial module decomposes componentwise.
    pub fn quotient_by_leads(
        lead_terms: &[ModTerm],
        twists: &[i64],
        weights: &[u32],
    ) -> HilbertSeries {
        let mut num = LaurentPoly::zero();
        for (j, &a) in twists.iter().enumerate() {
            let mons: Vec<Monomial> = lead_terms
                .iter()
                .filter(|t| t.comp == j)
                .map(|t| t.mon.clone())
                .collect();
            let nj = monomial_ideal_numerator(&mons, weights);
            num = num.add(&nj.shift(a));
        }
        HilbertSeries {
            num,
            weights: weights.to_vec(),
        }
    }

    pub fn is_zero_module(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights);
        HilbertSeries {
            num: self.num.add(&other.num),
            weights: self.weights.clone(),
        }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights);
        HilbertSeries {
            num: self.num.sub(&other.num),
            weights: self.weights.clone(),
        }
    }

    /// Krull dimension via the pole order at t = 1; the zero module gets -1.
    pub fn dim(&self) -> i64 {
        if self.num.is_zero() {
            return -1;
        }
        self.weights.len() as i64 - self.num.order_at_one() as i64
    }

    /// When the module has finite length, the Hilbert function as a Laurent
    /// polynomial (exact division by the denominator); `None` otherwise.
    pub fn finite_polynomial(&self) -> Option<LaurentPoly> {
        let mut cur = self.num.clone();
        for &w in &self.weights {
            cur = cur.div_one_minus_tw(w)?;
        }
        Some(cur)
    }

    /// Total length; `None` when infinite.
    pub fn length(&self) -> Option<BigInt> {
        if self.num.is_zero() {
            return Some(BigInt::zero());
        }
        self.finite_polynomial().map(|p| p.eval_one())
    }

    /// Normalized multiplicity `Ñ(1) / Π w_v` where `num = (1-t)^s · Ñ`.
    pub fn multiplicity(&self) -> BigRational {
        if self.num.is_zero() {
            return BigRational::zero();
        }
        let s = self.num.order_at_one();
        let reduced = self.num.strip_one_minus_t(s);
        let denom: BigInt = self
            .weights
            .iter()
            .map(|&w| BigInt::from(w))
            .product();
        BigRational::new(reduced.eval_one(), denom)
    }

    /// Hilbert function values on the closed range `[lo, hi]`.
    pub fn hilbert_function(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        if self.num.is_zero() || hi < lo {
            return vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        }
        let start = self.num.offset.min(lo);
        let len = (hi - start + 1) as usize;
        let mut vals = vec![BigInt::zero(); len];
        for (i, c) in self.num.coeffs.iter().enumerate() {
            let d = self.num.offset + i as i64;
            if d <= hi {
                vals[(d - start) as usize] += c;
            }
        }
        for &w in &self.weights {
            let w = w as usize;
            for i in w..len {
                let prev = vals[i - w].clone();
                vals[i] += prev;
            }
        }
        vals[(lo - start) as usize..].to_vec()
    }

    /// Value of the Hilbert function at a single degree.
    pub fn hf(&self, d: i64) -> BigInt {
        self.hilbert_function(d, d).pop().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(exps: &[u32]) -> Monomial {
        Monomial {
            exps: exps.to_vec(),
        }
    }

    #[test]
    fn staircase_numerator_two_vars() {
        // I = (x^2, x·y) in k[x,y]: HF of Q/I is 1, 2, 1, 1, 1, ...
        let num = monomial_ideal_numerator(&[mon(&[2, 0]), mon(&[1, 1])], &[1, 1]);
        assert_eq!(
            num,
            LaurentPoly::from_coeffs(
                0,
                vec![BigInt::from(1), BigInt::from(0), BigInt::from(-2), BigInt::from(1)]
            )
        );
        let hs = HilbertSeries {
            num,
            weights: vec![1, 1],
        };
        let hf = hs.hilbert_function(0, 5);
        let expect: Vec<BigInt> = [1, 2, 1, 1, 1, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(hf, expect);
        assert_eq!(hs.dim(), 1);
        assert_eq!(hs.length(), None);
        assert_eq!(hs.multiplicity(), BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn finite_length_quotient() {
        // Q/(x^2, x*y, y^2): HF = 1, 2 → length 3, dim 0, top degree 1.
        let num = monomial_ideal_numerator(
            &[mon(&[2, 0]), mon(&[1, 1]), mon(&[0, 2])],
            &[1, 1],
        );
        let hs = HilbertSeries {
            num,
            weights: vec![1, 1],
        };
        assert_eq!(hs.dim(), 0);
        assert_eq!(hs.length(), Some(BigInt::from(3)));
        let poly = hs.finite_polynomial().unwrap();
        assert_eq!(
            poly,
            LaurentPoly::from_coeffs(0, vec![BigInt::from(1), BigInt::from(2)])
        );
    }

    #[test]
    fn weighted_variable_series() {
        // k[x] with weight 2, module k = Q/(x): HS = 1.
        let num = monomial_ideal_numerator(&[mon(&[1])], &[2]);
        assert_eq!(num, LaurentPoly::from_coeffs(0, vec![BigInt::from(1), BigInt::zero(), BigInt::from(-1)]));
        let hs = HilbertSeries {
            num,
            weights: vec![2],
        };
        assert_eq!(hs.dim(), 0);
        assert_eq!(hs.length(), Some(BigInt::from(1)));
        assert_eq!(hs.multiplicity(), BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn laurent_negative_twists() {
        // Q(+1) ⊕ Q over k[x]: HF(-1) = 1, HF(0) = 2, HF(3) = 2.
        let hs = HilbertSeries::free(&[-1, 0], &[1]);
        assert_eq!(hs.hf(-2), BigInt::zero());
        assert_eq!(hs.hf(-1), BigInt::one());
        assert_eq!(hs.hf(0), BigInt::from(2));
        assert_eq!(hs.hf(3), BigInt::from(2));
        assert_eq!(hs.dim(), 1);
    }

    #[test]
    fn one_plus_t_division() {
        // (1 - t^2) / (1 + t) = 1 - t
        let p = LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::zero(), BigInt::from(-1)]);
        let q = p.div_one_plus_t().unwrap();
        assert_eq!(
            q,
            LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::from(-1)])
        );
        // 1 + t^2 is not divisible
        let r = LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        assert!(r.div_one_plus_t().is_none());
    }
}

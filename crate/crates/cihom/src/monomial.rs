//! Monomials with weighted degrees and the supported term orders.
//!
//! A monomial is an exponent vector over the ring's variables. Degrees are
//! weighted by the (positive integer) variable weights, so inputs like
//! `y - x^2` stay homogeneous when `y` carries weight 2.

use std::cmp::Ordering;

/// Exponent vector; the weighted degree is always recomputed from context
/// weights rather than cached, to keep the struct hashable and order-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, v: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[v] = 1;
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, weights: &[u32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn quot(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Supported orders on ring monomials. Both refine the weighted degree, so
/// homogeneous computations can be truncated by degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default).
    #[default]
    DegRevLex,
    /// Graded lexicographic.
    DegLex,
}

impl MonomialOrder {
    pub fn parse(s: &str) -> Result<MonomialOrder, String> {
        match s {
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            "deglex" => Ok(MonomialOrder::DegLex),
            _ => Err(format!("unknown order `{s}`")),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let da = a.degree(weights);
        let db = b.degree(weights);
        if da != db {
            return da.cmp(&db);
        }
        match self {
            MonomialOrder::DegRevLex => {
                // a > b iff the last nonzero entry of a - b is negative.
                for i in (0..a.exps.len()).rev() {
                    let (ea, eb) = (a.exps[i], b.exps[i]);
                    if ea != eb {
                        return if ea < eb { Ordering::Greater } else { Ordering::Less };
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegLex => {
                for i in 0..a.exps.len() {
                    let (ea, eb) = (a.exps[i], b.exps[i]);
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// How a free module's terms are ordered relative to each other.
///
/// Both variants refine the twisted degree (monomial degree plus the twist of
/// the component), which keeps truncation-by-degree valid for homogeneous
/// module computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Term over position: compare monomials first, break ties toward the
    /// lower component index.
    Top,
    /// Position over term: lower component index wins outright (within a
    /// twisted-degree class).
    Pot,
}

/// A term position inside a free module: component index plus monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub comp: usize,
    pub mon: Monomial,
}

impl ModuleOrder {
    /// Compare module terms. `twists[comp]` is the degree of that component's
    /// generator; comparisons are graded by twisted degree first.
    pub fn cmp(
        &self,
        a: &ModTerm,
        b: &ModTerm,
        weights: &[u32],
        twists: &[i64],
        base: MonomialOrder,
    ) -> Ordering {
        let da = a.mon.degree(weights) + twists[a.comp];
        let db = b.mon.degree(weights) + twists[b.comp];
        if da != db {
            return da.cmp(&db);
        }
        match self {
            ModuleOrder::Top => match base.cmp(&a.mon, &b.mon, weights) {
                Ordering::Equal => b.comp.cmp(&a.comp), // lower index is larger
                ord => ord,
            },
            ModuleOrder::Pot => match b.comp.cmp(&a.comp) {
                Ordering::Equal => base.cmp(&a.mon, &b.mon, weights),
                ord => ord,
            },
        }
    }
}

/// All monomials of exact weighted degree `d` in the given variables,
/// enumerated deterministically (lexicographic in exponent vectors).
pub fn monomials_of_degree(weights: &[u32], d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let mut exps = vec![0u32; weights.len()];
    fill(weights, 0, d, &mut exps, &mut out);
    out
}

fn fill(weights: &[u32], v: usize, rem: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if v == weights.len() {
        if rem == 0 {
            out.push(Monomial { exps: exps.clone() });
        }
        return;
    }
    if v + 1 == weights.len() {
        // last variable must absorb the remainder exactly
        let w = weights[v] as i64;
        if rem % w == 0 {
            exps[v] = (rem / w) as u32;
            out.push(Monomial { exps: exps.clone() });
            exps[v] = 0;
        }
        return;
    }
    let w = weights[v] as i64;
    let max = rem / w;
    for e in 0..=max {
        exps[v] = e as u32;
        fill(weights, v + 1, rem - e * w, exps, out);
    }
    exps[v] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial { exps: e.to_vec() }
    }

    #[test]
    fn degrevlex_classic() {
        // x^2 > xy > y^2 > x > y > 1 in k[x,y]
        let w = [1, 1];
        let o = MonomialOrder::DegRevLex;
        let ms = [m(&[2, 0]), m(&[1, 1]), m(&[0, 2]), m(&[1, 0]), m(&[0, 1]), m(&[0, 0])];
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                assert_eq!(o.cmp(&ms[i], &ms[j], &w), Ordering::Greater);
            }
        }
    }

    #[test]
    fn weighted_degree_ties() {
        // weights x:1 y:2 — x^2 and y share degree 2, x^2 wins in degrevlex
        let w = [1, 2];
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1]), &w), Ordering::Greater);
    }

    #[test]
    fn enumeration_weighted() {
        // degree 3 in weights (1,2): x^3, x*y
        let ms = monomials_of_degree(&[1, 2], 3);
        assert_eq!(ms.len(), 2);
        assert!(ms.contains(&m(&[3, 0])));
        assert!(ms.contains(&m(&[1, 1])));
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).quot(&m(&[1, 0])), m(&[1, 1]));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
    }
}

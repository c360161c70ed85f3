//! Numerical invariants of a pair read off the fitted length series: the
//! eta family, the stable even/odd defect theta over a hypersurface, the
//! Euler characteristic over the ambient polynomial ring, the
//! change-of-variables numerator in the style of Gulliksen, complexity
//! estimates, and the consistency checks (rigidity, dimension vanishing,
//! partial-sum convergence) that guard them.

use crate::pairs::Pairing;
use crate::presentation::Presentation;
use crate::series::SeriesFit;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn factorial(e: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=e {
        f *= BigInt::from(i);
    }
    f
}

/// η_e from the fit: the normalized limit of alternating partial sums
/// Σ (−1)^i ℓ(Tor_i) / n^e. Defined for e at least the pole order c;
/// nonzero only when e equals the alternating pole order d, where it is
/// n₀ / e!.
pub fn eta(fit: &SeriesFit, e: usize) -> Result<BigRational, String> {
    if e < fit.c {
        return Err(format!(
            "eta_{e} is not defined: the length sequence grows like n^{}",
            fit.c.saturating_sub(1)
        ));
    }
    if e == fit.d {
        Ok(fit.n0.clone() / BigRational::from_integer(factorial(e)))
    } else {
        Ok(BigRational::zero())
    }
}

/// Alternating partial sums s_n = (Σ_{i=start}^{n} (−1)^i v_i) / n^e for
/// n in the window (n ≥ 1), used to watch convergence to η_e.
pub fn eta_partial_sums(values: &[BigInt], start: usize, e: usize) -> Vec<BigRational> {
    let mut acc = BigInt::zero();
    let mut out = Vec::new();
    for (off, v) in values.iter().enumerate() {
        let i = start + off;
        if i % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
        if i >= 1 {
            let denom = BigInt::from(i).pow(e as u32);
            out.push(BigRational::new(acc.clone(), denom));
        }
    }
    out
}

/// |s_n − η| must be non-increasing along each parity class on the tail
/// (allowing the first `skip` entries to settle).
pub fn eta_trend_holds(sums: &[BigRational], target: &BigRational, skip: usize) -> bool {
    for parity in 0..2 {
        let dev: Vec<BigRational> = sums
            .iter()
            .enumerate()
            .filter(|(n, _)| n % 2 == parity && *n >= skip)
            .map(|(_, s)| (s - target).abs())
            .collect();
        for w in dev.windows(2) {
            if w[1] > w[0] {
                return false;
            }
        }
    }
    true
}

/// θ over a hypersurface: the stable value of ℓ(Tor_{2i}) − ℓ(Tor_{2i+1})
/// on the tail. Errors when the window shows no stable tail.
pub fn theta(values: &[BigInt], start: usize, fit: &SeriesFit) -> Result<BigInt, String> {
    if fit.r != 1 {
        return Err("theta requires a hypersurface".into());
    }
    let horizon = start + values.len() - 1;
    let mut i0 = fit.onset.max(start as i64);
    if i0 % 2 != 0 {
        i0 += 1;
    }
    let mut val: Option<BigInt> = None;
    let mut seen = false;
    let mut i = i0;
    while i + 1 <= horizon as i64 {
        let even = &values[(i - start as i64) as usize];
        let odd = &values[(i + 1 - start as i64) as usize];
        let t = even - odd;
        match &val {
            None => val = Some(t),
            Some(v) if *v != t => {
                return Err(format!(
                    "even/odd defect not stable: {v} at first, {t} at index {i}"
                ))
            }
            _ => {}
        }
        seen = true;
        i += 2;
    }
    if !seen {
        return Err("window too short beyond the fit onset".into());
    }
    Ok(val.unwrap())
}

/// Euler characteristic over the ambient polynomial ring:
/// Σ (−1)^i ℓ(Tor^Q_i(M,N)). Errors unless every length is finite.
pub fn serre_euler(m: &Presentation, n: &Presentation) -> Result<BigInt, String> {
    let mq = m.as_q_module();
    let nq = n.as_q_module();
    let horizon = m.ring.nvars();
    let pair = Pairing::new(&mq, &nq, horizon);
    let mut chi = BigInt::zero();
    for (i, l) in pair.lengths().into_iter().enumerate() {
        match l {
            Some(v) => {
                if i % 2 == 0 {
                    chi += v;
                } else {
                    chi -= v;
                }
            }
            None => {
                return Err(format!(
                    "Tor^Q_{i} has infinite length; the Euler characteristic needs ℓ(M⊗N) < ∞"
                ))
            }
        }
    }
    Ok(chi)
}

/// The numerator after clearing all r pole pairs:
/// p̃ = p·(1−t)^{r−c}(1+t)^{r−d}, its value at −1, and η_r = p̃(−1)/(2^r r!).
pub struct TopEta {
    pub numerator: crate::hilbert::LaurentPoly,
    pub chi: BigInt,
    pub eta_r: BigRational,
}

pub fn top_eta(fit: &SeriesFit) -> TopEta {
    use crate::hilbert::LaurentPoly;
    let mut num = fit.p.clone();
    let one_minus = LaurentPoly::from_coeffs(0, vec![BigInt::one(), -BigInt::one()]);
    let one_plus = LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::one()]);
    for _ in fit.c..fit.r {
        num = num.mul(&one_minus);
    }
    for _ in fit.d..fit.r {
        num = num.mul(&one_plus);
    }
    let chi = num.eval_minus_one();
    let denom = (BigInt::one() << fit.r) * factorial(fit.r);
    let eta_r = BigRational::new(chi.clone(), denom);
    TopEta {
        numerator: num,
        chi,
        eta_r,
    }
}

/// Growth-class estimate by per-parity finite differences: the least g such
/// that the g-th difference of each parity subsequence vanishes on the
/// stable half of the window. A sequence growing like n^{g−1} returns g.
pub fn growth_estimate(values: &[BigInt]) -> usize {
    let mut best = 0usize;
    for parity in 0..2 {
        let sub: Vec<BigInt> = values
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == parity)
            .map(|(_, v)| v.clone())
            .collect();
        if sub.is_empty() {
            continue;
        }
        let mut cur = sub;
        let mut g = 0usize;
        loop {
            let tail_len = cur.len().div_ceil(2);
            let stable_zero = cur.iter().rev().take(tail_len).all(|v| v.is_zero());
            if stable_zero {
                break;
            }
            if cur.len() < 2 {
                g += 1;
                break;
            }
            cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
            g += 1;
        }
        best = best.max(g);
    }
    best
}

/// Complexity of a module: pole order at t = 1 of the rank sequence of its
/// minimal resolution (0 for finite projective dimension).
pub fn module_complexity(m: &Presentation, horizon: usize) -> Result<usize, String> {
    let res = crate::resolution::resolve(m, horizon + 1);
    let ranks: Vec<BigInt> = (0..=horizon)
        .map(|i| BigInt::from(res.betti(i).unwrap_or(0)))
        .collect();
    let fit = crate::series::fit_series(&ranks, 0, m.ring.codim(), m.ring.nvars())?;
    Ok(fit.c)
}

/// Rigidity audit over a window of finite lengths starting at `start`:
/// a gap of r consecutive vanishing Tor's followed by a later nonzero one
/// contradicts rigidity when η_r = 0, and a gap of r+1 contradicts it
/// unconditionally. Returns critical findings; empty means consistent.
pub fn rigidity_violations(
    values: &[BigInt],
    start: usize,
    r: usize,
    eta_r_is_zero: bool,
) -> Vec<String> {
    let mut out = Vec::new();
    let n = values.len();
    let runs = |len: usize, out: &mut Vec<String>, label: &str| {
        if len == 0 || n < len + 1 {
            return;
        }
        for i in 0..=(n - len) {
            let all_zero = values[i..i + len].iter().all(|v| v.is_zero());
            if !all_zero {
                continue;
            }
            if values[i + len..].iter().any(|v| !v.is_zero()) {
                out.push(format!(
                    "CRITICAL: {label}: Tor_{}..Tor_{} vanish but a later Tor is nonzero",
                    start + i,
                    start + i + len - 1
                ));
                return;
            }
        }
    };
    runs(r + 1, &mut out, "rigidity violated");
    if eta_r_is_zero {
        runs(r, &mut out, "rigidity violated under vanishing top eta");
    }
    out
}

/// Dimension vanishing: when ℓ(M⊗N) < ∞ and dim M + dim N < dim R + e for
/// some e in [max(c,1), r], the invariant η_e must vanish. Returns critical
/// findings; empty means consistent.
pub fn dimension_vanishing_violations(
    m: &Presentation,
    n: &Presentation,
    tensor_length_finite: bool,
    fit: &SeriesFit,
) -> Vec<String> {
    let mut out = Vec::new();
    if !tensor_length_finite {
        return out;
    }
    let dim_r = m.ring.dim() as i64;
    let dm = m.dim();
    let dn = n.dim();
    for e in fit.c.max(1)..=fit.r {
        if dm + dn < dim_r + e as i64 {
            if let Ok(v) = eta(fit, e) {
                if !v.is_zero() {
                    out.push(format!(
                        "CRITICAL: dim M + dim N = {} < {} = dim R + {e}, yet eta_{e} = {v} ≠ 0",
                        dm + dn,
                        dim_r + e as i64
                    ));
                }
            }
        }
    }
    out
}

//! Additive building blocks: 3-AP-free sets, Singer perfect difference sets,
//! Sidon sets in intervals and sets with bounded difference multiplicity.

mod gf;
mod search;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use gf::Field;

pub use search::{max_3ap_free, max_modular_sidon, max_sidon};

/// A finite set of nonnegative integers, either inside an interval or
/// modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSet {
    elements: Vec<u64>,
    modulus: Option<u64>,
    /// Verified bound on the difference multiplicity.
    claimed_g: Option<u64>,
}

impl ResidueSet {
    /// Integers in an interval; duplicates collapse.
    pub fn interval(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        ResidueSet {
            elements,
            modulus: None,
            claimed_g: None,
        }
    }

    /// Residues modulo `m`; elements are reduced.
    pub fn modular(elements: impl IntoIterator<Item = u64>, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let mut set = ResidueSet::interval(elements.into_iter().map(|e| e % m));
        set.modulus = Some(m);
        Ok(set)
    }

    /// Records `g` as the multiplicity bound after checking it.
    pub fn with_claimed_g(mut self, g: u64) -> Result<Self> {
        let actual = difference_multiplicity(&self);
        if actual > g {
            return Err(Error::Unverified(format!(
                "difference multiplicity {actual} exceeds the claimed {g}"
            )));
        }
        self.claimed_g = Some(g);
        Ok(self)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn claimed_g(&self) -> Option<u64> {
        self.claimed_g
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `u * s + t` for every element (modular sets only).
    pub fn affine(&self, unit: u64, shift: u64) -> Result<Self> {
        let m = self
            .modulus
            .ok_or_else(|| Error::InvalidArgument("affine images need a modulus".into()))?;
        ResidueSet::modular(
            self.elements
                .iter()
                .map(|&e| ((unit as u128 * e as u128 + shift as u128) % m as u128) as u64),
            m,
        )
    }

    /// Representatives in `[offset, offset + m)` as an interval set.
    pub fn lift(&self, offset: u64) -> ResidueSet {
        ResidueSet::interval(self.elements.iter().map(|&e| e + offset))
    }
}

/// No `a < b < c` in the set with `a + c = 2b` (as integers).
pub fn is_3ap_free(s: &ResidueSet) -> bool {
    let e = s.elements();
    for (i, &a) in e.iter().enumerate() {
        for &c in &e[i + 1..] {
            if (a + c) % 2 == 0 && s.contains((a + c) / 2) {
                return false;
            }
        }
    }
    true
}

/// Largest number of ordered pairs `(x, y)` with `x - y = d` over all
/// `d != 0`, modulo the set's modulus when present.
pub fn difference_multiplicity(s: &ResidueSet) -> u64 {
    let e = s.elements();
    let mut counts: HashMap<i64, u64> = HashMap::new();
    for &x in e {
        for &y in e {
            if x == y {
                continue;
            }
            let d = match s.modulus() {
                Some(m) => ((x + m - y) % m) as i64,
                None => x as i64 - y as i64,
            };
            *counts.entry(d).or_default() += 1;
        }
    }
    counts.into_values().max().unwrap_or(0)
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = gf::prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

/// The largest prime power `q` with `q^2 + q + 1 <= limit`.
pub fn largest_singer_order(limit: u64) -> Option<u64> {
    let mut q = (limit as f64).sqrt() as u64 + 1;
    while q >= 2 {
        if q * q + q + 1 <= limit && prime_power(q).is_some() {
            return Some(q);
        }
        q -= 1;
    }
    None
}

/// Perfect difference set of size `q + 1` modulo `q^2 + q + 1`.
///
/// With `g` primitive in GF(q^3), the powers `g^i` whose trace to GF(q)
/// vanishes form a 2-dimensional GF(q)-subspace minus zero; their exponents
/// reduced modulo `m = (q^3 - 1)/(q - 1)` are the set.
pub fn singer_difference_set(q: u64) -> Result<ResidueSet> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let m = q * q + q + 1;
    let field = Field::new(p, 3 * e as usize);
    let g = field.primitive_element();
    let trace = |x: &[u64]| {
        let xq = field.pow(x, q);
        let xqq = field.pow(&xq, q);
        field.add(&field.add(x, &xq), &xqq)
    };
    let mut elements = Vec::new();
    let mut power = vec![1u64];
    for i in 0..m {
        if trace(&power).is_empty() {
            elements.push(i);
        }
        power = field.mul(&power, &g);
    }
    let set = ResidueSet::modular(elements, m)?;
    if set.len() as u64 != q + 1 || !is_perfect(&set) {
        return Err(Error::Unverified(format!("Singer set for q = {q} is not perfect")));
    }
    set.with_claimed_g(1)
}

/// Every nonzero residue is a difference of two elements exactly once.
pub fn is_perfect(s: &ResidueSet) -> bool {
    let Some(m) = s.modulus() else { return false };
    let mut seen = vec![0u32; m as usize];
    for &x in s.elements() {
        for &y in s.elements() {
            if x != y {
                seen[((x + m - y) % m) as usize] += 1;
            }
        }
    }
    seen[1..].iter().all(|&c| c == 1)
}

/// Sidon set inside `[1, n]`: a Singer set for the largest admissible `q`
/// shifted into `[1, q^2 + q + 1]`, or an exhaustive optimum when `n < 7`.
pub fn sidon_in_interval(n: u64) -> Result<ResidueSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("interval must be nonempty".into()));
    }
    let set = match largest_singer_order(n) {
        Some(q) => singer_difference_set(q)?.lift(1),
        None => ResidueSet::interval(max_sidon(n).into_iter().map(|e| e + 1)),
    };
    set.with_claimed_g(1)
}

/// Periodic copies of `base` (period `period`, elements below it) shifted
/// into `[1, n]`: `{b + i * period + 1 : b in base, 0 <= i < g}`.
pub fn b2_minus_g_from_base(n: u64, g: u64, base: &[u64], period: u64) -> Result<ResidueSet> {
    if g == 0 || period == 0 {
        return Err(Error::InvalidArgument("g and the period must be positive".into()));
    }
    let elements = (0..g)
        .flat_map(|i| base.iter().map(move |&b| b + i * period + 1))
        .filter(|&x| x <= n);
    let set = ResidueSet::interval(elements);
    let achieved = difference_multiplicity(&set);
    if achieved > 2 * g {
        return Err(Error::Unverified(format!(
            "difference multiplicity {achieved} exceeds 2g = {}",
            2 * g
        )));
    }
    let achieved = achieved.max(1);
    set.with_claimed_g(achieved)
}

/// Set in `[1, n]` where every nonzero difference occurs at most `2g` times,
/// of size about `sqrt(g n / 2)`. The achieved multiplicity is stored as
/// `claimed_g`; `g = 1` gives [`sidon_in_interval`].
///
/// Elements are `b * y + r + 1` for `r < b`, with `y` taken from the
/// Erdos-Turan set `A_u = {2pk + (u k^2 mod p) : 0 <= k < p}` for `u = r + 1`.
/// Each `A_u` is Sidon and two of them share at most two points after any
/// translation (the defining quadratics differ), so a difference is hit once
/// per residue class `r` and at most twice per pair of classes, `2b` in all.
pub fn b2_minus_g_set(n: u64, g: u64) -> Result<ResidueSet> {
    if n == 0 || g == 0 {
        return Err(Error::InvalidArgument("n and g must be positive".into()));
    }
    let sidon = sidon_in_interval(n)?;
    if g == 1 {
        return Ok(sidon);
    }
    let mut best: Option<(u64, u64)> = None;
    for p in (2..).take_while(|&p| 2 * p * p - p <= n).filter(|&p| gf::prime_factors(p) == [p]) {
        let b = g.min((p - 1).max(1)).min(n / (2 * p * p - p));
        if best.map_or(true, |(bp, bb)| b * p > bp * bb) {
            best = Some((p, b));
        }
    }
    let Some((p, b)) = best.filter(|&(p, b)| (p * b) as usize > sidon.len()) else {
        return Ok(sidon);
    };
    let elements = (0..b).flat_map(|r| {
        (0..p).map(move |k| {
            let y = 2 * p * k + (r + 1) * k * k % p;
            b * y + r + 1
        })
    });
    let set = ResidueSet::interval(elements);
    let achieved = difference_multiplicity(&set);
    if achieved > 2 * g || set.elements().last().is_some_and(|&x| x > n) {
        return Err(Error::Unverified(format!(
            "difference multiplicity {achieved} exceeds 2g = {}",
            2 * g
        )));
    }
    set.with_claimed_g(achieved.max(1))
}

/// Exhaustive optimum below this size, Behrend's construction above.
pub const BEHREND_EXHAUSTIVE_BELOW: u64 = 64;

/// Parameters of a digit-sphere construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehrendParams {
    pub base: u64,
    pub dims: u32,
    /// Squared norm of the chosen sphere; `None` when the whole digit cube is
    /// used (digits 0 and 1 only, already 3-AP-free).
    pub sphere: Option<u64>,
}

/// 3-AP-free subset of `[1, n]` together with the parameters used, if any.
pub fn behrend_set_with_params(n: u64) -> Result<(ResidueSet, Option<BehrendParams>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("interval must be nonempty".into()));
    }
    let (elements, params) = if n < BEHREND_EXHAUSTIVE_BELOW {
        (max_3ap_free(n), None)
    } else {
        let (e, p) = behrend_sweep(n);
        (e, Some(p))
    };
    let set = ResidueSet::interval(elements);
    if !is_3ap_free(&set) {
        return Err(Error::Unverified(format!("3-AP in the set built for n = {n}")));
    }
    Ok((set, params))
}

pub fn behrend_set(n: u64) -> Result<ResidueSet> {
    behrend_set_with_params(n).map(|(s, _)| s)
}

/// Numbers `1 + sum d_i base^i` with `k` digits `d_i <= (base - 1) / 2`.
/// Adding two such numbers never carries, so `x + z = 2y` holds digitwise and
/// forces `x = y = z` on a sphere `sum d_i^2 = r`.
fn behrend_sweep(n: u64) -> (Vec<u64>, BehrendParams) {
    let max_dims = 64 - (n - 1).leading_zeros();
    let mut best: (Vec<u64>, BehrendParams) = (
        vec![1],
        BehrendParams {
            base: 2,
            dims: 1,
            sphere: None,
        },
    );
    for dims in 2..=max_dims.max(2) {
        let top = (n as f64).powf(1.0 / dims as f64).ceil() as u64 + 1;
        for base in 3..=top {
            let max_digit = (base - 1) / 2;
            let mut by_norm: HashMap<u64, Vec<u64>> = HashMap::new();
            let mut all = Vec::new();
            digit_vectors(base, dims, max_digit, n - 1, &mut |value, norm| {
                by_norm.entry(norm).or_default().push(value + 1);
                all.push(value + 1);
            });
            let candidate = if max_digit == 1 {
                (all, None)
            } else {
                let (norm, members) = by_norm
                    .into_iter()
                    .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
                    .expect("zero vector is always present");
                (members, Some(norm))
            };
            if candidate.0.len() > best.0.len() {
                best = (
                    candidate.0,
                    BehrendParams {
                        base,
                        dims,
                        sphere: candidate.1,
                    },
                );
            }
        }
    }
    best.0.sort_unstable();
    best
}

/// Visits `(value, squared digit norm)` for every digit vector with value at
/// most `limit`.
fn digit_vectors(base: u64, dims: u32, max_digit: u64, limit: u64, f: &mut dyn FnMut(u64, u64)) {
    fn rec(base: u64, pos: u32, max_digit: u64, limit: u64, value: u64, norm: u64, f: &mut dyn FnMut(u64, u64)) {
        if pos == 0 {
            f(value, norm);
            return;
        }
        let place = base.pow(pos - 1);
        for d in 0..=max_digit {
            let v = value + d * place;
            if v > limit {
                break;
            }
            rec(base, pos - 1, max_digit, limit, v, norm + d * d, f);
        }
    }
    rec(base, dims, max_digit, limit, 0, 0, f);
}

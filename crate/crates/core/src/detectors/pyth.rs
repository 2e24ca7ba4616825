use serde::{Deserialize, Serialize};

use super::gcd;

/// Legs `a, b` and hypotenuse `c` with `a^2 + b^2 = c^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PythPair {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

/// All ordered pairs `(a, b)` with `1 <= a, b < n` and `a^2 + b^2` a perfect
/// square, sorted by `(a, b)`. Generated from primitive triples
/// `(m^2 - k^2, 2mk)` and their multiples.
pub fn pythagorean_pairs(n: u64) -> Vec<PythPair> {
    let mut out = Vec::new();
    let mut m = 2u64;
    // the larger leg is at least 2(sqrt(2) - 1) m^2 > m^2 / 2
    while m * m < 2 * n {
        for k in 1..m {
            if (m - k) % 2 == 0 || gcd(m, k) != 1 {
                continue;
            }
            let (a, b, c) = (m * m - k * k, 2 * m * k, m * m + k * k);
            if a.max(b) >= n {
                continue;
            }
            let mut t = 1;
            while t * a.max(b) < n {
                out.push(PythPair { a: t * a, b: t * b, c: t * c });
                out.push(PythPair { a: t * b, b: t * a, c: t * c });
                t += 1;
            }
        }
        m += 1;
    }
    out.sort_unstable();
    out
}

//! Arithmetic in GF(p^k) represented as polynomials over GF(p) modulo an
//! irreducible polynomial found by exhaustive search.

/// Polynomial over GF(p), coefficients from the constant term up, trimmed.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            let slot = &mut r[shift + i];
            *slot = (*slot + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

fn pow_mod(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut base = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
        exp >>= 1;
    }
    acc
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: monic `f` of degree `k` is irreducible over GF(p) iff
/// `x^(p^k) = x (mod f)` and `gcd(f, x^(p^(k/r)) - x) = 1` for each prime
/// `r | k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    let x: Poly = vec![0, 1];
    let frob = |times: usize| -> Poly {
        let mut acc = rem(&x, f, p);
        for _ in 0..times {
            acc = pow_mod(&acc, p as u128, f, p);
        }
        acc
    };
    if frob(k) != rem(&x, f, p) {
        return false;
    }
    for r in prime_factors(k as u64) {
        let h = sub(&frob(k / r as usize), &x, p);
        if gcd(f, &h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// The finite field GF(p^k).
#[derive(Debug, Clone)]
pub(crate) struct Field {
    p: u64,
    k: usize,
    modulus: Poly,
}

impl Field {
    /// Uses the first monic irreducible polynomial of degree `k` in
    /// lexicographic order of its lower coefficients.
    pub fn new(p: u64, k: usize) -> Self {
        let total = p.pow(k as u32);
        for code in 0..total {
            let mut f: Poly = (0..k).map(|i| code / p.pow(i as u32) % p).collect();
            f.push(1);
            if f[0] != 0 && is_irreducible(&f, p) {
                return Field { p, k, modulus: f };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        mul_mod(a, b, &self.modulus, self.p)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let len = a.len().max(b.len());
        trim(
            (0..len)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn pow(&self, a: &[u64], exp: u64) -> Vec<u64> {
        pow_mod(a, exp as u128, &self.modulus, self.p)
    }

    fn element(&self, code: u64) -> Vec<u64> {
        trim((0..self.k).map(|i| code / self.p.pow(i as u32) % self.p).collect())
    }

    /// First element, in the same enumeration order, whose multiplicative
    /// order is `p^k - 1`.
    pub fn primitive_element(&self) -> Vec<u64> {
        let group = self.order() - 1;
        let factors = prime_factors(group);
        for code in 1..self.order() {
            let g = self.element(code);
            if factors.iter().all(|&r| self.pow(&g, group / r) != vec![1]) {
                return g;
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 over GF(3) is irreducible, over GF(2) it is (x + 1)^2
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^3 + x + 1 over GF(2)
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // x^2 - 3 over GF(17): 3 is a non-residue
        assert!(is_irreducible(&[14, 0, 1], 17));
        assert!(!is_irreducible(&[13, 0, 1], 17));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree k over GF(p)
        let count = |p: u64, k: usize| {
            (0..p.pow(k as u32))
                .filter(|code| {
                    let mut f: Poly = (0..k).map(|i| code / p.pow(i as u32) % p).collect();
                    f.push(1);
                    is_irreducible(&f, p)
                })
                .count()
        };
        assert_eq!(count(2, 3), 2);
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(2, 6), 9);
        assert_eq!(count(3, 3), 8);
        assert_eq!(count(5, 2), 10);
    }

    #[test]
    fn primitive_element_generates_group() {
        for (p, k) in [(2, 3), (2, 6), (3, 3), (5, 3), (7, 1)] {
            let field = Field::new(p, k);
            let g = field.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = vec![1];
            for _ in 0..field.order() - 1 {
                assert!(seen.insert(x.clone()));
                x = field.mul(&x, &g);
            }
            assert_eq!(x, vec![1]);
        }
    }
}

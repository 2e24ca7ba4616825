//! Exhaustive optima for small intervals, used where the algebraic
//! constructions have nothing to offer.

/// A largest 3-AP-free subset of `[1, n]` (`n < 64`), the first one met by a
/// depth-first search that prefers taking smaller elements.
///
/// Optima of shorter intervals bound what the remaining suffix can add, so
/// they are computed for every length up to `n` first.
pub fn max_3ap_free(n: u64) -> Vec<u64> {
    assert!(n < 64, "exhaustive 3-AP-free search is limited to n < 64");
    let n = n as usize;
    let mut best_len = vec![0usize; n + 1];
    let mut best = Vec::new();
    for len in 1..=n {
        let mut search = ApSearch {
            n: len,
            bounds: &best_len,
            chosen: Vec::new(),
            best: Vec::new(),
        };
        search.run(0, 0);
        let found = search.best;
        best_len[len] = found.len();
        best = found;
    }
    best.into_iter().map(|x| x as u64 + 1).collect()
}

struct ApSearch<'a> {
    n: usize,
    /// `bounds[l]` is the optimum for an interval of length `l`.
    bounds: &'a [usize],
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl ApSearch<'_> {
    fn run(&mut self, next: usize, forbidden: u64) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if next >= self.n {
            return;
        }
        // any subset of [next, n) that is 3-AP-free has at most bounds[n - next] elements
        let rest = self.n - next;
        let open = (!forbidden >> next).count_ones() as usize;
        if self.chosen.len() + rest.min(open).min(self.bounds_for(rest)) <= self.best.len() {
            return;
        }
        if forbidden >> next & 1 == 0 {
            let mut more = forbidden;
            for &a in &self.chosen {
                let c = 2 * next - a;
                if c < self.n {
                    more |= 1 << c;
                }
            }
            self.chosen.push(next);
            self.run(next + 1, more);
            self.chosen.pop();
        }
        self.run(next + 1, forbidden);
    }

    fn bounds_for(&self, len: usize) -> usize {
        if len < self.n {
            self.bounds[len]
        } else {
            len
        }
    }
}

/// A largest Sidon subset of `[0, n)`, by depth-first search over
/// increasing elements. Meant for tiny `n`.
pub fn max_sidon(n: u64) -> Vec<u64> {
    fn rec(n: u64, next: u64, chosen: &mut Vec<u64>, diffs: &mut Vec<bool>, best: &mut Vec<u64>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if next >= n || chosen.len() as u64 + (n - next) <= best.len() as u64 {
            return;
        }
        let fresh: Vec<u64> = chosen.iter().map(|&a| next - a).collect();
        let mut ok = true;
        for (i, &d) in fresh.iter().enumerate() {
            if diffs[d as usize] || fresh[..i].contains(&d) {
                ok = false;
                break;
            }
        }
        if ok {
            for &d in &fresh {
                diffs[d as usize] = true;
            }
            chosen.push(next);
            rec(n, next + 1, chosen, diffs, best);
            chosen.pop();
            for &d in &fresh {
                diffs[d as usize] = false;
            }
        }
        rec(n, next + 1, chosen, diffs, best);
    }
    let mut best = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut vec![false; n as usize], &mut best);
    best
}

/// A largest subset of `Z_m` whose nonzero differences are distinct modulo
/// `m`, by exhaustive search. Meant for tiny `m`.
pub fn max_modular_sidon(m: u64) -> Vec<u64> {
    fn rec(m: u64, next: u64, chosen: &mut Vec<u64>, used: &mut Vec<bool>, best: &mut Vec<u64>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if next >= m || chosen.len() as u64 + (m - next) <= best.len() as u64 {
            return;
        }
        let mut fresh = Vec::new();
        let ok = chosen.iter().all(|&a| {
            let (d, e) = ((next - a) % m, (m - (next - a) % m) % m);
            let clash = used[d as usize] || used[e as usize] || d == e || fresh.contains(&d) || fresh.contains(&e);
            fresh.extend([d, e]);
            !clash
        });
        if ok {
            for &d in &fresh {
                used[d as usize] = true;
            }
            chosen.push(next);
            rec(m, next + 1, chosen, used, best);
            chosen.pop();
            for &d in &fresh {
                used[d as usize] = false;
            }
        }
        rec(m, next + 1, chosen, used, best);
    }
    let mut best = Vec::new();
    rec(m, 0, &mut Vec::new(), &mut vec![false; m as usize], &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_r3_values() {
        // r3(n) for n = 1..=24, from a subset enumeration
        let known = [1, 2, 2, 3, 4, 4, 4, 4, 5, 5, 6, 6, 7, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 10];
        for (i, &r) in known.iter().enumerate() {
            assert_eq!(max_3ap_free(i as u64 + 1).len(), r, "n = {}", i + 1);
        }
    }

    #[test]
    fn modular_sidon_optima() {
        let sizes: Vec<usize> = (1..=7).map(|m| max_modular_sidon(m).len()).collect();
        assert_eq!(sizes, [1, 1, 2, 2, 2, 2, 3]);
        for m in 1..=12u64 {
            let s = max_modular_sidon(m);
            let mut diffs: Vec<u64> =
                s.iter().flat_map(|&a| s.iter().filter(move |&&b| b != a).map(move |&b| (a + m - b) % m)).collect();
            let before = diffs.len();
            diffs.sort_unstable();
            diffs.dedup();
            assert_eq!(diffs.len(), before, "m = {m}");
        }
    }

    #[test]
    fn sidon_optima() {
        // largest Sidon subsets of [0, n)
        let known = [1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5];
        for (i, &r) in known.iter().enumerate() {
            assert_eq!(max_sidon(i as u64 + 1).len(), r, "n = {}", i + 1);
        }
    }
}

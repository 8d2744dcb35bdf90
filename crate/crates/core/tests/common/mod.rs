//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use lapspread::enumeration::random_graph;
use lapspread::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

// ---------------------------------------------------------------- graphs

/// Every labelled graph on `n` vertices, indexed by the upper-triangle mask.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |mask| {
        let mut k = 0;
        Graph::from_fn(n, |_, _| {
            let bit = mask >> k & 1 == 1;
            k += 1;
            bit
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest upper-triangle code over all vertex permutations.
pub struct BruteCanon {
    perms: Vec<Vec<usize>>,
}

impl BruteCanon {
    pub fn new(n: usize) -> Self {
        BruteCanon { perms: permutations(n) }
    }

    pub fn code(&self, g: &Graph) -> u64 {
        self.perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for j in 1..p.len() {
                    for i in 0..j {
                        code = code << 1 | g.has_edge(p[i], p[j]) as u64;
                    }
                }
                code
            })
            .min()
            .unwrap_or(0)
    }
}

/// `count` seeded random graphs with orders in `lo..=hi` and densities
/// cycling through 0.2, 0.5, 0.8.
pub fn random_sample(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let ps = [0.2, 0.5, 0.8];
    (0..count)
        .map(|k| {
            let n = lo + k % (hi - lo + 1);
            random_graph(n, ps[k % 3], seed + k as u64).unwrap()
        })
        .collect()
}

/// Connected graphs from `random_sample`, keeping the first `count` hits.
pub fn random_connected(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut s = seed;
    while out.len() < count {
        out.extend(
            random_sample(64, lo, hi, s)
                .into_iter()
                .filter(|g| g.is_connected() && g.order() >= 2),
        );
        s += 64;
    }
    out.truncate(count);
    out
}

// ---------------------------------------------------------------- paths

/// Largest family of internally vertex-disjoint paths `v1 - u - w - v2`, by
/// exhaustive search over all path subsets.
pub fn brute_disjoint_paths(g: &Graph, v1: usize, v2: usize) -> usize {
    let n = g.order();
    let mut paths = Vec::new();
    for u in 0..n {
        for w in 0..n {
            if u != w
                && ![v1, v2].contains(&u)
                && ![v1, v2].contains(&w)
                && g.has_edge(v1, u)
                && g.has_edge(u, w)
                && g.has_edge(w, v2)
            {
                paths.push((u, w));
            }
        }
    }
    fn best(paths: &[(usize, usize)], used: &mut Vec<usize>) -> usize {
        let Some((&(u, w), rest)) = paths.split_first() else {
            return 0;
        };
        let skip = best(rest, used);
        if used.contains(&u) || used.contains(&w) {
            return skip;
        }
        used.extend([u, w]);
        let take = 1 + best(rest, used);
        used.truncate(used.len() - 2);
        skip.max(take)
    }
    best(&paths, &mut Vec::new())
}

// ---------------------------------------------------------------- polynomials

/// Dense polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<BigRational>);

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Poly {
    fn trimmed(mut c: Vec<BigRational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::trimmed(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn monic(&self) -> Poly {
        let lead = self.0.last().unwrap().clone();
        Poly(self.0.iter().map(|c| c / &lead).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.0[dd].clone();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        (Poly::trimmed(q), Poly::trimmed(r))
    }

    fn sub(&self, o: &Poly) -> Poly {
        let len = self.0.len().max(o.0.len());
        Poly::trimmed(
            (0..len)
                .map(|k| {
                    let a = self.0.get(k).cloned().unwrap_or_else(BigRational::zero);
                    let b = o.0.get(k).cloned().unwrap_or_else(BigRational::zero);
                    a - b
                })
                .collect(),
        )
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while b.degree().is_some() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// `det(t I - M)` for an integer matrix by permutation expansion.
pub fn char_poly(m: &[Vec<i64>]) -> Poly {
    let n = m.len();
    let mut total = vec![0i64; n + 1];
    for p in permutations(n) {
        let mut sign = 1;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    sign = -sign;
                }
            }
        }
        // product of linear entries a + b t
        let mut prod = vec![sign];
        for (i, &pi) in p.iter().enumerate() {
            let (a, b) = (-m[i][pi], (i == pi) as i64);
            let mut next = vec![0i64; prod.len() + 1];
            for (k, &c) in prod.iter().enumerate() {
                next[k] += c * a;
                next[k + 1] += c * b;
            }
            prod = next;
        }
        for (k, c) in prod.into_iter().enumerate() {
            total[k] += c;
        }
    }
    Poly::from_ints(&total)
}

/// Square-free decomposition: `(factor, multiplicity)` pairs.
pub fn yun(p: &Poly) -> Vec<(Poly, usize)> {
    let dp = p.derivative();
    let b = p.gcd(&dp);
    let mut c = p.div_rem(&b).0;
    let mut d = dp.div_rem(&b).0.sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        let next_c = c.div_rem(&a).0;
        d = d.div_rem(&a).0.sub(&next_c.derivative());
        if !a.is_constant() {
            out.push((a, i));
        }
        c = next_c;
        i += 1;
    }
    out
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        if r.degree().is_none() {
            return chain;
        }
        chain.push(Poly(r.0.into_iter().map(|c| -c).collect()));
    }
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Real roots of a square-free polynomial in `(lo, hi]`, each to within
/// `2^-50` of the true value.
pub fn real_roots(p: &Poly, lo: i64, hi: i64) -> Vec<f64> {
    let chain = sturm_chain(p);
    let mut out = Vec::new();
    let mut stack = vec![(rat(lo), rat(hi))];
    let eps = BigRational::new(BigInt::one(), BigInt::from(1u64 << 50));
    while let Some((a, b)) = stack.pop() {
        let count = sign_changes(&chain, &a) - sign_changes(&chain, &b);
        if count == 0 {
            continue;
        }
        if count == 1 && &b - &a < eps {
            let mid = (&a + &b) / rat(2);
            out.push(to_f64(&mid));
            continue;
        }
        let mid = (&a + &b) / rat(2);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(f64::total_cmp);
    out
}

fn to_f64(x: &BigRational) -> f64 {
    // enough for values in a small range
    let scaled = (x * rat(1 << 52)).round().to_integer();
    scaled.to_string().parse::<f64>().unwrap() / (1u64 << 52) as f64
}

/// Laplacian eigenvalues with multiplicity from the characteristic
/// polynomial, sorted ascending.
pub fn laplacian_eigenvalues_exact(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i64
                    } else {
                        -(g.has_edge(i, j) as i64)
                    }
                })
                .collect()
        })
        .collect();
    let p = char_poly(&m);
    let mut out = Vec::new();
    for (factor, mult) in yun(&p) {
        for r in real_roots(&factor, -1, n as i64 + 1) {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

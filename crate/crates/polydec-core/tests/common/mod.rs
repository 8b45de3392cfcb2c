//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use polydec_core::ratfun::RationalFunction;
use polydec_core::{Felt, Field, Poly};
use rand::Rng;

/// Every subspace of `Z_p^nu`, each stored as a bitmask over the `p^nu` vectors.
pub struct SubspaceLattice {
    p: usize,
    nu: usize,
    spaces: Vec<u64>,
}

impl SubspaceLattice {
    pub fn new(p: usize, nu: usize) -> SubspaceLattice {
        let size = p.pow(nu as u32);
        assert!(size <= 64, "lattice too large for bitmasks");
        let add = |a: usize, b: usize| {
            let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
            for _ in 0..nu {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            out
        };
        let span_with = |space: u64, v: usize| {
            let mut members: Vec<usize> = (0..size).filter(|&i| space >> i & 1 == 1).collect();
            let mut mask = space;
            let mut k = 0;
            while k < members.len() {
                let mut w = members[k];
                for _ in 1..p {
                    w = add(w, v);
                    if mask >> w & 1 == 0 {
                        mask |= 1 << w;
                        members.push(w);
                    }
                }
                k += 1;
            }
            mask
        };
        let mut seen: HashSet<u64> = HashSet::from([1]);
        let mut queue = vec![1u64];
        while let Some(space) = queue.pop() {
            for v in 0..size {
                let bigger = span_with(space, v);
                if seen.insert(bigger) {
                    queue.push(bigger);
                }
            }
        }
        let mut spaces: Vec<u64> = seen.into_iter().collect();
        spaces.sort_by_key(|s| (s.count_ones(), *s));
        SubspaceLattice { p, nu, spaces }
    }

    fn dim(&self, space: u64) -> usize {
        let mut n = space.count_ones() as usize;
        let mut d = 0;
        while n > 1 {
            n /= self.p;
            d += 1;
        }
        d
    }

    pub fn count_of_dim(&self, sigma: usize) -> u128 {
        self.spaces
            .iter()
            .filter(|&&s| self.dim(s) == sigma)
            .count() as u128
    }

    /// Number of `sigma`-dimensional subspaces containing the first `(sigma-1)`-dimensional one.
    pub fn containing_first(&self, sigma: usize) -> u128 {
        let w = *self
            .spaces
            .iter()
            .find(|&&s| self.dim(s) == sigma - 1)
            .expect("subspace of each dimension");
        self.spaces
            .iter()
            .filter(|&&s| self.dim(s) == sigma && s & w == w)
            .count() as u128
    }

    /// Number of maximal chains `0 = V_0 < V_1 < ... < V_nu`.
    pub fn maximal_flags(&self) -> u128 {
        let mut chains: HashMap<u64, u128> = HashMap::new();
        for &s in &self.spaces {
            let d = self.dim(s);
            let n = if d == 0 {
                1
            } else {
                self.spaces
                    .iter()
                    .filter(|&&w| self.dim(w) + 1 == d && w & s == w)
                    .map(|w| chains[w])
                    .sum()
            };
            chains.insert(s, n);
        }
        let top = *self.spaces.last().unwrap();
        debug_assert_eq!(self.dim(top), self.nu);
        chains[&top]
    }
}

/// Rank over `Z_p` of integer row vectors.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = (1..p).find(|i| rows[rank][c] * i % p == 1).unwrap();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_multiple_of(p) {
                let k = rows[r][c] * inv % p;
                let pivot = rows[rank].clone();
                for (a, b) in rows[r].iter_mut().zip(&pivot) {
                    *a = (*a + (p - k) * b) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `Z_p`-dimension of the span of the roots of a monic irreducible `f` over a prime field.
pub fn root_span_rank(f: &Poly) -> polydec_core::Result<usize> {
    let field = f.field();
    let p = field.p();
    let roots: Vec<Felt> = if f.degree() == Some(1) {
        vec![-f.coeff(0)]
    } else {
        let k = Field::extension(field, f)?;
        let alpha = k.generator().expect("proper extension");
        let d = f.degree().unwrap();
        (0..d)
            .map(|i| alpha.pow((p as u128).pow(i as u32)))
            .collect()
    };
    let rows = roots
        .iter()
        .map(|r| r.coords().iter().map(|&c| c as u64).collect())
        .collect();
    Ok(rank_mod(rows, p))
}

/// Every monic polynomial of degree `d` over a finite field.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order().unwrap();
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(field.element(idx % q));
            idx /= q;
        }
        c.push(field.one());
        Poly::new(field, &c).unwrap()
    })
}

pub fn random_monic<R: Rng>(field: &Field, d: usize, rng: &mut R) -> Poly {
    let mut c: Vec<Felt> = (0..d).map(|_| field.random(rng)).collect();
    c.push(field.one());
    Poly::new(field, &c).unwrap()
}

/// Monic of degree `s` with zero constant term.
pub fn random_normal_inner<R: Rng>(field: &Field, s: usize, rng: &mut R) -> Poly {
    &Poly::x(field) * &random_monic(field, s - 1, rng)
}

/// A normal pair `(g, h)` with `deg(g ∘ h) <= max_total`: monic numerators, positive
/// `Δ` for both, `h(0) = 0`, `deg g_N, deg h_N >= 2`.
pub fn random_normal_rational_pair<R: Rng>(
    field: &Field,
    max_total: usize,
    rng: &mut R,
) -> (RationalFunction, RationalFunction) {
    loop {
        let rn = rng.gen_range(2..=4);
        let rd = rng.gen_range(0..rn);
        let sn = rng.gen_range(2..=3);
        let sd = rng.gen_range(0..sn);
        let nn = rn * sn;
        let nd = rn * sd + rd * sn - rd * sd;
        if nn + nd > max_total {
            continue;
        }
        let gn = random_monic(field, rn, rng);
        let gd = random_monic(field, rd, rng);
        let hn = random_normal_inner(field, sn, rng);
        let hd = random_monic(field, sd, rng);
        if hd.coeff(0).is_zero() || !gn.gcd(&gd).unwrap().is_one() || !hn.gcd(&hd).unwrap().is_one()
        {
            continue;
        }
        return (
            RationalFunction::new(gn, gd).unwrap(),
            RationalFunction::new(hn, hd).unwrap(),
        );
    }
}

/// Whether some bijection pairs every `a[i]` with a related `b[j]`.
pub fn has_matching<T>(a: &[T], b: &[T], related: impl Fn(&T, &T) -> bool) -> bool {
    fn go<T>(a: &[T], b: &[T], used: &mut Vec<bool>, related: &dyn Fn(&T, &T) -> bool) -> bool {
        let Some((first, rest)) = a.split_first() else {
            return true;
        };
        for j in 0..b.len() {
            if !used[j] && related(first, &b[j]) {
                used[j] = true;
                if go(rest, b, used, related) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    a.len() == b.len() && go(a, b, &mut vec![false; b.len()], &related)
}

//! Dense univariate polynomials over a [`Field`]: arithmetic, composition,
//! right division under composition, factorization and Chebyshev polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{raw_trim, Elem, Felt, Field};

/// A polynomial with coefficients stored low to high and no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    c: Vec<Elem>,
}

/// Irreducible factorization: `lc * prod(f_i^{e_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lc: Felt,
    /// Monic irreducible factors with multiplicities, sorted by [`Poly::cmp`].
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let one = Poly::constant(&self.lc);
        self.factors
            .iter()
            .fold(one, |acc, (f, e)| &acc * &f.pow(*e))
    }

    /// Monic divisors of degree `d` using at most `bound(e)` copies of a factor of
    /// multiplicity `e`, in mixed-radix order of their exponent vectors (first factor
    /// least significant).
    pub fn divisors_of_degree(&self, d: usize, bound: impl Fn(usize) -> usize) -> Vec<Poly> {
        let caps: Vec<usize> = self.factors.iter().map(|(_, e)| bound(*e)).collect();
        let mut found = Vec::new();
        let mut k = vec![0; caps.len()];
        self.search(&caps, 0, d, &mut k, &mut found);
        found.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let one = Poly::one(self.lc.field());
        found
            .into_iter()
            .map(|k| {
                self.factors
                    .iter()
                    .zip(&k)
                    .fold(one.clone(), |acc, ((q, _), &ki)| &acc * &q.pow(ki))
            })
            .collect()
    }

    fn search(
        &self,
        caps: &[usize],
        i: usize,
        need: usize,
        k: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            out.push(k.clone());
            return;
        }
        if i == caps.len() {
            return;
        }
        let q = self.factors[i].0.deg();
        for ki in 0..=caps[i] {
            if ki * q > need {
                break;
            }
            k[i] = ki;
            self.search(caps, i + 1, need - ki * q, k, out);
        }
        k[i] = 0;
    }
}

impl Poly {
    pub(crate) fn from_raw(field: Field, mut c: Vec<Elem>) -> Poly {
        raw_trim(&mut c);
        Poly { field, c }
    }

    pub(crate) fn raw(&self) -> &[Elem] {
        &self.c
    }

    /// Builds a polynomial from low-to-high coefficients.
    pub fn new(field: &Field, coeffs: &[Felt]) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_raw(
            field.clone(),
            coeffs.iter().map(|c| c.raw().clone()).collect(),
        ))
    }

    /// Builds a polynomial from low-to-high integer coefficients reduced into `field`.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_raw(
            field.clone(),
            coeffs.iter().map(|&n| field.eint(n)).collect(),
        )
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), vec![field.eone()])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), vec![field.ezero(), field.eone()])
    }

    pub fn constant(c: &Felt) -> Poly {
        Poly::from_raw(c.field().clone(), vec![c.raw().clone()])
    }

    /// `c * x^n`.
    pub fn monomial(c: &Felt, n: usize) -> Poly {
        let f = c.field();
        let mut v = vec![f.ezero(); n + 1];
        v[n] = c.raw().clone();
        Poly::from_raw(f.clone(), v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degree, with `None` for the zero polynomial (ordered below every degree).
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && Field::eis_one(&self.c[0])
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Felt {
        match self.c.get(i) {
            Some(v) => Felt::from_raw(self.field.clone(), v.clone()),
            None => self.field.zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Felt> {
        (0..self.c.len()).map(|i| self.coeff(i)).collect()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Felt {
        match self.c.last() {
            Some(v) => Felt::from_raw(self.field.clone(), v.clone()),
            None => self.field.zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|c| Field::eis_one(c))
    }

    pub fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.einv(l).unwrap();
                self.scale_raw(&inv)
            }
        }
    }

    fn scale_raw(&self, s: &[u32]) -> Poly {
        Poly::from_raw(
            self.field.clone(),
            self.c.iter().map(|a| self.field.emul(a, s)).collect(),
        )
    }

    pub fn scale(&self, s: &Felt) -> Poly {
        self.scale_raw(s.raw())
    }

    /// `x`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|c| !Field::eis_zero(c))
    }

    /// Maps every coefficient into a larger field of the same tower.
    pub fn embed(&self, into: &Field) -> Result<Poly> {
        if !self.field.is_subfield_of(into) {
            return Err(Error::FieldMismatch);
        }
        let d = into.degree();
        let c = self
            .c
            .iter()
            .map(|a| {
                let mut v = into.ezero();
                v[..a.len()].copy_from_slice(a);
                debug_assert!(v.len() == d);
                v
            })
            .collect();
        Ok(Poly::from_raw(into.clone(), c))
    }

    /// Restricts coefficients to a tower level of the field, if they all lie there.
    pub fn restrict(&self, sub: &Field) -> Option<Poly> {
        let mut out = Vec::with_capacity(self.c.len());
        for c in self.coeffs() {
            out.push(c.restrict(sub)?.raw().clone());
        }
        Some(Poly::from_raw(sub.clone(), out))
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let n = self.c.len() + other.c.len() - 1;
        if self.field.is_prime_field() {
            let p = self.field.p();
            let a: Vec<u64> = self.c.iter().map(|v| v[0] as u64).collect();
            let b: Vec<u64> = other.c.iter().map(|v| v[0] as u64).collect();
            let mut acc = vec![0u64; n];
            // Residues are below 2^32, so each product fits; reduce per term.
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    acc[i + j] = (acc[i + j] + x * y % p) % p;
                }
            }
            let c = acc
                .into_iter()
                .map(|v| Elem::from_slice(&[v as u32]))
                .collect();
            return Poly::from_raw(self.field.clone(), c);
        }
        let f = &self.field;
        let mut out = vec![f.ezero(); n];
        for (i, x) in self.c.iter().enumerate() {
            if Field::eis_zero(x) {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                if Field::eis_zero(y) {
                    continue;
                }
                let t = f.emul(x, y);
                f.eadd_assign(&mut out[i + j], &t);
            }
        }
        Poly::from_raw(f.clone(), out)
    }

    /// `f = q*g + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(g)?;
        if g.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(self.divmod_impl(g))
    }

    fn divmod_impl(&self, g: &Poly) -> (Poly, Poly) {
        let f = &self.field;
        let mut r = self.c.clone();
        if r.len() < g.c.len() {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.einv(g.c.last().unwrap()).unwrap();
        let gl = g.c.len();
        let mut q = vec![f.ezero(); r.len() - gl + 1];
        let unit = Field::eis_one(&inv);
        for k in (0..q.len()).rev() {
            let top = &r[k + gl - 1];
            if Field::eis_zero(top) {
                continue;
            }
            let c = if unit { top.clone() } else { f.emul(top, &inv) };
            for (j, y) in g.c.iter().enumerate() {
                if Field::eis_zero(y) {
                    continue;
                }
                let t = f.emul(&c, y);
                f.esub_assign(&mut r[k + j], &t);
            }
            q[k] = c;
        }
        (Poly::from_raw(f.clone(), q), Poly::from_raw(f.clone(), r))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        Ok(self.divmod(g)?.1)
    }

    /// Quotient when `g` divides `self` exactly.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(g).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &Poly) -> bool {
        f.div_exact(self).is_some()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, g: &Poly) -> Result<Poly> {
        self.same_field(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), g.clone());
        while !b.is_zero() {
            let r = a.divmod_impl(&b).1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| f.escale_int(a, i as u64))
            .collect();
        Poly::from_raw(f.clone(), c)
    }

    pub fn eval(&self, x: &Felt) -> Felt {
        let f = &self.field;
        let mut acc = f.ezero();
        for a in self.c.iter().rev() {
            acc = f.emul(&acc, x.raw());
            f.eadd_assign(&mut acc, a);
        }
        Felt::from_raw(f.clone(), acc)
    }

    pub fn pow(&self, mut n: usize) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly) -> Poly {
        (self * other).divmod_impl(m).1
    }

    /// `self^n mod m`.
    pub fn powmod(&self, mut n: u128, m: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).divmod_impl(m).1;
        let mut base = self.divmod_impl(m).1;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mulmod(&base, m);
            }
            n >>= 1;
            if n > 0 {
                base = base.mulmod(&base, m);
            }
        }
        result
    }

    /// `self^q mod m` where `q` is the field order, as repeated `p`-th powers.
    fn frobenius_mod(&self, m: &Poly) -> Poly {
        let p = self.field.p() as u128;
        let mut h = self.clone();
        for _ in 0..self.field.degree() {
            h = h.powmod(p, m);
        }
        h
    }

    /// `g(h)`, i.e. `self ∘ h`, by Horner's rule.
    pub fn compose(&self, h: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.field);
        for a in self.c.iter().rev() {
            acc = &acc * h;
            acc = &acc + &Poly::from_raw(self.field.clone(), vec![a.clone()]);
        }
        acc
    }

    /// Finds `g` with `self = g ∘ h` if one exists.
    ///
    /// Expands `self` in powers of `h` by divide and conquer; `g` exists exactly when
    /// every digit of the expansion is constant.
    pub fn right_divide(&self, h: &Poly) -> Result<Option<Poly>> {
        self.same_field(h)?;
        let s = match h.degree() {
            Some(s) if s >= 1 => s,
            _ => {
                return Err(Error::DegreeError(
                    "right factor must be nonconstant".into(),
                ))
            }
        };
        let Some(n) = self.degree() else {
            return Ok(Some(self.clone()));
        };
        if n % s != 0 {
            return Err(Error::DegreeMismatch { outer: n, inner: s });
        }
        let r = n / s;
        let mut powers = vec![h.clone()];
        while (1usize << powers.len()) <= r {
            let last = powers.last().unwrap();
            powers.push(last * last);
        }
        let mut digits = Vec::with_capacity(r + 1);
        if !taylor_digits(self, r, &powers, &mut digits) {
            return Ok(None);
        }
        Ok(Some(Poly::from_raw(self.field.clone(), digits)))
    }

    /// The `p`-th root of a polynomial whose exponents are all multiples of `p`.
    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let c = self.c.iter().step_by(p).map(|a| f.eroot(a)).collect();
        Poly::from_raw(f.clone(), c)
    }

    /// Squarefree decomposition of a monic polynomial: pairwise coprime parts with multiplicities.
    pub fn squarefree(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let p = f.field.p() as usize;
        let d = f.derivative();
        if d.is_zero() {
            for (g, m) in f.pth_root().squarefree() {
                out.push((g, m * p));
            }
            return out;
        }
        let mut c = f.gcd(&d).unwrap();
        let mut w = f.divmod_impl(&c).0;
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c).unwrap();
            let z = w.divmod_impl(&y).0;
            if !z.is_constant() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.divmod_impl(&w).0;
        }
        if !c.is_constant() {
            for (g, m) in c.pth_root().squarefree() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Products of the irreducible factors of each degree of a monic squarefree polynomial.
    fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let x = Poly::x(&self.field);
        let mut f = self.clone();
        let mut h = x.divmod_impl(&f).1;
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.frobenius_mod(&f);
            let g = f.gcd(&(&h - &x)).unwrap();
            if !g.is_one() {
                f = f.divmod_impl(&g).0;
                h = h.divmod_impl(&f).1;
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d` using absolute traces.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let n = self.deg();
        if n == d {
            return vec![self.clone()];
        }
        let f = &self.field;
        let p = f.p() as u128;
        let k = f.degree() * d;
        loop {
            let a = Poly::from_raw(f.clone(), (0..n).map(|_| f.erandom(rng)).collect());
            if a.is_constant() {
                continue;
            }
            let mut acc = a.clone();
            let mut tr = a;
            for _ in 1..k {
                acc = acc.powmod(p, self);
                tr = &tr + &acc;
            }
            let probe = if p == 2 {
                tr
            } else {
                &tr.powmod((p - 1) / 2, self) - &Poly::one(f)
            };
            if probe.is_zero() {
                continue;
            }
            let g = self.gcd(&probe).unwrap();
            let gd = g.deg();
            if gd > 0 && gd < n {
                let h = self.divmod_impl(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles; `seed` drives the splitting randomness
    /// while the output order is deterministic.
    pub fn factor(&self, seed: u64) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let lc = self.lc();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        for (part, m) in self.monic().squarefree() {
            for (g, d) in part.distinct_degree() {
                for irr in g.equal_degree(d, &mut rng) {
                    factors.push((irr, m));
                }
            }
        }
        factors.sort();
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (f, m) in factors {
            match merged.last_mut() {
                Some((g, e)) if *g == f => *e += m,
                _ => merged.push((f, m)),
            }
        }
        Ok(Factorization {
            lc,
            factors: merged,
        })
    }

    /// Rabin's test: `x^(q^n) = x mod f` and `gcd(f, x^(q^(n/r)) - x) = 1` for primes `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = Poly::x(&self.field);
        let mut pows = Vec::with_capacity(n + 1);
        let mut h = x.divmod_impl(&f).1;
        pows.push(h.clone());
        for _ in 0..n {
            h = h.frobenius_mod(&f);
            pows.push(h.clone());
        }
        if pows[n] != x {
            return false;
        }
        prime_divisors(n)
            .into_iter()
            .all(|r| f.gcd(&(&pows[n / r] - &x)).unwrap().is_one())
    }

    /// The `i`-th Chebyshev polynomial: `T_0 = 1`, `T_1 = x`, `T_i = 2x T_{i-1} - T_{i-2}`.
    pub fn chebyshev(i: usize, field: &Field) -> Poly {
        let two_x = Poly::x(field).scale(&field.from_int(2));
        let (mut prev, mut cur) = (Poly::one(field), Poly::x(field));
        if i == 0 {
            return prev;
        }
        for _ in 1..i {
            let next = &(&two_x * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        crate::parse::parse_poly(field, s, "x")
    }

    /// Prints with the indeterminate called `var`, highest degree first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if Field::eis_zero(a) {
                continue;
            }
            let cs = self.field.efmt(a);
            let compound = cs.contains('+');
            if i == 0 {
                let many = self.c.len() > 1;
                terms.push(if compound && many {
                    format!("({cs})")
                } else {
                    cs
                });
                continue;
            }
            let mon = if i == 1 {
                var.to_string()
            } else {
                format!("{var}^{i}")
            };
            if Field::eis_one(a) {
                terms.push(mon);
            } else if compound {
                terms.push(format!("({cs})*{mon}"));
            } else {
                terms.push(format!("{cs}*{mon}"));
            }
        }
        terms.join("+")
    }
}

fn taylor_digits(f: &Poly, r: usize, powers: &[Poly], out: &mut Vec<Elem>) -> bool {
    if r == 0 {
        if f.c.len() > 1 {
            return false;
        }
        out.push(f.c.first().cloned().unwrap_or_else(|| f.field.ezero()));
        return true;
    }
    // Split at t = 2^k, the largest power of two not exceeding r.
    let k = usize::BITS as usize - 1 - r.leading_zeros() as usize;
    let t = 1usize << k;
    let (q, rem) = f.divmod_impl(&powers[k]);
    if rem.degree().is_some_and(|d| d >= t * powers[0].deg()) {
        return false;
    }
    taylor_digits(&rem, t - 1, powers, out) && taylor_digits(&q, r - t, powers, out)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

/// First monic irreducible of degree `e` over `field`, counting lower coefficients
/// as base-`q` digits with the constant term least significant.
pub(crate) fn first_irreducible(field: &Field, e: usize) -> Poly {
    let q = field.order().expect("small base field");
    let mut idx: u128 = 1;
    loop {
        let mut c = Vec::with_capacity(e + 1);
        let mut k = idx;
        for _ in 0..e {
            c.push(field.element(k % q).raw().clone());
            k /= q;
        }
        c.push(field.eone());
        let m = Poly::from_raw(field.clone(), c);
        if m.is_irreducible() {
            return m;
        }
        idx += 1;
    }
}

/// A uniformly random monic irreducible of degree `e`, reproducible from `seed`.
pub fn random_irreducible(field: &Field, e: usize, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut c: Vec<Elem> = (0..e).map(|_| field.erandom(&mut rng)).collect();
        c.push(field.eone());
        let m = Poly::from_raw(field.clone(), c);
        if m.is_irreducible() {
            return m;
        }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.field == other.field
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then lexicographically on coefficients from the constant term up.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.len().cmp(&other.c.len()).then_with(|| {
            for (a, b) in self.c.iter().zip(&other.c) {
                match Field::ecmp(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "field mismatch");
        let (long, short) = if self.c.len() >= rhs.c.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.c.clone();
        for (a, b) in c.iter_mut().zip(&short.c) {
            self.field.eadd_assign(a, b);
        }
        Poly::from_raw(self.field.clone(), c)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_raw(
            self.field.clone(),
            self.c.iter().map(|a| self.field.eneg(a)).collect(),
        )
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "field mismatch");
        self.mul_impl(rhs)
    }
}

macro_rules! poly_owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

poly_owned_ops!(Add, add);
poly_owned_ops!(Sub, sub);
poly_owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

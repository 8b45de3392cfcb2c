//! Prime fields `Z_p` and towers of algebraic extensions over them.
//!
//! An element of a tower level of absolute degree `e` over `Z_p` is stored as
//! `e` residues. Level `k` splits that vector into `step` chunks, each chunk
//! being an element of level `k - 1`; chunk `i` is the coefficient of `g_k^i`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::upoly::Poly;

/// Raw coordinates of a field element over the prime field.
pub type Elem = SmallVec<[u32; 4]>;

/// A finite field: either `Z_p` or an extension of another `Field`.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    base: Option<Field>,
    /// Monic modulus over `base`, low to high, `step + 1` entries.
    modulus: Vec<Elem>,
    step: usize,
    degree: usize,
    level: usize,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `Z_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::CharacteristicTooLarge(p));
        }
        Ok(Field(Arc::new(Inner {
            p: p as u32,
            base: None,
            modulus: Vec::new(),
            step: 1,
            degree: 1,
            level: 0,
        })))
    }

    /// Adjoins a root of `modulus`, which must be monic and irreducible over `base`.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        let deg = modulus.degree().unwrap_or(0);
        if deg < 2 {
            return Err(Error::ModulusDegree);
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if !modulus.is_irreducible() {
            return Err(Error::Reducible);
        }
        Ok(Self::extension_unchecked(base, modulus))
    }

    pub(crate) fn extension_unchecked(base: &Field, modulus: &Poly) -> Field {
        let step = modulus.degree().expect("nonzero modulus");
        Field(Arc::new(Inner {
            p: base.0.p,
            base: Some(base.clone()),
            modulus: modulus.raw().to_vec(),
            step,
            degree: base.degree() * step,
            level: base.level() + 1,
        }))
    }

    /// `GF(p^e)` built over `Z_p` from the first monic irreducible of degree `e`
    /// in lexicographic order of its lower coefficients (constant term least significant).
    pub fn gf(p: u64, e: usize) -> Result<Field> {
        let base = Field::prime(p)?;
        if e == 1 {
            return Ok(base);
        }
        if e == 0 {
            return Err(Error::DegreeError(
                "extension degree must be positive".into(),
            ));
        }
        let m = crate::upoly::first_irreducible(&base, e);
        Field::extension(&base, &m)
    }

    pub fn p(&self) -> u64 {
        self.0.p as u64
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Degree over the immediate base field.
    pub fn step(&self) -> usize {
        self.0.step
    }

    /// Number of extension steps above the prime field.
    pub fn level(&self) -> usize {
        self.0.level
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// The defining polynomial over the base field.
    pub fn modulus(&self) -> Option<Poly> {
        self.base()
            .map(|b| Poly::from_raw(b.clone(), self.0.modulus.clone()))
    }

    /// `p^degree`, if it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p() as u128).checked_pow(self.degree() as u32)
    }

    pub fn prime_field(&self) -> Field {
        let mut f = self.clone();
        while let Some(b) = f.base().cloned() {
            f = b;
        }
        f
    }

    /// All levels of the tower from the prime field up to `self`.
    pub fn tower(&self) -> Vec<Field> {
        let mut out = vec![self.clone()];
        while let Some(b) = out.last().unwrap().base().cloned() {
            out.push(b);
        }
        out.reverse();
        out
    }

    /// True when `self` is one of the levels in `other`'s tower.
    pub fn is_subfield_of(&self, other: &Field) -> bool {
        other.tower().get(self.level()).is_some_and(|f| f == self)
    }

    /// The residue of the indeterminate at this level, `None` for prime fields.
    pub fn generator(&self) -> Option<Felt> {
        if self.is_prime_field() {
            return None;
        }
        let bd = self.base().unwrap().degree();
        let mut v = self.ezero();
        if self.step() > 1 {
            v[bd] = 1;
        }
        Some(Felt::from_raw(self.clone(), v))
    }

    pub fn zero(&self) -> Felt {
        Felt::from_raw(self.clone(), self.ezero())
    }

    pub fn one(&self) -> Felt {
        Felt::from_raw(self.clone(), self.eone())
    }

    pub fn from_int(&self, n: i64) -> Felt {
        Felt::from_raw(self.clone(), self.eint(n))
    }

    /// Element with the given coordinates over `Z_p`, reduced mod p.
    pub fn from_coords(&self, coords: &[u64]) -> Result<Felt> {
        if coords.len() != self.degree() {
            return Err(Error::DegreeError(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        let p = self.p();
        Ok(Felt::from_raw(
            self.clone(),
            coords.iter().map(|&c| (c % p) as u32).collect(),
        ))
    }

    /// Element whose coordinates are the base-p digits of `index`.
    pub fn element(&self, mut index: u128) -> Felt {
        let p = self.p() as u128;
        let mut v = self.ezero();
        for c in v.iter_mut() {
            *c = (index % p) as u32;
            index /= p;
        }
        Felt::from_raw(self.clone(), v)
    }

    /// Every element in index order; panics if the order does not fit in a `u128`.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        let q = self.order().expect("field too large to enumerate");
        (0..q).map(move |i| self.element(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Felt {
        Felt::from_raw(self.clone(), self.erandom(rng))
    }

    /// Maps an element of a tower level of `self` into `self`.
    pub fn embed(&self, a: &Felt) -> Result<Felt> {
        if !a.field.is_subfield_of(self) {
            return Err(Error::FieldMismatch);
        }
        let mut v = self.ezero();
        v[..a.v.len()].copy_from_slice(&a.v);
        Ok(Felt::from_raw(self.clone(), v))
    }

    /// Name of the generator adjoined at `level` (1-based).
    pub fn generator_name(level: usize) -> String {
        format!("g{level}")
    }

    // ---- raw arithmetic on coordinate vectors ----

    pub(crate) fn ezero(&self) -> Elem {
        smallvec![0; self.degree()]
    }

    pub(crate) fn eone(&self) -> Elem {
        let mut v = self.ezero();
        v[0] = 1;
        v
    }

    pub(crate) fn eint(&self, n: i64) -> Elem {
        let mut v = self.ezero();
        v[0] = n.rem_euclid(self.p() as i64) as u32;
        v
    }

    pub(crate) fn erandom<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let p = self.0.p;
        (0..self.degree()).map(|_| rng.gen_range(0..p)).collect()
    }

    #[inline]
    pub(crate) fn eis_zero(a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    #[inline]
    pub(crate) fn eis_one(a: &[u32]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    #[inline]
    pub(crate) fn eadd(&self, a: &[u32], b: &[u32]) -> Elem {
        let p = self.0.p as u64;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u32)
            .collect()
    }

    #[inline]
    pub(crate) fn eadd_assign(&self, a: &mut [u32], b: &[u32]) {
        let p = self.0.p as u64;
        for (x, &y) in a.iter_mut().zip(b) {
            *x = ((*x as u64 + y as u64) % p) as u32;
        }
    }

    #[inline]
    pub(crate) fn esub(&self, a: &[u32], b: &[u32]) -> Elem {
        let p = self.0.p as u64;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((x as u64 + p - y as u64) % p) as u32)
            .collect()
    }

    #[inline]
    pub(crate) fn esub_assign(&self, a: &mut [u32], b: &[u32]) {
        let p = self.0.p as u64;
        for (x, &y) in a.iter_mut().zip(b) {
            *x = ((*x as u64 + p - y as u64) % p) as u32;
        }
    }

    #[inline]
    pub(crate) fn eneg(&self, a: &[u32]) -> Elem {
        let p = self.0.p;
        a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect()
    }

    pub(crate) fn emul(&self, a: &[u32], b: &[u32]) -> Elem {
        let inner = &*self.0;
        let Some(base) = &inner.base else {
            let p = inner.p as u64;
            return smallvec![((a[0] as u64 * b[0] as u64) % p) as u32];
        };
        let bd = base.degree();
        let s = inner.step;
        let mut prod: Vec<Elem> = vec![base.ezero(); 2 * s - 1];
        for i in 0..s {
            let ai = &a[i * bd..(i + 1) * bd];
            if Field::eis_zero(ai) {
                continue;
            }
            for j in 0..s {
                let bj = &b[j * bd..(j + 1) * bd];
                if Field::eis_zero(bj) {
                    continue;
                }
                let t = base.emul(ai, bj);
                base.eadd_assign(&mut prod[i + j], &t);
            }
        }
        for k in (s..2 * s - 1).rev() {
            if Field::eis_zero(&prod[k]) {
                continue;
            }
            let c = std::mem::replace(&mut prod[k], base.ezero());
            for j in 0..s {
                let t = base.emul(&c, &inner.modulus[j]);
                base.esub_assign(&mut prod[k - s + j], &t);
            }
        }
        let mut out = Elem::with_capacity(inner.degree);
        for chunk in &prod[..s] {
            out.extend_from_slice(chunk);
        }
        out
    }

    pub(crate) fn escale_int(&self, a: &[u32], n: u64) -> Elem {
        let p = self.0.p as u64;
        let n = n % p;
        a.iter().map(|&x| ((x as u64 * n) % p) as u32).collect()
    }

    pub(crate) fn epow(&self, a: &[u32], mut n: u128) -> Elem {
        let mut result = self.eone();
        let mut base: Elem = a.into();
        while n > 0 {
            if n & 1 == 1 {
                result = self.emul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.emul(&base, &base);
            }
        }
        result
    }

    pub(crate) fn einv(&self, a: &[u32]) -> Option<Elem> {
        if Field::eis_zero(a) {
            return None;
        }
        let inner = &*self.0;
        let Some(base) = &inner.base else {
            let p = inner.p as u64;
            return Some(smallvec![mod_inverse(a[0] as u64, p) as u32]);
        };
        // Extended Euclid in base[z] between a(z) and the modulus.
        let bd = base.degree();
        let mut r0: Vec<Elem> = inner.modulus.clone();
        let mut r1: Vec<Elem> = a.chunks(bd).map(Elem::from).collect();
        raw_trim(&mut r1);
        let mut s0: Vec<Elem> = Vec::new();
        let mut s1: Vec<Elem> = vec![base.eone()];
        while !r1.is_empty() {
            let (q, r) = raw_divrem(base, &r0, &r1);
            let qs = raw_mul(base, &q, &s1);
            let ns = raw_sub(base, &s0, &qs);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, ns);
        }
        debug_assert_eq!(r0.len(), 1);
        let c = base.einv(&r0[0])?;
        let mut out = self.ezero();
        for (i, coef) in s0.iter().enumerate() {
            let t = base.emul(coef, &c);
            out[i * bd..(i + 1) * bd].copy_from_slice(&t);
        }
        Some(out)
    }

    /// `a^(p^times)`.
    pub(crate) fn efrob(&self, a: &[u32], times: usize) -> Elem {
        let times = times % self.degree();
        let mut v: Elem = a.into();
        if self.is_prime_field() {
            return v;
        }
        for _ in 0..times {
            v = self.epow(&v, self.p() as u128);
        }
        v
    }

    /// The unique `b` with `b^p = a`.
    pub(crate) fn eroot(&self, a: &[u32]) -> Elem {
        self.efrob(a, self.degree() - 1)
    }

    /// Total order on elements: compare as base-p integers, coordinate 0 least significant.
    pub(crate) fn ecmp(a: &[u32], b: &[u32]) -> Ordering {
        a.iter().rev().cmp(b.iter().rev())
    }

    /// Coordinates beyond the first `sub_degree` vanish, i.e. the element lies in that tower level.
    pub(crate) fn ein_level(a: &[u32], sub_degree: usize) -> bool {
        Field::eis_zero(&a[sub_degree..])
    }

    pub(crate) fn efmt(&self, a: &[u32]) -> String {
        let inner = &*self.0;
        let Some(base) = &inner.base else {
            return a[0].to_string();
        };
        let bd = base.degree();
        let name = Field::generator_name(inner.level);
        let mut terms = Vec::new();
        for i in 0..inner.step {
            let c = &a[i * bd..(i + 1) * bd];
            if Field::eis_zero(c) {
                continue;
            }
            let cs = base.efmt(c);
            if i == 0 {
                terms.push(cs);
                continue;
            }
            let mon = if i == 1 {
                name.clone()
            } else {
                format!("{name}^{i}")
            };
            if Field::eis_one(c) {
                terms.push(mon);
            } else if cs.contains('+') {
                terms.push(format!("({cs})*{mon}"));
            } else {
                terms.push(format!("{cs}*{mon}"));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses `GF(p)`, `GF(p^e)` or an explicit tower `GF(p)[g1]/(m1)[g2]/(m2)...`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s
            .strip_prefix("GF(")
            .ok_or_else(|| Error::Parse(format!("field spec must start with GF(: {spec}")))?;
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unterminated GF(".into()))?;
        let head = &rest[..close];
        let mut tail = &rest[close + 1..];
        let num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        let mut field = match head.split_once('^') {
            Some((p, e)) => Field::gf(num(p)?, num(e)? as usize)?,
            None => Field::prime(num(head)?)?,
        };
        while !tail.is_empty() {
            let expect = format!("[{}]/(", Field::generator_name(field.level() + 1));
            tail = tail.strip_prefix(expect.as_str()).ok_or_else(|| {
                Error::Parse(format!("expected {expect} in field spec, found {tail:?}"))
            })?;
            let mut depth = 1usize;
            let mut end = None;
            for (i, ch) in tail.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
            let var = Field::generator_name(field.level() + 1);
            let m = crate::parse::parse_poly(&field, &tail[..end], &var)?;
            field = Field::extension(&field, &m)?;
            tail = &tail[end + 1..];
        }
        Ok(field)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.0.p == other.0.p
            && self.0.level == other.0.level
            && self.0.modulus == other.0.modulus
            && self.0.base == other.0.base
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.degree.hash(state);
        self.0.level.hash(state);
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base() {
            None => write!(f, "GF({})", self.p()),
            Some(b) => {
                let name = Field::generator_name(self.level());
                let m = self.modulus().unwrap();
                write!(f, "{b}[{name}]/({})", m.to_string_var(&name))
            }
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut nt) = (0i128, 1i128);
    let (mut r, mut nr) = (p as i128, a as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(p as i128) as u64
}

// ---- dense polynomials over a base field, used for extension inverses ----

pub(crate) fn raw_trim(a: &mut Vec<Elem>) {
    while a.last().is_some_and(|c| Field::eis_zero(c)) {
        a.pop();
    }
}

fn raw_sub(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let z = f.ezero();
    let mut out: Vec<Elem> = (0..n)
        .map(|i| f.esub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    raw_trim(&mut out);
    out
}

fn raw_mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.ezero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = f.emul(x, y);
            f.eadd_assign(&mut out[i + j], &t);
        }
    }
    raw_trim(&mut out);
    out
}

fn raw_divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = f
        .einv(b.last().unwrap())
        .expect("nonzero leading coefficient");
    let mut q = vec![f.ezero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = f.emul(&r[k + b.len() - 1], &inv);
        if Field::eis_zero(&c) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.emul(&c, y);
            f.esub_assign(&mut r[k + j], &t);
        }
        q[k] = c;
    }
    raw_trim(&mut r);
    raw_trim(&mut q);
    (q, r)
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct Felt {
    field: Field,
    v: Elem,
}

impl Felt {
    pub(crate) fn from_raw(field: Field, v: Elem) -> Felt {
        debug_assert_eq!(v.len(), field.degree());
        Felt { field, v }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub(crate) fn raw(&self) -> &Elem {
        &self.v
    }

    /// Coordinates over `Z_p`.
    pub fn coords(&self) -> &[u32] {
        &self.v
    }

    /// Inverse of [`Field::element`].
    pub fn index(&self) -> u128 {
        let p = self.field.p() as u128;
        self.v
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * p + c as u128)
    }

    pub fn is_zero(&self) -> bool {
        Field::eis_zero(&self.v)
    }

    pub fn is_one(&self) -> bool {
        Field::eis_one(&self.v)
    }

    pub fn inv(&self) -> Option<Felt> {
        self.field
            .einv(&self.v)
            .map(|v| Felt::from_raw(self.field.clone(), v))
    }

    pub fn pow(&self, n: u128) -> Felt {
        Felt::from_raw(self.field.clone(), self.field.epow(&self.v, n))
    }

    /// `a^(p^times)`.
    pub fn frobenius(&self, times: usize) -> Felt {
        Felt::from_raw(self.field.clone(), self.field.efrob(&self.v, times))
    }

    /// The unique `p`-th root.
    pub fn pth_root(&self) -> Felt {
        Felt::from_raw(self.field.clone(), self.field.eroot(&self.v))
    }

    /// True when the element lies in the tower level `sub`.
    pub fn lies_in(&self, sub: &Field) -> bool {
        sub.is_subfield_of(&self.field) && Field::ein_level(&self.v, sub.degree())
    }

    /// Restricts the element to the tower level `sub`, if it lies there.
    pub fn restrict(&self, sub: &Field) -> Option<Felt> {
        self.lies_in(sub)
            .then(|| Felt::from_raw(sub.clone(), self.v[..sub.degree()].into()))
    }

    fn check(&self, other: &Felt) {
        assert!(self.field == other.field, "field mismatch");
    }
}

impl PartialEq for Felt {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.field == other.field
    }
}

impl Eq for Felt {}

impl Hash for Felt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl PartialOrd for Felt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Felt {
    fn cmp(&self, other: &Self) -> Ordering {
        Field::ecmp(&self.v, &other.v)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.efmt(&self.v))
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! felt_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Felt> for &Felt {
            type Output = Felt;
            fn $m(self, rhs: &Felt) -> Felt {
                self.check(rhs);
                let f: fn(&Field, &[u32], &[u32]) -> Elem = $body;
                Felt::from_raw(self.field.clone(), f(&self.field, &self.v, &rhs.v))
            }
        }
        impl $tr<Felt> for Felt {
            type Output = Felt;
            fn $m(self, rhs: Felt) -> Felt {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Felt> for Felt {
            type Output = Felt;
            fn $m(self, rhs: &Felt) -> Felt {
                (&self).$m(rhs)
            }
        }
    };
}

felt_binop!(Add, add, |f, a, b| f.eadd(a, b));
felt_binop!(Sub, sub, |f, a, b| f.esub(a, b));
felt_binop!(Mul, mul, |f, a, b| f.emul(a, b));

impl Div<&Felt> for &Felt {
    type Output = Felt;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Felt) -> Felt {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Div<Felt> for Felt {
    type Output = Felt;
    fn div(self, rhs: Felt) -> Felt {
        &self / &rhs
    }
}

impl Neg for &Felt {
    type Output = Felt;
    fn neg(self) -> Felt {
        Felt::from_raw(self.field.clone(), self.field.eneg(&self.v))
    }
}

impl Neg for Felt {
    type Output = Felt;
    fn neg(self) -> Felt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        let f2 = Field::prime(2).unwrap();
        Field::extension(&f2, &Poly::from_ints(&f2, &[1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_field_basics() {
        let f5 = Field::prime(5).unwrap();
        let three = f5.from_int(3);
        assert!((&three * &three.inv().unwrap()).is_one());
        let f2 = Field::prime(2).unwrap();
        assert!((f2.one() + f2.one()).is_zero());
        assert_eq!(Field::prime(6).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn gf4_generator() {
        let k = gf4();
        let w = k.generator().unwrap();
        assert_eq!(&w * &w, &w + &k.one());
        assert_eq!(w.frobenius(1), &w + &k.one());
        assert_eq!((&w + &k.one()).pth_root(), w);
        assert_eq!(k.order(), Some(4));
    }

    #[test]
    fn gf25_generator_squares_to_three() {
        let f5 = Field::prime(5).unwrap();
        let k = Field::extension(&f5, &Poly::from_ints(&f5, &[2, 0, 1])).unwrap();
        let z = k.generator().unwrap();
        assert_eq!(&z * &z, k.from_int(3));
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f2 = Field::prime(2).unwrap();
        let err = Field::extension(&f2, &Poly::from_ints(&f2, &[1, 0, 1])).unwrap_err();
        assert_eq!(err, Error::Reducible);
        let err = Field::extension(&f2, &Poly::from_ints(&f2, &[1, 1, 0, 0])).unwrap_err();
        assert_eq!(err, Error::ModulusDegree);
    }

    #[test]
    fn gf_picks_first_irreducible() {
        assert_eq!(
            Field::gf(2, 2).unwrap().to_string(),
            "GF(2)[g1]/(g1^2+g1+1)"
        );
        assert_eq!(
            Field::gf(2, 3).unwrap().to_string(),
            "GF(2)[g1]/(g1^3+g1+1)"
        );
        assert_eq!(Field::gf(3, 2).unwrap().to_string(), "GF(3)[g1]/(g1^2+1)");
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "GF(7)",
            "GF(2)[g1]/(g1^2+g1+1)",
            "GF(2)[g1]/(g1^2+g1+1)[g2]/(g2^2+g2+g1)",
        ] {
            assert_eq!(Field::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Field::parse("GF(9)").unwrap_err(), Error::NotPrime(9));
        assert_eq!(Field::parse("GF(3^2)").unwrap(), Field::gf(3, 2).unwrap());
    }

    #[test]
    fn tower_inverse_and_printing() {
        let k = Field::parse("GF(2)[g1]/(g1^2+g1+1)[g2]/(g2^2+g2+g1)").unwrap();
        assert_eq!(k.degree(), 4);
        for a in k.elements().skip(1) {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        let g2 = k.generator().unwrap();
        let g1 = k.embed(&k.base().unwrap().generator().unwrap()).unwrap();
        assert_eq!((&g1 * &g2 + k.one()).to_string(), "1+g1*g2");
        assert_eq!(((&g1 + &k.one()) * &g2).to_string(), "(1+g1)*g2");
    }
}

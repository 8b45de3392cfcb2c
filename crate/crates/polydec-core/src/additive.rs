//! The composition ring of additive polynomials `sum a_i x^(p^i)`.
//!
//! Composition is the ring product, so `f ∘ g` and right division `f /∘ g`
//! play the roles of multiplication and exact division. The module provides
//! the Euclidean scheme (meet and join), transformation, similarity,
//! transmutation, kernel constructions, minimal additive multiples and the
//! subspace and flag counts of a vector space over `Z_p`.

use std::cmp::Ordering;
use std::fmt;

use crate::decomposition::{Compose, Decomposition};
use crate::error::{Error, Result};
use crate::field::{raw_trim, Elem, Felt, Field};
use crate::upoly::Poly;

/// An additive polynomial; `a[i]` multiplies `x^(p^i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditivePoly {
    field: Field,
    a: Vec<Elem>,
}

impl AdditivePoly {
    pub(crate) fn from_raw(field: Field, mut a: Vec<Elem>) -> AdditivePoly {
        raw_trim(&mut a);
        AdditivePoly { field, a }
    }

    /// Builds `sum coeffs[i] x^(p^i)`.
    pub fn new(field: &Field, coeffs: &[Felt]) -> Result<AdditivePoly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(
            field.clone(),
            coeffs.iter().map(|c| c.raw().clone()).collect(),
        ))
    }

    /// Builds `sum coeffs[i] x^(p^i)` from integers reduced into `field`.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> AdditivePoly {
        Self::from_raw(
            field.clone(),
            coeffs.iter().map(|&n| field.eint(n)).collect(),
        )
    }

    pub fn zero(field: &Field) -> AdditivePoly {
        Self::from_raw(field.clone(), Vec::new())
    }

    /// The identity `x`.
    pub fn x(field: &Field) -> AdditivePoly {
        Self::from_raw(field.clone(), vec![field.eone()])
    }

    /// `x^(p^k)`.
    pub fn frobenius(field: &Field, k: usize) -> AdditivePoly {
        let mut a = vec![field.ezero(); k + 1];
        a[k] = field.eone();
        Self::from_raw(field.clone(), a)
    }

    /// The `p`-linear polynomial `x^p + c x`.
    pub fn p_linear(c: &Felt) -> AdditivePoly {
        let f = c.field();
        Self::from_raw(f.clone(), vec![c.raw().clone(), f.eone()])
    }

    /// Converts a polynomial, rejecting terms at exponents that are not powers of `p`.
    pub fn from_poly(f: &Poly) -> Result<AdditivePoly> {
        let field = f.field();
        let p = field.p() as usize;
        let mut a = Vec::new();
        let mut next = 1usize;
        for (i, c) in f.raw().iter().enumerate() {
            if i == next {
                a.push(c.clone());
                next = next.saturating_mul(p);
            } else if !Field::eis_zero(c) {
                return Err(Error::NotAdditive);
            }
        }
        Ok(Self::from_raw(field.clone(), a))
    }

    pub fn to_poly(&self) -> Poly {
        let Some(nu) = self.expn() else {
            return Poly::zero(&self.field);
        };
        let p = self.field.p() as usize;
        let deg = p.pow(nu as u32);
        let mut c = vec![self.field.ezero(); deg + 1];
        let mut e = 1;
        for a in &self.a {
            c[e] = a.clone();
            e *= p;
        }
        Poly::from_raw(self.field.clone(), c)
    }

    pub fn parse(field: &Field, s: &str) -> Result<AdditivePoly> {
        Self::from_poly(&Poly::parse(field, s)?)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The exponent `ν` with degree `p^ν`; `None` for zero.
    pub fn expn(&self) -> Option<usize> {
        self.a.len().checked_sub(1)
    }

    pub(crate) fn nu(&self) -> usize {
        self.expn().expect("nonzero additive polynomial")
    }

    /// Degree `p^ν`, saturating on overflow.
    pub fn degree(&self) -> Option<u64> {
        self.expn().map(|n| {
            self.field
                .p()
                .saturating_pow(n.min(u32::MAX as usize) as u32)
        })
    }

    pub fn coeff(&self, i: usize) -> Felt {
        match self.a.get(i) {
            Some(v) => Felt::from_raw(self.field.clone(), v.clone()),
            None => self.field.zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Felt> {
        (0..self.a.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_x(&self) -> bool {
        self.a.len() == 1 && Field::eis_one(&self.a[0])
    }

    pub fn is_monic(&self) -> bool {
        self.a.last().is_some_and(|c| Field::eis_one(c))
    }

    /// Monic with nonzero linear coefficient, i.e. squarefree.
    pub fn is_simple(&self) -> bool {
        self.is_monic() && !Field::eis_zero(&self.a[0])
    }

    pub fn monic(&self) -> AdditivePoly {
        match self.a.last() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.einv(l).unwrap();
                self.scale_raw(&inv)
            }
        }
    }

    fn scale_raw(&self, s: &[u32]) -> AdditivePoly {
        Self::from_raw(
            self.field.clone(),
            self.a.iter().map(|c| self.field.emul(c, s)).collect(),
        )
    }

    /// Maps coefficients into a larger field of the same tower.
    pub fn embed(&self, into: &Field) -> Result<AdditivePoly> {
        Ok(Self::from_poly(&self.to_poly().embed(into)?).expect("embedding keeps exponents"))
    }

    /// Restricts coefficients to a tower level, if they all lie there.
    pub fn restrict(&self, sub: &Field) -> Option<AdditivePoly> {
        let mut out = Vec::with_capacity(self.a.len());
        for c in self.coeffs() {
            out.push(c.restrict(sub)?.raw().clone());
        }
        Some(Self::from_raw(sub.clone(), out))
    }

    pub fn eval(&self, t: &Felt) -> Felt {
        let f = &self.field;
        let mut acc = f.ezero();
        let mut pw = t.raw().clone();
        for (i, a) in self.a.iter().enumerate() {
            if i > 0 {
                pw = f.efrob(&pw, 1);
            }
            let term = f.emul(a, &pw);
            f.eadd_assign(&mut acc, &term);
        }
        Felt::from_raw(f.clone(), acc)
    }

    fn check(&self, other: &AdditivePoly) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// `self ∘ g`, with coefficients `c_k = sum_{i+j=k} a_i b_j^(p^i)`.
    pub fn compose(&self, g: &AdditivePoly) -> AdditivePoly {
        assert!(self.field == g.field, "field mismatch");
        let f = &self.field;
        if self.is_zero() || g.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.ezero(); self.a.len() + g.a.len() - 1];
        let mut bpow = g.a.clone();
        for (i, ai) in self.a.iter().enumerate() {
            if i > 0 {
                for b in bpow.iter_mut() {
                    *b = f.efrob(b, 1);
                }
            }
            if Field::eis_zero(ai) {
                continue;
            }
            for (j, b) in bpow.iter().enumerate() {
                let t = f.emul(ai, b);
                f.eadd_assign(&mut out[i + j], &t);
            }
        }
        Self::from_raw(f.clone(), out)
    }

    /// Right division: `self = Q ∘ g + R` with `expn R < expn g`.
    pub fn rdivrem(&self, g: &AdditivePoly) -> Result<(AdditivePoly, AdditivePoly)> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(self.rdivrem_impl(g))
    }

    fn rdivrem_impl(&self, g: &AdditivePoly) -> (AdditivePoly, AdditivePoly) {
        let f = &self.field;
        let rho = g.nu();
        let mut r = self.a.clone();
        if r.len() <= rho {
            return (Self::zero(f), self.clone());
        }
        let mut q = vec![f.ezero(); r.len() - rho];
        let lead = g.a.last().unwrap();
        for k in (0..q.len()).rev() {
            let top = &r[k + rho];
            if Field::eis_zero(top) {
                continue;
            }
            let denom = f.efrob(lead, k);
            let c = f.emul(top, &f.einv(&denom).unwrap());
            for (j, b) in g.a.iter().enumerate() {
                let t = f.emul(&c, &f.efrob(b, k));
                f.esub_assign(&mut r[k + j], &t);
            }
            q[k] = c;
        }
        (Self::from_raw(f.clone(), q), Self::from_raw(f.clone(), r))
    }

    /// Exact right quotient `self /∘ g`, if `g` is a right composition factor.
    pub fn rdiv_exact(&self, g: &AdditivePoly) -> Option<AdditivePoly> {
        let (q, r) = self.rdivrem(g).ok()?;
        r.is_zero().then_some(q)
    }

    /// True when `self` is a right composition factor of `f`.
    pub fn right_divides(&self, f: &AdditivePoly) -> bool {
        f.rdiv_exact(self).is_some()
    }

    /// Greatest common right composition factor, made monic.
    pub fn meet(&self, g: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rdivrem_impl(&b).1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Least common left composition multiple, made monic.
    pub fn join(&self, g: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(g)?;
        if self.is_zero() || g.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.join_impl(g))
    }

    fn join_impl(&self, g: &AdditivePoly) -> AdditivePoly {
        // With self = Q∘g + r the join is ((g ⊔ r) /∘ r) ∘ self up to a scalar.
        let r = self.rdivrem_impl(g).1;
        if r.is_zero() {
            return self.monic();
        }
        let j = g.join_impl(&r);
        let (q, rem) = j.rdivrem_impl(&r);
        debug_assert!(rem.is_zero());
        q.compose(self).monic()
    }

    /// The transformation `self ▷ f = (self ⊔ f) /∘ self`.
    pub fn transform(&self, f: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(f)?;
        if !self.is_monic() || !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let j = self.join_impl(f);
        Ok(j.rdivrem_impl(self).0)
    }

    /// `c^(-p^ν) · self(c x)`, the monic conjugate by the scalar `c`.
    pub fn scalar_conjugate(&self, c: &Felt) -> AdditivePoly {
        let f = &self.field;
        let nu = self.nu();
        let mut cp = c.raw().clone();
        let mut out = Vec::with_capacity(self.a.len());
        for a in &self.a {
            out.push(f.emul(a, &cp));
            cp = f.efrob(&cp, 1);
        }
        let lead = f.efrob(c.raw(), nu);
        let inv = f.einv(&lead).expect("nonzero scalar");
        Self::from_raw(f.clone(), out).scale_raw(&inv)
    }

    /// Writes a monic `self` as `x^(p^ℓ) ∘ ḡ` with `ḡ` simple (or `x`), returning `(ℓ, ḡ)`.
    pub fn split_frobenius(&self) -> (usize, AdditivePoly) {
        let l = self.a.iter().position(|c| !Field::eis_zero(c)).unwrap_or(0);
        let f = &self.field;
        let b = self.a[l..]
            .iter()
            .map(|c| {
                let mut v = c.clone();
                for _ in 0..l {
                    v = f.eroot(&v);
                }
                v
            })
            .collect();
        (l, Self::from_raw(f.clone(), b))
    }

    /// Every monic additive polynomial of exponent `nu` over `field`, in index order.
    pub fn enumerate_monic(field: &Field, nu: usize) -> impl Iterator<Item = AdditivePoly> + '_ {
        let q = field.order().expect("enumerable field");
        let total = q.checked_pow(nu as u32).expect("enumeration too large");
        (0..total).map(move |mut idx| {
            let mut a = Vec::with_capacity(nu + 1);
            for _ in 0..nu {
                a.push(field.element(idx % q).raw().clone());
                idx /= q;
            }
            a.push(field.eone());
            Self::from_raw(field.clone(), a)
        })
    }
}

/// Limits for the exhaustive similarity search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimilarityBounds {
    pub max_expn: usize,
    pub max_order: u128,
}

impl Default for SimilarityBounds {
    fn default() -> Self {
        SimilarityBounds {
            max_expn: 3,
            max_order: 32,
        }
    }
}

/// A similarity witness: `f` is the scalar conjugate of `u ▷ g` by `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityWitness {
    pub u: AdditivePoly,
    pub scale: Felt,
}

/// Decides whether `f ∼ g` by searching `u` with `u ⊓ g = x` and `expn u < expn g`.
///
/// A non-monic `u` acts on `u ▷ g` by scalar conjugation, so the search ranges over
/// monic `u` together with every nonzero scalar.
pub fn is_similar(
    f: &AdditivePoly,
    g: &AdditivePoly,
    bounds: SimilarityBounds,
) -> Result<Option<SimilarityWitness>> {
    f.check(g)?;
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = f.field();
    let nu = g.nu();
    if f.nu() != nu {
        return Ok(None);
    }
    let q = field.order().unwrap_or(u128::MAX);
    if q > bounds.max_order {
        return Err(Error::SearchBoundExceeded(format!(
            "field order {q} exceeds {}",
            bounds.max_order
        )));
    }
    if nu > bounds.max_expn {
        return Err(Error::SearchBoundExceeded(format!(
            "exponent {nu} exceeds {}",
            bounds.max_expn
        )));
    }
    let scales: Vec<Felt> = if field.is_prime_field() {
        vec![field.one()]
    } else {
        field.elements().skip(1).collect()
    };
    let x = AdditivePoly::x(field);
    for k in 0..nu.max(1) {
        for u in AdditivePoly::enumerate_monic(field, k) {
            if u.meet(g)? != x {
                continue;
            }
            let w = u.transform(g)?;
            for c in &scales {
                if w.scalar_conjugate(c) == *f {
                    return Ok(Some(SimilarityWitness {
                        u,
                        scale: c.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// All transmutations `(ḡ, f̄)` of an indecomposable `f` by `g`: `f ∘ g = ḡ ∘ f̄`
/// with `f = g ▷ f̄` and `ḡ = f̄ ▷ g`, sorted by `f̄`.
pub fn transmutable(
    f: &AdditivePoly,
    g: &AdditivePoly,
    seed: u64,
) -> Result<Vec<(AdditivePoly, AdditivePoly)>> {
    f.check(g)?;
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if !crate::addecomp::is_indecomposable(f, seed)? {
        return Err(Error::NotIndecomposable);
    }
    let fg = f.compose(g);
    let mut out = Vec::new();
    for fbar in crate::addecomp::indec_right_factors(&fg, seed)? {
        if fbar.expn() != f.expn() {
            continue;
        }
        let gbar = fg.rdiv_exact(&fbar).expect("right factor divides");
        if gbar == fbar.transform(g)? {
            out.push((gbar, fbar));
        }
    }
    out.sort_by(|a, b| additive_cmp(&a.1, &b.1));
    Ok(out)
}

/// Transforms a decomposition of `g` into one of `h ▷ g` with factors similar in pairs.
pub fn transform_composition(
    h: &AdditivePoly,
    dec: &Decomposition<AdditivePoly>,
) -> Result<Decomposition<AdditivePoly>> {
    let g = dec.target();
    let x = AdditivePoly::x(g.field());
    if h.meet(g)? != x {
        return Err(Error::NotCoprime);
    }
    let factors = dec.factors();
    let m = factors.len();
    let mut out = vec![x.clone(); m];
    let mut prefix = x.clone();
    for i in (0..m).rev() {
        let hi = prefix.transform(h)?;
        out[i] = hi.transform(&factors[i])?;
        prefix = factors[i].compose(&prefix);
    }
    Decomposition::new(h.transform(g)?, out)
}

/// `Z_p`-linearly independent field elements spanning the kernel of an additive polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    field: Field,
    theta: Vec<Felt>,
}

impl KernelBasis {
    /// Checks independence over `Z_p` by row reduction of coordinate vectors.
    pub fn new(field: &Field, theta: Vec<Felt>) -> Result<KernelBasis> {
        if theta.iter().any(|t| t.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let rows: Vec<Vec<u64>> = theta
            .iter()
            .map(|t| t.coords().iter().map(|&c| c as u64).collect())
            .collect();
        if rank_mod_p(rows, field.p()) != theta.len() {
            return Err(Error::DependentBasis);
        }
        Ok(KernelBasis {
            field: field.clone(),
            theta,
        })
    }

    pub fn elements(&self) -> &[Felt] {
        &self.theta
    }

    /// The monic additive polynomial whose roots are exactly the span, via
    /// `Ψ_i = (x^p - Ψ_{i-1}(θ_i)^(p-1) x) ∘ Ψ_{i-1}`.
    pub fn to_additive(&self) -> AdditivePoly {
        let p = self.field.p() as u128;
        let mut psi = AdditivePoly::x(&self.field);
        for t in &self.theta {
            let v = psi.eval(t);
            let lin = AdditivePoly::p_linear(&-v.pow(p - 1));
            psi = lin.compose(&psi);
        }
        psi
    }
}

/// Rank over `Z_p` of integer row vectors.
pub(crate) fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = crate::field::mod_inverse(rows[rank][c] % p, p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&v| v % p * inv % p).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] % p == 0 {
                continue;
            }
            let k = row[c] % p;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x % p + p - k * y % p) % p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// The least-exponent monic additive polynomial divisible by the monic `f`.
pub fn min_add_mult(f: &Poly) -> Result<AdditivePoly> {
    let Some(n) = f.degree() else {
        return Err(Error::ZeroInput);
    };
    if n == 0 {
        return Err(Error::DegreeError(
            "minimal additive multiple needs degree >= 1".into(),
        ));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = f.field();
    let p = field.p() as u128;
    // Reduced rows: (pivot column, vector of length n, combination over h_0..h_k).
    let mut basis: Vec<(usize, Vec<Elem>, Vec<Elem>)> = Vec::new();
    let mut h = Poly::x(field).rem(f)?;
    for k in 0..=n {
        if k > 0 {
            h = h.powmod(p, f);
        }
        let mut v: Vec<Elem> = (0..n).map(|i| h.coeff(i).raw().clone()).collect();
        let mut combo = vec![field.ezero(); k + 1];
        combo[k] = field.eone();
        for (piv, row, rc) in &basis {
            if Field::eis_zero(&v[*piv]) {
                continue;
            }
            let c = v[*piv].clone();
            for (x, y) in v.iter_mut().zip(row) {
                let t = field.emul(&c, y);
                field.esub_assign(x, &t);
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                let t = field.emul(&c, y);
                field.esub_assign(x, &t);
            }
        }
        match v.iter().position(|c| !Field::eis_zero(c)) {
            None => return Ok(AdditivePoly::from_raw(field.clone(), combo)),
            Some(piv) => {
                let inv = field.einv(&v[piv]).unwrap();
                let v = v.iter().map(|c| field.emul(c, &inv)).collect();
                let combo = combo.iter().map(|c| field.emul(c, &inv)).collect();
                basis.push((piv, v, combo));
            }
        }
    }
    unreachable!("n + 1 vectors in an n-dimensional space are dependent")
}

/// Exact subspace and flag counts in `Z_p^ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    /// Number of `σ`-dimensional subspaces.
    pub subspaces: u128,
    /// Number of `σ`-dimensional subspaces containing a fixed `(σ-1)`-dimensional one.
    pub containing: Option<u128>,
    /// Number of maximal flags, `prod_{1<=i<=ν} T(ν, i)`.
    pub flags: u128,
}

fn containing(p: u128, nu: u32, sigma: u32) -> Result<u128> {
    let pn = p.checked_pow(nu).ok_or(Error::Overflow)?;
    let ps1 = p.checked_pow(sigma - 1).ok_or(Error::Overflow)?;
    let ps = p.checked_pow(sigma).ok_or(Error::Overflow)?;
    Ok((pn - ps1) / (ps - ps1))
}

/// Subspace, containment and flag counts for `Z_p^ν`.
pub fn counts(p: u64, nu: usize, sigma: usize) -> Result<Counts> {
    if sigma > nu {
        return Err(Error::DegreeError(format!("sigma {sigma} exceeds nu {nu}")));
    }
    let p = p as u128;
    let nu32 = u32::try_from(nu).map_err(|_| Error::Overflow)?;
    let sigma32 = sigma as u32;
    let mut s: u128 = 1;
    for i in 0..sigma32 {
        let num = p.checked_pow(nu32 - i).ok_or(Error::Overflow)? - 1;
        let den = p.checked_pow(i + 1).ok_or(Error::Overflow)? - 1;
        s = s.checked_mul(num).ok_or(Error::Overflow)? / den;
    }
    let t = if sigma == 0 {
        None
    } else {
        Some(containing(p, nu32, sigma32)?)
    };
    let mut flags: u128 = 1;
    for i in 1..=nu32 {
        flags = flags
            .checked_mul(containing(p, nu32, i)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(Counts {
        subspaces: s,
        containing: t,
        flags,
    })
}

/// Orders by exponent, then coefficients from the linear term up.
pub fn additive_cmp(a: &AdditivePoly, b: &AdditivePoly) -> Ordering {
    a.a.len().cmp(&b.a.len()).then_with(|| {
        for (x, y) in a.a.iter().zip(&b.a) {
            match Field::ecmp(x, y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl PartialOrd for AdditivePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdditivePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        additive_cmp(self, other)
    }
}

impl Compose for AdditivePoly {
    fn compose_with(&self, inner: &Self) -> Self {
        self.compose(inner)
    }
}

impl fmt::Display for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

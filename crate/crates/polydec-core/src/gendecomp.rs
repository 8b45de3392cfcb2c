//! Decomposition of general univariate polynomials: the tame coefficient
//! recurrence, the separated-factor search, the block method for irreducible
//! polynomials over finite fields, recursion along an ordered factorisation and
//! the lexicographically first complete decomposition.
//!
//! All results are normal: factors monic and inner factors without constant
//! term. A non-monic input is made monic first and its leading coefficient is
//! folded back into the outermost factor.

use std::fmt;
use std::str::FromStr;

use crate::addecomp;
use crate::additive::AdditivePoly;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::field::{Felt, Field};
use crate::upoly::Poly;

/// Bidecomposition method.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Coefficient recurrence; needs the characteristic not to divide the outer degree.
    Tame,
    /// Right factors built from the factorization of `f - f(0)`.
    Separated,
    /// Block method for irreducible polynomials over a finite field.
    IrreducibleFF,
    /// Composition-ring algorithms for additive polynomials.
    Additive,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "tame" => Ok(Strategy::Tame),
            "sep" | "separated" => Ok(Strategy::Separated),
            "irred" | "irreducible" => Ok(Strategy::IrreducibleFF),
            "additive" => Ok(Strategy::Additive),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Tame => "tame",
            Strategy::Separated => "sep",
            Strategy::IrreducibleFF => "irred",
            Strategy::Additive => "additive",
        })
    }
}

/// A bidecomposition `f = g ∘ h`.
pub type Pair = (Poly, Poly);

fn check_split(f: &Poly, r: usize, s: usize) -> Result<()> {
    if r < 2 || s < 2 {
        return Err(Error::DegreeError(format!(
            "both degrees must be at least 2, got ({r},{s})"
        )));
    }
    let n = f.degree().unwrap_or(0);
    if r.checked_mul(s) != Some(n) {
        return Err(Error::ProductMismatch {
            product: r.saturating_mul(s),
            degree: n,
        });
    }
    Ok(())
}

/// Splits `f` into its leading coefficient and monic part.
fn normalize(f: &Poly) -> (Felt, Poly) {
    (f.lc(), f.monic())
}

fn denormalize(lc: &Felt, (g, h): Pair) -> Pair {
    (g.scale(lc), h)
}

/// The unique normal `(g, h)` with `deg g = r`, `deg h = s`, when `p ∤ r`.
///
/// `h` follows from the top `s` coefficients of `f` by the recurrence
/// `c_{s-k} = (a_{rs-k} - coeff(μ_k^r, rs-k)) / r`; `g` then comes from right division.
pub fn tame_bidecomp(f: &Poly, r: usize, s: usize) -> Result<Option<Pair>> {
    check_split(f, r, s)?;
    let field = f.field();
    if (r as u64).is_multiple_of(field.p()) {
        return Err(Error::NotTame(r));
    }
    let (lc, f) = normalize(f);
    let n = r * s;
    let r_inv = field.from_int((r as u64 % field.p()) as i64).inv().unwrap();
    let mut mu = Poly::monomial(&field.one(), s);
    for k in 1..s {
        let top = mu.pow(r).coeff(n - k);
        let c = &(&f.coeff(n - k) - &top) * &r_inv;
        mu = &mu + &Poly::monomial(&c, s - k);
    }
    Ok(f.right_divide(&mu)?.map(|g| denormalize(&lc, (g, mu))))
}

/// All normal bidecompositions with `deg h = s`, searching right factors
/// `h = x * prod q_i^(k_i)` over the factorization of `f - f(0)`.
///
/// Exponent vectors are enumerated in mixed-radix order with the first factor
/// as the least significant digit.
pub fn sep_bidecomp(f: &Poly, r: usize, s: usize, seed: u64) -> Result<Vec<Pair>> {
    check_split(f, r, s)?;
    let (lc, f) = normalize(f);
    let field = f.field();
    let shifted = &f - &Poly::constant(&f.coeff(0));
    let x = Poly::x(field);
    let mut fac = shifted.factor(seed)?;
    let ix = fac
        .factors
        .iter()
        .position(|(q, _)| *q == x)
        .expect("x divides f - f(0)");
    fac.factors[ix].1 -= 1;
    fac.factors.retain(|(_, e)| *e > 0);
    let mut out = Vec::new();
    for rest in fac.divisors_of_degree(s - 1, |e| e) {
        let h = &x * &rest;
        if let Some(g) = f.right_divide(&h)? {
            out.push(denormalize(&lc, (g, h)));
        }
    }
    Ok(out)
}

/// The block bidecomposition of an irreducible `f` over a finite field.
///
/// With `α` a root in `K = F[z]/(f)`, the only candidate right factor is
/// `prod_{j<s} (x - α^(q^(jr)))` minus its constant term, valid when its
/// other coefficients lie in `F`.
pub fn irred_ff_bidecomp(f: &Poly, r: usize, s: usize) -> Result<Option<Pair>> {
    check_split(f, r, s)?;
    if !f.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let (lc, f) = normalize(f);
    let field = f.field();
    let k = Field::extension_unchecked(field, &f);
    let alpha = k.generator().expect("extension has a generator");
    let e = field.degree();
    let mut prod = Poly::one(&k);
    for j in 0..s {
        let root = alpha.frobenius(e * j * r);
        prod = &prod * &Poly::new(&k, &[-root, k.one()])?;
    }
    let mut coeffs = Vec::with_capacity(s + 1);
    coeffs.push(field.zero());
    for i in 1..=s {
        match prod.coeff(i).restrict(field) {
            Some(c) => coeffs.push(c),
            None => return Ok(None),
        }
    }
    let h = Poly::new(field, &coeffs)?;
    Ok(f.right_divide(&h)?.map(|g| denormalize(&lc, (g, h))))
}

fn bidecomp(f: &Poly, r: usize, s: usize, strategy: Strategy, seed: u64) -> Result<Vec<Pair>> {
    match strategy {
        Strategy::Tame => Ok(tame_bidecomp(f, r, s)?.into_iter().collect()),
        Strategy::Separated => sep_bidecomp(f, r, s, seed),
        Strategy::IrreducibleFF => Ok(irred_ff_bidecomp(f, r, s)?.into_iter().collect()),
        Strategy::Additive => {
            check_split(f, r, s)?;
            let (lc, fm) = normalize(f);
            let a = AdditivePoly::from_poly(&fm)?;
            let decs = addecomp::decompose_ordered(&a, &[r as u64, s as u64], seed)?;
            Ok(decs
                .into_iter()
                .map(|d| {
                    let fs = d.factors();
                    denormalize(&lc, (fs[0].to_poly(), fs[1].to_poly()))
                })
                .collect())
        }
    }
}

/// All decompositions of `f` with factor degrees `shape` (outermost first) reachable by
/// peeling the innermost factor with `strategy` and recursing on the outer part.
pub fn ord_fact_decomp(
    f: &Poly,
    shape: &[usize],
    strategy: Strategy,
    seed: u64,
) -> Result<Vec<Decomposition<Poly>>> {
    let n = f.degree().unwrap_or(0);
    let prod = shape.iter().try_fold(1usize, |a, &r| a.checked_mul(r));
    if shape.is_empty() || prod != Some(n) {
        return Err(Error::ProductMismatch {
            product: prod.unwrap_or(usize::MAX),
            degree: n,
        });
    }
    if shape.iter().any(|&r| r < 2) {
        return Err(Error::DegreeError(
            "shape entries must be at least 2".into(),
        ));
    }
    if strategy == Strategy::Tame {
        if let Some(&bad) = shape[..shape.len() - 1]
            .iter()
            .find(|&&r| (r as u64).is_multiple_of(f.field().p()))
        {
            return Err(Error::NotTame(bad));
        }
    }
    let chains = ord_chains(f, shape, strategy, seed)?;
    let mut out: Vec<Decomposition<Poly>> = Vec::new();
    for c in chains {
        let d = Decomposition::new(f.clone(), c)?;
        if !out.contains(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

fn ord_chains(f: &Poly, shape: &[usize], strategy: Strategy, seed: u64) -> Result<Vec<Vec<Poly>>> {
    let m = shape.len();
    if m == 1 {
        return Ok(vec![vec![f.clone()]]);
    }
    let r1 = shape[m - 1];
    let t2: usize = shape[..m - 1].iter().product();
    let mut out = Vec::new();
    for (g, h) in bidecomp(f, t2, r1, strategy, seed)? {
        for mut chain in ord_chains(&g, &shape[..m - 1], strategy, seed)? {
            chain.push(h.clone());
            out.push(chain);
        }
    }
    Ok(out)
}

/// The complete decomposition whose outer factor degrees are lexicographically
/// smallest: each step peels the smallest outer degree that admits a bidecomposition.
///
/// `Tame` is used where the characteristic does not divide the outer degree,
/// `IrreducibleFF` where the current polynomial is irreducible, `Additive` where it is
/// additive; every other step uses the separated search.
pub fn first_complete(f: &Poly, strategy: Strategy, seed: u64) -> Result<Decomposition<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::DegreeError(
            "polynomial must have degree >= 2".into(),
        ));
    }
    let p = f.field().p();
    let mut outer = Vec::new();
    let mut rest = f.clone();
    'peel: loop {
        let n = rest.deg();
        for r in (2..n).filter(|r| n.is_multiple_of(*r)) {
            let s = n / r;
            let chosen = match strategy {
                Strategy::Tame if !(r as u64).is_multiple_of(p) => Strategy::Tame,
                Strategy::IrreducibleFF if rest.is_irreducible() => Strategy::IrreducibleFF,
                Strategy::Additive if AdditivePoly::from_poly(&rest.monic()).is_ok() => {
                    Strategy::Additive
                }
                _ => Strategy::Separated,
            };
            if let Some((g, h)) = bidecomp(&rest, r, s, chosen, seed)?.into_iter().next() {
                outer.push(g);
                rest = h;
                continue 'peel;
            }
        }
        outer.push(rest);
        break;
    }
    Decomposition::new(f.clone(), outer)
}

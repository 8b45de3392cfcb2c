//! Rational functions in reduced form, fractional linear transformations and
//! decomposition of rational functions under composition.
//!
//! A decomposition `f = g ∘ h` is *normal* when `f`, `g`, `h` have monic numerators,
//! numerator degree above denominator degree, and `h(0) = 0`. General inputs are
//! reduced to the normal problem by fractional linear transformations.

use std::fmt;

use crate::decomposition::Compose;
use crate::error::{Error, Result};
use crate::field::{Felt, Field};
use crate::parse;
use crate::upoly::Poly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Reduces `num / den` to lowest terms with a monic denominator.
    pub fn new(num: Poly, den: Poly) -> Result<RationalFunction> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den).unwrap_or_else(|_| Poly::one(num.field()));
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let inv = den.lc().inv().expect("nonzero leading coefficient");
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        let den = Poly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn x(field: &Field) -> RationalFunction {
        RationalFunction::from_poly(Poly::x(field))
    }

    /// Parses `poly` or `poly / poly`.
    pub fn parse(field: &Field, s: &str) -> Result<RationalFunction> {
        let (n, d) = parse::parse_fraction(field, s)?;
        RationalFunction::new(n, d)
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// `(deg num, deg den)`, counting the zero numerator as degree 0.
    pub fn degree_pair(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.deg())
    }

    /// Sum of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        let (a, b) = self.degree_pair();
        a + b
    }

    /// Numerator degree minus denominator degree.
    pub fn delta(&self) -> isize {
        let (a, b) = self.degree_pair();
        a as isize - b as isize
    }

    pub fn is_monic(&self) -> bool {
        self.num.is_monic()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when `h(0) = 0`.
    pub fn vanishes_at_zero(&self) -> bool {
        self.num.coeff(0).is_zero() && !self.den.coeff(0).is_zero()
    }

    /// Monic, positive `Δ` and vanishing at zero: the shape of a normal inner factor.
    pub fn is_normal(&self) -> bool {
        self.is_monic() && self.delta() > 0 && self.vanishes_at_zero()
    }

    /// `self ∘ h`.
    pub fn compose(&self, h: &RationalFunction) -> RationalFunction {
        rat_compose(self, h)
    }
}

impl Compose for RationalFunction {
    fn compose_with(&self, inner: &Self) -> Self {
        self.compose(inner)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `x ↦ (t1 x + t2) / (t3 x + t4)` with `t1 t4 - t2 t3 ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FracLinear {
    t: [Felt; 4],
}

impl FracLinear {
    pub fn new(t1: Felt, t2: Felt, t3: Felt, t4: Felt) -> Result<FracLinear> {
        if (&(&t1 * &t4) - &(&t2 * &t3)).is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(FracLinear {
            t: [t1, t2, t3, t4],
        })
    }

    pub fn identity(field: &Field) -> FracLinear {
        FracLinear {
            t: [field.one(), field.zero(), field.zero(), field.one()],
        }
    }

    /// `1 / x`.
    pub fn reciprocal(field: &Field) -> FracLinear {
        FracLinear {
            t: [field.zero(), field.one(), field.one(), field.zero()],
        }
    }

    pub fn coeffs(&self) -> &[Felt; 4] {
        &self.t
    }

    /// `(t4 x - t2) / (-t3 x + t1)`, the inverse up to the projective scalar.
    pub fn inverse(&self) -> FracLinear {
        let [t1, t2, t3, t4] = &self.t;
        FracLinear {
            t: [t4.clone(), -t2.clone(), -t3.clone(), t1.clone()],
        }
    }

    pub fn to_rational(&self) -> RationalFunction {
        let field = self.t[0].field();
        let [t1, t2, t3, t4] = &self.t;
        let num = Poly::new(field, &[t2.clone(), t1.clone()]).expect("same field");
        let den = Poly::new(field, &[t4.clone(), t3.clone()]).expect("same field");
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// `t ∘ f = (t1 f_N + t2 f_D) / (t3 f_N + t4 f_D)`.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        flt_apply(self, f)
    }
}

impl fmt::Display for FracLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// Reduced form of `n / d`.
pub fn rat_reduce(n: Poly, d: Poly) -> Result<RationalFunction> {
    RationalFunction::new(n, d)
}

/// `t ∘ f`.
pub fn flt_apply(t: &FracLinear, f: &RationalFunction) -> Result<RationalFunction> {
    let [t1, t2, t3, t4] = &t.t;
    let num = &f.num.scale(t1) + &f.den.scale(t2);
    let den = &f.num.scale(t3) + &f.den.scale(t4);
    if den.is_zero() {
        return Err(Error::Degenerate);
    }
    RationalFunction::new(num, den)
}

/// The transformation `Λ_f` making `f` monic with positive `Δ`, and `Λ_f ∘ f`.
///
/// `x / a_N` when `Δ > 0`, `a_N / x` when `Δ < 0`, and `γ (x - α) / (x - a_N)` when
/// `Δ = 0`, where `α = a_N - 1` and `γ` is the leading coefficient of `f_N - a_N f_D`.
pub fn normalize(f: &RationalFunction) -> Result<(FracLinear, RationalFunction)> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let field = f.field();
    let a = f.num.lc();
    let lambda = match f.delta() {
        d if d > 0 => FracLinear::new(a.inv().unwrap(), field.zero(), field.zero(), field.one())?,
        d if d < 0 => FracLinear::new(field.zero(), a, field.one(), field.zero())?,
        _ => {
            let gamma = (&f.num - &f.den.scale(&a)).lc();
            let alpha = &a - &field.one();
            FracLinear::new(gamma.clone(), -(&gamma * &alpha), field.one(), -a)?
        }
    };
    let fbar = flt_apply(&lambda, f)?;
    debug_assert!(fbar.is_monic() && fbar.delta() > 0);
    Ok((lambda, fbar))
}

/// `Σ c_i p^i q^(R-i)` for the coefficients `c_i` of `v`.
fn homogenize(v: &Poly, p: &Poly, q: &Poly, r: usize) -> Poly {
    let field = p.field();
    let mut acc = Poly::zero(field);
    let mut p_pow = Poly::one(field);
    for i in 0..=v.degree().unwrap_or(0) {
        let c = v.coeff(i);
        if !c.is_zero() {
            acc = &acc + &(&p_pow * &q.pow(r - i)).scale(&c);
        }
        p_pow = &p_pow * p;
    }
    acc
}

/// Reduced `g ∘ h`.
pub fn rat_compose(g: &RationalFunction, h: &RationalFunction) -> RationalFunction {
    let (rn, rd) = g.degree_pair();
    let r = rn.max(rd);
    let a = homogenize(&g.num, &h.num, &h.den, r);
    let b = homogenize(&g.den, &h.num, &h.den, r);
    RationalFunction::new(a, b).expect("composition of reduced functions has a nonzero denominator")
}

/// The monic `v` of degree `r` with `u = v(h) h_D^r`, if one exists.
///
/// The coefficients of `v` are read off `u` at the indices `ℓ d`, where `d` is the
/// `x`-adic valuation of `h_N`; the candidate is then checked by full expansion.
pub fn poly_in_h(u: &Poly, h: &RationalFunction, r: usize) -> Option<Poly> {
    if !h.is_normal() || !u.is_monic() {
        return None;
    }
    let (sn, _) = h.degree_pair();
    if u.deg() != r * sn {
        return None;
    }
    let field = h.field();
    let d = h.num.valuation()?;
    let hn_d = h.num.coeff(d);
    let hd_0 = h.den.coeff(0);
    let terms: Vec<Poly> = (0..=r).map(|i| &h.num.pow(i) * &h.den.pow(r - i)).collect();
    let mut b: Vec<Felt> = Vec::with_capacity(r + 1);
    for l in 0..=r {
        let mut known = field.zero();
        for (i, bi) in b.iter().enumerate() {
            known = &known + &(bi * &terms[i].coeff(l * d));
        }
        let scale = &hn_d.pow(l as u128) * &hd_0.pow((r - l) as u128);
        b.push(&(&u.coeff(l * d) - &known) * &scale.inv()?);
    }
    let v = Poly::new(field, &b).ok()?;
    if !v.is_monic() || v.deg() != r {
        return None;
    }
    let expanded = terms
        .iter()
        .zip(&b)
        .fold(Poly::zero(field), |acc, (t, bi)| &acc + &t.scale(bi));
    (expanded == *u).then_some(v)
}

/// The outer degree pair forced by `deg f` and `deg h` for a normal decomposition.
pub fn outer_degrees(f: (usize, usize), h: (usize, usize)) -> Result<(usize, usize)> {
    let ((nn, nd), (sn, sd)) = (f, h);
    if sn == 0 || sn <= sd || nn % sn != 0 {
        return Err(Error::DegreeInfeasible);
    }
    let rn = nn / sn;
    let top = (nd * sn) as i64 - (nn * sd) as i64;
    let bottom = (sn * (sn - sd)) as i64;
    if top < 0 || top % bottom != 0 {
        return Err(Error::DegreeInfeasible);
    }
    let rd = (top / bottom) as usize;
    if rd >= rn {
        return Err(Error::DegreeInfeasible);
    }
    Ok((rn, rd))
}

/// The monic `g` with positive `Δ` and `f = g ∘ h`, if one exists.
pub fn rat_right_divide(
    f: &RationalFunction,
    h: &RationalFunction,
) -> Result<Option<RationalFunction>> {
    if !f.is_monic() || f.delta() <= 0 || !h.is_normal() {
        return Err(Error::DegreeError(
            "right division needs monic f, h with positive Δ and h(0) = 0".into(),
        ));
    }
    let (rn, rd) = outer_degrees(f.degree_pair(), h.degree_pair())?;
    let Some(gn) = poly_in_h(&f.num, h, rn) else {
        return Ok(None);
    };
    let Some(b) = f.den.div_exact(&h.den.pow(rn - rd)) else {
        return Ok(None);
    };
    let Some(gd) = poly_in_h(&b, h, rd) else {
        return Ok(None);
    };
    let g = RationalFunction::new(gn, gd)?;
    Ok((g.degree_pair() == (rn, rd) && rat_compose(&g, h) == *f).then_some(g))
}

/// A normal rational bidecomposition.
pub type RatPair = (RationalFunction, RationalFunction);

fn check_quadruple(f: &RationalFunction, q: (usize, usize, usize, usize)) -> Result<()> {
    let (rn, rd, sn, sd) = q;
    let (nn, nd) = f.degree_pair();
    let nd_expect = (rn * sd + rd * sn).checked_sub(rd * sd);
    if rn * sn != nn || nd_expect != Some(nd) || rn <= rd || sn <= sd {
        return Err(Error::DegreeInfeasible);
    }
    Ok(())
}

/// All normal decompositions of `f` with `deg g = (r_N, r_D)` and `deg h = (s_N, s_D)`.
///
/// Candidate denominators `h_D` are monic divisors of `f_D` with `h_D^(r_N - r_D) | f_D`
/// and `h_D(0) ≠ 0`. Candidate numerators `h_N` are monic divisors with `h_N(0) = 0` of
/// `B - b̄_0 h_D^(r_D)`, or of `f_N - b_0 h_D^(r_N)` when the former vanishes.
pub fn norm_rat_dec(
    f: &RationalFunction,
    q: (usize, usize, usize, usize),
    seed: u64,
) -> Result<Vec<RatPair>> {
    if !f.is_monic() || f.delta() <= 0 {
        return Err(Error::DegreeError("f must be monic with positive Δ".into()));
    }
    check_quadruple(f, q)?;
    let (rn, rd, sn, sd) = q;
    let field = f.field();
    let x = Poly::x(field);
    let mut den_fac = f.den.factor(seed)?;
    den_fac.factors.retain(|(p, _)| *p != x);
    let mut out = Vec::new();
    for hd in den_fac.divisors_of_degree(sd, |e| e / (rn - rd)) {
        let Some(b) = f.den.div_exact(&hd.pow(rn - rd)) else {
            continue;
        };
        let hd0 = hd.coeff(0);
        let scale = hd0.pow(rn as u128).inv().expect("h_D(0) is nonzero");
        let b0 = &f.den.coeff(0) * &scale;
        let mut c = &b - &hd.pow(rd).scale(&b0);
        if c.is_zero() {
            let a0 = &f.num.coeff(0) * &scale;
            c = &f.num - &hd.pow(rn).scale(&a0);
        }
        let mut fac = c.factor(seed)?;
        let Some(ix) = fac.factors.iter().position(|(p, _)| *p == x) else {
            continue;
        };
        fac.factors[ix].1 -= 1;
        fac.factors.retain(|(_, e)| *e > 0);
        for rest in fac.divisors_of_degree(sn - 1, |e| e) {
            let hn = &x * &rest;
            if !hn.gcd(&hd)?.is_one() {
                continue;
            }
            let h = RationalFunction {
                num: hn,
                den: hd.clone(),
            };
            if let Some(g) = rat_right_divide(f, &h)? {
                if g.degree_pair() == (rn, rd) {
                    out.push((g, h));
                }
            }
        }
    }
    Ok(out)
}

/// All decompositions of an arbitrary nonconstant `f` with the given degree pairs,
/// obtained from normal decompositions of `Λ_f ∘ f` up to linear equivalence.
///
/// When `s_N = s_D` every normalised inner degree pair `(s_N, s̄_D)` with
/// `s̄_D < s_N` and integral outer degrees is tried, from `s̄_D = s_N - 1` down.
pub fn general_rat_dec(
    f: &RationalFunction,
    q: (usize, usize, usize, usize),
    seed: u64,
) -> Result<Vec<RatPair>> {
    let (rn, rd, sn, sd) = q;
    let (lambda, fbar) = normalize(f)?;
    let field = f.field();
    let lambda_inv = lambda.inverse().to_rational();
    let mut out = Vec::new();
    let mut attempt = |s_pair: (usize, usize), post: &FracLinear| -> Result<()> {
        let Ok((brn, brd)) = outer_degrees(fbar.degree_pair(), s_pair) else {
            return Ok(());
        };
        let post_inv = post.inverse().to_rational();
        let post = post.to_rational();
        for (gbar, hbar) in norm_rat_dec(&fbar, (brn, brd, s_pair.0, s_pair.1), seed)? {
            let g = rat_compose(&rat_compose(&lambda_inv, &gbar), &post_inv);
            let h = rat_compose(&post, &hbar);
            if g.degree_pair() == (rn, rd)
                && h.degree_pair() == (sn, sd)
                && rat_compose(&g, &h) == *f
                && !out.contains(&(g.clone(), h.clone()))
            {
                out.push((g, h));
            }
        }
        Ok(())
    };
    let one = field.one();
    let zero = field.zero();
    if sn > sd {
        attempt((sn, sd), &FracLinear::identity(field))?;
    } else if sn < sd {
        attempt((sd, sn), &FracLinear::reciprocal(field))?;
    } else {
        let t = FracLinear::new(one.clone(), one.clone(), one, zero)?;
        for sbar in (0..sn).rev() {
            attempt((sn, sbar), &t)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(f: &Field, s: &str) -> RationalFunction {
        RationalFunction::parse(f, s).unwrap()
    }

    #[test]
    fn reduction() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(rat(&f2, "(x^2+x)/x").to_string(), "x+1");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(rat(&f5, "2*x/2").to_string(), "x");
        assert_eq!(rat(&f5, "x/x").to_string(), "1");
        assert_eq!(rat(&f5, "x/(2*x+1)").to_string(), "3*x/(x+3)");
        assert_eq!(
            RationalFunction::parse(&f5, "x/0").unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn transformations() {
        let f5 = Field::prime(5).unwrap();
        let f = rat(&f5, "(x^3+1)/(x+2)");
        assert_eq!(FracLinear::identity(&f5).apply(&f).unwrap(), f);
        let r = FracLinear::reciprocal(&f5).apply(&f).unwrap();
        assert_eq!(r.degree_pair(), (1, 3));
        let t = FracLinear::new(
            f5.from_int(2),
            f5.from_int(1),
            f5.from_int(1),
            f5.from_int(1),
        )
        .unwrap();
        let back = t.inverse().apply(&t.apply(&f).unwrap()).unwrap();
        assert_eq!(back, f);
        assert_eq!(
            FracLinear::new(f5.one(), f5.one(), f5.one(), f5.one()).unwrap_err(),
            Error::Degenerate
        );
    }

    #[test]
    fn normalization_cases() {
        let f3 = Field::prime(3).unwrap();
        let (_, fbar) = normalize(&rat(&f3, "x^2+x")).unwrap();
        assert_eq!(fbar, rat(&f3, "x^2+x"));
        let (_, fbar) = normalize(&rat(&f3, "1/x")).unwrap();
        assert_eq!(fbar, rat(&f3, "x"));
        let (l, fbar) = normalize(&rat(&f3, "(2*x^2+1)/(x^2+x)")).unwrap();
        assert!(fbar.is_monic() && fbar.delta() > 0);
        assert_eq!(l.apply(&rat(&f3, "(2*x^2+1)/(x^2+x)")).unwrap(), fbar);
        assert_eq!(normalize(&rat(&f3, "2")).unwrap_err(), Error::ConstantInput);
    }

    #[test]
    fn composition_and_division() {
        let f5 = Field::prime(5).unwrap();
        let g = rat(&f5, "x^2");
        let h = rat(&f5, "x^2/(x+1)");
        let f = rat_compose(&g, &h);
        assert_eq!(f, rat(&f5, "x^4/(x^2+2*x+1)"));
        assert_eq!(rat_compose(&g, &RationalFunction::x(&f5)), g);
        assert_eq!(rat_right_divide(&f, &h).unwrap(), Some(g.clone()));
        assert_eq!(
            rat_right_divide(&f, &RationalFunction::x(&f5)).unwrap(),
            Some(f.clone())
        );
        assert_eq!(
            rat_right_divide(&f, &rat(&f5, "x^3/(x+1)")).unwrap_err(),
            Error::DegreeInfeasible
        );
        let pg = Poly::parse(&f5, "x^3+x+2").unwrap();
        let ph = Poly::parse(&f5, "x^2+3*x").unwrap();
        assert_eq!(
            rat_compose(
                &RationalFunction::from_poly(pg.clone()),
                &RationalFunction::from_poly(ph.clone())
            ),
            RationalFunction::from_poly(pg.compose(&ph))
        );
    }

    #[test]
    fn polynomial_in_h() {
        let f5 = Field::prime(5).unwrap();
        let h = rat(&f5, "x^2/(x+1)");
        let v = Poly::parse(&f5, "x^2+1").unwrap();
        let u = homogenize(&v, h.num(), h.den(), 2);
        assert_eq!(poly_in_h(&u, &h, 2), Some(v));
        let hp = rat(&f5, "x^2+x");
        assert_eq!(poly_in_h(hp.num(), &hp, 1), Some(Poly::x(&f5)));
        assert_eq!(poly_in_h(&Poly::parse(&f5, "x^4+x").unwrap(), &h, 2), None);
    }

    #[test]
    fn normal_search() {
        let f5 = Field::prime(5).unwrap();
        let f = rat(&f5, "x^4/(x^2+2*x+1)");
        assert_eq!(
            norm_rat_dec(&f, (2, 0, 2, 1), 0).unwrap(),
            vec![(rat(&f5, "x^2"), rat(&f5, "x^2/(x+1)"))]
        );
        assert_eq!(
            norm_rat_dec(&f, (3, 0, 2, 1), 0).unwrap_err(),
            Error::DegreeInfeasible
        );
        let f2 = Field::prime(2).unwrap();
        let p = Poly::parse(&f2, "x^12+x^9+x^6+x^3").unwrap();
        let rp = RationalFunction::from_poly(p.clone());
        let mut ours: Vec<_> = norm_rat_dec(&rp, (4, 0, 3, 0), 0)
            .unwrap()
            .into_iter()
            .map(|(g, h)| (g.num().clone(), h.num().clone()))
            .collect();
        let mut theirs = crate::gendecomp::sep_bidecomp(&p, 4, 3, 0).unwrap();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs);
    }

    #[test]
    fn general_reduction() {
        let f5 = Field::prime(5).unwrap();
        let g = rat(&f5, "x^2");
        let h = rat(&f5, "x^2/(x+1)");
        let f = rat_compose(&g, &h);
        assert!(general_rat_dec(&f, (2, 0, 2, 1), 0)
            .unwrap()
            .contains(&(g.clone(), h.clone())));
        let recip = FracLinear::reciprocal(&f5);
        let fi = recip.apply(&f).unwrap();
        let gi = recip.apply(&g).unwrap();
        assert!(general_rat_dec(&fi, (0, 2, 2, 1), 0)
            .unwrap()
            .contains(&(gi, h.clone())));
        let t = FracLinear::new(f5.one(), f5.one(), f5.one(), f5.zero()).unwrap();
        let h2 = t.apply(&h).unwrap();
        let g2 = rat_compose(&g, &t.inverse().to_rational());
        assert_eq!(h2.degree_pair(), (2, 2));
        assert!(
            general_rat_dec(&f, (g2.degree_pair().0, g2.degree_pair().1, 2, 2), 0)
                .unwrap()
                .contains(&(g2, h2))
        );
    }
}

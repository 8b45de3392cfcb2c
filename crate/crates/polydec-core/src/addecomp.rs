//! Decomposition algorithms for additive polynomials: indecomposable right
//! factors, complete decompositions, decompositions matching an ordered
//! factorisation, the completely reducible and similarity-free fast paths,
//! and absolute decomposition over a tower of extensions.

use std::collections::{BTreeMap, HashMap};

use crate::additive::{
    is_similar, min_add_mult, transform_composition, transmutable, AdditivePoly, SimilarityBounds,
};
use crate::decomposition::{compose_all, Decomposition};
use crate::error::{Error, Result};
use crate::field::{Felt, Field};
use crate::upoly::Poly;

/// Largest exponent accepted by [`abs_decompose`].
pub const ABS_EXPONENT_BOUND: usize = 3;

fn require_monic_positive(f: &AdditivePoly) -> Result<()> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.expn() == Some(0) {
        return Err(Error::DegreeError(
            "additive polynomial must have exponent >= 1".into(),
        ));
    }
    Ok(())
}

/// All monic indecomposable right composition factors of `f`, sorted by exponent
/// and then coefficients.
///
/// These are the minimal additive multiples of the irreducible factors of `f`
/// that no smaller candidate right-divides, together with `x^p` when `x^p` is a
/// right factor.
pub fn indec_right_factors(f: &AdditivePoly, seed: u64) -> Result<Vec<AdditivePoly>> {
    require_monic_positive(f)?;
    let field = f.field();
    let mut cands = Vec::new();
    if f.coeff(0).is_zero() {
        cands.push(AdditivePoly::frobenius(field, 1));
    }
    let x = Poly::x(field);
    for (h, _) in f.to_poly().factor(seed)?.factors {
        if h != x {
            cands.push(min_add_mult(&h)?);
        }
    }
    cands.sort();
    cands.dedup();
    let mut out: Vec<AdditivePoly> = Vec::new();
    for (j, g) in cands.iter().enumerate() {
        if !cands[..j].iter().any(|h| h.right_divides(g)) {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// True when `f` has no right factor other than itself and `x`.
pub fn is_indecomposable(f: &AdditivePoly, seed: u64) -> Result<bool> {
    if f.expn() == Some(1) {
        return Ok(f.is_monic());
    }
    let h = indec_right_factors(f, seed)?;
    Ok(h.len() == 1 && h[0] == *f)
}

/// One complete decomposition, peeling the first indecomposable right factor each time.
pub fn complete_decomposition(f: &AdditivePoly, seed: u64) -> Result<Decomposition<AdditivePoly>> {
    require_monic_positive(f)?;
    let mut rest = f.clone();
    let mut inner = Vec::new();
    loop {
        let h = indec_right_factors(&rest, seed)?.swap_remove(0);
        if h == rest {
            inner.push(rest);
            break;
        }
        rest = rest.rdiv_exact(&h).expect("right factor divides");
        inner.push(h);
    }
    inner.reverse();
    Decomposition::new(f.clone(), inner)
}

/// All distinct complete decompositions (at most `limit`), in generation order:
/// innermost factors in sorted order, recursing on the quotient.
pub fn all_complete_decompositions(
    f: &AdditivePoly,
    limit: Option<usize>,
    seed: u64,
) -> Result<Vec<Decomposition<AdditivePoly>>> {
    require_monic_positive(f)?;
    let limit = limit.unwrap_or(usize::MAX);
    let mut memo = HashMap::new();
    let chains = all_chains(f, limit, seed, &mut memo)?;
    chains
        .into_iter()
        .map(|c| Decomposition::new(f.clone(), c))
        .collect()
}

type Memo = HashMap<AdditivePoly, Vec<Vec<AdditivePoly>>>;

fn all_chains(
    f: &AdditivePoly,
    limit: usize,
    seed: u64,
    memo: &mut Memo,
) -> Result<Vec<Vec<AdditivePoly>>> {
    if let Some(v) = memo.get(f) {
        return Ok(v.clone());
    }
    let hs = indec_right_factors(f, seed)?;
    let mut out = Vec::new();
    if hs.len() == 1 && hs[0] == *f {
        out.push(vec![f.clone()]);
    } else {
        'outer: for h in hs {
            let q = f.rdiv_exact(&h).expect("right factor divides");
            for mut chain in all_chains(&q, limit, seed, memo)? {
                if out.len() >= limit {
                    break 'outer;
                }
                chain.push(h.clone());
                out.push(chain);
            }
        }
    }
    memo.insert(f.clone(), out.clone());
    Ok(out)
}

fn product(v: &[u64]) -> Option<u64> {
    v.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r))
}

/// Whether `kappa` splits into contiguous blocks with products `wp`, both outermost first.
pub fn is_refinement(kappa: &[u64], wp: &[u64]) -> Result<bool> {
    let (a, b) = (product(kappa), product(wp));
    if a != b || a.is_none() {
        return Err(Error::ProductMismatch {
            product: b.unwrap_or(u64::MAX) as usize,
            degree: a.unwrap_or(u64::MAX) as usize,
        });
    }
    Ok(blocks(kappa, wp).is_some())
}

/// Greedy block boundaries: block `j` covers `kappa[bounds[j]..bounds[j+1]]`.
fn blocks(kappa: &[u64], wp: &[u64]) -> Option<Vec<usize>> {
    let mut bounds = vec![0];
    let mut i = 0;
    for &r in wp {
        let mut acc = 1u64;
        while acc < r && i < kappa.len() {
            acc = acc.checked_mul(kappa[i])?;
            i += 1;
        }
        if acc != r {
            return None;
        }
        bounds.push(i);
    }
    (i == kappa.len()).then_some(bounds)
}

fn check_shape(f: &AdditivePoly, shape: &[u64]) -> Result<()> {
    let deg = f.degree().unwrap_or(0);
    let prod = product(shape);
    if prod != Some(deg) || shape.is_empty() {
        return Err(Error::ProductMismatch {
            product: prod.unwrap_or(u64::MAX) as usize,
            degree: deg as usize,
        });
    }
    Ok(())
}

fn is_p_power(n: u64, p: u64) -> bool {
    let mut m = n;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
    }
    m == 1 && n > 1
}

/// All decompositions of `f` whose factor degrees are `shape` (outermost first),
/// by regrouping the complete decompositions that refine it.
pub fn decompose_ordered(
    f: &AdditivePoly,
    shape: &[u64],
    seed: u64,
) -> Result<Vec<Decomposition<AdditivePoly>>> {
    require_monic_positive(f)?;
    check_shape(f, shape)?;
    let p = f.field().p();
    if !shape.iter().all(|&r| is_p_power(r, p)) {
        return Ok(Vec::new());
    }
    let mut out: Vec<Decomposition<AdditivePoly>> = Vec::new();
    for dec in all_complete_decompositions(f, None, seed)? {
        let degs: Vec<u64> = dec.factors().iter().map(|g| g.degree().unwrap()).collect();
        let Some(b) = blocks(&degs, shape) else {
            continue;
        };
        let grouped: Vec<AdditivePoly> = b
            .windows(2)
            .map(|w| compose_all(&dec.factors()[w[0]..w[1]]))
            .collect();
        let d = Decomposition::new(f.clone(), grouped)?;
        if !out.contains(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

/// An indecomposable basis of `f` (pairwise meets `x`, join `f`), if `f` is completely reducible.
pub fn indec_basis(f: &AdditivePoly, seed: u64) -> Result<Option<Vec<AdditivePoly>>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let x = AdditivePoly::x(f.field());
    if f.is_x() {
        return Ok(Some(Vec::new()));
    }
    let mut g = x.clone();
    let mut basis = Vec::new();
    for v in indec_right_factors(f, seed)? {
        if v.meet(&g)? == x {
            g = g.join(&v)?;
            basis.push(v);
        }
        if g == *f {
            return Ok(Some(basis));
        }
    }
    Ok(None)
}

/// An unordered factorisation (sorted descending) with one grouping witness:
/// `groups[k]` lists the indices into the input whose product is `parts[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnorderedRefinement {
    pub parts: Vec<u64>,
    pub groups: Vec<Vec<usize>>,
}

/// All length-`m` unordered factorisations obtained by grouping the entries of `mu`,
/// one witness each, by dynamic programming over the entries.
pub fn unordered_refinements(mu: &[u64], m: usize) -> Result<Vec<UnorderedRefinement>> {
    if m == 0 || m > mu.len() {
        return Err(Error::BadLength {
            requested: m,
            available: mu.len(),
        });
    }
    // Each state maps the canonical product multiset to a witness grouping.
    let mut states: BTreeMap<Vec<u64>, Vec<Vec<usize>>> = BTreeMap::new();
    states.insert(Vec::new(), Vec::new());
    for i in 0..mu.len() {
        let remaining = mu.len() - i - 1;
        let mut next: BTreeMap<Vec<u64>, Vec<Vec<usize>>> = BTreeMap::new();
        for groups in states.values() {
            let mut options = Vec::new();
            if groups.len() < m {
                let mut g = groups.clone();
                g.push(vec![i]);
                options.push(g);
            }
            for k in 0..groups.len() {
                let mut g = groups.clone();
                g[k].push(i);
                options.push(g);
            }
            for g in options {
                if g.len() + remaining < m {
                    continue;
                }
                let (key, g) = canonical(mu, g);
                next.entry(key).or_insert(g);
            }
        }
        states = next;
    }
    let mut out: Vec<UnorderedRefinement> = states
        .into_iter()
        .filter(|(k, _)| k.len() == m)
        .map(|(parts, groups)| UnorderedRefinement { parts, groups })
        .collect();
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    Ok(out)
}

fn canonical(mu: &[u64], mut groups: Vec<Vec<usize>>) -> (Vec<u64>, Vec<Vec<usize>>) {
    let prod = |g: &Vec<usize>| g.iter().map(|&i| mu[i]).product::<u64>();
    groups.sort_by(|a, b| prod(b).cmp(&prod(a)).then_with(|| a.cmp(b)));
    (groups.iter().map(prod).collect(), groups)
}

/// A decomposition `(f_m, ..., f_1)` of the join of `parts` with `deg f_i = deg parts_i`,
/// both listed outermost first.
pub fn basis_to_dec(parts: &[AdditivePoly]) -> Result<Decomposition<AdditivePoly>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::DegreeError("basis_to_dec needs at least one part".into()))?;
    let x = AdditivePoly::x(first.field());
    let mut g = x.clone();
    let mut factors = Vec::with_capacity(parts.len());
    for h in parts.iter().rev() {
        if !h.is_monic() {
            return Err(Error::NotMonic);
        }
        let next = g.join(h)?;
        if next.expn() != Some(g.nu() + h.nu()) {
            return Err(Error::NotCoprime);
        }
        factors.push(next.rdiv_exact(&g).expect("join is a left multiple"));
        g = next;
    }
    factors.reverse();
    Decomposition::new(g, factors)
}

/// A decomposition of a completely reducible `f` with factor degrees `shape`, if one exists.
pub fn cr_decompose(
    f: &AdditivePoly,
    shape: &[u64],
    seed: u64,
) -> Result<Option<Decomposition<AdditivePoly>>> {
    require_monic_positive(f)?;
    check_shape(f, shape)?;
    let basis = indec_basis(f, seed)?.ok_or(Error::NotCompletelyReducible)?;
    let p = f.field().p();
    if !shape.iter().all(|&r| is_p_power(r, p)) || shape.len() > basis.len() {
        return Ok(None);
    }
    let mu: Vec<u64> = basis.iter().map(|u| u.degree().unwrap()).collect();
    let mut want = shape.to_vec();
    want.sort_by(|a, b| b.cmp(a));
    let Some(r) = unordered_refinements(&mu, shape.len())?
        .into_iter()
        .find(|r| r.parts == want)
    else {
        return Ok(None);
    };
    let mut used = vec![false; r.parts.len()];
    let mut parts = Vec::with_capacity(shape.len());
    for &deg in shape {
        let k = (0..r.parts.len())
            .find(|&k| !used[k] && r.parts[k] == deg)
            .expect("multiset matches");
        used[k] = true;
        let mut h = AdditivePoly::x(f.field());
        for &i in &r.groups[k] {
            h = h.join(&basis[i])?;
        }
        parts.push(h);
    }
    let dec = basis_to_dec(&parts)?;
    Decomposition::new(f.clone(), dec.into_factors()).map(Some)
}

/// Checks that no two factors of a complete decomposition are similar.
pub fn is_similarity_free(
    dec: &Decomposition<AdditivePoly>,
    bounds: SimilarityBounds,
) -> Result<bool> {
    let fs = dec.factors();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if is_similar(&fs[i], &fs[j], bounds)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Moves factors similar to those indexed by `s` to the right end by transmutation.
///
/// Indices are 1-based counting from the innermost factor. Returns `None` when
/// no consistent decomposition exists.
pub fn factors_to_right(
    dec: &Decomposition<AdditivePoly>,
    s: &[usize],
    bounds: SimilarityBounds,
    seed: u64,
) -> Result<Option<Decomposition<AdditivePoly>>> {
    if !is_similarity_free(dec, bounds)? {
        return Err(Error::NotSimilarityFree);
    }
    let m = dec.len();
    if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > m) {
        return Err(Error::DegreeError(format!(
            "factor index {bad} out of range 1..={m}"
        )));
    }
    // Position 0 is the innermost factor.
    let mut fs: Vec<AdditivePoly> = dec.factors().iter().rev().cloned().collect();
    let mut c: Vec<usize> = (1..=m).collect();
    let mut pending: Vec<usize> = s.to_vec();
    pending.sort_unstable();
    pending.dedup();
    let t = pending.len();
    for l in 0..t {
        let mut moved = None;
        for (pi, &i) in pending.iter().enumerate() {
            let k = c.iter().position(|&v| v == i).expect("index tracked");
            if k == l {
                moved = Some((pi, k, None));
                break;
            }
            let g = compose_all(&fs[l..k].iter().rev().cloned().collect::<Vec<_>>());
            let tm = transmutable(&fs[k], &g, seed)?;
            if let Some((_, fbar)) = tm.into_iter().next() {
                moved = Some((pi, k, Some(fbar)));
                break;
            }
        }
        let Some((pi, k, fbar)) = moved else {
            return Ok(None);
        };
        if let Some(fbar) = fbar {
            let inner: Vec<AdditivePoly> = fs[l..k].iter().rev().cloned().collect();
            let gdec = Decomposition::new(compose_all(&inner), inner)?;
            let moved_dec = transform_composition(&fbar, &gdec)?;
            let mut block: Vec<AdditivePoly> = moved_dec.factors().iter().rev().cloned().collect();
            block.insert(0, fbar);
            fs.splice(l..=k, block);
            let ck = c.remove(k);
            c.insert(l, ck);
        }
        pending.remove(pi);
    }
    fs.reverse();
    Decomposition::new(dec.target().clone(), fs).map(Some)
}

/// A bidecomposition with degrees `(p^rho, p^sigma)` of a similarity-free `f`, if one exists.
pub fn simfree_bidecomp(
    f: &AdditivePoly,
    rho: usize,
    sigma: usize,
    bounds: SimilarityBounds,
    seed: u64,
) -> Result<Option<Decomposition<AdditivePoly>>> {
    if rho == 0 || sigma == 0 {
        return Err(Error::DegreeError("both factors need exponent >= 1".into()));
    }
    require_monic_positive(f)?;
    let nu = f.nu();
    if rho + sigma != nu {
        let p = f.field().p() as usize;
        return Err(Error::ProductMismatch {
            product: p.saturating_pow((rho + sigma) as u32),
            degree: p.saturating_pow(nu as u32),
        });
    }
    let dec = complete_decomposition(f, seed)?;
    if !is_similarity_free(&dec, bounds)? {
        return Err(Error::NotSimilarityFree);
    }
    let m = dec.len();
    let expn_at = |i: usize| dec.factors()[m - i].nu();
    for mask in 1u64..(1u64 << m) {
        let subset: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        if subset.iter().map(|&i| expn_at(i)).sum::<usize>() != sigma {
            continue;
        }
        let Some(g) = factors_to_right(&dec, &subset, bounds, seed)? else {
            continue;
        };
        let fs = g.factors();
        let split = m - subset.len();
        let outer = compose_all(&fs[..split]);
        let inner = compose_all(&fs[split..]);
        return Decomposition::new(f.clone(), vec![outer, inner]).map(Some);
    }
    Ok(None)
}

/// `(f/x) ∘ x^(1/(p-1))`: the polynomial whose roots are the `a` with `x^p - a x` a right factor.
fn root_power_poly(f: &AdditivePoly) -> Poly {
    let field = f.field();
    let p = field.p() as usize;
    let deg = (p.pow(f.nu() as u32) - 1) / (p - 1);
    let mut c = vec![field.zero(); deg + 1];
    let mut pj = 1usize;
    for a in f.coeffs() {
        c[(pj - 1) / (p - 1)] = a;
        pj *= p;
    }
    Poly::new(field, &c).expect("same field")
}

/// An absolute complete decomposition of a simple `f` into `p`-linear factors,
/// over the tower built by adjoining one root per level.
pub fn abs_decompose(f: &AdditivePoly, seed: u64) -> Result<(Field, Decomposition<AdditivePoly>)> {
    if !f.is_simple() {
        return Err(Error::NotSimple);
    }
    let nu = f.nu();
    if nu > ABS_EXPONENT_BOUND {
        return Err(Error::ExponentBoundExceeded {
            got: nu,
            bound: ABS_EXPONENT_BOUND,
        });
    }
    if nu == 0 {
        return Err(Error::DegreeError(
            "additive polynomial must have exponent >= 1".into(),
        ));
    }
    let mut field = f.field().clone();
    let mut rest = f.clone();
    let mut inner: Vec<AdditivePoly> = Vec::new();
    while rest.nu() > 1 {
        let h = root_power_poly(&rest);
        let u1 = h.factor(seed)?.factors.swap_remove(0).0;
        let a: Felt = if u1.degree() == Some(1) {
            -u1.coeff(0)
        } else {
            field = Field::extension_unchecked(&field, &u1);
            rest = rest.embed(&field)?;
            field.generator().expect("extension has a generator")
        };
        let lin = AdditivePoly::p_linear(&-a);
        rest = rest.rdiv_exact(&lin).expect("root gives a right factor");
        inner.push(lin);
    }
    let mut factors = vec![rest];
    for g in inner.iter().rev() {
        factors.push(g.embed(&field)?);
    }
    let target = f.embed(&field)?;
    Ok((field.clone(), Decomposition::new(target, factors)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(f: &Field, s: &str) -> AdditivePoly {
        AdditivePoly::parse(f, s).unwrap()
    }

    #[test]
    fn right_factors_of_wild_example() {
        let f5 = Field::prime(5).unwrap();
        let f = ap(&f5, "x^125+x^25+x^5+x");
        let h = indec_right_factors(&f, 0).unwrap();
        for s in ["x^5+3*x", "x^5+2*x", "x^5+x"] {
            assert!(h.contains(&ap(&f5, s)), "{s} missing from {h:?}");
        }
        let lin = ap(&f5, "x^5+2*x");
        assert_eq!(indec_right_factors(&lin, 0).unwrap(), vec![lin]);
    }

    #[test]
    fn right_factors_over_gf2() {
        let f2 = Field::prime(2).unwrap();
        let h = indec_right_factors(&ap(&f2, "x^4+x"), 0).unwrap();
        assert_eq!(h, vec![ap(&f2, "x^2+x")]);
    }

    #[test]
    fn complete_decompositions() {
        let f5 = Field::prime(5).unwrap();
        let f = ap(&f5, "x^125+x^25+x^5+x");
        let d = complete_decomposition(&f, 0).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.factors().iter().all(|g| g.expn() == Some(1)));
        let k = Field::gf(2, 2).unwrap();
        let all = all_complete_decompositions(&ap(&k, "x^4+x"), None, 0).unwrap();
        assert_eq!(all.len(), 3);
        let limited = all_complete_decompositions(&ap(&k, "x^4+x"), Some(2), 0).unwrap();
        assert_eq!(limited.len(), 2);
    }

    #[test]
    fn refinement_checks() {
        assert!(is_refinement(&[2, 2, 3], &[4, 3]).unwrap());
        assert!(!is_refinement(&[2, 3, 2], &[4, 3]).unwrap());
        assert!(is_refinement(&[4, 3], &[4, 3]).unwrap());
        assert!(matches!(
            is_refinement(&[2, 2], &[8]),
            Err(Error::ProductMismatch { .. })
        ));
    }

    #[test]
    fn ordered_decompositions_of_wild_example() {
        let f5 = Field::prime(5).unwrap();
        let f = ap(&f5, "x^125+x^25+x^5+x");
        let decs = decompose_ordered(&f, &[25, 5], 0).unwrap();
        for (g, h) in [
            ("x^25+3*x^5+2*x", "x^5+3*x"),
            ("x^25+4*x^5+3*x", "x^5+2*x"),
            ("x^25+x", "x^5+x"),
        ] {
            let want = vec![ap(&f5, g), ap(&f5, h)];
            assert!(decs.iter().any(|d| d.factors() == want.as_slice()));
        }
        let f = ap(&f5, "x^25+x^5+x");
        assert!(decompose_ordered(&f, &[5, 5], 0).unwrap().is_empty());
        assert_eq!(decompose_ordered(&f, &[25], 0).unwrap().len(), 1);
    }

    #[test]
    fn unordered_refinement_examples() {
        let r = unordered_refinements(&[2, 2, 2], 2).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].parts, vec![4, 2]);
        assert_eq!(unordered_refinements(&[3, 3], 1).unwrap()[0].parts, vec![9]);
        assert_eq!(unordered_refinements(&[3], 1).unwrap()[0].parts, vec![3]);
        assert!(matches!(
            unordered_refinements(&[3], 2),
            Err(Error::BadLength { .. })
        ));
    }

    #[test]
    fn basis_and_cr_decompose() {
        let k = Field::gf(2, 2).unwrap();
        let f = ap(&k, "x^4+x");
        let basis = indec_basis(&f, 0).unwrap().unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].join(&basis[1]).unwrap(), f);
        let d = basis_to_dec(&basis).unwrap();
        assert_eq!(d.target(), &f);
        let d = cr_decompose(&f, &[2, 2], 0).unwrap().unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(cr_decompose(&f, &[4], 0).unwrap().unwrap().len(), 1);
        let f2 = Field::prime(2).unwrap();
        let b = indec_basis(&ap(&f2, "x^4+x^2"), 0).unwrap().unwrap();
        assert_eq!(b, vec![ap(&f2, "x^2"), ap(&f2, "x^2+x")]);
    }

    #[test]
    fn abs_decompose_needs_extension() {
        let f5 = Field::prime(5).unwrap();
        let f = ap(&f5, "x^25+x^5+x");
        let (k, d) = abs_decompose(&f, 0).unwrap();
        assert!(k.degree() > 1);
        let c = d.innermost().coeff(0);
        let phi = Poly::parse(&k, "x^6-x+1").unwrap();
        assert!(phi.eval(&c).is_zero());
        assert_eq!(
            abs_decompose(&ap(&f5, "x^25+x^5"), 0).unwrap_err(),
            Error::NotSimple
        );
    }
}

//! The affine Hecke algebra over `Z[v^{±1}]` in the standard basis.
//!
//! The basis `{T_x}` is indexed by the extended affine Weyl group, with
//!
//! ```text
//! T_x T_y = T_{xy}                 when len(xy) = len(x) + len(y),
//! T_s^2  = T_e + (v - v^{-1}) T_s  for simple s,
//! ```
//!
//! so `T_s` is invertible with `T_s^{-1} = T_s - (v - v^{-1})`. The bar
//! involution sends `v` to `v^{-1}` and `T_x` to `T_{x^{-1}}^{-1}`.
//!
//! Bernstein's elements `theta_nu = T_{t_a} T_{t_b}^{-1}` (for any
//! decomposition `nu = a - b` with `a, b` dominant) commute with one another
//! and are group-like in `nu`; sums of `theta` over a Weyl-invariant
//! multiplicity function land in the center.

use crate::affweyl::{self, AffineWord, IWElement, Simple};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{Coweight, RootDatum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Element of the affine Hecke algebra: a finite `Z[v^{±1}]`-combination of
/// standard basis vectors. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElement {
    terms: BTreeMap<IWElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement { terms: BTreeMap::new() }
    }

    pub fn t_basis(x: IWElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, LaurentPoly::one());
        HeckeElement { terms }
    }

    pub fn one(d: &RootDatum) -> Self {
        Self::t_basis(IWElement::identity(d.lattice_rank()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x: &IWElement) -> LaurentPoly {
        self.terms.get(x).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IWElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &IWElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, x: IWElement, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, p: &LaurentPoly) -> HeckeElement {
        if p.is_zero() {
            return HeckeElement::zero();
        }
        HeckeElement {
            terms: self.terms.iter().map(|(x, q)| (x.clone(), q * p)).collect(),
        }
    }

    /// Evaluate every coefficient at `v = v0`, landing in a formal sum of
    /// group elements with rational coefficients. Zero coefficients are
    /// dropped. `v0 = 0` is rejected: negative powers of `v` have no value
    /// there.
    pub fn specialize(&self, v0: &BigRational) -> Result<BTreeMap<IWElement, BigRational>> {
        if v0.is_zero() {
            return Err(Error::Unsupported("specialization at v = 0".into()));
        }
        Ok(self
            .terms
            .iter()
            .filter_map(|(x, p)| {
                let c = p.eval_rational(v0);
                if c.is_zero() {
                    None
                } else {
                    Some((x.clone(), c))
                }
            })
            .collect())
    }

    /// Evaluate every coefficient at `v = 1`, landing in the group ring.
    pub fn specialize_at_one(&self) -> BTreeMap<IWElement, BigInt> {
        self.terms
            .iter()
            .filter_map(|(x, p)| {
                let c = p.eval_at_one();
                if c == BigInt::from(0) {
                    None
                } else {
                    Some((x.clone(), c))
                }
            })
            .collect()
    }
}

impl std::ops::Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, p) in &rhs.terms {
            out.add_term(x.clone(), p);
        }
        out
    }
}

impl std::ops::Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, p) in &rhs.terms {
            out.add_term(x.clone(), &-p.clone());
        }
        out
    }
}

impl std::ops::Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            terms: self.terms.iter().map(|(x, p)| (x.clone(), -p.clone())).collect(),
        }
    }
}

impl std::ops::Add for HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: HeckeElement) -> HeckeElement {
        &self + &rhs
    }
}

impl std::ops::Sub for HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: HeckeElement) -> HeckeElement {
        &self - &rhs
    }
}

/// `h · T_s` for a simple reflection.
pub fn right_mul_simple(d: &RootDatum, h: &HeckeElement, s: Simple) -> HeckeElement {
    let se = affweyl::simple_element(d, s);
    let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
    let mut out = HeckeElement::zero();
    for (z, p) in &h.terms {
        let zs = affweyl::multiply(d, z, &se);
        if affweyl::length(d, &zs) > affweyl::length(d, z) {
            out.add_term(zs, p);
        } else {
            out.add_term(zs, p);
            out.add_term(z.clone(), &(p * &vv));
        }
    }
    out
}

/// `T_s · h` for a simple reflection.
pub fn left_mul_simple(d: &RootDatum, s: Simple, h: &HeckeElement) -> HeckeElement {
    let se = affweyl::simple_element(d, s);
    let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
    let mut out = HeckeElement::zero();
    for (z, p) in &h.terms {
        let sz = affweyl::multiply(d, &se, z);
        if affweyl::length(d, &sz) > affweyl::length(d, z) {
            out.add_term(sz, p);
        } else {
            out.add_term(sz, p);
            out.add_term(z.clone(), &(p * &vv));
        }
    }
    out
}

/// `h · T_omega` for a length-zero element (a basis permutation).
pub fn right_mul_omega(d: &RootDatum, h: &HeckeElement, omega: &IWElement) -> HeckeElement {
    debug_assert_eq!(affweyl::length(d, omega), 0);
    HeckeElement {
        terms: h
            .terms
            .iter()
            .map(|(z, p)| (affweyl::multiply(d, z, omega), p.clone()))
            .collect(),
    }
}

/// `T_omega · h` for a length-zero element.
pub fn left_mul_omega(d: &RootDatum, omega: &IWElement, h: &HeckeElement) -> HeckeElement {
    debug_assert_eq!(affweyl::length(d, omega), 0);
    HeckeElement {
        terms: h
            .terms
            .iter()
            .map(|(z, p)| (affweyl::multiply(d, omega, z), p.clone()))
            .collect(),
    }
}

/// `h · T_y`: fold `y = omega · s_1 ... s_k` through `h` one letter at a time.
pub fn right_mul_basis(d: &RootDatum, h: &HeckeElement, y: &IWElement) -> HeckeElement {
    let w = affweyl::reduced_word(d, y);
    let mut acc = right_mul_omega(d, h, &w.omega);
    for &s in &w.letters {
        acc = right_mul_simple(d, &acc, s);
    }
    acc
}

/// Product in the Hecke algebra.
pub fn multiply(d: &RootDatum, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    // Precompute the reduced word of each basis element of b, then fold.
    let mut out = HeckeElement::zero();
    for (y, q) in &b.terms {
        let part = right_mul_basis(d, a, y).scaled(q);
        out = &out + &part;
    }
    out
}

/// `T_x^{-1}` expanded in the standard basis.
pub fn inverse_t(d: &RootDatum, x: &IWElement) -> HeckeElement {
    let AffineWord { omega, letters } = affweyl::reduced_word(d, x);
    // T_x = T_omega T_{s_1} ... T_{s_k}, so the inverse is
    // T_{s_k}^{-1} ... T_{s_1}^{-1} T_{omega^{-1}}.
    let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
    let mut acc = HeckeElement::t_basis(IWElement::identity(d.lattice_rank()));
    for &s in letters.iter().rev() {
        let ts = right_mul_simple(d, &acc, s);
        acc = &ts - &acc.scaled(&vv);
    }
    right_mul_omega(d, &acc, &affweyl::inverse(d, &omega))
}

/// The bar involution: `v -> v^{-1}`, `T_x -> T_{x^{-1}}^{-1}`.
pub fn bar(d: &RootDatum, h: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (x, p) in &h.terms {
        let inv = inverse_t(d, &affweyl::inverse(d, x));
        out = &out + &inv.scaled(&p.bar());
    }
    out
}

/// Smallest `m >= 0` with `nu + m · 2rho^` dominant.
fn dominance_defect(d: &RootDatum, nu: &Coweight) -> i64 {
    let mut m = 0i64;
    for i in 0..d.rank() {
        let pair = d.pairing_simple(nu, i);
        if pair < 0 {
            // <2rho^, alpha_i> = 2
            let need = (-pair + 1) / 2;
            m = m.max(need);
        }
    }
    m
}

/// Bernstein's element `theta_nu`, expanded in the standard basis.
///
/// Computed as `T_{t_{nu + m·2rho^}} · T_{t_{m·2rho^}}^{-1}` for the smallest
/// shift `m` making the first translation dominant; the result is independent
/// of the decomposition.
pub fn bernstein_theta(d: &RootDatum, nu: &Coweight) -> HeckeElement {
    bernstein_theta_shifted(d, nu, dominance_defect(d, nu))
}

/// `theta_nu` computed through the decomposition with shift `m` (used to
/// check independence of the choice).
pub fn bernstein_theta_shifted(d: &RootDatum, nu: &Coweight, m: i64) -> HeckeElement {
    let shift = d.two_rho_check().scaled(m);
    let plus = nu.add(&shift);
    assert!(d.is_dominant(&plus), "shift must dominate nu");
    assert!(d.is_dominant(&shift), "shift must be dominant");
    let a = HeckeElement::t_basis(IWElement::translation_of(plus));
    let binv = inverse_t(d, &IWElement::translation_of(shift));
    multiply(d, &a, &binv)
}

/// A Weyl-invariant multiplicity function with finite support.
pub type OrbitCharacter = BTreeMap<Coweight, BigInt>;

pub(crate) fn check_invariant(d: &RootDatum, ch: &OrbitCharacter) -> Result<()> {
    for (nu, c) in ch {
        if nu.coords().len() != d.lattice_rank() {
            return Err(Error::Parse(format!(
                "coweight {} has wrong rank",
                nu
            )));
        }
        for img in d.weyl_orbit(nu) {
            if ch.get(&img).cloned().unwrap_or_default() != *c {
                return Err(Error::Unsupported(format!(
                    "multiplicity function is not Weyl-invariant: {} and {} differ",
                    nu, img
                )));
            }
        }
    }
    Ok(())
}

/// The central element `sum_nu ch(nu) theta_nu` attached to a Weyl-invariant
/// multiplicity function.
pub fn central_element(d: &RootDatum, ch: &OrbitCharacter) -> Result<HeckeElement> {
    check_invariant(d, ch)?;
    let mut out = HeckeElement::zero();
    for (nu, c) in ch {
        if c == &BigInt::from(0) {
            continue;
        }
        let theta = bernstein_theta(d, nu);
        out = &out + &theta.scaled(&LaurentPoly::constant(c.clone()));
    }
    Ok(out)
}

/// Whether `h` commutes with the whole algebra.
///
/// It suffices to commute with `T_s` for every simple reflection of the
/// affine Coxeter system and with `T_omega` for generators of the
/// length-zero subgroup, since those basis vectors generate the algebra.
/// The length-zero subgroup is generated by the length-zero representatives
/// of the cosets of the basis translations.
pub fn is_central(d: &RootDatum, h: &HeckeElement) -> bool {
    for s in affweyl::simple_reflections(d) {
        let ts = HeckeElement::t_basis(affweyl::simple_element(d, s));
        if multiply(d, h, &ts) != multiply(d, &ts, h) {
            return false;
        }
    }
    for j in 0..d.lattice_rank() {
        let mut e = vec![0i64; d.lattice_rank()];
        e[j] = 1;
        let omega = affweyl::omega_part(d, &IWElement::translation_of(Coweight(e)));
        if omega.is_identity() {
            continue;
        }
        let tw = HeckeElement::t_basis(omega);
        if multiply(d, h, &tw) != multiply(d, &tw, h) {
            return false;
        }
    }
    true
}

/// Render as a sum of `(coefficient)·T[element]` terms, in basis order.
pub fn render(d: &RootDatum, h: &HeckeElement) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = h
        .terms
        .iter()
        .map(|(x, p)| format!("({})*T[{}]", p.render_v(), affweyl::render_element(d, x)))
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn t(v: &[i64]) -> IWElement {
        IWElement::translation_of(cw(v))
    }

    fn random_element(d: &RootDatum, rng: &mut StdRng) -> IWElement {
        let coords: Vec<i64> = (0..d.lattice_rank()).map(|_| rng.gen_range(-2..=2)).collect();
        let fin = crate::rootdata::FiniteWeylElement(rng.gen_range(0..d.weyl().order()) as u32);
        IWElement::new(Coweight(coords), fin)
    }

    /// Independent product: fold the LEFT factor's word through left
    /// multiplication instead of folding the right factor's word.
    fn multiply_left_oracle(d: &RootDatum, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (x, p) in a.iter() {
            let w = affweyl::reduced_word(d, x);
            let mut acc = b.clone();
            for &s in w.letters.iter().rev() {
                acc = left_mul_simple(d, s, &acc);
            }
            acc = left_mul_omega(d, &w.omega, &acc);
            out = &out + &acc.scaled(p);
        }
        out
    }

    #[test]
    fn quadratic_relation() {
        for name in ["SL2", "PGL2", "GL2", "A2", "C2", "G2"] {
            let d = RootDatum::preset(name).unwrap();
            let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
            for s in affweyl::simple_reflections(&d) {
                let ts = HeckeElement::t_basis(affweyl::simple_element(&d, s));
                let sq = multiply(&d, &ts, &ts);
                let expect = &HeckeElement::one(&d) + &ts.scaled(&vv);
                assert_eq!(sq, expect, "{} {:?}", name, s);
            }
        }
    }

    #[test]
    fn braid_relations_finite() {
        // Both reduced words of the longest element in each rank-2 parabolic
        // multiply out to the same basis vector.
        for name in ["A2", "C2", "G2"] {
            let d = RootDatum::preset(name).unwrap();
            let a = affweyl::simple_element(&d, Simple::Finite(0));
            let b = affweyl::simple_element(&d, Simple::Finite(1));
            // order of s_a s_b
            let mut m = 1;
            let mut cur = affweyl::multiply(&d, &a, &b);
            while !cur.is_identity() {
                cur = affweyl::multiply(&d, &cur, &affweyl::multiply(&d, &a, &b));
                m += 1;
            }
            let mut lhs = HeckeElement::one(&d);
            let mut rhs = HeckeElement::one(&d);
            for k in 0..m {
                let (ls, rs) = if k % 2 == 0 {
                    (Simple::Finite(0), Simple::Finite(1))
                } else {
                    (Simple::Finite(1), Simple::Finite(0))
                };
                lhs = right_mul_simple(&d, &lhs, ls);
                rhs = right_mul_simple(&d, &rhs, rs);
            }
            assert_eq!(lhs, rhs, "{} braid of length {}", name, m);
            assert_eq!(lhs.num_terms(), 1);
        }
    }

    #[test]
    fn gl2_translation_product() {
        let d = RootDatum::preset("GL2").unwrap();
        let prod = multiply(
            &d,
            &HeckeElement::t_basis(t(&[1, 0])),
            &HeckeElement::t_basis(t(&[0, 1])),
        );
        // T_{t_{(1,0)}} T_{t_{(0,1)}} = T_{t_{(1,1)}} + (v - v^{-1}) T_{t_{(2,0)} s}
        let s = affweyl::simple_element(&d, Simple::Finite(0));
        let other = affweyl::multiply(&d, &t(&[2, 0]), &s);
        let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
        let expect = &HeckeElement::t_basis(t(&[1, 1]))
            + &HeckeElement::t_basis(other).scaled(&vv);
        assert_eq!(prod, expect);
    }

    #[test]
    fn products_match_left_fold_oracle() {
        let mut rng = StdRng::seed_from_u64(48);
        for name in ["GL2", "A2", "C2"] {
            let d = RootDatum::preset(name).unwrap();
            for _ in 0..15 {
                let a = HeckeElement::t_basis(random_element(&d, &mut rng));
                let b = HeckeElement::t_basis(random_element(&d, &mut rng));
                assert_eq!(
                    multiply(&d, &a, &b),
                    multiply_left_oracle(&d, &a, &b),
                    "{}",
                    name
                );
            }
        }
    }

    #[test]
    fn associativity_sampled() {
        let mut rng = StdRng::seed_from_u64(49);
        let d = RootDatum::preset("GL2").unwrap();
        for _ in 0..10 {
            let a = HeckeElement::t_basis(random_element(&d, &mut rng));
            let b = HeckeElement::t_basis(random_element(&d, &mut rng));
            let c = HeckeElement::t_basis(random_element(&d, &mut rng));
            assert_eq!(
                multiply(&d, &multiply(&d, &a, &b), &c),
                multiply(&d, &a, &multiply(&d, &b, &c))
            );
        }
    }

    #[test]
    fn inverses_invert() {
        let mut rng = StdRng::seed_from_u64(50);
        for name in ["GL2", "A2", "C2"] {
            let d = RootDatum::preset(name).unwrap();
            let one = HeckeElement::one(&d);
            for _ in 0..12 {
                let x = random_element(&d, &mut rng);
                let inv = inverse_t(&d, &x);
                assert_eq!(multiply(&d, &inv, &HeckeElement::t_basis(x.clone())), one);
                assert_eq!(multiply(&d, &HeckeElement::t_basis(x), &inv), one);
            }
        }
    }

    #[test]
    fn bar_is_a_ring_involution() {
        let mut rng = StdRng::seed_from_u64(51);
        let d = RootDatum::preset("GL2").unwrap();
        for _ in 0..8 {
            let a = HeckeElement::t_basis(random_element(&d, &mut rng));
            let b = HeckeElement::t_basis(random_element(&d, &mut rng));
            assert_eq!(bar(&d, &bar(&d, &a)), a);
            assert_eq!(
                bar(&d, &multiply(&d, &a, &b)),
                multiply(&d, &bar(&d, &a), &bar(&d, &b))
            );
        }
        // bar(v T_s) = v^{-1} T_s^{-1}
        let s = affweyl::simple_element(&d, Simple::Finite(0));
        let h = HeckeElement::t_basis(s.clone()).scaled(&LaurentPoly::v());
        let expect = inverse_t(&d, &s).scaled(&LaurentPoly::v_pow(-1));
        assert_eq!(bar(&d, &h), expect);
    }

    #[test]
    fn theta_of_dominant_is_translation() {
        let d = RootDatum::preset("GL2").unwrap();
        assert_eq!(bernstein_theta(&d, &cw(&[1, 0])), HeckeElement::t_basis(t(&[1, 0])));
        assert_eq!(bernstein_theta(&d, &cw(&[3, 1])), HeckeElement::t_basis(t(&[3, 1])));
        let a2 = RootDatum::preset("A2").unwrap();
        assert_eq!(
            bernstein_theta(&a2, &cw(&[2, 1])),
            HeckeElement::t_basis(IWElement::translation_of(cw(&[2, 1])))
        );
    }

    #[test]
    fn theta_antidominant_frozen_value() {
        let d = RootDatum::preset("GL2").unwrap();
        let s = affweyl::simple_element(&d, Simple::Finite(0));
        let tau = affweyl::multiply(&d, &t(&[1, 0]), &s);
        let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
        // theta_{(0,1)} = T_{t_{(0,1)}} - (v - v^{-1}) T_tau
        let expect = &HeckeElement::t_basis(t(&[0, 1])) - &HeckeElement::t_basis(tau).scaled(&vv);
        assert_eq!(bernstein_theta(&d, &cw(&[0, 1])), expect);
    }

    #[test]
    fn theta_is_independent_of_decomposition() {
        let mut rng = StdRng::seed_from_u64(52);
        for name in ["GL2", "A2"] {
            let d = RootDatum::preset(name).unwrap();
            for _ in 0..5 {
                let coords: Vec<i64> =
                    (0..d.lattice_rank()).map(|_| rng.gen_range(-1..=1)).collect();
                let nu = cw(&coords);
                let m0 = super::dominance_defect(&d, &nu);
                let base = bernstein_theta_shifted(&d, &nu, m0);
                assert_eq!(base, bernstein_theta_shifted(&d, &nu, m0 + 1), "{}", name);
            }
        }
    }

    #[test]
    fn theta_is_group_like() {
        let mut rng = StdRng::seed_from_u64(53);
        for name in ["GL2", "A2"] {
            let d = RootDatum::preset(name).unwrap();
            for _ in 0..6 {
                let a: Vec<i64> = (0..d.lattice_rank()).map(|_| rng.gen_range(-2..=2)).collect();
                let b: Vec<i64> = (0..d.lattice_rank()).map(|_| rng.gen_range(-2..=2)).collect();
                let ta = bernstein_theta(&d, &cw(&a));
                let tb = bernstein_theta(&d, &cw(&b));
                let tsum = bernstein_theta(&d, &cw(&a).add(&cw(&b)));
                assert_eq!(multiply(&d, &ta, &tb), tsum, "{}", name);
                assert_eq!(multiply(&d, &tb, &ta), tsum, "{}", name);
            }
        }
    }

    #[test]
    fn central_elements_are_central() {
        let d = RootDatum::preset("GL2").unwrap();
        // orbit sum of (1,0): ch = e_{(1,0)} + e_{(0,1)}
        let mut ch = OrbitCharacter::new();
        ch.insert(cw(&[1, 0]), BigInt::from(1));
        ch.insert(cw(&[0, 1]), BigInt::from(1));
        let z = central_element(&d, &ch).unwrap();
        assert!(is_central(&d, &z));

        // a central cocharacter alone is already invariant
        let mut ch2 = OrbitCharacter::new();
        ch2.insert(cw(&[1, 1]), BigInt::from(1));
        let z2 = central_element(&d, &ch2).unwrap();
        assert_eq!(z2, HeckeElement::t_basis(t(&[1, 1])));
        assert!(is_central(&d, &z2));

        // T_s is not central
        let s = HeckeElement::t_basis(affweyl::simple_element(&d, Simple::Finite(0)));
        assert!(!is_central(&d, &s));

        // non-invariant multiplicity functions are rejected
        let mut bad = OrbitCharacter::new();
        bad.insert(cw(&[1, 0]), BigInt::from(1));
        assert!(central_element(&d, &bad).is_err());
    }

    #[test]
    fn central_element_c2_adjoint_orbit() {
        let d = RootDatum::preset("C2").unwrap();
        // orbit of the dominant coweight (1,1) plus fixed weight 0 with
        // multiplicity 2: Weyl-invariant by construction.
        let mut ch = OrbitCharacter::new();
        for x in d.weyl_orbit(&cw(&[1, 1])) {
            ch.insert(x, BigInt::from(1));
        }
        ch.insert(cw(&[0, 0]), BigInt::from(2));
        let z = central_element(&d, &ch).unwrap();
        assert!(is_central(&d, &z));
    }

    #[test]
    fn specialization_at_one_is_group_multiplication() {
        let mut rng = StdRng::seed_from_u64(54);
        let d = RootDatum::preset("GL2").unwrap();
        for _ in 0..10 {
            let x = random_element(&d, &mut rng);
            let y = random_element(&d, &mut rng);
            let prod = multiply(
                &d,
                &HeckeElement::t_basis(x.clone()),
                &HeckeElement::t_basis(y.clone()),
            );
            let spec = prod.specialize_at_one();
            assert_eq!(spec.len(), 1);
            let (z, c) = spec.into_iter().next().unwrap();
            assert_eq!(z, affweyl::multiply(&d, &x, &y));
            assert_eq!(c, BigInt::from(1));
        }
    }

    #[test]
    fn specialization_at_a_rational_point() {
        let d = RootDatum::preset("A1").unwrap();
        let s = affweyl::simple_element(&d, Simple::Finite(0));
        let ts = HeckeElement::t_basis(s.clone());
        let sq = multiply(&d, &ts, &ts);

        // at v = 1 the quadratic relation collapses: only the identity survives
        let one = BigRational::from(BigInt::from(1));
        let at_one = sq.specialize(&one).unwrap();
        assert_eq!(at_one.len(), 1);
        assert_eq!(at_one[&IWElement::identity(1)], one);

        // at v = 2 the T_s coefficient is 2 - 1/2 = 3/2
        let two = BigRational::from(BigInt::from(2));
        let at_two = sq.specialize(&two).unwrap();
        assert_eq!(at_two[&s], BigRational::new(BigInt::from(3), BigInt::from(2)));

        // units specialize to units, and v = 0 is rejected
        let unit = HeckeElement::one(&d);
        assert_eq!(unit.specialize(&two).unwrap().len(), 1);
        assert!(unit.specialize(&BigRational::zero()).is_err());

        // C_s = T_s + v^{-1} evaluates at 1 to s + e
        let cs = &ts + &HeckeElement::one(&d).scaled(&LaurentPoly::v_pow(-1));
        let at_one_cs = cs.specialize(&one).unwrap();
        assert_eq!(at_one_cs.len(), 2);
        assert!(at_one_cs.values().all(|c| *c == one));
    }

    #[test]
    fn rendering_is_stable() {
        let d = RootDatum::preset("GL2").unwrap();
        let vv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
        let h = &HeckeElement::one(&d) + &HeckeElement::t_basis(t(&[1, 0])).scaled(&vv);
        assert_eq!(render(&d, &h), "(1)*T[e] + (-v^-1+v)*T[t[1,0]]");
    }
}

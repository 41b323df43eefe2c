//! The group-ring model of the K-group of the Iwahori-equivariant category.
//!
//! Specializing the Hecke algebra at `v = 1` collapses the `T`-basis
//! multiplication onto the group law, identifying the K-group with the
//! integral group ring `Z[W]` of the extended affine Weyl group. In these
//! coordinates:
//!
//! - standard and costandard classes both land on the basis element `w`
//!   ([`class_standard`], [`class_costandard`]);
//! - the simple class is the signed Kazhdan-Lusztig specialization
//!   `sum_{x <= w} (-1)^{l(w)-l(x)} P_{x,w}(1) x` ([`class_ic`]);
//! - Wakimoto classes are translations `t_nu` ([`class_wakimoto`]);
//! - the central class of a Weyl-invariant multiplicity function is the
//!   multiplicity-weighted sum of translations ([`class_central`]), and it
//!   agrees with the `v = 1` specialization of the Bernstein central element;
//! - averaging onto left-coset labels ([`av_iw`]) sends `w` to the lattice
//!   basis vector at `coset_label(w)`; it kills exactly the simple classes of
//!   non-minimal elements and reads off weight multiplicities from central
//!   classes.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::affweyl::{self, IWElement};
use crate::error::Result;
use crate::hecke::{self, HeckeElement, OrbitCharacter};
use crate::kl::KLTable;
use crate::rootdata::{Coweight, RootDatum};

/// An element of the integral group ring `Z[W]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<IWElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn basis(x: IWElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, BigInt::from(1));
        GroupRingElement { terms }
    }

    pub fn one(d: &RootDatum) -> Self {
        GroupRingElement::basis(IWElement::identity(d.lattice_rank()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x: &IWElement) -> BigInt {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IWElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &IWElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, x: IWElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &BigInt) -> GroupRingElement {
        if c.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(x, a)| (x.clone(), a * c)).collect(),
        }
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (x, c) in rhs.iter() {
            out.add_term(x.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (x, c) in rhs.iter() {
            out.add_term(x.clone(), &(-c));
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(x, c)| (x.clone(), -c)).collect(),
        }
    }
}

impl Add for GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: GroupRingElement) -> GroupRingElement {
        &self + &rhs
    }
}

impl Sub for GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: GroupRingElement) -> GroupRingElement {
        &self - &rhs
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

/// Group-ring multiplication: the bilinear extension of the group law.
pub fn multiply(d: &RootDatum, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(affweyl::multiply(d, x, y), &(cx * cy));
        }
    }
    out
}

/// The image of a Hecke element under `v = 1`, in group-ring coordinates.
pub fn specialize_at_one(h: &HeckeElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (x, c) in h.specialize_at_one() {
        out.add_term(x, &c);
    }
    out
}

/// A finitely supported integer vector on the coweight lattice, indexing the
/// K-group of the averaged category by coset labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IWClassVector {
    terms: BTreeMap<Coweight, BigInt>,
}

impl IWClassVector {
    pub fn zero() -> Self {
        IWClassVector::default()
    }

    pub fn basis(nu: Coweight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(nu, BigInt::from(1));
        IWClassVector { terms }
    }

    /// The vector with coefficient `ch(nu)` at `nu`.
    pub fn from_character(ch: &OrbitCharacter) -> Self {
        let mut out = IWClassVector::zero();
        for (nu, c) in ch {
            out.add_term(nu.clone(), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, nu: &Coweight) -> BigInt {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coweight, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, nu: Coweight, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(nu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add for &IWClassVector {
    type Output = IWClassVector;
    fn add(self, rhs: &IWClassVector) -> IWClassVector {
        let mut out = self.clone();
        for (nu, c) in rhs.iter() {
            out.add_term(nu.clone(), c);
        }
        out
    }
}

impl Sub for &IWClassVector {
    type Output = IWClassVector;
    fn sub(self, rhs: &IWClassVector) -> IWClassVector {
        let mut out = self.clone();
        for (nu, c) in rhs.iter() {
            out.add_term(nu.clone(), &(-c));
        }
        out
    }
}

/// The class of the standard object attached to `w`: the basis element `w`.
pub fn class_standard(w: &IWElement) -> GroupRingElement {
    GroupRingElement::basis(w.clone())
}

/// The class of the costandard object attached to `w`. In the K-group the
/// standard and costandard classes coincide.
pub fn class_costandard(w: &IWElement) -> GroupRingElement {
    class_standard(w)
}

/// The class of the simple object attached to `w`:
/// `sum_{x <= w} (-1)^{l(w)-l(x)} P_{x,w}(1) x`, the `v = 1` image of the
/// sign-twisted canonical basis element. For `l(w) = 1` this is `w - e`.
pub fn class_ic(d: &RootDatum, table: &KLTable, w: &IWElement) -> Result<GroupRingElement> {
    let minus = table.minus_basis_element(d, w)?;
    Ok(specialize_at_one(&minus))
}

/// The Wakimoto class attached to a coweight: the basis element `t_nu`.
///
/// Wakimoto classes are group-like: `t_nu t_mu = t_{nu+mu}`, and for
/// dominant `nu` the class agrees with the costandard class of `t_nu`.
pub fn class_wakimoto(nu: &Coweight) -> GroupRingElement {
    GroupRingElement::basis(IWElement::translation_of(nu.clone()))
}

/// The central class of a Weyl-invariant multiplicity function:
/// `sum_nu ch(nu) t_nu`.
///
/// This is the `v = 1` specialization of [`hecke::central_element`]; the
/// agreement of the two routes is a library invariant.
pub fn class_central(d: &RootDatum, ch: &OrbitCharacter) -> Result<GroupRingElement> {
    hecke::check_invariant(d, ch)?;
    let mut out = GroupRingElement::zero();
    for (nu, c) in ch {
        out.add_term(IWElement::translation_of(nu.clone()), c);
    }
    Ok(out)
}

/// Averaging onto coset labels: the linear extension of
/// `w -> e_{coset_label(w)}`.
pub fn av_iw(d: &RootDatum, g: &GroupRingElement) -> IWClassVector {
    let mut out = IWClassVector::zero();
    for (w, c) in g.iter() {
        out.add_term(affweyl::coset_label(d, w), c);
    }
    out
}

/// Plain-text rendering, e.g. `(1)*[t[1,0]] + (-1)*[e]`.
pub fn render(d: &RootDatum, g: &GroupRingElement) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (x, c) in g.iter() {
        parts.push(format!("({})*[{}]", c, affweyl::render_element(d, x)));
    }
    parts.join(" + ")
}

/// Plain-text rendering of a class vector, e.g. `(1)*e[(1,0)]`.
pub fn render_classes(v: &IWClassVector) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (nu, c) in v.iter() {
        parts.push(format!("({})*e[{}]", c, nu));
    }
    parts.join(" + ")
}

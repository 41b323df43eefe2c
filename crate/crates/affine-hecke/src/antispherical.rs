//! The antispherical right module over the affine Hecke algebra.
//!
//! Inducing a one-dimensional character of the finite Hecke subalgebra up to
//! the full algebra gives a right module with basis `N_nu` indexed by
//! cocharacters: `N_nu` is the image of `T_{w_nu}` for `w_nu` the minimal
//! length element of `W_fin t_nu`. Every `x` factors uniquely as `x = u w_nu`
//! with `u` finite and lengths additive, so the projection sends `T_x` to
//! `chi(T_u) N_nu`.
//!
//! Two characters of the finite subalgebra exist:
//!
//! - [`SignConvention::Sign`]: `T_s -> -v^{-1}` (the default). Canonical
//!   basis elements `C_w` project to zero exactly when `w` is not minimal in
//!   its coset.
//! - [`SignConvention::Trivial`]: `T_s -> v`. The same dichotomy holds for
//!   the sign-twisted basis `C^-_w`.
//!
//! Both squares check out against the quadratic relation
//! `T_s^2 = 1 + (v - v^{-1}) T_s`, which is what makes the projection a
//! module map; no other scalars qualify.

use crate::affweyl::{self, IWElement};
use crate::error::Result;
use crate::hecke::{self, HeckeElement};
use crate::kl::KLTable;
use crate::laurent::LaurentPoly;
use crate::rootdata::{Coweight, RootDatum};
use std::collections::BTreeMap;

/// Which character of the finite Hecke subalgebra defines the module.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum SignConvention {
    /// `T_s -> -v^{-1}`; pairs with the canonical basis.
    #[default]
    Sign,
    /// `T_s -> v`; pairs with the sign-twisted canonical basis.
    Trivial,
}

impl SignConvention {
    /// The character value on `T_u`, namely `chi(T_s)^{len(u)}`.
    fn value(self, len: usize) -> LaurentPoly {
        match self {
            SignConvention::Sign => {
                let p = LaurentPoly::v_pow(-(len as i64));
                if len % 2 == 1 {
                    -p
                } else {
                    p
                }
            }
            SignConvention::Trivial => LaurentPoly::v_pow(len as i64),
        }
    }
}

/// Element of the antispherical module: a finite combination of `N_nu`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ASElement {
    terms: BTreeMap<Coweight, LaurentPoly>,
}

impl ASElement {
    pub fn zero() -> Self {
        ASElement { terms: BTreeMap::new() }
    }

    pub fn basis(nu: Coweight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(nu, LaurentPoly::one());
        ASElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, nu: &Coweight) -> LaurentPoly {
        self.terms.get(nu).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coweight, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, nu: Coweight, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(nu) {
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

    pub fn scaled(&self, p: &LaurentPoly) -> ASElement {
        if p.is_zero() {
            return ASElement::zero();
        }
        ASElement {
            terms: self.terms.iter().map(|(nu, q)| (nu.clone(), q * p)).collect(),
        }
    }
}

impl std::ops::Add for &ASElement {
    type Output = ASElement;
    fn add(self, rhs: &ASElement) -> ASElement {
        let mut out = self.clone();
        for (nu, p) in &rhs.terms {
            out.add_term(nu.clone(), p);
        }
        out
    }
}

impl std::ops::Sub for &ASElement {
    type Output = ASElement;
    fn sub(self, rhs: &ASElement) -> ASElement {
        let mut out = self.clone();
        for (nu, p) in &rhs.terms {
            out.add_term(nu.clone(), &-p.clone());
        }
        out
    }
}

/// The projection `H -> M`: `T_{u w_nu} -> chi(T_u) N_nu`.
pub fn project(d: &RootDatum, h: &HeckeElement, conv: SignConvention) -> ASElement {
    let mut out = ASElement::zero();
    for (x, p) in h.iter() {
        let (u, nu) = affweyl::min_coset_decomposition(d, x);
        let chi = conv.value(d.weyl().length(u));
        out.add_term(nu, &(p * &chi));
    }
    out
}

/// Right action of a Hecke element on a module element.
pub fn act(d: &RootDatum, m: &ASElement, h: &HeckeElement, conv: SignConvention) -> ASElement {
    let mut out = ASElement::zero();
    for (nu, p) in m.iter() {
        let rep = affweyl::min_coset_rep(d, nu);
        let moved = hecke::multiply(d, &HeckeElement::t_basis(rep), h);
        out = &out + &project(d, &moved, conv).scaled(p);
    }
    out
}

/// The projection of the canonical basis element matching the convention:
/// `C_w` for [`SignConvention::Sign`], `C^-_w` for
/// [`SignConvention::Trivial`].
pub fn canonical_image(
    d: &RootDatum,
    table: &KLTable,
    w: &IWElement,
    conv: SignConvention,
) -> Result<ASElement> {
    let h = match conv {
        SignConvention::Sign => (*table.basis_element(d, w)?).clone(),
        SignConvention::Trivial => table.minus_basis_element(d, w)?,
    };
    Ok(project(d, &h, conv))
}

/// Whether the canonical basis element of `w` projects to zero. By the
/// kernel dichotomy this holds exactly when `w` is not the minimal element
/// of its left `W_fin`-coset.
pub fn kernel_check(
    d: &RootDatum,
    table: &KLTable,
    w: &IWElement,
    conv: SignConvention,
) -> Result<bool> {
    Ok(canonical_image(d, table, w, conv)?.is_zero())
}

/// Render as a sum of `(coefficient)·N[nu]` terms.
pub fn render(m: &ASElement) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = m
        .iter()
        .map(|(nu, p)| format!("({})*N[{}]", p.render_v(), nu))
        .collect();
    parts.join(" + ")
}

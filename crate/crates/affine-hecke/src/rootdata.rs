//! Root data and finite Weyl groups.
//!
//! A root datum is a quadruple (X^*, roots, X_*, coroots) with a perfect
//! pairing between the character lattice X^* and the cocharacter lattice X_*.
//! Both lattices are realised as Z^lattice_rank and the pairing is the dot
//! product. The convention tying the Cartan matrix to the pairing is
//!
//! ```text
//! A[i][j] = <simple_coroot[j], simple_root[i]>
//! ```
//!
//! so for a preset built from a bare Cartan matrix the coroots are the
//! standard basis and the roots are the rows of `A`. This realises the
//! simply connected form; GL-type presets instead use the full Z^n lattice
//! with roots e_i - e_{i+1}, and PGL2 uses the adjoint lattice.
//!
//! Loading a datum validates everything up front (finite type via the
//! positive-definite symmetrization, pairing against the Cartan matrix,
//! linear independence) and eagerly enumerates the finite Weyl group, all
//! roots, and the irreducible components. A loaded `RootDatum` is immutable
//! and all other modules treat it as a shared read-only context.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// Element of the cocharacter lattice X_*.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Handle to an element of the finite Weyl group of one `RootDatum`.
///
/// Handles are indices into the datum's element table, ordered by (length,
/// canonical reduced word); index 0 is the identity. They are only meaningful
/// together with the datum that produced them.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FiniteWeylElement(pub(crate) u32);

impl FiniteWeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Dense square integer matrix, row major. Matrices act on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += x * other.a[k * n + j];
                }
            }
        }
        Mat { n, a }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.a[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.a[i * n + j];
            }
        }
        Mat { n, a }
    }
}

#[derive(Debug)]
struct WeylElt {
    word: Vec<usize>,
    /// Action on X_* (cocharacters).
    mat: Mat,
    /// Action on X^* (characters); the contragredient of `mat`.
    cmat: Mat,
    inv: u32,
    length: usize,
}

/// Fully enumerated finite Weyl group.
#[derive(Debug)]
pub struct WeylGroup {
    elts: Vec<WeylElt>,
    by_mat: HashMap<Vec<i64>, u32>,
    simples: Vec<FiniteWeylElement>,
    longest: FiniteWeylElement,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elts.len()
    }

    pub fn identity(&self) -> FiniteWeylElement {
        FiniteWeylElement(0)
    }

    pub fn longest(&self) -> FiniteWeylElement {
        self.longest
    }

    pub fn simple(&self, i: usize) -> FiniteWeylElement {
        self.simples[i]
    }

    pub fn length(&self, w: FiniteWeylElement) -> usize {
        self.elts[w.index()].length
    }

    /// Canonical reduced word (smallest left descent at each step), 0-based
    /// simple reflection indices.
    pub fn word(&self, w: FiniteWeylElement) -> &[usize] {
        &self.elts[w.index()].word
    }

    pub fn inverse(&self, w: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.elts[w.index()].inv)
    }

    pub fn mult(&self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement {
        let m = self.elts[a.index()].mat.mul(&self.elts[b.index()].mat);
        FiniteWeylElement(self.by_mat[&m.a])
    }

    /// Applies `w` to a cocharacter.
    pub fn apply(&self, w: FiniteWeylElement, v: &Coweight) -> Coweight {
        Coweight(self.elts[w.index()].mat.apply(&v.0))
    }

    /// Applies `w` to a character vector.
    pub fn apply_char(&self, w: FiniteWeylElement, v: &[i64]) -> Vec<i64> {
        self.elts[w.index()].cmat.apply(v)
    }

    pub fn elements(&self) -> impl Iterator<Item = FiniteWeylElement> {
        (0..self.elts.len() as u32).map(FiniteWeylElement)
    }

    fn lookup(&self, mat: &Mat) -> Option<FiniteWeylElement> {
        self.by_mat.get(&mat.a).map(|i| FiniteWeylElement(*i))
    }
}

/// One irreducible component of the root system.
#[derive(Debug)]
pub struct Component {
    /// Indices of the simple roots in this component.
    pub simples: Vec<usize>,
    /// Root id of the highest root.
    pub highest_root: usize,
    /// Coxeter number (height of the highest root plus one).
    pub coxeter_number: usize,
}

#[derive(Debug)]
struct RootEntry {
    vec: Vec<i64>,
    coroot: Vec<i64>,
    /// Coordinates in the simple-root basis.
    basis: Vec<i64>,
    positive: bool,
}

/// Classification of a dominant coweight viewed as a weight of the dual group.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CoweightClass {
    /// All pairings with roots lie in {-1, 0, 1}; the dual-group irreducible
    /// with this highest weight has a single Weyl orbit of weights.
    Minuscule,
    /// The weights of the dual-group irreducible are one Weyl orbit plus 0.
    QuasiMinuscule,
    Neither,
}

/// Hard cap on the finite Weyl group enumeration.
pub const MAX_WEYL_ORDER: usize = 1_000_000;

const MAX_ROOTS: usize = 100_000;

#[derive(Debug)]
pub struct RootDatum {
    name: String,
    rank: usize,
    lattice_rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    roots: Vec<RootEntry>,
    root_ids: HashMap<Vec<i64>, usize>,
    positive_roots: Vec<usize>,
    two_rho: Vec<i64>,
    two_rho_check: Vec<i64>,
    components: Vec<Component>,
    weyl: WeylGroup,
}

impl RootDatum {
    /// Loads a datum from a preset name or an explicit JSON object
    /// `{"cartan": [[..]], "simple_roots": [[..]], "simple_coroots": [[..]]}`
    /// (the two lattice fields may be omitted together).
    pub fn load(spec: &str) -> Result<RootDatum> {
        let spec = spec.trim();
        if spec.starts_with('{') {
            let value: serde_json::Value = serde_json::from_str(spec)
                .map_err(|e| Error::Parse(format!("datum JSON: {}", e)))?;
            return Self::from_json(&value);
        }
        Self::preset(spec)
    }

    pub fn preset(name: &str) -> Result<RootDatum> {
        // "<X>finite" is accepted as an alias for "<X>": elements of the
        // finite Weyl group embed in the affine group with the same
        // combinatorics (lengths, Bruhat order, KL polynomials).
        let base = name.strip_suffix("finite").unwrap_or(name);
        let datum = match base {
            "A1" | "SL2" => Self::from_cartan_rows(base, vec![vec![2]])?,
            "PGL2" => Self::from_parts("PGL2", vec![vec![2]], vec![vec![1]], vec![vec![2]])?,
            "A2" => Self::from_cartan_rows(base, vec![vec![2, -1], vec![-1, 2]])?,
            "A3" => Self::from_cartan_rows(
                base,
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            )?,
            "C2" => Self::from_cartan_rows(base, vec![vec![2, -1], vec![-2, 2]])?,
            "G2" => Self::from_cartan_rows(base, vec![vec![2, -1], vec![-3, 2]])?,
            _ => {
                if let Some(n) = parse_gl_preset(base) {
                    Self::gl(n)?
                } else {
                    return Err(Error::UnknownPreset(name.to_string()));
                }
            }
        };
        Ok(datum)
    }

    /// GL_n: lattice Z^n, roots and coroots e_i - e_{i+1}.
    pub fn gl(n: usize) -> Result<RootDatum> {
        if n == 0 {
            return Err(Error::InvalidDatum("GL_0 has no torus".into()));
        }
        let rank = n - 1;
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut roots = Vec::new();
        for i in 0..rank {
            for j in 0..rank {
                cartan[i][j] = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
            }
            let mut r = vec![0i64; n];
            r[i] = 1;
            r[i + 1] = -1;
            roots.push(r);
        }
        Self::from_parts(&format!("GL{}", n), cartan, roots.clone(), roots)
    }

    /// Simply-connected-style realization: coroots are the standard basis of
    /// Z^rank and the roots are the rows of the Cartan matrix.
    pub fn from_cartan_rows(name: &str, cartan: Vec<Vec<i64>>) -> Result<RootDatum> {
        let rank = cartan.len();
        let coroots: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        let roots = cartan.clone();
        Self::from_parts(name, cartan, roots, coroots)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RootDatum> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("datum JSON must be an object".into()))?;
        let cartan = read_int_matrix(obj.get("cartan").ok_or_else(|| {
            Error::Parse("datum JSON is missing the \"cartan\" field".into())
        })?)?;
        match (obj.get("simple_roots"), obj.get("simple_coroots")) {
            (Some(r), Some(c)) => {
                Self::from_parts("explicit", cartan, read_int_matrix(r)?, read_int_matrix(c)?)
            }
            (None, None) => Self::from_cartan_rows("explicit", cartan),
            _ => Err(Error::Parse(
                "simple_roots and simple_coroots must be given together".into(),
            )),
        }
    }

    pub fn from_parts(
        name: &str,
        cartan: Vec<Vec<i64>>,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<RootDatum> {
        let rank = cartan.len();
        validate_cartan_shape(&cartan)?;
        check_finite_type(&cartan)?;

        if simple_roots.len() != rank || simple_coroots.len() != rank {
            return Err(Error::InvalidDatum(format!(
                "expected {} simple roots and coroots, found {} and {}",
                rank,
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        let lattice_rank = if rank == 0 {
            return Err(Error::InvalidDatum("rank 0 datum".into()));
        } else {
            simple_roots[0].len()
        };
        for v in simple_roots.iter().chain(simple_coroots.iter()) {
            if v.len() != lattice_rank {
                return Err(Error::InvalidDatum(
                    "all root and coroot vectors must have the same length".into(),
                ));
            }
        }
        if lattice_rank < rank {
            return Err(Error::InvalidDatum(format!(
                "lattice rank {} is smaller than the rank {}",
                lattice_rank, rank
            )));
        }

        // Pairing must reproduce the Cartan matrix: <coroot_j, root_i> = A[i][j].
        for i in 0..rank {
            for j in 0..rank {
                let found = dot(&simple_coroots[j], &simple_roots[i]);
                if found != cartan[i][j] {
                    return Err(Error::PairingMismatch {
                        i,
                        j,
                        expected: cartan[i][j],
                        found,
                    });
                }
            }
        }
        if matrix_rank(&simple_roots) != rank {
            return Err(Error::InvalidDatum("simple roots are linearly dependent".into()));
        }
        if matrix_rank(&simple_coroots) != rank {
            return Err(Error::InvalidDatum(
                "simple coroots are linearly dependent".into(),
            ));
        }

        let (roots, root_ids, positive_roots) =
            generate_roots(rank, lattice_rank, &simple_roots, &simple_coroots)?;

        let mut two_rho = vec![0i64; lattice_rank];
        let mut two_rho_check = vec![0i64; lattice_rank];
        for &id in &positive_roots {
            for k in 0..lattice_rank {
                two_rho[k] += roots[id].vec[k];
                two_rho_check[k] += roots[id].coroot[k];
            }
        }
        for (i, coroot) in simple_coroots.iter().enumerate() {
            if dot(coroot, &two_rho) != 2 {
                return Err(Error::InvalidDatum(format!(
                    "<2rho, coroot {}> != 2; root generation is inconsistent",
                    i
                )));
            }
        }

        let components = find_components(&cartan, &roots, &positive_roots)?;
        let weyl = enumerate_weyl(rank, lattice_rank, &simple_roots, &simple_coroots)?;

        Ok(RootDatum {
            name: name.to_string(),
            rank,
            lattice_rank,
            cartan,
            simple_roots,
            simple_coroots,
            roots,
            root_ids,
            positive_roots,
            two_rho,
            two_rho_check,
            components,
            weyl,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i]
    }

    pub fn simple_coroot_cw(&self, i: usize) -> Coweight {
        Coweight(self.simple_coroots[i].clone())
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Largest Coxeter number over the irreducible components.
    pub fn coxeter_number(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.coxeter_number)
            .max()
            .unwrap_or(1)
    }

    /// Pairing of a cocharacter with a character vector.
    pub fn pairing(&self, nu: &Coweight, chi: &[i64]) -> i64 {
        dot(&nu.0, chi)
    }

    /// Pairing with the i-th simple root.
    pub fn pairing_simple(&self, nu: &Coweight, i: usize) -> i64 {
        dot(&nu.0, &self.simple_roots[i])
    }

    /// `<nu, 2rho>` where `2rho` is the sum of the positive roots. For
    /// dominant `nu` this is the length of the translation `t_nu`.
    pub fn two_rho_pairing(&self, nu: &Coweight) -> i64 {
        dot(&nu.0, &self.two_rho)
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Sum of the positive coroots; a strictly dominant cocharacter.
    pub fn two_rho_check(&self) -> Coweight {
        Coweight(self.two_rho_check.clone())
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_root_ids(&self) -> &[usize] {
        &self.positive_roots
    }

    pub fn root_vec(&self, id: usize) -> &[i64] {
        &self.roots[id].vec
    }

    pub fn coroot_vec(&self, id: usize) -> &[i64] {
        &self.roots[id].coroot
    }

    pub fn coroot_cw(&self, id: usize) -> Coweight {
        Coweight(self.roots[id].coroot.clone())
    }

    pub fn root_is_positive(&self, id: usize) -> bool {
        self.roots[id].positive
    }

    pub fn root_height(&self, id: usize) -> i64 {
        self.roots[id].basis.iter().sum()
    }

    pub fn root_id(&self, vec: &[i64]) -> Option<usize> {
        self.root_ids.get(vec).copied()
    }

    /// Is `v` the coroot of some root?
    pub fn is_coroot(&self, v: &[i64]) -> bool {
        self.roots.iter().any(|r| r.coroot == v)
    }

    /// Image of a root under `w` acting on the character lattice.
    pub fn w_apply_root(&self, w: FiniteWeylElement, id: usize) -> usize {
        let image = self.weyl.apply_char(w, &self.roots[id].vec);
        *self
            .root_ids
            .get(&image)
            .expect("Weyl group must permute the roots")
    }

    /// The reflection in the root with the given id, as a group element.
    pub fn reflection(&self, id: usize) -> FiniteWeylElement {
        let n = self.lattice_rank;
        let root = &self.roots[id].vec;
        let coroot = &self.roots[id].coroot;
        let mut a = Mat::identity(n);
        for r in 0..n {
            for c in 0..n {
                a.a[r * n + c] -= coroot[r] * root[c];
            }
        }
        self.weyl
            .lookup(&a)
            .expect("reflections lie in the enumerated Weyl group")
    }

    pub fn is_dominant(&self, nu: &Coweight) -> bool {
        (0..self.rank).all(|i| self.pairing_simple(nu, i) >= 0)
    }

    /// The dominant representative of the Weyl orbit of `nu`, together with
    /// the unique minimal-length `w` such that `w(nu)` is dominant.
    pub fn dominant_representative(&self, nu: &Coweight) -> (Coweight, FiniteWeylElement) {
        let mut best: Option<(Coweight, FiniteWeylElement)> = None;
        let mut ties = 0usize;
        for w in self.weyl.elements() {
            let image = self.weyl.apply(w, nu);
            if self.is_dominant(&image) {
                match &best {
                    None => {
                        best = Some((image, w));
                        ties = 1;
                    }
                    Some((_, bw)) => {
                        if self.weyl.length(w) == self.weyl.length(*bw) {
                            ties += 1;
                        }
                    }
                }
            }
        }
        let (image, w) = best.expect("every orbit meets the dominant cone");
        assert_eq!(ties, 1, "minimal dominizer must be unique");
        (image, w)
    }

    pub fn weyl_orbit(&self, nu: &Coweight) -> BTreeSet<Coweight> {
        self.weyl.elements().map(|w| self.weyl.apply(w, nu)).collect()
    }

    /// Rational coordinates of `v` in the simple-coroot basis, if `v` lies in
    /// their span.
    pub fn coroot_coordinates(&self, v: &[i64]) -> Option<Vec<BigRational>> {
        solve_in_basis(&self.simple_coroots, v)
    }

    /// Does `diff` lie in the nonnegative integer span of the simple coroots?
    pub fn is_sum_of_positive_coroots(&self, diff: &Coweight) -> bool {
        match self.coroot_coordinates(&diff.0) {
            None => false,
            Some(coords) => coords
                .iter()
                .all(|c| c.is_integer() && !c.numer().is_negative()),
        }
    }

    /// All dominant coweights `lam` with `mu - lam` a nonnegative integer
    /// combination of simple coroots (the dominant weights of the dual-group
    /// irreducible with highest weight `mu`).
    pub fn dominant_weights_below(&self, mu: &Coweight) -> Result<BTreeSet<Coweight>> {
        if !self.is_dominant(mu) {
            return Err(Error::NonDominant(mu.0.clone()));
        }
        let mut seen = BTreeSet::new();
        let mut dominant = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(lam) = queue.pop_front() {
            if self.is_dominant(&lam) {
                dominant.insert(lam.clone());
            }
            // <lam, 2rho> drops by exactly 2 per subtracted simple coroot, and
            // a dominant coweight pairs nonnegatively with 2rho, so pruning at
            // negative height is safe.
            for i in 0..self.rank {
                let next = lam.sub(&self.simple_coroot_cw(i));
                if self.two_rho_pairing(&next) < 0 {
                    continue;
                }
                if seen.insert(next.clone()) {
                    if seen.len() > 2_000_000 {
                        return Err(Error::BoundExceeded {
                            what: "weight lattice walk".into(),
                            limit: 2_000_000,
                            needed: seen.len() as u64,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(dominant)
    }

    /// Classifies a dominant coweight as a weight of the dual group.
    pub fn classify_coweight(&self, mu: &Coweight) -> Result<CoweightClass> {
        if !self.is_dominant(mu) {
            return Err(Error::NonDominant(mu.0.clone()));
        }
        let minuscule = (0..self.roots.len())
            .all(|id| matches!(dot(&mu.0, &self.roots[id].vec), -1..=1));
        if minuscule {
            return Ok(CoweightClass::Minuscule);
        }
        if !mu.is_zero() {
            let below = self.dominant_weights_below(mu)?;
            let zero = Coweight::zero(self.lattice_rank);
            if below.len() == 2 && below.contains(mu) && below.contains(&zero) {
                return Ok(CoweightClass::QuasiMinuscule);
            }
        }
        Ok(CoweightClass::Neither)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn parse_gl_preset(name: &str) -> Option<usize> {
    if let Some(rest) = name.strip_prefix("GLn(") {
        let inner = rest.strip_suffix(')')?;
        return inner.parse().ok().filter(|n| *n >= 1 && *n <= 12);
    }
    if let Some(rest) = name.strip_prefix("GL") {
        return rest.parse().ok().filter(|n| *n >= 1 && *n <= 12);
    }
    None
}

fn read_int_matrix(value: &serde_json::Value) -> Result<Vec<Vec<i64>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of integer rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("expected an integer row".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::Parse(format!("not an integer: {}", x)))
                })
                .collect()
        })
        .collect()
}

fn validate_cartan_shape(cartan: &[Vec<i64>]) -> Result<()> {
    let r = cartan.len();
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidDatum("cartan matrix must be square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidDatum(format!(
                "cartan diagonal entry {} is {}, must be 2",
                i, row[i]
            )));
        }
        for (j, &x) in row.iter().enumerate() {
            if i != j {
                if x > 0 {
                    return Err(Error::InvalidDatum(format!(
                        "cartan off-diagonal entry ({},{}) is positive",
                        i, j
                    )));
                }
                if (x == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidDatum(format!(
                        "cartan entries ({},{}) and ({},{}) must vanish together",
                        i, j, j, i
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Finite type check: symmetrize by positive weights d_i (d_i A_ij = d_j A_ji)
/// and require every leading principal minor of (d_i A_ij) to be positive.
fn check_finite_type(cartan: &[Vec<i64>]) -> Result<()> {
    let r = cartan.len();
    if r == 0 {
        return Ok(());
    }
    // Propagate symmetrizing weights along the Dynkin graph.
    let mut d: Vec<Option<BigRational>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from(BigInt::from(1)));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..r {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                // d_j = d_i * A_ij / A_ji, both entries negative.
                let ratio = BigRational::new(BigInt::from(cartan[i][j]), BigInt::from(cartan[j][i]));
                let dj = &di * ratio;
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return Err(Error::InvalidDatum(
                                "cartan matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
    }
    // Scale to integers.
    let mut denom_lcm = BigInt::from(1);
    for di in d.iter().flatten() {
        denom_lcm = num_integer::lcm(denom_lcm.clone(), di.denom().clone());
    }
    let weights: Vec<BigInt> = d
        .iter()
        .map(|di| (di.clone().unwrap() * BigRational::from(denom_lcm.clone())).to_integer())
        .collect();
    let sym: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let x = &weights[i] * BigInt::from(cartan[i][j]);
                    i128::try_from(x).expect("symmetrized entries fit in i128")
                })
                .collect()
        })
        .collect();
    for i in 0..r {
        for j in 0..r {
            if sym[i][j] != sym[j][i] {
                return Err(Error::InvalidDatum(
                    "cartan matrix is not symmetrizable".into(),
                ));
            }
        }
    }
    for k in 1..=r {
        let det = det_i128(&sym, k);
        if det <= 0 {
            return Err(Error::NotFiniteType { minor: k, det });
        }
    }
    Ok(())
}

/// Determinant of the leading k x k block, fraction-free Gaussian elimination.
fn det_i128(m: &[Vec<i128>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = (0..k).map(|i| m[i][..k].to_vec()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..k {
        let pivot_row = (col..k).find(|&r| a[r][col] != 0);
        let pr = match pivot_row {
            None => return 0,
            Some(pr) => pr,
        };
        if pr != col {
            a.swap(pr, col);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    sign * a[k - 1][k - 1]
}

/// Rank of a set of integer vectors via rational elimination.
fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(BigInt::from(*x))).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        match pivot {
            None => {
                col += 1;
            }
            Some(p) => {
                m.swap(rank, p);
                let pv = m[rank][col].clone();
                for r in 0..nrows {
                    if r != rank && !m[r][col].is_zero() {
                        let f = &m[r][col] / &pv;
                        for c in col..ncols {
                            let sub = &f * &m[rank][c];
                            m[r][c] = &m[r][c] - &sub;
                        }
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Solves sum_i x_i basis_i = target over the rationals; None if unsolvable.
fn solve_in_basis(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let n = target.len();
    // Augmented system with columns = basis vectors.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|row| {
            let mut v: Vec<BigRational> = (0..r)
                .map(|c| BigRational::from(BigInt::from(basis[c][row])))
                .collect();
            v.push(BigRational::from(BigInt::from(target[row])));
            v
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; r];
    let mut row = 0;
    for col in 0..r {
        let pivot = (row..n).find(|&rr| !m[rr][col].is_zero());
        if let Some(p) = pivot {
            m.swap(row, p);
            let pv = m[row][col].clone();
            for rr in 0..n {
                if rr != row && !m[rr][col].is_zero() {
                    let f = &m[rr][col] / &pv;
                    for cc in col..=r {
                        let sub = &f * &m[row][cc];
                        m[rr][cc] = &m[rr][cc] - &sub;
                    }
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
        }
    }
    // Rows below the pivots must be zero on the augmented column.
    for rr in row..n {
        if !m[rr][r].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); r];
    for col in 0..r {
        if let Some(p) = pivot_of_col[col] {
            x[col] = &m[p][r] / &m[p][col];
        }
        // A basis column without a pivot can only happen for dependent input,
        // which `from_parts` rejects; leaving 0 is still a valid solution then.
    }
    Some(x)
}

type RootTables = (Vec<RootEntry>, HashMap<Vec<i64>, usize>, Vec<usize>);

fn generate_roots(
    rank: usize,
    lattice_rank: usize,
    simple_roots: &[Vec<i64>],
    simple_coroots: &[Vec<i64>],
) -> Result<RootTables> {
    let mut roots: Vec<RootEntry> = Vec::new();
    let mut ids: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut basis = vec![0i64; rank];
        basis[i] = 1;
        let entry = RootEntry {
            vec: simple_roots[i].clone(),
            coroot: simple_coroots[i].clone(),
            basis,
            positive: true,
        };
        if ids.contains_key(&entry.vec) {
            return Err(Error::InvalidDatum("repeated simple root".into()));
        }
        ids.insert(entry.vec.clone(), roots.len());
        queue.push_back(roots.len());
        roots.push(entry);
    }
    while let Some(id) = queue.pop_front() {
        for i in 0..rank {
            // s_i(root) = root - <coroot_i, root> root_i, and the coroot moves
            // by the mirrored rule; basis coordinates follow the root.
            let k = dot(&simple_coroots[i], &roots[id].vec);
            let kc = dot(&roots[id].coroot, &simple_roots[i]);
            let vec: Vec<i64> = (0..lattice_rank)
                .map(|a| roots[id].vec[a] - k * simple_roots[i][a])
                .collect();
            if ids.contains_key(&vec) {
                continue;
            }
            let coroot: Vec<i64> = (0..lattice_rank)
                .map(|a| roots[id].coroot[a] - kc * simple_coroots[i][a])
                .collect();
            let mut basis = roots[id].basis.clone();
            basis[i] -= k;
            let positive = basis.iter().all(|c| *c >= 0);
            if !positive && !basis.iter().all(|c| *c <= 0) {
                return Err(Error::InvalidDatum(
                    "generated a root with mixed-sign coordinates".into(),
                ));
            }
            ids.insert(vec.clone(), roots.len());
            queue.push_back(roots.len());
            roots.push(RootEntry { vec, coroot, basis, positive });
            if roots.len() > MAX_ROOTS {
                return Err(Error::BoundExceeded {
                    what: "root generation".into(),
                    limit: MAX_ROOTS as u64,
                    needed: roots.len() as u64,
                });
            }
        }
    }
    let positive: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].positive).collect();
    if positive.len() * 2 != roots.len() {
        return Err(Error::InvalidDatum(
            "root system is not symmetric under negation".into(),
        ));
    }
    Ok((roots, ids, positive))
}

fn find_components(
    cartan: &[Vec<i64>],
    roots: &[RootEntry],
    positive: &[usize],
) -> Result<Vec<Component>> {
    let r = cartan.len();
    let mut comp_of = vec![usize::MAX; r];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let cid = components.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        comp_of[start] = cid;
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for j in 0..r {
                if i != j && cartan[i][j] != 0 && comp_of[j] == usize::MAX {
                    comp_of[j] = cid;
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
        .into_iter()
        .map(|simples| {
            let mut best: Option<usize> = None;
            for &id in positive {
                let supported = roots[id]
                    .basis
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || simples.contains(&i));
                if !supported || roots[id].basis.iter().all(|&c| c == 0) {
                    continue;
                }
                let h = roots[id].basis.iter().sum::<i64>();
                match best {
                    None => best = Some(id),
                    Some(b) => {
                        if h > roots[b].basis.iter().sum::<i64>() {
                            best = Some(id);
                        }
                    }
                }
            }
            let highest = best.ok_or_else(|| {
                Error::InvalidDatum("component without a highest root".into())
            })?;
            let height = roots[highest].basis.iter().sum::<i64>();
            Ok(Component {
                simples,
                highest_root: highest,
                coxeter_number: (height + 1) as usize,
            })
        })
        .collect()
}

fn enumerate_weyl(
    rank: usize,
    lattice_rank: usize,
    simple_roots: &[Vec<i64>],
    simple_coroots: &[Vec<i64>],
) -> Result<WeylGroup> {
    let n = lattice_rank;
    // Reflection matrices on each side of the pairing.
    let mut refl = Vec::with_capacity(rank);
    let mut refl_char = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut m = Mat::identity(n);
        let mut c = Mat::identity(n);
        for r in 0..n {
            for cc in 0..n {
                m.a[r * n + cc] -= simple_coroots[i][r] * simple_roots[i][cc];
                c.a[r * n + cc] -= simple_roots[i][r] * simple_coroots[i][cc];
            }
        }
        refl.push(m);
        refl_char.push(c);
    }

    // BFS by right multiplication; depth equals Coxeter length.
    struct Raw {
        mat: Mat,
        word: Vec<usize>,
        length: usize,
    }
    let mut raw: Vec<Raw> = vec![Raw {
        mat: Mat::identity(n),
        word: Vec::new(),
        length: 0,
    }];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(raw[0].mat.a.clone(), 0);
    let mut head = 0;
    while head < raw.len() {
        for i in 0..rank {
            let m = raw[head].mat.mul(&refl[i]);
            if !index.contains_key(&m.a) {
                let mut word = raw[head].word.clone();
                word.push(i);
                let length = raw[head].length + 1;
                index.insert(m.a.clone(), raw.len());
                raw.push(Raw { mat: m, word, length });
                if raw.len() > MAX_WEYL_ORDER {
                    return Err(Error::BoundExceeded {
                        what: "finite Weyl group enumeration".into(),
                        limit: MAX_WEYL_ORDER as u64,
                        needed: raw.len() as u64,
                    });
                }
            }
        }
        head += 1;
    }

    // Canonical word for each element: repeatedly strip the smallest left
    // descent. Left-descent testing uses the length table just built.
    let order = raw.len();
    let mut canon: Vec<Option<Vec<usize>>> = vec![None; order];
    canon[0] = Some(Vec::new());
    // Process in BFS (length) order so s_i * w of smaller length is resolved.
    for id in 0..order {
        if canon[id].is_some() {
            continue;
        }
        // Iteratively peel descents.
        let mut chain = Vec::new();
        let mut cur = id;
        while canon[cur].is_none() {
            let len_cur = raw[cur].length;
            let mut picked = None;
            for i in 0..rank {
                let m = refl[i].mul(&raw[cur].mat);
                let nid = index[&m.a];
                if raw[nid].length < len_cur {
                    picked = Some((i, nid));
                    break;
                }
            }
            let (i, nid) = picked.expect("positive length element has a left descent");
            chain.push((cur, i));
            cur = nid;
        }
        let mut word = canon[cur].clone().unwrap();
        for &(eid, i) in chain.iter().rev() {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(i);
            w.extend_from_slice(&word);
            canon[eid] = Some(w.clone());
            word = w;
        }
    }

    // Deterministic numbering: sort by (length, canonical word).
    let mut ids: Vec<usize> = (0..order).collect();
    ids.sort_by(|&a, &b| {
        (raw[a].length, canon[a].as_ref().unwrap())
            .cmp(&(raw[b].length, canon[b].as_ref().unwrap()))
    });
    let mut new_of_old = vec![0u32; order];
    for (new_id, &old_id) in ids.iter().enumerate() {
        new_of_old[old_id] = new_id as u32;
    }

    let mut elts: Vec<WeylElt> = Vec::with_capacity(order);
    let mut by_mat = HashMap::with_capacity(order);
    for &old_id in &ids {
        let word = canon[old_id].clone().unwrap();
        let mut cmat = Mat::identity(n);
        for &i in &word {
            cmat = cmat.mul(&refl_char[i]);
        }
        let mat = raw[old_id].mat.clone();
        // <M v, C x> = <v, x> forces M^T C = id, hence M^{-1} = C^T.
        let inv_mat = cmat.transpose();
        let inv_old = index[&inv_mat.a];
        by_mat.insert(mat.a.clone(), new_of_old[old_id]);
        elts.push(WeylElt {
            word,
            mat,
            cmat,
            inv: new_of_old[inv_old],
            length: raw[old_id].length,
        });
    }

    let simples = (0..rank)
        .map(|i| FiniteWeylElement(by_mat[&refl[i].a]))
        .collect();
    let max_len = elts.iter().map(|e| e.length).max().unwrap_or(0);
    let longest_ids: Vec<u32> = elts
        .iter()
        .enumerate()
        .filter(|(_, e)| e.length == max_len)
        .map(|(i, _)| i as u32)
        .collect();
    assert_eq!(longest_ids.len(), 1, "longest element must be unique");

    Ok(WeylGroup {
        elts,
        by_mat,
        simples,
        longest: FiniteWeylElement(longest_ids[0]),
    })
}

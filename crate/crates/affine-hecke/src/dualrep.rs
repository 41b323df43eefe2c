//! Weight multiplicities of irreducible representations of the dual group.
//!
//! The dual group's weights are this datum's cocharacters and its roots are
//! this datum's coroots, so a dominant cocharacter `lambda` names an
//! irreducible representation whose character we compute entirely inside the
//! cocharacter lattice.
//!
//! Multiplicities come from Freudenthal's recursion
//!
//! ```text
//! (|lambda + rho|^2 - |mu + rho|^2) m_mu
//!     = 2 sum_{c > 0} sum_{k >= 1} m_{mu + k c} <mu + k c, c>
//! ```
//!
//! run over dominant weights in decreasing height, with the W-invariant
//! form `B(x, y) = sum_{roots a} <x, a><y, a>`. Since `rho` of the dual
//! group may live outside the lattice, all vectors are doubled internally
//! (so `2 rho` appears, which is always integral); the equation above is
//! homogeneous, so doubling scales both sides by 4 and exact integer
//! division survives.
//!
//! Kostant's alternating partition-function formula is implemented
//! independently and serves as a cross-check in the tests.

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, CoweightClass, RootDatum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// A character: finitely many weights with positive integer multiplicities.
pub type WeightMultiset = BTreeMap<Coweight, BigInt>;

/// The invariant form on doubled cocharacter vectors.
fn form(d: &RootDatum, x: &[i64], y: &[i64]) -> i128 {
    let mut total: i128 = 0;
    for &id in d.positive_root_ids() {
        let a = d.root_vec(id);
        let px: i128 = x.iter().zip(a).map(|(&u, &v)| u as i128 * v as i128).sum();
        let py: i128 = y.iter().zip(a).map(|(&u, &v)| u as i128 * v as i128).sum();
        // roots come in +/- pairs; summing over positives and doubling
        total += 2 * px * py;
    }
    total
}

fn add_scaled(x: &[i64], y: &[i64], k: i64) -> Vec<i64> {
    x.iter().zip(y).map(|(&a, &b)| a + k * b).collect()
}

/// All weights of the irreducible with highest weight `lambda`, with
/// multiplicities, computed by Freudenthal's recursion.
pub fn irreducible_character(d: &RootDatum, lambda: &Coweight) -> Result<WeightMultiset> {
    if !d.is_dominant(lambda) {
        return Err(Error::NonDominant(lambda.coords().to_vec()));
    }
    let dominants = d.dominant_weights_below(lambda)?;
    let mut order: Vec<Coweight> = dominants.into_iter().collect();
    order.sort_by(|a, b| {
        d.two_rho_pairing(b)
            .cmp(&d.two_rho_pairing(a))
            .then_with(|| a.cmp(b))
    });
    debug_assert_eq!(order.first(), Some(lambda));

    let r = d.two_rho_check(); // doubled dual rho
    let doubled_plus_r =
        |mu: &Coweight| -> Vec<i64> { add_scaled(r.coords(), mu.coords(), 2) };
    let top = doubled_plus_r(lambda);
    let top_norm = form(d, &top, &top);

    let pos_coroots: Vec<Coweight> = d
        .positive_root_ids()
        .iter()
        .map(|&id| d.coroot_cw(id))
        .collect();

    let mut mult: BTreeMap<Coweight, BigInt> = BTreeMap::new();
    mult.insert(lambda.clone(), BigInt::from(1));
    for mu in order.iter().skip(1) {
        let shifted = doubled_plus_r(mu);
        let denom = top_norm - form(d, &shifted, &shifted);
        assert!(denom > 0, "heights decrease strictly below the top weight");
        let mut rhs = BigInt::zero();
        let mu2: Vec<i64> = mu.coords().iter().map(|&a| 2 * a).collect();
        for c in &pos_coroots {
            let c2: Vec<i64> = c.coords().iter().map(|&a| 2 * a).collect();
            for k in 1.. {
                let xi = Coweight(add_scaled(mu.coords(), c.coords(), k));
                let (dom, _) = d.dominant_representative(&xi);
                let m = match mult.get(&dom) {
                    Some(m) => m.clone(),
                    // weights of an irreducible form a saturated set, so the
                    // string stops at the first miss
                    None => break,
                };
                let doubled_xi = add_scaled(&mu2, &c2, k);
                rhs += m * BigInt::from(form(d, &doubled_xi, &c2));
            }
        }
        let numerator = rhs * 2;
        let (q, rem) = num_integer::Integer::div_rem(&numerator, &BigInt::from(denom));
        assert!(rem.is_zero(), "Freudenthal division must be exact");
        if !q.is_zero() {
            assert!(q.is_positive());
            mult.insert(mu.clone(), q);
        }
    }

    let mut out = WeightMultiset::new();
    for (mu, m) in &mult {
        for x in d.weyl_orbit(mu) {
            out.insert(x, m.clone());
        }
    }
    Ok(out)
}

/// `dim V_lambda` by the Weyl dimension formula, exactly.
pub fn weyl_dimension(d: &RootDatum, lambda: &Coweight) -> Result<BigInt> {
    if !d.is_dominant(lambda) {
        return Err(Error::NonDominant(lambda.coords().to_vec()));
    }
    let r = d.two_rho_check();
    let top = add_scaled(r.coords(), lambda.coords(), 2);
    let mut numer = BigInt::from(1);
    let mut denom = BigInt::from(1);
    for &id in d.positive_root_ids() {
        let a = d.root_vec(id);
        let num: i128 = top.iter().zip(a).map(|(&u, &v)| u as i128 * v as i128).sum();
        let den: i128 = r
            .coords()
            .iter()
            .zip(a)
            .map(|(&u, &v)| u as i128 * v as i128)
            .sum();
        numer *= BigInt::from(num);
        denom *= BigInt::from(den);
    }
    let (q, rem) = num_integer::Integer::div_rem(&numer, &denom);
    assert!(rem.is_zero(), "Weyl dimension must be an integer");
    Ok(q)
}

/// Total dimension of a character.
pub fn total_dimension(ch: &WeightMultiset) -> BigInt {
    ch.values().sum()
}

/// Pointwise product of characters: the character of the tensor product.
pub fn tensor_character(a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (x, mx) in a {
        for (y, my) in b {
            let z = x.add(y);
            let entry = out.entry(z).or_insert_with(BigInt::zero);
            *entry += mx * my;
        }
    }
    out.retain(|_, m| !m.is_zero());
    out
}

/// Express a character as a nonnegative sum of irreducibles, by repeatedly
/// stripping a maximal-height weight. Fails if the input is not a genuine
/// nonnegative combination.
pub fn decompose_character(d: &RootDatum, ch: &WeightMultiset) -> Result<WeightMultiset> {
    let mut rest = ch.clone();
    rest.retain(|_, m| !m.is_zero());
    let mut out = WeightMultiset::new();
    while !rest.is_empty() {
        let top = rest
            .keys()
            .max_by(|a, b| {
                d.two_rho_pairing(a)
                    .cmp(&d.two_rho_pairing(b))
                    .then_with(|| a.cmp(b))
            })
            .unwrap()
            .clone();
        if !d.is_dominant(&top) {
            return Err(Error::Unsupported(format!(
                "not a character: maximal weight {} is not dominant",
                top
            )));
        }
        let m = rest[&top].clone();
        if m.is_negative() {
            return Err(Error::Unsupported(format!(
                "not a nonnegative combination of irreducibles: {} has multiplicity {}",
                top, m
            )));
        }
        let irr = irreducible_character(d, &top)?;
        for (x, mx) in &irr {
            let entry = rest.entry(x.clone()).or_insert_with(BigInt::zero);
            *entry -= &m * mx;
        }
        rest.retain(|_, v| !v.is_zero());
        out.insert(top, m);
    }
    Ok(out)
}

/// Kostant's partition function: the number of ways to write `xi` as a sum
/// of positive roots of the dual group (= positive coroots), memoized.
pub fn kostant_partitions(d: &RootDatum, xi: &Coweight) -> BigInt {
    let coroots: Vec<Vec<i64>> = d
        .positive_root_ids()
        .iter()
        .map(|&id| d.coroot_cw(id).coords().to_vec())
        .collect();
    let mut memo: HashMap<(Vec<i64>, usize), BigInt> = HashMap::new();
    count_partitions(d, xi.coords().to_vec(), 0, &coroots, &mut memo)
}

fn count_partitions(
    d: &RootDatum,
    xi: Vec<i64>,
    idx: usize,
    coroots: &[Vec<i64>],
    memo: &mut HashMap<(Vec<i64>, usize), BigInt>,
) -> BigInt {
    if xi.iter().all(|&c| c == 0) {
        return BigInt::from(1);
    }
    // every positive coroot has positive height, so negative or zero height
    // cannot be reached
    let height = d.two_rho_pairing(&Coweight(xi.clone()));
    if height <= 0 || idx == coroots.len() {
        return BigInt::zero();
    }
    if let Some(hit) = memo.get(&(xi.clone(), idx)) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    let mut k = 0i64;
    loop {
        let rest = add_scaled(&xi, &coroots[idx], -k);
        if d.two_rho_pairing(&Coweight(rest.clone())) < 0 {
            break;
        }
        total += count_partitions(d, rest, idx + 1, coroots, memo);
        k += 1;
    }
    memo.insert((xi, idx), total.clone());
    total
}

/// Weight multiplicity by Kostant's alternating formula,
/// `m_mu = sum_w (-1)^{len w} P(w(lambda + rho) - (mu + rho))`.
pub fn kostant_multiplicity(d: &RootDatum, lambda: &Coweight, mu: &Coweight) -> BigInt {
    let r = d.two_rho_check();
    let lam2 = add_scaled(r.coords(), lambda.coords(), 2);
    let mu2 = add_scaled(r.coords(), mu.coords(), 2);
    let mut total = BigInt::zero();
    for w in d.weyl().elements() {
        let img = d.weyl().apply(w, &Coweight(lam2.clone()));
        let diff2 = add_scaled(img.coords(), &mu2, -1);
        if diff2.iter().any(|&c| c % 2 != 0) {
            continue;
        }
        let xi = Coweight(diff2.iter().map(|&c| c / 2).collect());
        let p = kostant_partitions(d, &xi);
        if d.weyl().length(w) % 2 == 0 {
            total += p;
        } else {
            total -= p;
        }
    }
    total
}

/// Decomposition of a dominant cocharacter into dominant minuscule
/// summands, available on lattices of general-linear shape (simple roots
/// and coroots both `e_i - e_{i+1}` on `Z^n`).
///
/// The decomposition takes the conjugate partition's columns plus a central
/// shift: `lambda = c·(1,...,1) + sum_j omega_{lambda'_j}`.
pub fn minuscule_decomposition(d: &RootDatum, mu: &Coweight) -> Result<Vec<Coweight>> {
    if !d.is_dominant(mu) {
        return Err(Error::NonDominant(mu.coords().to_vec()));
    }
    let n = d.lattice_rank();
    let gl_shaped = d.rank() + 1 == n
        && (0..d.rank()).all(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e[i + 1] = -1;
            d.simple_root(i) == &e[..] && d.simple_coroot(i) == &e[..]
        });
    if !gl_shaped {
        return Err(Error::Unsupported(
            "minuscule decomposition requires a general-linear lattice; \
             this datum has no spanning set of minuscule cocharacters"
                .into(),
        ));
    }
    // dominant here means a weakly decreasing integer vector
    let coords = mu.coords();
    let base = coords[n - 1];
    let mut out = Vec::new();
    let central: Vec<i64> = vec![if base >= 0 { 1 } else { -1 }; n];
    for _ in 0..base.abs() {
        out.push(Coweight(central.clone()));
    }
    let partition: Vec<i64> = coords.iter().map(|&c| c - base).collect();
    let height = partition[0];
    for level in 1..=height {
        // column of the conjugate partition: count parts >= level
        let col = partition.iter().filter(|&&p| p >= level).count();
        let mut omega = vec![0i64; n];
        for slot in omega.iter_mut().take(col) {
            *slot = 1;
        }
        out.push(Coweight(omega));
    }
    // the summands reconstruct mu
    let mut sum = Coweight::zero(n);
    for part in &out {
        sum = sum.add(part);
    }
    assert_eq!(&sum, mu);
    Ok(out)
}

/// Classify a dominant cocharacter (re-export of the datum method, for
/// discoverability next to the character functions).
pub fn classify(d: &RootDatum, mu: &Coweight) -> Result<CoweightClass> {
    d.classify_coweight(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn int(ch: &WeightMultiset, key: &[i64]) -> i64 {
        use num_traits::ToPrimitive;
        ch.get(&cw(key)).map(|m| m.to_i64().unwrap()).unwrap_or(0)
    }

    #[test]
    fn a1_strings() {
        // For the SL2 datum the dual group is adjoint: V_k has weights
        // k, k-1, ..., -k (the coroot is 1), every multiplicity 1.
        let d = RootDatum::preset("A1").unwrap();
        for k in 0..5i64 {
            let ch = irreducible_character(&d, &cw(&[k])).unwrap();
            assert_eq!(total_dimension(&ch), BigInt::from(2 * k + 1));
            for j in -k..=k {
                assert_eq!(int(&ch, &[j]), 1);
            }
            assert_eq!(weyl_dimension(&d, &cw(&[k])).unwrap(), BigInt::from(2 * k + 1));
        }
    }

    #[test]
    fn gl2_small_characters() {
        let d = RootDatum::preset("GL2").unwrap();
        let std = irreducible_character(&d, &cw(&[1, 0])).unwrap();
        assert_eq!(std.len(), 2);
        assert_eq!(int(&std, &[1, 0]), 1);
        assert_eq!(int(&std, &[0, 1]), 1);

        let sym2 = irreducible_character(&d, &cw(&[2, 0])).unwrap();
        assert_eq!(total_dimension(&sym2), BigInt::from(3));
        assert_eq!(int(&sym2, &[1, 1]), 1);

        let det = irreducible_character(&d, &cw(&[1, 1])).unwrap();
        assert_eq!(det.len(), 1);
        assert_eq!(int(&det, &[1, 1]), 1);
    }

    #[test]
    fn a2_adjoint_and_symmetric_cube() {
        let d = RootDatum::preset("A2").unwrap();
        // adjoint representation: 6 roots + 2-dimensional zero space
        let adj = irreducible_character(&d, &cw(&[1, 1])).unwrap();
        assert_eq!(total_dimension(&adj), BigInt::from(8));
        assert_eq!(int(&adj, &[0, 0]), 2);
        assert_eq!(int(&adj, &[1, 1]), 1);
        assert_eq!(int(&adj, &[-1, -1]), 1);

        // (2,1) pairs to (3,0) against the simple roots: the cube of the
        // standard representation on the adjoint-group weight lattice.
        // Ten weights, every multiplicity 1 (the side-3 triangle).
        let big = irreducible_character(&d, &cw(&[2, 1])).unwrap();
        assert_eq!(total_dimension(&big), BigInt::from(10));
        assert_eq!(weyl_dimension(&d, &cw(&[2, 1])).unwrap(), BigInt::from(10));
        assert_eq!(big.len(), 10);
        assert!(big.values().all(|m| *m == BigInt::from(1)));
        assert_eq!(int(&big, &[0, 0]), 1);
    }

    #[test]
    fn c2_frozen_dimensions() {
        let d = RootDatum::preset("C2").unwrap();
        let five = irreducible_character(&d, &cw(&[1, 1])).unwrap();
        assert_eq!(total_dimension(&five), BigInt::from(5));
        assert_eq!(int(&five, &[0, 0]), 1);

        let ten = irreducible_character(&d, &cw(&[1, 2])).unwrap();
        assert_eq!(total_dimension(&ten), BigInt::from(10));
        assert_eq!(int(&ten, &[0, 0]), 2);
    }

    #[test]
    fn g2_quasi_minuscule_is_seven_dimensional() {
        let d = RootDatum::preset("G2").unwrap();
        // find the quasi-minuscule dominant cocharacter among small ones
        let mut found = None;
        for a in 0..3i64 {
            for b in 0..3i64 {
                let mu = cw(&[a, b]);
                if !d.is_dominant(&mu) || (a == 0 && b == 0) {
                    continue;
                }
                if let Ok(CoweightClass::QuasiMinuscule) = d.classify_coweight(&mu) {
                    found = Some(mu);
                }
            }
        }
        let mu = found.expect("G2 has a quasi-minuscule class");
        let ch = irreducible_character(&d, &mu).unwrap();
        assert_eq!(total_dimension(&ch), BigInt::from(7));
        assert_eq!(ch.get(&cw(&[0, 0])).unwrap(), &BigInt::from(1));
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for name in ["GL2", "A2", "C2", "G2", "GL3"] {
            let d = RootDatum::preset(name).unwrap();
            for a in 0..3i64 {
                for b in 0..3i64 {
                    let mut coords = vec![0i64; d.lattice_rank()];
                    coords[0] = a + b;
                    coords[1] = b;
                    let mu = cw(&coords);
                    if !d.is_dominant(&mu) {
                        continue;
                    }
                    let ch = irreducible_character(&d, &mu).unwrap();
                    assert_eq!(
                        total_dimension(&ch),
                        weyl_dimension(&d, &mu).unwrap(),
                        "{} at {:?}",
                        name,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn freudenthal_matches_kostant() {
        for name in ["A1", "GL2", "A2", "C2"] {
            let d = RootDatum::preset(name).unwrap();
            let tries: Vec<Vec<i64>> = match d.lattice_rank() {
                1 => vec![vec![2], vec![3]],
                2 => vec![vec![1, 0], vec![1, 1], vec![2, 1], vec![2, 0], vec![1, 2]],
                _ => vec![],
            };
            for coords in tries {
                let lam = cw(&coords);
                if !d.is_dominant(&lam) {
                    continue;
                }
                let ch = irreducible_character(&d, &lam).unwrap();
                for (mu, m) in &ch {
                    assert_eq!(
                        &kostant_multiplicity(&d, &lam, mu),
                        m,
                        "{} lambda={:?} mu={}",
                        name,
                        lam,
                        mu
                    );
                }
                // and a weight outside the support really is absent
                let far = cw(&add_scaled(
                    lam.coords(),
                    d.two_rho_check().coords(),
                    3,
                ));
                assert_eq!(kostant_multiplicity(&d, &lam, &far), BigInt::zero());
            }
        }
    }

    #[test]
    fn tensor_squares_decompose() {
        let d = RootDatum::preset("GL2").unwrap();
        let std = irreducible_character(&d, &cw(&[1, 0])).unwrap();
        let square = tensor_character(&std, &std);
        assert_eq!(total_dimension(&square), BigInt::from(4));
        let dec = decompose_character(&d, &square).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[&cw(&[2, 0])], BigInt::from(1));
        assert_eq!(dec[&cw(&[1, 1])], BigInt::from(1));

        // C2: the 5-dimensional squared
        let c2 = RootDatum::preset("C2").unwrap();
        let five = irreducible_character(&c2, &cw(&[1, 1])).unwrap();
        let sq = tensor_character(&five, &five);
        assert_eq!(total_dimension(&sq), BigInt::from(25));
        let dec = decompose_character(&c2, &sq).unwrap();
        let total: BigInt = dec
            .iter()
            .map(|(mu, m)| m * weyl_dimension(&c2, mu).unwrap())
            .sum();
        assert_eq!(total, BigInt::from(25));
        // the trivial appears exactly once (the form is nondegenerate)
        assert_eq!(dec[&cw(&[0, 0])], BigInt::from(1));
    }

    #[test]
    fn characters_are_weyl_invariant() {
        let d = RootDatum::preset("C2").unwrap();
        let ch = irreducible_character(&d, &cw(&[2, 2])).unwrap();
        for (mu, m) in &ch {
            for img in d.weyl_orbit(mu) {
                assert_eq!(ch.get(&img), Some(m));
            }
        }
    }

    #[test]
    fn minuscule_decomposition_gl_shapes() {
        let d = RootDatum::preset("GL3").unwrap();
        let parts = minuscule_decomposition(&d, &cw(&[3, 1, 0])).unwrap();
        assert_eq!(
            parts,
            vec![cw(&[1, 1, 0]), cw(&[1, 0, 0]), cw(&[1, 0, 0])]
        );
        for p in &parts {
            assert_eq!(
                d.classify_coweight(p).unwrap(),
                CoweightClass::Minuscule
            );
        }

        let gl2 = RootDatum::preset("GL2").unwrap();
        let parts = minuscule_decomposition(&gl2, &cw(&[2, -1])).unwrap();
        assert_eq!(
            parts,
            vec![cw(&[-1, -1]), cw(&[1, 0]), cw(&[1, 0]), cw(&[1, 0])]
        );
        for p in &parts {
            assert_eq!(
                gl2.classify_coweight(p).unwrap(),
                CoweightClass::Minuscule
            );
        }

        // identity decomposes to nothing
        assert!(minuscule_decomposition(&gl2, &cw(&[0, 0])).unwrap().is_empty());
    }

    #[test]
    fn minuscule_decomposition_rejects_other_lattices() {
        for name in ["A2", "C2", "A1"] {
            let d = RootDatum::preset(name).unwrap();
            let mu = Coweight(vec![1; d.lattice_rank()]);
            if !d.is_dominant(&mu) {
                continue;
            }
            assert!(matches!(
                minuscule_decomposition(&d, &mu),
                Err(Error::Unsupported(_))
            ));
        }
    }

    #[test]
    fn partition_function_small_values() {
        let d = RootDatum::preset("A2").unwrap();
        // positive coroots e1, e2, e1+e2: (1,1) = e1+e2 or e1 + e2 as
        // separate parts: two ways
        assert_eq!(kostant_partitions(&d, &cw(&[1, 1])), BigInt::from(2));
        assert_eq!(kostant_partitions(&d, &cw(&[1, 0])), BigInt::from(1));
        assert_eq!(kostant_partitions(&d, &cw(&[0, 0])), BigInt::from(1));
        assert_eq!(kostant_partitions(&d, &cw(&[-1, 0])), BigInt::zero());
        assert_eq!(kostant_partitions(&d, &cw(&[2, 1])), BigInt::from(2));
    }
}

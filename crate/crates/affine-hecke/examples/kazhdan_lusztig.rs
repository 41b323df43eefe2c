//! Kazhdan-Lusztig polynomials and the canonical basis, with the on-disk
//! cache for incremental sessions.
//!
//! Run with: cargo run --example kazhdan_lusztig

use affine_hecke::affweyl::{bruhat_interval_below, length, render_element, IWElement};
use affine_hecke::kl::{kl_polynomial, mu, KLTable};
use affine_hecke::rootdata::{Coweight, RootDatum};

fn main() {
    // The canonical basis element C_w is the unique bar-invariant element
    // congruent to T_w modulo v^-1 Z[v^-1]-combinations of lower terms:
    //   C_w = sum_x v^{l(x)-l(w)} P_{x,w}(v^2) T_x.
    let d = RootDatum::preset("A3").unwrap();
    let table = KLTable::new(8);

    // In finite A3 (embedded in its affine group) the first interesting
    // polynomial appears at y = s2s1s3s2: P_{s2, y} = 1 + q.
    let s2 = IWElement::new(Coweight(vec![0, 0, 0]), d.weyl().simple(1));
    let y = {
        let w = [1usize, 0, 2, 1]
            .iter()
            .fold(d.weyl().identity(), |acc, &i| d.weyl().mult(acc, d.weyl().simple(i)));
        IWElement::new(Coweight(vec![0, 0, 0]), w)
    };
    let p = kl_polynomial(&d, &table, &s2, &y).unwrap();
    println!("A3: P_(s2, s2s1s3s2) = {}", p.render_in_q());
    assert_eq!(p.render_in_q(), "1+q");

    // mu(x,w) is the coefficient of v^-1 in the C_w expansion: the edge
    // weights of the W-graph and the correction terms of the recursion.
    println!("A3: mu(s2, s2s1s3s2) = {}", mu(&d, &table, &s2, &y).unwrap());

    // In affine rank one every polynomial is 1: alcoves on a line.
    let d = RootDatum::preset("A1").unwrap();
    let table = KLTable::new(8);
    let w = IWElement::translation_of(Coweight(vec![2])); // length 4
    for x in bruhat_interval_below(&d, &w, 8).unwrap() {
        let p = kl_polynomial(&d, &table, &x, &w).unwrap();
        print!("P({}) = {}  ", render_element(&d, &x), p.render_in_q());
        assert_eq!(p.render_in_q(), "1");
    }
    println!("\nall KL polynomials below t[2] in affine A1 are 1");

    // The canonical basis element itself, in the T-basis:
    let d = RootDatum::preset("GL2").unwrap();
    let table = KLTable::new(8);
    let w = IWElement::translation_of(Coweight(vec![1, 0]));
    let c = table.basis_element(&d, &w).unwrap();
    println!("\nC_t[1,0] = {}", affine_hecke::hecke::render(&d, &c));
    println!("memo now holds {} canonical basis elements", table.len());

    // Tables persist: save writes a fingerprinted snapshot, load merges it
    // back and rejects files from a different root datum.
    let dir = std::env::temp_dir().join("affine-hecke-example-cache");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gl2.klc");
    let written = table.save(&d, &path).unwrap();
    let fresh = KLTable::new(8);
    let read = fresh.load(&d, &path).unwrap();
    println!("cache round-trip: wrote {} entries, read {} back", written, read);
    assert_eq!(written, read);

    let other = RootDatum::preset("A2").unwrap();
    assert!(KLTable::new(8).load(&other, &path).is_err());
    println!("loading the GL2 cache into an A2 session is rejected");

    // Longer elements stay within the configured bound; crossing it is an
    // error rather than silent truncation.
    let long = IWElement::translation_of(Coweight(vec![5, -5]));
    println!(
        "requesting C_w at length {} with bound 8: {:?}",
        length(&d, &long),
        table.basis_element(&d, &long).err().map(|e| e.to_string())
    );
}

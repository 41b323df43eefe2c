//! The extended affine Weyl group: lengths, reduced words, Bruhat and
//! semi-infinite orders, coset representatives, admissible sets.
//!
//! Run with: cargo run --example affine_weyl

use affine_hecke::affweyl::{
    admissible_set, bruhat_interval_below, bruhat_leq, coset_label, is_minimal_in_left_wfin_coset,
    length, min_coset_rep, multiply, reduced_word, render_element, semi_infinite_leq,
    simple_element, simple_reflections, IWElement,
};
use affine_hecke::rootdata::{Coweight, RootDatum};

fn main() {
    let d = RootDatum::preset("GL2").unwrap();

    // Elements are pairs t_nu * w; the Iwahori-Matsumoto length counts the
    // affine root hyperplanes separating the base alcove from its image.
    // For dominant nu the translation length is <2rho, nu>.
    let t10 = IWElement::translation_of(Coweight(vec![1, 0]));
    let t11 = IWElement::translation_of(Coweight(vec![1, 1]));
    println!("l(t[1,0]) = {}", length(&d, &t10));
    println!("l(t[1,1]) = {} (central translations have length zero)", length(&d, &t11));

    // Reduced words: the normal form is omega * s_{i1} ... s_{ik} with
    // omega of length zero. In GL2 the element tau = t[1,0] s1 generates
    // the length-zero subgroup, and t[1,0] = tau * s1.
    let word = reduced_word(&d, &t10);
    println!(
        "t[1,0] = {} * {} letters {:?}",
        render_element(&d, &word.omega),
        word.letters.len(),
        word.letters.iter().map(|s| s.code()).collect::<Vec<_>>()
    );

    // Simple reflections: s1..sN are finite, s0 is the affine reflection
    // through the highest-root wall.
    for s in simple_reflections(&d) {
        let x = simple_element(&d, s);
        println!("s{} = {}", s.code(), render_element(&d, &x));
    }

    // Bruhat order restricted to a W_aff * omega coset is subword order.
    let s1 = simple_element(&d, simple_reflections(&d)[0]);
    let big = multiply(&d, &t10, &multiply(&d, &t10, &s1)); // t[2,0] s1
    println!(
        "\nt[1,0] <= t[2,0]s1: {}; t[2,0]s1 <= t[1,0]: {}",
        bruhat_leq(&d, &t10, &big),
        bruhat_leq(&d, &big, &t10)
    );
    let below = bruhat_interval_below(&d, &big, 8).unwrap();
    println!("interval below t[2,0]s1 has {} elements:", below.len());
    for x in &below {
        println!("  {} (length {})", render_element(&d, x), length(&d, x));
    }

    // The semi-infinite order compares translated tails: x is below y when
    // t_{n nu} x <= t_{n nu} y for dominant regular nu and all large n.
    // On translations it reads "nu - mu is a sum of positive coroots".
    let t01 = IWElement::translation_of(Coweight(vec![0, 1]));
    println!(
        "\nsemi-infinite: t[0,1] <= t[1,0]: {}",
        semi_infinite_leq(&d, &t01, &t10).unwrap()
    );
    println!(
        "semi-infinite: t[1,0] <= t[0,1]: {}",
        semi_infinite_leq(&d, &t10, &t01).unwrap()
    );

    // Every left W_fin-coset W_fin * t_nu carries a unique minimal element;
    // the coset label w^{-1}(mu) indexes the coset, and minimality drives
    // the antispherical kernel and the averaging map (later examples).
    for coords in [vec![1, 0], vec![0, 1]] {
        let nu = Coweight(coords);
        let rep = min_coset_rep(&d, &nu);
        println!(
            "\nmin coset rep of {}: {} (length {})",
            nu,
            render_element(&d, &rep),
            length(&d, &rep)
        );
        assert!(is_minimal_in_left_wfin_coset(&d, &rep));
        assert_eq!(coset_label(&d, &rep), nu);
    }
    let t01 = IWElement::translation_of(Coweight(vec![0, 1]));
    println!(
        "t[0,1] itself is minimal: {} (the minimal representative is tau)",
        is_minimal_in_left_wfin_coset(&d, &t01)
    );

    // Admissible sets: the union of Bruhat intervals below the orbit
    // translations t_{x mu}; the support bound for central classes.
    let adm = admissible_set(&d, &Coweight(vec![1, 0]), 8).unwrap();
    println!("\nAdm((1,0)) in GL2 has {} elements:", adm.len());
    for x in &adm {
        println!("  {}", render_element(&d, x));
    }
}

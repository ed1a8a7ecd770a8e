//! The c-function two ways: the brute-force product over the inversion set
//! of w0 = w_G w_M versus the closed form in (r, d). For the simply-laced
//! split forms the two products must agree factor for factor after
//! cancellation; for B and C the brute force yields extra structure
//! (factors in 2s) and the closed form does not apply.
//!
//! Run with `cargo run --example c_function_oracle`.

use jordan_eisenstein::cfunction::{closed_form_c, gk_cfunction};
use jordan_eisenstein::jordan::{classify_abelian_parabolics, jordan_invariants};
use jordan_eisenstein::root_system::{build_root_system, CartanType, Family};

fn main() {
    let simply_laced = [
        (Family::A, 3),
        (Family::A, 5),
        (Family::A, 7),
        (Family::D, 4),
        (Family::D, 6),
        (Family::E, 7),
    ];
    for (family, rank) in simply_laced {
        let t = CartanType::new(family, rank).unwrap();
        let rs = build_root_system(t);
        for pd in classify_abelian_parabolics(&rs) {
            let jd = jordan_invariants(&pd).unwrap();
            let gk = gk_cfunction(&pd);
            let closed = closed_form_c(jd.r, jd.d);
            println!("{t} node {} (r = {}, d = {}):", pd.node(), jd.r, jd.d);
            println!("  inversion-set product: {gk}");
            println!("  closed form:           {closed}");
            println!("  equal: {}\n", gk == closed);
            assert_eq!(gk, closed);
        }
    }

    // A non-simply-laced contrast: C2 carries a factor in 2s.
    let rs = build_root_system(CartanType::new(Family::C, 2).unwrap());
    let pd = classify_abelian_parabolics(&rs).remove(0);
    println!(
        "C2 node {} (outside the closed-form comparison):",
        pd.node()
    );
    println!("  inversion-set product: {}", gk_cfunction(&pd));
}

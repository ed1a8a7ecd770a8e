//! Fourier–Jacobi towers: the descending chain of groups obtained by
//! repeatedly passing to the Levi of the Heisenberg parabolic, until the
//! rank-one terminal group. The rank r drops by one per step, the
//! coordinate dimension d is constant.
//!
//! Run with `cargo run --example fourier_jacobi_towers`.

use jordan_eisenstein::jordan::{build_tower, classify_abelian_parabolics};
use jordan_eisenstein::root_system::{build_root_system, CartanType, Family};

fn main() {
    let cases = [
        (Family::C, 4),
        (Family::A, 7),
        (Family::D, 6),
        (Family::E, 7),
        (Family::B, 4),
        (Family::D, 5),
    ];

    for (family, rank) in cases {
        let t = CartanType::new(family, rank).unwrap();
        let rs = build_root_system(t);
        for pd in classify_abelian_parabolics(&rs) {
            let tower = build_tower(&pd).expect("towers of classified data terminate");
            println!("{t} node {} (d = {}):", pd.node(), tower.d);
            for step in &tower.steps {
                println!(
                    "  {:<4} node {} r = {}  m^der = {}",
                    step.cartan_type.to_string(),
                    step.node,
                    step.r,
                    step.levi_label
                );
            }
            println!();
        }
    }
}

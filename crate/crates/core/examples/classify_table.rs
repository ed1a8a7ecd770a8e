//! Classification table: every abelian-radical self-opposite maximal
//! parabolic across the six split families, with its Levi, dim N and the
//! Jordan invariants (r, d).
//!
//! Run with `cargo run --example classify_table`.

use jordan_eisenstein::jordan::{classify_abelian_parabolics, jordan_invariants};
use jordan_eisenstein::root_system::{build_root_system, CartanType, Family};

fn main() {
    let types = [
        (Family::C, 2..=6),
        (Family::A, 1..=7),
        (Family::D, 3..=6),
        (Family::E, 6..=7),
        (Family::B, 2..=6),
    ];

    println!(
        "{:<6} {:>4} {:<10} {:>6} {:>3} {:>3}",
        "type", "node", "m^der", "dim N", "r", "d"
    );
    for (family, ranks) in types {
        for rank in ranks {
            let Ok(t) = CartanType::new(family, rank) else {
                continue;
            };
            let rs = build_root_system(t);
            let data = classify_abelian_parabolics(&rs);
            if data.is_empty() {
                println!(
                    "{:<6} {:>4} {:<10} {:>6} {:>3} {:>3}",
                    t.to_string(),
                    "-",
                    "-",
                    "-",
                    "-",
                    "-"
                );
                continue;
            }
            for pd in data {
                let jd = jordan_invariants(&pd).expect("classified data are consistent");
                let d = if jd.r == 1 {
                    "-".to_string()
                } else {
                    jd.d.to_string()
                };
                println!(
                    "{:<6} {:>4} {:<10} {:>6} {:>3} {:>3}",
                    t.to_string(),
                    pd.node(),
                    pd.levi_label(),
                    pd.nilradical_dim(),
                    jd.r,
                    d
                );
            }
        }
    }
}

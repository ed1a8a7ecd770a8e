//! The quaternionic rank-one intertwining integral as a geometric series:
//! partial sums of
//!
//!   1 + (q^2 - 1) q^-(s+2) + (q^4 - q^2) q^-2(s+2) + ...
//!
//! against the closed value (1 - q^-(s+2)) / (1 - q^-s), which is the
//! p-adic evaluation of Z(s)/Z(s+2).
//!
//! Run with `cargo run --example sl2_series`.

use jordan_eisenstein::cfunction::{sl2_quaternion_closed, sl2_quaternion_series};
use jordan_eisenstein::rational::rat;
use jordan_eisenstein::zeta::{eval_numeric, AffineArg, ZetaProduct, ZetaProfile};

fn main() {
    let zp = ZetaProduct::quotient(AffineArg::shift(rat(0)), AffineArg::shift(rat(2)));
    println!("symbolic rank-one factor: {zp}\n");
    for q in [2u64, 3, 5] {
        let profile = ZetaProfile::p_adic(q).unwrap();
        for s in [1.0, 1.5, 2.0, 3.0] {
            let product = eval_numeric(&zp, &profile, s).unwrap();
            println!(
                "q = {q}, s = {s}: closed = {:.12}",
                sl2_quaternion_closed(q, s)
            );
            for terms in [1, 2, 5, 20, 200] {
                let partial = sl2_quaternion_series(q, s, terms).unwrap();
                println!(
                    "  {terms:>3} terms: {partial:.12}  |error| = {:.3e}",
                    (partial - product).abs()
                );
            }
        }
    }
}

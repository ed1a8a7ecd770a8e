//! The quaternionic c-function: closed form versus the rank-one
//! factorization over the restricted type-C system, and its p-adic
//! pole/zero ledger. The poles sit at the even integers 0, 2, ..., 2(r-1);
//! the zeros walk the alternating odd list -1-2(r-1), 1+2(r-2), -1-2(r-3),
//! and so on.
//!
//! Run with `cargo run --example quaternionic_c_function`.

use jordan_eisenstein::cfunction::{quaternionic_closed_form, quaternionic_restricted};
use jordan_eisenstein::rational::rat;
use jordan_eisenstein::zeta::{full_ledger, ZetaProfile};

fn main() {
    let profile = ZetaProfile::p_adic(2).unwrap();
    for r in 1..=5usize {
        let closed = quaternionic_closed_form(r);
        let restricted = quaternionic_restricted(r).unwrap();
        let bound = rat(2 * r as i64 + 1);
        let ledger = full_ledger(&closed, &profile, (-bound, bound)).unwrap();
        println!("r = {r}:");
        println!("  closed form:     {closed}");
        println!("  restricted form: {restricted}");
        println!("  equal: {}", closed == restricted);
        println!("  ledger: {ledger}\n");
        assert_eq!(closed, restricted);
    }
}

//! Reducibility points of the degenerate principal series, with the descent
//! consistency trace: the points at rank r, minus the locations where the
//! trivial representation sits, must land inside the points at rank r - 1.
//!
//! Run with `cargo run --example reducibility_points`.

use jordan_eisenstein::rational::rat_string;
use jordan_eisenstein::reducibility::{
    reducibility_points, verify_fj_consistency, CharacterClass, ChiDTag,
};

fn show(r: usize, d: usize, chi_d: ChiDTag, chi: CharacterClass) {
    match reducibility_points(r, d, chi_d, &chi) {
        Ok(report) => println!(
            "r = {r}, d = {d}, chi = {:<20} chi_D = {:<15} -> {report}",
            chi.as_str(),
            chi_d.as_str()
        ),
        Err(err) => println!(
            "r = {r}, d = {d}, chi = {:<20} chi_D = {:<15} -> {err}",
            chi.as_str(),
            chi_d.as_str()
        ),
    }
}

fn main() {
    // Rank 2, even dimension, trivial discriminant (d = 2n - 2).
    show(2, 6, ChiDTag::Trivial, CharacterClass::Trivial);
    show(2, 6, ChiDTag::Trivial, CharacterClass::QuadraticNontrivial);
    // Rank 2, even dimension, quadratic-field discriminant.
    show(2, 6, ChiDTag::QuadraticField, CharacterClass::ChiK);
    show(2, 6, ChiDTag::QuadraticField, CharacterClass::Trivial);
    // Rank 2, odd dimension (metaplectic descent).
    show(2, 5, ChiDTag::Undefined, CharacterClass::Trivial);
    show(
        2,
        5,
        ChiDTag::Undefined,
        CharacterClass::QuadraticNontrivial,
    );
    // Rank above 2 needs the trivial discriminant; otherwise it refuses.
    show(3, 8, ChiDTag::Trivial, CharacterClass::Trivial);
    show(4, 4, ChiDTag::Trivial, CharacterClass::Trivial);
    show(3, 4, ChiDTag::QuadraticField, CharacterClass::ChiK);

    println!("\ndescent trace for r = 3, d = 8:");
    let trace = verify_fj_consistency(3, 8, ChiDTag::Trivial).unwrap();
    for w in &trace.witnesses {
        let carried: Vec<String> = w.carried.iter().map(|x| rat_string(*x)).collect();
        let target: Vec<String> = w.target.iter().map(|x| rat_string(*x)).collect();
        println!(
            "  chi = {:<20} rank {} -> {}: {{{}}} into {{{}}} ({})",
            w.chi.as_str(),
            w.from_rank,
            w.from_rank - 1,
            carried.join(", "),
            target.join(", "),
            if w.ok { "ok" } else { "MISMATCH" }
        );
    }
    println!("consistent: {}", trace.consistent);
}

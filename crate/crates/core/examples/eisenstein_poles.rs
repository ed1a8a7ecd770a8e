//! The global pole ledger: the closed-form c-function read against the
//! completed global zeta profile yields pole candidates; each survives only
//! if the character coordinates there avoid every wall s_i = 0,
//! s_i - s_j = 0, s_i + s_j = 0. What remains is the certified list
//! 1, 1 + d/2, ..., 1 + (r-1)d/2, all simple. Includes the unramified
//! Fourier–Jacobi factor and a negative control where the wall filter bites.
//!
//! Run with `cargo run --example eisenstein_poles`.

use jordan_eisenstein::eisenstein::{
    chi_s_coords, global_pole_ledger, unramified_fj_factor, wall_check,
};
use jordan_eisenstein::rational::{rat, rat_string};
use jordan_eisenstein::reducibility::ChiDTag;

fn main() {
    for (r, d) in [(2usize, 4usize), (3, 4), (4, 4), (2, 8), (3, 8)] {
        let report = global_pole_ledger(r, d, ChiDTag::Trivial, true).unwrap();
        println!("r = {r}, d = {d}:");
        for p in &report.poles {
            let coords = chi_s_coords(r, d, p.location);
            let cs: Vec<String> = coords.coords.iter().map(|x| rat_string(*x)).collect();
            println!(
                "  pole at s0 = {} (order {}, {}), chi_s = ({})",
                rat_string(p.location),
                p.order,
                p.residue.as_str(),
                cs.join(", ")
            );
        }
        for c in &report.rejected {
            let walls: Vec<String> = c.walls.hits.iter().map(|h| h.to_string()).collect();
            println!(
                "  candidate s0 = {} rejected: {}",
                rat_string(c.location),
                walls.join(", ")
            );
        }
        println!();
    }

    // Negative control: d = 2 puts the first reducibility point on a wall.
    let coords = chi_s_coords(2, 2, rat(1));
    let walls = wall_check(&coords);
    println!(
        "negative control (r, d) = (2, 2) at s0 = 1: coordinates ({}), walls: {}",
        coords
            .coords
            .iter()
            .map(|x| rat_string(*x))
            .collect::<Vec<_>>()
            .join(", "),
        walls
            .hits
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // The unramified local factor of the Fourier-Jacobi expansion.
    println!("\nunramified local factors 1 - chi(pi) q^-(s + 1 + (r-1)d/2):");
    for (chi, q) in [(1i8, 2u64), (-1, 2), (1, 3)] {
        let v = unramified_fj_factor(3, 8, chi, q, rat(0)).unwrap();
        println!(
            "  r = 3, d = 8, chi(pi) = {chi:+}, q = {q}, s = 0: {}",
            rat_string(v)
        );
    }
}

//! Truncated pyramids: the shape of the composition series of the real
//! degenerate principal series at its i-th positive reducibility point.
//! Cells V(p,q) with r - i <= p + q <= r; the bottom floor (t = r) is the
//! socle, the top floor (t = r - i) the co-socle. Also checks a few weight
//! tuples against the co-socle cone.
//!
//! Run with `cargo run --example jantzen_pyramid`.

use jordan_eisenstein::reducibility::{cosocle_ktype_check, jantzen_pyramid};

fn draw(r: usize, i: usize) {
    let p = jantzen_pyramid(r, i).unwrap();
    println!(
        "r = {r}, i = {i}: {} cells, socle t = {}, co-socle t = {}",
        p.cell_count(),
        p.socle_floor,
        p.cosocle_floor
    );
    for (t, cells) in p.floors.iter().rev() {
        let pad = " ".repeat(3 * (p.r - t));
        let tags: Vec<String> = cells.iter().map(|(a, b)| format!("V({a},{b})")).collect();
        println!("  t={t}: {pad}{}", tags.join(" "));
    }
    println!();
}

fn main() {
    draw(3, 1);
    draw(3, 3);
    draw(4, 2);
    draw(1, 1);

    println!("co-socle cone membership for r = 3, d = 8, (p, q) = (1, 0):");
    for a in [[0, 0, 0], [5, 0, 0], [5, 1, 0], [2, 0, -3]] {
        match cosocle_ktype_check(3, 8, 1, 0, &a) {
            Ok(check) => println!(
                "  a = {a:?}: in cone = {}, highest weight = {:?}",
                check.in_cone, check.highest_weight
            ),
            Err(err) => println!("  a = {a:?}: {err}"),
        }
    }
}

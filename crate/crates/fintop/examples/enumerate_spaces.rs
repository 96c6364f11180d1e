//! Counts labeled topologies and homeomorphism classes per point count,
//! then enumerates constrained map tables between two small spaces.

use std::sync::Arc;

use anyhow::Result;
use fintop::enumeration::{
    count_spaces, enumerate_maps, enumerate_spaces, enumerate_up_to_homeo, MapConstraints,
};

fn main() -> Result<()> {
    println!("points  labeled  homeo-classes");
    for n in 1..=5 {
        println!(
            "{n:<6}  {:<7}  {}",
            count_spaces(n),
            enumerate_up_to_homeo(n).len()
        );
    }

    let mut three_point = enumerate_spaces(3);
    println!();
    println!(
        "first three of the {} labeled three-point spaces:",
        three_point.len()
    );
    for sp in three_point.iter().take(3) {
        let opens: Vec<String> = sp
            .opens()
            .iter()
            .map(|o| sp.ground().format_subset(*o))
            .collect();
        println!("  {}", opens.join(" "));
    }

    let y = Arc::new(three_point.swap_remove(3));
    let x = Arc::new(three_point.swap_remove(0));
    let budget = 1 << 20;
    let all = enumerate_maps(&x, &y, MapConstraints::default(), budget)?;
    let continuous = enumerate_maps(
        &x,
        &y,
        MapConstraints {
            continuous: true,
            ..MapConstraints::default()
        },
        budget,
    )?;
    let onto = enumerate_maps(
        &x,
        &y,
        MapConstraints {
            surjective: true,
            ..MapConstraints::default()
        },
        budget,
    )?;
    println!();
    println!(
        "maps between two of them: {} tables, {} continuous, {} surjective",
        all.len(),
        continuous.len(),
        onto.len()
    );
    Ok(())
}

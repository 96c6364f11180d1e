//! Hunts for instances that separate one class from a stronger one: sets
//! that are generalized-closed without being closed, and spaces that are
//! SC*-normal without being g-normal.

use std::sync::Arc;

use anyhow::Result;
use fintop::claims::{mine, MineScope, MineTarget};
use fintop::report::mine_text;
use fintop::separation::Def21Reading;
use fintop::space::parse_space;

fn main() -> Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/ex15.top"))?;
    let sp = Arc::new(parse_space(&text)?);

    for target in [
        MineTarget::ScstarClosedNotClosed,
        MineTarget::GClosedNotClosed,
    ] {
        let report = mine(
            target,
            &MineScope::Space(sp.clone()),
            Def21Reading::Disjoint,
            None,
        )?;
        print!("{}", mine_text(&report));
        println!();
    }

    let report = mine(
        MineTarget::ScstarNormalNotGNormal,
        &MineScope::Spaces { max_points: 4 },
        Def21Reading::Disjoint,
        Some(5),
    )?;
    print!("{}", mine_text(&report));
    println!();

    // Spaces that are g-normal but not normal do not exist at these sizes;
    // an empty result is an answer, not an error.
    let report = mine(
        MineTarget::GNormalNotNormal,
        &MineScope::Spaces { max_points: 4 },
        Def21Reading::Disjoint,
        None,
    )?;
    print!("{}", mine_text(&report));
    Ok(())
}

//! Classifies the bundled sample map by all twenty-one flags and audits the
//! quantifier characterizations that are supposed to pin six of them down.

use std::path::Path;

use anyhow::Result;
use fintop::maps::parse_map;
use fintop::report::MapAuditReport;

fn main() -> Result<()> {
    let base = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let text = std::fs::read_to_string(base.join("ex15_to_ex16.map"))?;
    let f = parse_map(&text, &base)?;

    println!(
        "map on {} points: {}",
        f.domain().size(),
        f.table()
            .iter()
            .enumerate()
            .map(|(x, &t)| format!(
                "{}->{}",
                f.domain().ground().label(x),
                f.codomain().ground().label(t)
            ))
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!();
    print!("{}", MapAuditReport::compute(&f).text());
    Ok(())
}

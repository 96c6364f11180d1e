//! Classifies subsets of a four-point sample space by the sixteen set
//! classes and prints the full membership of one class.

use anyhow::Result;
use fintop::operators::SetClass;
use fintop::report::{FamilyReport, SubsetReport};
use fintop::space::parse_space;

fn main() -> Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/ex15.top"))?;
    let sp = parse_space(&text)?;

    println!("space on {{q,r,s,t}} with opens:");
    for open in sp.opens() {
        println!("  {}", sp.ground().format_subset(*open));
    }
    println!();

    for subset in ["r", "q,s", "r,t"] {
        let m = sp.ground().parse_subset(subset)?;
        print!("{}", SubsetReport::compute(&sp, m).text());
        println!();
    }

    // Every subset of every finite space turns out to be SC*-closed, so this
    // family is the whole power set.
    let family = FamilyReport::compute(&sp, SetClass::ScstarClosed);
    print!("{}", family.text());

    let g_closed = FamilyReport::compute(&sp, SetClass::GClosed);
    println!();
    print!("{}", g_closed.text());
    Ok(())
}

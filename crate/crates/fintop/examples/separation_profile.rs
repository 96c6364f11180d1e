//! Reads off the separation profile of the three sample spaces and shows
//! how the strict and lenient readings of the separating-sets definition
//! differ on a space that is not normal.

use anyhow::Result;
use fintop::report::profile_text;
use fintop::separation::{Def21Reading, SeparationProfile};
use fintop::space::parse_space;

fn load(name: &str) -> Result<fintop::space::FiniteSpace> {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    Ok(parse_space(&std::fs::read_to_string(path)?)?)
}

fn main() -> Result<()> {
    for name in ["ex15.top", "ex16.top", "ex23.top"] {
        let sp = load(name)?;
        println!("{name}:");
        for line in profile_text(&SeparationProfile::compute(&sp, Def21Reading::Disjoint)).lines() {
            println!("  {line}");
        }
        println!();
    }

    // Under the strict reading the separating sets must be disjoint; the
    // lenient reading only asks that each covers its own closed set, which
    // the whole space always does, so everything collapses to true.
    let sp = load("ex15.top")?;
    let strict = SeparationProfile::compute(&sp, Def21Reading::Disjoint);
    let lenient = SeparationProfile::compute(&sp, Def21Reading::Lenient);
    println!("ex15.top normal, strict reading:  {}", strict.normal);
    println!("ex15.top normal, lenient reading: {}", lenient.normal);
    Ok(())
}

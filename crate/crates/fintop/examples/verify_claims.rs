//! Runs claim suites exhaustively and inspects one claim that fails, with a
//! witness that replays from its serialized form alone.

use anyhow::Result;
use fintop::claims::{replay, run_suite, suite_claims, Bounds};
use fintop::report::suite_text;
use fintop::separation::Def21Reading;

fn main() -> Result<()> {
    let bounds = Bounds::default();

    // The forced suite holds by definition; a violation here would mean the
    // implementation disagrees with itself.
    let forced = suite_claims("forced")?;
    let report = run_suite(&forced, &bounds)?;
    println!("forced suite: {} claims", report.verdicts.len());
    for v in &report.verdicts {
        println!(
            "  {}  instances {:>8}  violations {}",
            v.id, v.instances, v.violations
        );
    }
    assert!(!report.forced_violation());
    println!();

    // The claim that gSC*-closed sets are g-closed is refuted thousands of
    // times; the engine keeps the first witness in enumeration order.
    let claims = suite_claims("R1.4f")?;
    let report = run_suite(&claims, &bounds)?;
    print!("{}", suite_text(&report));

    let witness = report.verdicts[0].witness.as_ref().expect("a witness");
    let json = serde_json::to_string(witness)?;
    let parsed = serde_json::from_str(&json)?;
    println!();
    println!(
        "witness replays from JSON: {}",
        replay(&parsed, Def21Reading::Disjoint)?
    );

    // Equivalence claims also tally the per-condition truth patterns.
    let t24 = suite_claims("t24")?;
    let report = run_suite(&t24, &bounds)?;
    print!("{}", suite_text(&report));
    Ok(())
}

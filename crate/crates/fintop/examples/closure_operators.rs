//! Walks the closure and interior operator family on one space: the plain
//! topological pair, then the semi, c*, and SC* generalizations, including
//! the diagnostic telling whether a generalized closure landed back in its
//! own class.

use anyhow::Result;
use fintop::operators::{gen_closure, ClosureKind};
use fintop::report::ClosureReport;
use fintop::space::{parse_space, SubsetMask};

fn main() -> Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/ex15.top"))?;
    let sp = parse_space(&text)?;

    for subset in ["r", "q", "q,r", "s,t"] {
        let m = sp.ground().parse_subset(subset)?;
        print!("{}", ClosureReport::compute(&sp, m).text());
        println!();
    }

    // The c*-closed class is not intersection stable, so a c*-closure can
    // fall outside the class. The outcome records that.
    let wedge = parse_space("points: a b c\nopen:\nopen: a\nopen: b\nopen: a b\nopen: *\n")?;
    println!("on the three-point wedge space:");
    for bits in 0..(1u32 << 3) {
        let m = SubsetMask::from_bits(bits);
        let out = gen_closure(&wedge, ClosureKind::Cstar, m);
        if !out.kind_closed {
            println!(
                "  cstar-closure of {} is {} and is itself not cstar-closed",
                wedge.ground().format_subset(m),
                wedge.ground().format_subset(out.value)
            );
        }
    }

    // The SC*-closure never moves a set at all: every subset is SC*-closed.
    let mut fixed = 0;
    for bits in 0..(1u32 << sp.size()) {
        let m = SubsetMask::from_bits(bits);
        if gen_closure(&sp, ClosureKind::Scstar, m).value == m {
            fixed += 1;
        }
    }
    println!();
    println!(
        "scstar-closure fixes {fixed} of {} subsets of the sample space",
        1u32 << sp.size()
    );
    Ok(())
}

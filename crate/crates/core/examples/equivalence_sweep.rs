//! Exhaustive comparison of the walk and Cartier deciders.
//!
//!     cargo run --release --example equivalence_sweep -- A3 4 2

use twisted_cubes::verify::{exhaustive_sweep, witness_link_sweep};
use twisted_cubes::DynkinDiagram;

fn main() -> twisted_cubes::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d: DynkinDiagram = args.first().map_or("A3", String::as_str).parse()?;
    let max_len = args.get(1).map_or(Ok(4), |s| s.parse()).expect("max_len");
    let bound = args.get(2).map_or(Ok(2), |s| s.parse()).expect("ell bound");

    let s = exhaustive_sweep(&d, max_len, bound)?;
    println!("{d} words up to {max_len}, ell <= {bound}");
    println!("{}", serde_json::to_string_pretty(&s).expect("serializes"));
    println!("untwisted fraction {:.4}", s.untwisted_fraction());

    let w = witness_link_sweep(&d, max_len, bound)?;
    println!(
        "witness links: {} walk witnesses, {} Cartier witnesses, {} failures",
        w.necessity_checked, w.extraction_checked, w.failures
    );
    Ok(())
}
